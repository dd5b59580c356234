// Console state: one session, a transcript mirror, and a timeline derived
// exclusively from that mirror.  Every verdict on screen was answered by
// the service; the console computes nothing itself.

import { ConsoleApi, RevealResult, RunResult } from "./api.js";
import { parseTranscript, TranscriptEvent } from "./format.js";

export interface ConsoleState {
  api: ConsoleApi;
  sessionId: string;
  kind: string;
  mirror: string;
  timeline: TranscriptEvent[];
  editorBuffer: string;
  pendingGuess: "static" | "evolving" | null;
  revealed: RevealResult | null;
  closed: boolean;
}

/** Open a session and return a fresh console state with an empty view. */
export async function connect(api: ConsoleApi, kind: string, seed?: number): Promise<ConsoleState> {
  const handle = await api.openSession(kind, seed);
  return {
    api,
    sessionId: handle.id,
    kind: handle.kind,
    mirror: "",
    timeline: [],
    editorBuffer: "",
    pendingGuess: null,
    revealed: null,
    closed: false,
  };
}

/** Refresh the transcript mirror and rebuild the timeline from it. */
export async function syncMirror(state: ConsoleState): Promise<ConsoleState> {
  const mirror = await state.api.transcript(state.sessionId);
  return { ...state, mirror, timeline: parseTranscript(mirror) };
}

/** Timeline order must equal transcript sequence numbers, and every entry
 * must come from the mirror: re-deriving the timeline from the mirror must
 * reproduce it exactly. */
export function mirrorConsistent(state: ConsoleState): boolean {
  const derived = parseTranscript(state.mirror);
  if (derived.length !== state.timeline.length) return false;
  for (let i = 0; i < derived.length; i++) {
    const a = derived[i];
    const b = state.timeline[i];
    if (a.seq !== b.seq || a.kind !== b.kind || a.answer !== b.answer) return false;
    if (i > 0 && derived[i - 1].seq >= a.seq) return false;
  }
  return true;
}

export async function submitSbox(state: ConsoleState, config: string): Promise<ConsoleState> {
  await state.api.querySbox(state.sessionId, config);
  return syncMirror(state);
}

export async function submitTbox(
  state: ConsoleState,
  config: string,
  instruction: string,
): Promise<ConsoleState> {
  await state.api.queryTbox(state.sessionId, config, instruction);
  return syncMirror(state);
}

export interface TraceView {
  state: ConsoleState;
  run: RunResult;
}

export async function runAndTrace(
  state: ConsoleState,
  procedure: string,
  input: string,
  maxSteps?: number,
): Promise<TraceView> {
  const run = await state.api.runProcedure(state.sessionId, procedure, input, maxSteps);
  return { state: await syncMirror(state), run };
}

export async function guessAndReveal(
  state: ConsoleState,
  guess: "static" | "evolving",
): Promise<ConsoleState> {
  if (state.kind !== "blinded") {
    throw new Error("reveal applies to blinded sessions only");
  }
  if (state.revealed !== null) {
    throw new Error("session already revealed");
  }
  const revealed = await state.api.reveal(state.sessionId, guess);
  return { ...state, revealed, closed: true, pendingGuess: null };
}
