// Single-page computist console: procedure editor, free-query panel,
// timeline, reveal panel.  One tab owns one session; the next request is
// enabled only after the previous one is acknowledged.

import { ApiError, ConsoleApi } from "./api.js";
import { buildConfig, validConfigFields } from "./format.js";
import {
  connect,
  ConsoleState,
  guessAndReveal,
  mirrorConsistent,
  runAndTrace,
  submitSbox,
  submitTbox,
} from "./state.js";

let state: ConsoleState | null = null;
let busy = false;

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function setBanner(text: string, isError = false) {
  const banner = el<HTMLDivElement>("banner");
  banner.textContent = text;
  banner.className = isError ? "banner error" : "banner";
}

function renderTimeline() {
  const list = el<HTMLOListElement>("timeline");
  list.innerHTML = "";
  if (!state) return;
  for (const event of state.timeline) {
    const item = document.createElement("li");
    const answer = document.createElement("strong");
    answer.textContent = event.answer;
    item.textContent = `#${event.seq} ${event.summary} -> `;
    item.appendChild(answer);
    list.appendChild(item);
  }
  el<HTMLSpanElement>("mirror-status").textContent =
    state.timeline.length === 0
      ? "empty"
      : mirrorConsistent(state)
        ? `${state.timeline.length} events, mirror ok`
        : "MIRROR MISMATCH";
}

function renderSessionInfo() {
  const info = el<HTMLSpanElement>("session-info");
  if (!state) {
    info.textContent = "not connected";
    return;
  }
  info.textContent = `session ${state.sessionId} (${state.kind})`
    + (state.closed ? " [closed]" : "");
  el<HTMLButtonElement>("reveal-btn").disabled =
    state.kind !== "blinded" || state.closed;
}

async function guarded(action: () => Promise<void>) {
  if (busy) return;
  busy = true;
  document.body.classList.add("busy");
  try {
    await action();
    setBanner("");
  } catch (err) {
    if (err instanceof ApiError) {
      setBanner(`service answered ${err.status}: ${err.message}`, true);
    } else {
      setBanner(String(err), true);
    }
  } finally {
    busy = false;
    document.body.classList.remove("busy");
    renderSessionInfo();
    renderTimeline();
  }
}

function wire() {
  el<HTMLButtonElement>("connect-btn").addEventListener("click", () =>
    guarded(async () => {
      const url = el<HTMLInputElement>("service-url").value.trim();
      const kind = el<HTMLSelectElement>("kind").value;
      const seedText = el<HTMLInputElement>("seed").value.trim();
      const api = new ConsoleApi(url);
      state = await connect(api, kind, seedText ? Number(seedText) : undefined);
      el<HTMLDivElement>("reveal-result").textContent = "";
    }),
  );

  el<HTMLButtonElement>("sbox-btn").addEventListener("click", () =>
    guarded(async () => {
      if (!state) throw new Error("connect first");
      const fields = ["sbox-state", "sbox-left", "sbox-head", "sbox-right"].map(
        (id) => el<HTMLInputElement>(id).value.trim(),
      );
      if (!validConfigFields(fields[0], fields[1], fields[2], fields[3])) {
        throw new Error("configuration fields must use states h/qN and symbols 0, 1, _");
      }
      state = await submitSbox(state, buildConfig(fields[0], fields[1], fields[2], fields[3]));
    }),
  );

  el<HTMLButtonElement>("tbox-btn").addEventListener("click", () =>
    guarded(async () => {
      if (!state) throw new Error("connect first");
      const config = el<HTMLInputElement>("tbox-config").value.trim();
      const instruction = el<HTMLInputElement>("tbox-instruction").value.trim();
      state = await submitTbox(state, config, instruction);
    }),
  );

  el<HTMLButtonElement>("run-btn").addEventListener("click", () =>
    guarded(async () => {
      if (!state) throw new Error("connect first");
      const procedure = el<HTMLTextAreaElement>("editor").value;
      const input = el<HTMLInputElement>("run-input").value.trim();
      const view = await runAndTrace(state, procedure, input);
      state = view.state;
      const pathView = el<HTMLPreElement>("path-view");
      pathView.textContent = view.run.path.join("\n");
      el<HTMLSpanElement>("run-result").textContent =
        `${view.run.outcome}, time=${view.run.time}`
        + (view.run.outcome === "max-steps" ? " [budget]" : "");
    }),
  );

  el<HTMLButtonElement>("reveal-btn").addEventListener("click", () =>
    guarded(async () => {
      if (!state) throw new Error("connect first");
      const guess = el<HTMLSelectElement>("guess").value as "static" | "evolving";
      state = await guessAndReveal(state, guess);
      const revealed = state.revealed;
      if (!revealed) return;
      el<HTMLDivElement>("reveal-result").textContent =
        `the processor was ${revealed.actual} (${revealed.kind}); your guess `
        + `${revealed.guess} was ${revealed.guess_matched ? "right" : "wrong"} - `
        + `and a static acceptor reproducing all ${revealed.certificate.pairs.length} `
        + `observed answers exists either way, so it could never be grounded.`;
    }),
  );
}

wire();
renderSessionInfo();
