// Display-grammar helpers shared by the forms and the timeline.
// The console never evaluates anything itself: these functions only build
// request strings and parse what the server already answered.

export interface TranscriptEvent {
  seq: number;
  kind: "tbox" | "sbox" | "run";
  summary: string;
  answer: string;
}

/** Build a configuration display string from the free-query form fields. */
export function buildConfig(state: string, left: string, head: string, right: string): string {
  return `(${state}, ${left}[${head}]${right})`;
}

const STATE_RE = /^(h|q\d+)$/;
const TAPE_RE = /^[01_]*$/;

/** Client-side shape check so obviously bad forms fail before a request.
 * The server remains the authority (it answers 409 for anything off). */
export function validConfigFields(state: string, left: string, head: string, right: string): boolean {
  return STATE_RE.test(state) && TAPE_RE.test(left) && TAPE_RE.test(right)
    && head.length === 1 && TAPE_RE.test(head);
}

/** Parse one JSON Lines transcript row into a timeline entry. */
export function parseTranscriptLine(line: string): TranscriptEvent {
  const row = JSON.parse(line);
  if (row.kind === "tbox") {
    return {
      seq: row.seq,
      kind: "tbox",
      summary: `TBOX ${row.config} | ${row.instruction}`,
      answer: row.answer === null ? "undefined" : row.answer,
    };
  }
  if (row.kind === "sbox") {
    return { seq: row.seq, kind: "sbox", summary: `SBOX ${row.config}`, answer: row.answer };
  }
  return {
    seq: row.seq,
    kind: "run",
    summary: `RUN ${row.input === "" ? "(empty)" : row.input} via ${row.procedure}`,
    answer: `${row.answer}, time=${row.time}`,
  };
}

/** Parse a whole transcript body (JSON Lines) into timeline entries. */
export function parseTranscript(body: string): TranscriptEvent[] {
  return body
    .split("\n")
    .filter((line) => line.length > 0)
    .map(parseTranscriptLine);
}
