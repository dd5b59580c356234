// Scripted stand-in for the session service, answering through the same
// wire shapes (including byte-identical transcript lines).

export interface FakeSession {
  kind: string;
  seq: number;
  lines: string[];
  revealed: boolean;
  sboxScript: string[];
}

export class FakeService {
  sessions = new Map<string, FakeSession>();
  requests: { method: string; url: string; body?: unknown }[] = [];
  private counter = 0;

  constructor(private sboxScript: string[] = []) {}

  fetch = async (url: string, init?: RequestInit): Promise<Response> => {
    const method = init?.method ?? "GET";
    const body = init?.body ? JSON.parse(init.body as string) : undefined;
    this.requests.push({ method, url, body });
    const path = url.replace(/^https?:\/\/[^/]+/, "");

    if (method === "POST" && path === "/sessions") {
      const id = `fake${++this.counter}`;
      this.sessions.set(id, {
        kind: body.kind,
        seq: 0,
        lines: [],
        revealed: false,
        sboxScript: [...this.sboxScript],
      });
      return json200({ id, kind: body.kind });
    }

    const match = path.match(/^\/sessions\/([^/]+)(\/.*)?$/);
    const session = match ? this.sessions.get(match[1]) : undefined;
    if (!session) return json(404, { error: "no such session" });
    const tail = match![2] ?? "";

    if (session.revealed && tail !== "/transcript") {
      return json(409, { error: "session was revealed and is closed" });
    }

    if (method === "POST" && tail === "/sbox") {
      if (!/^\((h|q\d+), [01_]*\[[01_]\][01_]*\)$/.test(body.config)) {
        return json(409, { error: `not a configuration: ${body.config}` });
      }
      const verdict = session.sboxScript.shift() ?? "NO";
      session.seq += 1;
      session.lines.push(JSON.stringify({
        seq: session.seq, kind: "sbox", config: body.config, answer: verdict,
      }));
      return json200({ verdict });
    }

    if (method === "POST" && tail === "/run") {
      session.seq += 1;
      const verdict = session.sboxScript.shift() ?? "NO";
      session.lines.push(JSON.stringify({
        seq: session.seq, kind: "run", procedure: body.procedure,
        input: body.input, answer: verdict === "YES" ? "success" : "stuck-no",
        time: body.input.length + 2,
      }));
      return json200({
        outcome: verdict === "YES" ? "success" : "stuck-no",
        time: body.input.length + 2,
        path: [`(q0, [_]${body.input})`, `(h, ${body.input}[_])`],
      });
    }

    if (method === "GET" && tail === "/transcript") {
      return new Response(session.lines.map((l) => l + "\n").join(""), {
        status: 200,
        headers: { "Content-Type": "application/jsonl" },
      });
    }

    if (method === "POST" && tail === "/reveal") {
      if (session.kind !== "blinded") {
        return json(409, { error: "reveal applies to blinded sessions only" });
      }
      session.revealed = true;
      const actual = "evolving";
      return json200({
        kind: "ee",
        actual,
        guess: body.guess ?? null,
        guess_matched: body.guess ? body.guess === actual : null,
        certificate: {
          pairs: [["111", 1], ["11", 0]],
          acceptor: { states: ["n0"], start: "n0", transitions: [], accepting: [] },
          reproduces_all: true,
        },
      });
    }

    return json(404, { error: "no such endpoint" });
  };
}

function json(status: number, body: unknown): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "Content-Type": "application/json" },
  });
}

function json200(body: unknown): Response {
  return json(200, body);
}
