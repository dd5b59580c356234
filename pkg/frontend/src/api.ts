// Typed client for the compenv session service.
// fetch is injectable so tests can script the server side.

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export interface SessionHandle {
  id: string;
  kind: string;
}

export interface RunResult {
  outcome: string;
  time: number;
  path: string[];
}

export interface RevealResult {
  kind: string;
  actual: string;
  guess: string | null;
  guess_matched: boolean | null;
  certificate: {
    pairs: [string, number][];
    acceptor: unknown;
    reproduces_all: boolean;
  };
}

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

async function expectJson<T>(response: Response): Promise<T> {
  if (!response.ok) {
    let detail = `${response.status}`;
    try {
      const body = await response.json();
      if (body && body.error) detail = body.error;
    } catch {
      // keep the bare status
    }
    throw new ApiError(response.status, detail);
  }
  return (await response.json()) as T;
}

export class ConsoleApi {
  constructor(private baseUrl: string, private fetchImpl: FetchLike = fetch) {}

  private post(path: string, body: unknown): Promise<Response> {
    return this.fetchImpl(`${this.baseUrl}${path}`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
  }

  async openSession(kind: string, seed?: number): Promise<SessionHandle> {
    const body: Record<string, unknown> = { kind };
    if (seed !== undefined) body.seed = seed;
    return expectJson<SessionHandle>(await this.post("/sessions", body));
  }

  async querySbox(sessionId: string, config: string): Promise<string> {
    const body = await expectJson<{ verdict: string }>(
      await this.post(`/sessions/${sessionId}/sbox`, { config }),
    );
    return body.verdict;
  }

  async queryTbox(sessionId: string, config: string, instruction: string): Promise<string | null> {
    const body = await expectJson<{ answer: string | null }>(
      await this.post(`/sessions/${sessionId}/tbox`, { config, instruction }),
    );
    return body.answer;
  }

  async runProcedure(
    sessionId: string,
    procedure: string,
    input: string,
    maxSteps?: number,
  ): Promise<RunResult> {
    const body: Record<string, unknown> = { procedure, input };
    if (maxSteps !== undefined) body.max_steps = maxSteps;
    return expectJson<RunResult>(await this.post(`/sessions/${sessionId}/run`, body));
  }

  async transcript(sessionId: string): Promise<string> {
    const response = await this.fetchImpl(`${this.baseUrl}/sessions/${sessionId}/transcript`);
    if (!response.ok) throw new ApiError(response.status, `${response.status}`);
    return await response.text();
  }

  async reveal(sessionId: string, guess: string | null): Promise<RevealResult> {
    const body = guess === null ? {} : { guess };
    return expectJson<RevealResult>(await this.post(`/sessions/${sessionId}/reveal`, body));
  }
}
