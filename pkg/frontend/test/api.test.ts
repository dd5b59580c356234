import { describe, expect, it } from "vitest";

import { ApiError, ConsoleApi } from "../src/api.js";
import { FakeService } from "./fake_service.js";

const BASE = "http://service.test";

describe("ConsoleApi", () => {
  it("opens sessions with kind and seed", async () => {
    const service = new FakeService();
    const api = new ConsoleApi(BASE, service.fetch);
    const handle = await api.openSession("blinded", 7);
    expect(handle.id).toBeTruthy();
    expect(service.requests[0]).toMatchObject({
      method: "POST",
      url: `${BASE}/sessions`,
      body: { kind: "blinded", seed: 7 },
    });
  });

  it("posts sbox queries to the session path and returns the verdict", async () => {
    const service = new FakeService(["YES"]);
    const api = new ConsoleApi(BASE, service.fetch);
    const { id } = await api.openSession("ee");
    const verdict = await api.querySbox(id, "(h, 111[_])");
    expect(verdict).toBe("YES");
    expect(service.requests[1]).toMatchObject({
      url: `${BASE}/sessions/${id}/sbox`,
      body: { config: "(h, 111[_])" },
    });
  });

  it("surfaces 409 answers as ApiError with the server message", async () => {
    const service = new FakeService();
    const api = new ConsoleApi(BASE, service.fetch);
    const { id } = await api.openSession("ee");
    await expect(api.querySbox(id, "(broken")).rejects.toThrowError(ApiError);
    await expect(api.querySbox(id, "(broken")).rejects.toThrow(/not a configuration/);
  });

  it("fetches transcripts as raw text", async () => {
    const service = new FakeService(["YES", "NO"]);
    const api = new ConsoleApi(BASE, service.fetch);
    const { id } = await api.openSession("ee");
    await api.querySbox(id, "(h, 111[_])");
    await api.querySbox(id, "(h, 11[_])");
    const body = await api.transcript(id);
    expect(body).toBe(
      '{"seq":1,"kind":"sbox","config":"(h, 111[_])","answer":"YES"}\n' +
      '{"seq":2,"kind":"sbox","config":"(h, 11[_])","answer":"NO"}\n',
    );
  });

  it("reveals with an optional guess", async () => {
    const service = new FakeService();
    const api = new ConsoleApi(BASE, service.fetch);
    const { id } = await api.openSession("blinded");
    const result = await api.reveal(id, "static");
    expect(result.kind).toBe("ee");
    expect(result.guess_matched).toBe(false);
    expect(result.certificate.reproduces_all).toBe(true);
  });
});
