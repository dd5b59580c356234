import { describe, expect, it } from "vitest";

import { buildConfig, parseTranscript, parseTranscriptLine, validConfigFields } from "../src/format.js";

describe("buildConfig", () => {
  it("renders the display grammar", () => {
    expect(buildConfig("h", "111", "_", "")).toBe("(h, 111[_])");
    expect(buildConfig("q0", "", "_", "101")).toBe("(q0, [_]101)");
  });
});

describe("validConfigFields", () => {
  it("accepts well-formed fields", () => {
    expect(validConfigFields("h", "01", "_", "")).toBe(true);
    expect(validConfigFields("q12", "", "0", "1_1")).toBe(true);
  });

  it("rejects bad states, symbols and head widths", () => {
    expect(validConfigFields("x", "", "_", "")).toBe(false);
    expect(validConfigFields("h", "2", "_", "")).toBe(false);
    expect(validConfigFields("h", "", "01", "")).toBe(false);
    expect(validConfigFields("h", "", "", "")).toBe(false);
  });
});

describe("parseTranscript", () => {
  it("parses the order-pair lines into timeline entries", () => {
    const body =
      '{"seq":1,"kind":"sbox","config":"(h, 111[_])","answer":"YES"}\n' +
      '{"seq":2,"kind":"sbox","config":"(h, 11[_])","answer":"NO"}\n';
    const events = parseTranscript(body);
    expect(events).toHaveLength(2);
    expect(events[0]).toMatchObject({ seq: 1, kind: "sbox", answer: "YES" });
    expect(events[1]).toMatchObject({ seq: 2, kind: "sbox", answer: "NO" });
  });

  it("renders tbox answers and undefined transitions", () => {
    const hit = parseTranscriptLine(
      '{"seq":3,"kind":"tbox","config":"(q0, [_]1)","instruction":"q0,_/h,_,R","answer":"(h, [1])"}',
    );
    expect(hit.answer).toBe("(h, [1])");
    const miss = parseTranscriptLine(
      '{"seq":4,"kind":"tbox","config":"(q0, [_])","instruction":"q1,0/h,0,R","answer":null}',
    );
    expect(miss.answer).toBe("undefined");
  });

  it("summarizes run events with their time", () => {
    const event = parseTranscriptLine(
      '{"seq":5,"kind":"run","procedure":"q0,_/h,_,R","input":"11","answer":"success","time":4}',
    );
    expect(event.kind).toBe("run");
    expect(event.answer).toBe("success, time=4");
  });

  it("ignores the trailing newline", () => {
    expect(parseTranscript("")).toHaveLength(0);
  });
});
