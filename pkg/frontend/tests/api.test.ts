import { describe, expect, test } from "vitest";

import { ApiClient, ApiError, type FetchLike } from "../src/api.js";

function fakeFetch(status: number, body: unknown): { fetch: FetchLike; calls: { url: string; init?: RequestInit }[] } {
  const calls: { url: string; init?: RequestInit }[] = [];
  const fetch: FetchLike = async (url, init) => {
    calls.push({ url, init });
    return new Response(JSON.stringify(body), {
      status,
      headers: { "content-type": "application/json" },
    });
  };
  return { fetch, calls };
}

describe("ApiClient", () => {
  test("check posts the proof to /check", async () => {
    const { fetch, calls } = fakeFetch(200, { verdict: "valid", diagnostics: [] });
    const client = new ApiClient("http://service:8601", fetch);
    const report = await client.check("1. T A pre\n");
    expect(report.verdict).toBe("valid");
    expect(calls).toHaveLength(1);
    expect(calls[0]!.url).toBe("http://service:8601/check");
    expect(calls[0]!.init?.method).toBe("POST");
    expect(JSON.parse(String(calls[0]!.init?.body))).toEqual({ proof: "1. T A pre\n" });
  });

  test("latex returns the source on success", async () => {
    const { fetch } = fakeFetch(200, { latex: "% requires\n\\Tree [.{} ]" });
    const result = await new ApiClient("http://s", fetch).latex("p");
    expect(result).toEqual({ ok: true, latex: "% requires\n\\Tree [.{} ]" });
  });

  test("latex surfaces parse diagnostics from a 422", async () => {
    const report = {
      verdict: "parse_error",
      diagnostics: [{ line: 1, code: "PARSE_ERROR", message: "column 1: nope", refs: [] }],
    };
    const { fetch } = fakeFetch(422, report);
    const result = await new ApiClient("http://s", fetch).latex("garbage");
    expect(result.ok).toBe(false);
    if (!result.ok) {
      expect(result.report.verdict).toBe("parse_error");
    }
  });

  test("unreachable service raises ApiError", async () => {
    const failing: FetchLike = async () => {
      throw new TypeError("fetch failed");
    };
    const client = new ApiClient("http://down", failing);
    await expect(client.check("x")).rejects.toBeInstanceOf(ApiError);
  });

  test("server errors raise ApiError with the status", async () => {
    const { fetch } = fakeFetch(500, { error: "boom" });
    await expect(new ApiClient("http://s", fetch).check("x")).rejects.toMatchObject({
      status: 500,
    });
  });
});
