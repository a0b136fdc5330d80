import { afterEach, describe, expect, it, vi } from "vitest";

import { ApiClient, ApiError } from "../src/api.js";
import type { Session } from "../src/types.js";

const SESSION: Session = {
  id: "abc123",
  k: 5,
  bound: 64,
  current: { x: 12, y: 7 },
  status: "in-progress",
  version: 0,
  history: [],
};

function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "content-type": "application/json" },
  });
}

function stubFetch(response: Response) {
  const mock = vi.fn().mockResolvedValue(response);
  vi.stubGlobal("fetch", mock);
  return mock;
}

afterEach(() => {
  vi.unstubAllGlobals();
});

describe("ApiClient", () => {
  it("posts session creation and parses the session", async () => {
    const mock = stubFetch(jsonResponse(SESSION));
    const client = new ApiClient("http://svc");
    const got = await client.createSession({
      k: 5,
      bound: 64,
      start: { x: 12, y: 7 },
    });
    expect(got).toEqual(SESSION);
    const [url, init] = mock.mock.calls[0] as [string, RequestInit];
    expect(url).toBe("http://svc/sessions");
    expect(init.method).toBe("POST");
    expect(JSON.parse(init.body as string)).toEqual({
      k: 5,
      bound: 64,
      start: { x: 12, y: 7 },
    });
  });

  it("posts moves with the optimistic version", async () => {
    const mock = stubFetch(jsonResponse({ ...SESSION, version: 2 }));
    const client = new ApiClient();
    const got = await client.move("abc123", { x: 12, y: 6 }, 0);
    expect(got.version).toBe(2);
    const [url, init] = mock.mock.calls[0] as [string, RequestInit];
    expect(url).toBe("/sessions/abc123/move");
    expect(JSON.parse(init.body as string)).toEqual({
      to: { x: 12, y: 6 },
      version: 0,
    });
  });

  it("unwraps the hint list", async () => {
    stubFetch(
      jsonResponse({
        winning_moves: [
          { x: 5, y: 0 },
          { x: 12, y: 6 },
        ],
      }),
    );
    const client = new ApiClient();
    expect(await client.hints("abc123")).toEqual([
      { x: 5, y: 0 },
      { x: 12, y: 6 },
    ]);
  });

  it("builds classification and p-position queries", async () => {
    const mock = stubFetch(jsonResponse({ class: "pair-P", pair_index: 1 }));
    const client = new ApiClient("http://svc");
    const got = await client.classify(5, { x: 12, y: 6 });
    expect(got).toEqual({ class: "pair-P", pair_index: 1 });
    expect(mock.mock.calls[0]?.[0]).toBe("http://svc/classify?k=5&x=12&y=6");

    const mock2 = stubFetch(jsonResponse([{ x: 0, y: 0 }]));
    await client.pPositions(5, 25);
    expect(mock2.mock.calls[0]?.[0]).toBe("http://svc/ppositions?k=5&bound=25");
  });

  it("raises ApiError with the server's code and detail", async () => {
    stubFetch(
      jsonResponse({ error: "illegal_move", detail: "not a queen move" }, 409),
    );
    const client = new ApiClient();
    const failure = client.move("abc123", { x: 13, y: 8 }, 0);
    await expect(failure).rejects.toBeInstanceOf(ApiError);
    await expect(failure).rejects.toMatchObject({
      status: 409,
      code: "illegal_move",
      detail: "not a queen move",
    });
  });

  it("degrades to a generic error for non-JSON failures", async () => {
    stubFetch(new Response("boom", { status: 502, statusText: "Bad Gateway" }));
    const client = new ApiClient();
    await expect(client.health()).rejects.toMatchObject({
      status: 502,
      code: "http_error",
      detail: "Bad Gateway",
    });
  });
});
