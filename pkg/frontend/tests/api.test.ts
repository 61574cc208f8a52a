import { afterEach, describe, expect, it, vi } from "vitest";

import { ApiError, HttpApiClient } from "../src/api.js";

function stubFetch(status: number, body: unknown) {
  const fn = vi.fn(async () =>
    new Response(JSON.stringify(body), {
      status,
      headers: { "content-type": "application/json" },
    }),
  );
  vi.stubGlobal("fetch", fn);
  return fn;
}

afterEach(() => vi.unstubAllGlobals());

describe("http client", () => {
  it("hits the documented endpoints", async () => {
    const fn = stubFetch(200, { rules: [], selection: [], params: {}, foreground_size: 0, background_size: 0 });
    const api = new HttpApiClient();
    await api.rules();
    expect(fn.mock.calls[0][0]).toBe("/api/rules");
    await api.matches(4, 25);
    expect(fn.mock.calls[1][0]).toBe("/api/rules/4/matches?limit=25");
    await api.selection([1, 2], 5, "spam");
    const [url, init] = fn.mock.calls[2] as [string, RequestInit];
    expect(url).toBe("/api/selection");
    expect(JSON.parse(init.body as string)).toEqual({
      rule_ids: [1, 2],
      min_matches: 5,
      category: "spam",
    });
  });

  it("omits the category when unset", async () => {
    const fn = stubFetch(200, {});
    await new HttpApiClient().selection([], 1, null);
    const init = fn.mock.calls[0][1] as RequestInit;
    expect(JSON.parse(init.body as string)).toEqual({ rule_ids: [], min_matches: 1 });
  });

  it("maps error bodies to ApiError with the server detail", async () => {
    stubFetch(404, { detail: "unknown rule id 9" });
    await expect(new HttpApiClient().matches(9, 5)).rejects.toMatchObject({
      status: 404,
      detail: "unknown rule id 9",
    });
  });

  it("wraps network failures as status 0", async () => {
    vi.stubGlobal("fetch", vi.fn(async () => {
      throw new TypeError("fetch failed");
    }));
    const err = await new HttpApiClient().rules().catch((e) => e);
    expect(err).toBeInstanceOf(ApiError);
    expect(err.status).toBe(0);
  });
});
