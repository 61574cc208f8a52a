import { describe, expect, it } from "vitest";

import { ApiError } from "../src/api.js";
import { renderMatchTokens, renderPreview } from "../src/render.js";
import { MockApi, fixture, makeController } from "./helpers.js";

describe("match preview", () => {
  it("bolds exactly the matched token indices", () => {
    const entry = fixture.matches_page1.matches[0];
    const html = renderMatchTokens(entry);
    const bolded = [...html.matchAll(/<strong>([^<]+)<\/strong>/g)].map((m) => m[1]);
    expect(bolded.length).toBe(entry.match_indices.length);
    entry.match_indices.forEach((idx, i) => {
      expect(bolded[i]).toBe(
        entry.tokens[idx].replace(/&/g, "&amp;").replace(/</g, "&lt;"),
      );
    });
  });

  it("loads the first page and appends the next without duplication", async () => {
    const api = new MockApi();
    const { controller } = makeController(api);
    await controller.loadRules();
    await controller.openPreview(0);
    expect(controller.state.preview.entries.length).toBe(20);
    await controller.loadMorePreview();
    const entries = controller.state.preview.entries;
    expect(entries.length).toBe(40);
    const ids = entries.map((e) => e.id);
    expect(new Set(ids).size).toBe(ids.length);
    expect(entries.slice(0, 20)).toEqual(fixture.matches_page1.matches);
  });

  it("marks the preview exhausted when the server returns fewer than the limit", async () => {
    const api = new MockApi();
    api.matchesSource = {
      rule: 3,
      text: "tiny rule",
      matches: fixture.matches_page1.matches.slice(0, 3),
    };
    const { controller } = makeController(api);
    await controller.openPreview(3);
    expect(controller.state.preview.entries.length).toBe(3);
    expect(controller.state.preview.exhausted).toBe(true);
    expect(renderPreview(controller.state)).not.toContain("preview-more");
  });

  it("renders an empty state for a rule with no matches", async () => {
    const api = new MockApi();
    api.matchesSource = { rule: 7, text: "lonely", matches: [] };
    const { controller } = makeController(api);
    await controller.openPreview(7);
    const html = renderPreview(controller.state);
    expect(html).toContain("matches no sentences");
  });

  it("shows a paging button while more matches remain", async () => {
    const api = new MockApi();
    const { controller } = makeController(api);
    await controller.openPreview(0);
    expect(renderPreview(controller.state)).toContain("preview-more");
  });

  it("404 responses reset the preview and surface a banner", async () => {
    const api = new MockApi();
    api.matchesError = new ApiError(404, "unknown rule id 999");
    const { controller } = makeController(api);
    await controller.openPreview(999);
    expect(controller.state.banner).toContain("999");
    expect(controller.state.preview.ruleId).toBeNull();
  });

  it("prompt state before any rule is picked", () => {
    const api = new MockApi();
    const { controller } = makeController(api);
    expect(renderPreview(controller.state)).toContain("Select a rule row");
  });
});
