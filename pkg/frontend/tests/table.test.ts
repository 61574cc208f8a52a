import { describe, expect, it } from "vitest";

import { renderRuleTable, sortRules } from "../src/render.js";
import { initialState } from "../src/types.js";
import { MockApi, fixture, makeController } from "./helpers.js";

async function loadedState() {
  const api = new MockApi();
  const { controller } = makeController(api);
  await controller.loadRules();
  return controller.state;
}

describe("rule table", () => {
  it("renders all 100 fixture rules", async () => {
    const state = await loadedState();
    const html = renderRuleTable(state);
    const rows = html.match(/<tr data-rule=/g) ?? [];
    expect(fixture.rules_payload.rules.length).toBe(100);
    expect(rows.length).toBe(100);
  });

  it("shows exactly the API-provided numbers in each row", async () => {
    const state = await loadedState();
    const html = renderRuleTable(state);
    for (const rule of fixture.rules_payload.rules.slice(0, 10)) {
      expect(html).toContain(`<td class="num">${rule.score.toFixed(4)}</td>`);
      expect(html).toContain(
        `<td class="num">${rule.stats.fg_matched}/${rule.stats.fg_total}</td>`,
      );
    }
  });

  it("every numeric cell is traceable to an API field", async () => {
    const state = await loadedState();
    const html = renderRuleTable(state);
    const allowed = new Set<string>();
    for (const r of fixture.rules_payload.rules) {
      allowed.add(String(r.id));
      allowed.add(r.score.toFixed(4));
      allowed.add(`${r.stats.fg_matched}/${r.stats.fg_total}`);
      allowed.add(`${r.stats.bg_matched}/${r.stats.bg_total}`);
    }
    for (const m of html.matchAll(/<td class="num">([^<]+)<\/td>/g)) {
      expect(allowed.has(m[1]), `unexpected number ${m[1]}`).toBe(true);
    }
  });

  it("sorts by score descending by default and toggles stably", async () => {
    const api = new MockApi();
    const { controller } = makeController(api);
    await controller.loadRules();
    const scores = (rows: ReturnType<typeof sortRules>) => rows.map((r) => r.score);

    const desc = sortRules(controller.state.rules, "score", false);
    const sortedDesc = [...scores(desc)].sort((a, b) => b - a);
    expect(scores(desc)).toEqual(sortedDesc);

    controller.toggleSort("score"); // same key: flips direction
    expect(controller.state.sortAscending).toBe(true);
    const asc = sortRules(controller.state.rules, "score", true);
    expect(scores(asc)).toEqual([...scores(asc)].sort((a, b) => a - b));

    // ties keep original order (stability)
    const tied = desc.filter((r) => r.score === desc[desc.length - 1].score);
    if (tied.length > 1) {
      const ids = tied.map((r) => r.id);
      const reSorted = sortRules(desc, "score", false)
        .filter((r) => r.score === tied[0].score)
        .map((r) => r.id);
      expect(reSorted).toEqual(ids);
    }

    controller.toggleSort("fg"); // new key: back to descending
    expect(controller.state.sortKey).toBe("fg");
    expect(controller.state.sortAscending).toBe(false);
    const byFg = sortRules(controller.state.rules, "fg", false);
    expect(byFg[0].stats.fg_matched).toBe(
      Math.max(...controller.state.rules.map((r) => r.stats.fg_matched)),
    );
  });

  it("shows an onboarding hint for an empty rule set", () => {
    const state = initialState();
    expect(renderRuleTable(state)).toContain("No rules loaded yet");
  });

  it("shows a failure banner when the rules request fails", async () => {
    const api = new MockApi();
    api.rules = async () => {
      throw new Error("connection refused");
    };
    const { controller } = makeController(api);
    await controller.loadRules();
    expect(controller.state.banner).toContain("Failed to load rules");
  });
});
