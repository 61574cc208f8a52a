import { HttpApiClient } from "./api.js";
import { Controller } from "./controller.js";
import {
  renderBanner,
  renderMergeError,
  renderMetricsPanel,
  renderPreview,
  renderRuleTable,
} from "./render.js";
import type { AppState, SortKey } from "./types.js";

const MIN_MATCH_GRID = [10, 5, 2, 1];

function byId(id: string): HTMLElement {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el;
}

function renderAll(state: AppState): void {
  byId("banner").innerHTML = renderBanner(state);
  byId("table").innerHTML = renderRuleTable(state);
  byId("metrics").innerHTML = renderMetricsPanel(state);
  byId("preview").innerHTML = renderPreview(state);
  byId("merge-feedback").innerHTML = renderMergeError(state);
  const x = byId("min-matches") as HTMLInputElement;
  if (document.activeElement !== x) x.value = String(state.panel.minMatches);
}

function main(): void {
  const controller = new Controller(new HttpApiClient(), renderAll);

  byId("table").addEventListener("click", (ev) => {
    const target = ev.target as HTMLElement;
    const sortKey = target.closest("th")?.dataset.sort as SortKey | undefined;
    if (sortKey) {
      controller.toggleSort(sortKey);
      return;
    }
    const checkbox = target.closest("input[data-select]") as HTMLInputElement | null;
    if (checkbox) {
      controller.setSelected(Number(checkbox.dataset.select), checkbox.checked);
      return;
    }
    const row = target.closest("tr[data-rule]") as HTMLElement | null;
    if (row) void controller.openPreview(Number(row.dataset.rule));
  });

  byId("preview").addEventListener("click", (ev) => {
    if ((ev.target as HTMLElement).id === "preview-more") {
      void controller.loadMorePreview();
    }
  });

  const grid = byId("min-match-grid");
  for (const x of MIN_MATCH_GRID) {
    const btn = document.createElement("button");
    btn.textContent = `x=${x}`;
    btn.addEventListener("click", () => controller.setMinMatches(x));
    grid.appendChild(btn);
  }
  (byId("min-matches") as HTMLInputElement).addEventListener("change", (ev) => {
    controller.setMinMatches(Number((ev.target as HTMLInputElement).value));
  });
  (byId("category") as HTMLInputElement).addEventListener("change", (ev) => {
    controller.setCategory((ev.target as HTMLInputElement).value);
  });
  byId("clear-selection").addEventListener("click", () => controller.clearSelection());

  byId("merge-run").addEventListener("click", () => {
    const text = (byId("merge-text") as HTMLTextAreaElement).value.trim();
    const sources = (byId("merge-sources") as HTMLInputElement).value
      .split(",")
      .map((s) => Number(s.trim()))
      .filter((n) => Number.isFinite(n));
    if (!text) return;
    const body = text.startsWith("⟨")
      ? { source_ids: sources, rule_text: text }
      : { source_ids: sources, slots: text.split(";").map((slot) => slot.split("&").map((a) => a.trim())) };
    void controller.merge(body);
  });
  byId("undo").addEventListener("click", () => void controller.undo());
  byId("export").addEventListener("click", () => {
    void new HttpApiClient().exportRules(null).then((obj) => {
      const blob = new Blob([JSON.stringify(obj, null, 1)], { type: "application/json" });
      const a = document.createElement("a");
      a.href = URL.createObjectURL(blob);
      a.download = "rules.json";
      a.click();
    });
  });

  void controller.loadRules();
}

main();
