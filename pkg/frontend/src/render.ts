// Pure HTML renderers. Every number interpolated here comes straight from
// an API payload held in the state; nothing is computed client-side.
import type { AppState, MatchEntry, RuleRow, SortKey } from "./types.js";

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function sortRules(rules: RuleRow[], key: SortKey, ascending: boolean): RuleRow[] {
  const value = (r: RuleRow): number => {
    switch (key) {
      case "score":
        return r.score;
      case "fg":
        return r.stats.fg_matched;
      case "bg":
        return r.stats.bg_matched;
      default:
        return r.id;
    }
  };
  // stable: decorate with the original position
  return rules
    .map((r, i) => [r, i] as const)
    .sort((a, b) => {
      const d = value(a[0]) - value(b[0]);
      if (d !== 0) return ascending ? d : -d;
      return a[1] - b[1];
    })
    .map(([r]) => r);
}

function pct(x: number): string {
  return (100 * x).toFixed(1) + "%";
}

export function renderRuleTable(state: AppState): string {
  if (state.rules.length === 0) {
    return `<div class="onboarding">No rules loaded yet. Run the miner and start
      the service with <code>--rules</code> to explore a rule set.</div>`;
  }
  const arrow = state.sortAscending ? "▲" : "▼";
  const head = (key: SortKey, label: string) =>
    `<th data-sort="${key}">${label}${state.sortKey === key ? " " + arrow : ""}</th>`;
  const selected = new Set(state.panel.selected);
  const rows = sortRules(state.rules, state.sortKey, state.sortAscending)
    .map((r) => {
      const checked = selected.has(r.id) ? " checked" : "";
      return `<tr data-rule="${r.id}" class="${selected.has(r.id) ? "selected" : ""}">
        <td><input type="checkbox" data-select="${r.id}"${checked}></td>
        <td class="num">${r.id}</td>
        <td class="rule-text">${escapeHtml(r.text)}</td>
        <td class="num">${r.score.toFixed(4)}</td>
        <td class="num">${r.stats.fg_matched}/${r.stats.fg_total}</td>
        <td class="num">${r.stats.bg_matched}/${r.stats.bg_total}</td>
      </tr>`;
    })
    .join("\n");
  return `<table class="rules">
    <thead><tr><th></th>${head("id", "#")}<th>rule</th>${head("score", "score")}${head("fg", "fg")}${head("bg", "bg")}</tr></thead>
    <tbody>${rows}</tbody>
  </table>`;
}

export function renderMatchTokens(entry: MatchEntry): string {
  const bold = new Set(entry.match_indices);
  return entry.tokens
    .map((tok, i) =>
      bold.has(i) ? `<strong>${escapeHtml(tok)}</strong>` : escapeHtml(tok)
    )
    .join(" ");
}

export function renderPreview(state: AppState): string {
  const p = state.preview;
  if (p.ruleId === null) {
    return `<div class="preview-empty">Select a rule row to preview its matches.</div>`;
  }
  if (p.entries.length === 0) {
    return `<div class="preview-empty">Rule ${p.ruleId} matches no sentences in the corpus.</div>`;
  }
  const items = p.entries
    .map((e) => `<li data-match="${escapeHtml(e.id)}">${renderMatchTokens(e)}</li>`)
    .join("\n");
  const more = p.exhausted
    ? ""
    : `<button id="preview-more">Show more</button>`;
  return `<div class="preview-head">${escapeHtml(p.text)}</div>
    <ol class="preview-list">${items}</ol>${more}`;
}

export function renderMetricsPanel(state: AppState): string {
  const m = state.panel.lastMetrics;
  const gauges = m
    ? `<span class="gauge" data-metric="precision">P ${pct(m.metrics.precision)}</span>
       <span class="gauge" data-metric="recall">R ${pct(m.metrics.recall)}</span>
       <span class="gauge" data-metric="f1">F1 ${pct(m.metrics.f1)}</span>
       <span class="gauge-note">${m.selection.length} rules, x=${m.min_matches}, ${escapeHtml(m.category)}</span>`
    : `<span class="gauge" data-metric="precision">P –</span>
       <span class="gauge" data-metric="recall">R –</span>
       <span class="gauge" data-metric="f1">F1 –</span>`;
  const chip = state.errorChip
    ? `<span class="error-chip">${escapeHtml(state.errorChip)}</span>`
    : "";
  return `<div class="metrics">${gauges}${chip}</div>`;
}

export function renderBanner(state: AppState): string {
  return state.banner
    ? `<div class="banner error">${escapeHtml(state.banner)}</div>`
    : "";
}

export function renderMergeError(state: AppState): string {
  return state.mergeError
    ? `<div class="merge-error">${escapeHtml(state.mergeError)}</div>`
    : "";
}
