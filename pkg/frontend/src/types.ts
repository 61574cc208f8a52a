// Payload shapes of the rule-explorer HTTP API. The UI renders these
// verbatim; it never derives statistics of its own.

export interface RuleStats {
  fg_matched: number;
  fg_total: number;
  bg_matched: number;
  bg_total: number;
}

export interface RuleRow {
  id: number;
  text: string;
  slots: string[][];
  score: number;
  stats: RuleStats;
  selected: boolean;
}

export interface RulesPayload {
  rules: RuleRow[];
  selection: number[];
  params: Record<string, unknown>;
  foreground_size: number;
  background_size: number;
}

export interface MatchEntry {
  id: string;
  tokens: string[];
  match_indices: number[];
}

export interface MatchesPayload {
  rule: number;
  text: string;
  matches: MatchEntry[];
}

export interface Metrics {
  precision: number;
  recall: number;
  f1: number;
}

export interface SelectionPayload {
  selection: number[];
  min_matches: number;
  category: string;
  metrics: Metrics;
}

export type SortKey = "score" | "fg" | "bg" | "id";

export interface SelectionPanelState {
  selected: number[];
  minMatches: number;
  category: string | null;
  lastMetrics: SelectionPayload | null;
}

export interface AppState {
  rules: RuleRow[];
  foregroundSize: number;
  backgroundSize: number;
  sortKey: SortKey;
  sortAscending: boolean;
  panel: SelectionPanelState;
  preview: {
    ruleId: number | null;
    text: string;
    entries: MatchEntry[];
    limit: number;
    exhausted: boolean;
  };
  banner: string | null; // API failure banner
  errorChip: string | null; // 4xx feedback near the panel
  mergeError: string | null; // 422 detail shown inline in the dialog
}

export function initialState(): AppState {
  return {
    rules: [],
    foregroundSize: 0,
    backgroundSize: 0,
    sortKey: "score",
    sortAscending: false,
    panel: { selected: [], minMatches: 1, category: null, lastMetrics: null },
    preview: { ruleId: null, text: "", entries: [], limit: 0, exhausted: false },
    banner: null,
    errorChip: null,
    mergeError: null,
  };
}
