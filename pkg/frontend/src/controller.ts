import { ApiClient, ApiError } from "./api.js";
import type { AppState, SortKey } from "./types.js";
import { initialState } from "./types.js";

export type Scheduler = (fn: () => void, ms: number) => void;

const PREVIEW_PAGE = 20;

// State machine behind the page. DOM-free: callers subscribe via
// `onChange` and re-render from the state. Selection metrics requests are
// debounced and carry a sequence token so a stale response can never
// overwrite a newer one.
export class Controller {
  state: AppState = initialState();
  private seq = 0; // issued selection-request tokens
  private applied = 0; // token of the response currently displayed
  private debounceScheduled = false;

  constructor(
    private api: ApiClient,
    private onChange: (state: AppState) => void = () => {},
    private schedule: Scheduler = (fn, ms) => setTimeout(fn, ms),
    private debounceMs = 150,
  ) {}

  private notify(): void {
    this.onChange(this.state);
  }

  async loadRules(): Promise<void> {
    try {
      const payload = await this.api.rules();
      this.state.rules = payload.rules;
      this.state.foregroundSize = payload.foreground_size;
      this.state.backgroundSize = payload.background_size;
      this.state.panel.selected = payload.selection;
      this.state.banner = null;
    } catch (err) {
      this.state.banner = `Failed to load rules: ${(err as Error).message}`;
    }
    this.notify();
  }

  toggleSort(key: SortKey): void {
    if (this.state.sortKey === key) {
      this.state.sortAscending = !this.state.sortAscending;
    } else {
      this.state.sortKey = key;
      this.state.sortAscending = false;
    }
    this.notify();
  }

  setCategory(category: string | null): void {
    this.state.panel.category = category && category.trim() ? category.trim() : null;
    this.queueMetricsRefresh();
  }

  setMinMatches(x: number): void {
    if (!Number.isFinite(x) || x < 1) return;
    this.state.panel.minMatches = Math.floor(x);
    this.queueMetricsRefresh();
  }

  setSelected(ruleId: number, selected: boolean): void {
    const current = new Set(this.state.panel.selected);
    if (selected) current.add(ruleId);
    else current.delete(ruleId);
    this.state.panel.selected = [...current].sort((a, b) => a - b);
    this.queueMetricsRefresh();
  }

  selectMany(ruleIds: number[]): void {
    this.state.panel.selected = [...new Set(ruleIds)].sort((a, b) => a - b);
    this.queueMetricsRefresh();
  }

  clearSelection(): void {
    this.state.panel.selected = [];
    this.state.panel.lastMetrics = null;
    this.notify();
  }

  private queueMetricsRefresh(): void {
    this.notify();
    if (this.debounceScheduled) return;
    this.debounceScheduled = true;
    this.schedule(() => {
      this.debounceScheduled = false;
      void this.refreshMetrics();
    }, this.debounceMs);
  }

  async refreshMetrics(): Promise<void> {
    const token = ++this.seq;
    const { selected, minMatches, category } = this.state.panel;
    try {
      const payload = await this.api.selection(selected, minMatches, category);
      if (token <= this.applied || token !== this.seq) {
        return; // a newer request was issued or applied; drop this response
      }
      this.applied = token;
      this.state.panel.lastMetrics = payload;
      this.state.errorChip = null;
    } catch (err) {
      if (token !== this.seq) return;
      if (err instanceof ApiError && err.status >= 400 && err.status < 500) {
        this.state.errorChip = err.detail;
      } else {
        this.state.banner = `Selection request failed: ${(err as Error).message}`;
      }
    }
    this.notify();
  }

  async openPreview(ruleId: number): Promise<void> {
    this.state.preview = { ruleId, text: "", entries: [], limit: 0, exhausted: false };
    await this.loadMorePreview();
  }

  async loadMorePreview(): Promise<void> {
    const p = this.state.preview;
    if (p.ruleId === null) return;
    const limit = p.limit + PREVIEW_PAGE;
    try {
      const payload = await this.api.matches(p.ruleId, limit);
      // server returns the first `limit` matches; append only the tail so
      // paging never duplicates entries
      this.state.preview.entries = this.state.preview.entries.concat(
        payload.matches.slice(p.entries.length),
      );
      this.state.preview.text = payload.text;
      this.state.preview.limit = limit;
      this.state.preview.exhausted = payload.matches.length < limit;
    } catch (err) {
      if (err instanceof ApiError && err.status === 404) {
        this.state.banner = `Rule ${p.ruleId} not found`;
        this.state.preview = { ruleId: null, text: "", entries: [], limit: 0, exhausted: false };
      } else {
        this.state.banner = `Match preview failed: ${(err as Error).message}`;
      }
    }
    this.notify();
  }

  async merge(body: { source_ids: number[]; slots?: string[][]; rule_text?: string }): Promise<boolean> {
    try {
      const rule = await this.api.merge(body);
      this.state.rules = this.state.rules.concat([rule]);
      this.state.mergeError = null;
      this.notify();
      return true;
    } catch (err) {
      if (err instanceof ApiError && err.status === 422) {
        this.state.mergeError = err.detail; // surfaces inline in the dialog
      } else {
        this.state.banner = `Merge failed: ${(err as Error).message}`;
      }
      this.notify();
      return false;
    }
  }

  async undo(): Promise<void> {
    try {
      const { rules } = await this.api.undo();
      this.state.rules = this.state.rules.slice(0, rules);
      this.state.panel.selected = this.state.panel.selected.filter((i) => i < rules);
      this.state.mergeError = null;
    } catch (err) {
      this.state.banner = `Undo failed: ${(err as Error).message}`;
    }
    this.notify();
  }
}
