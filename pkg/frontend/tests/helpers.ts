import type { ApiClient } from "../src/api.js";
import { ApiError } from "../src/api.js";
import { Controller } from "../src/controller.js";
import type {
  AppState,
  MatchesPayload,
  RuleRow,
  RulesPayload,
  SelectionPayload,
} from "../src/types.js";
import fixtureJson from "./fixture.json";

export interface Fixture {
  rules_payload: RulesPayload;
  top10_by_ig: number[];
  expected_top10_x1: { precision: number; recall: number; f1: number };
  selection_payload: SelectionPayload;
  merge_request: { source_ids: number[]; slots: string[][] };
  merge_payload: RuleRow;
  cmd_match_count: number;
  matches_page1: MatchesPayload;
  matches_page2: MatchesPayload;
  no_match_rule: number | null;
}

export const fixture = fixtureJson as unknown as Fixture;

type Deferred<T> = { resolve: (v: T) => void; reject: (e: unknown) => void; promise: Promise<T> };

export function deferred<T>(): Deferred<T> {
  let resolve!: (v: T) => void;
  let reject!: (e: unknown) => void;
  const promise = new Promise<T>((res, rej) => {
    resolve = res;
    reject = rej;
  });
  return { resolve, reject, promise };
}

// Canned-response API double. Every value it returns comes from the
// fixture (captured from the real server) or from values the test sets
// explicitly; nothing is computed here.
export class MockApi implements ApiClient {
  selectionCalls: Array<{ ruleIds: number[]; minMatches: number; category: string | null }> = [];
  mergeCalls: unknown[] = [];
  selectionQueue: Array<Deferred<SelectionPayload>> = [];
  manualSelection = false;
  selectionResponse: SelectionPayload = fixture.selection_payload;
  selectionError: ApiError | null = null;
  mergeError: ApiError | null = null;
  matchesError: ApiError | null = null;
  matchesSource: MatchesPayload | null = null;

  async rules(): Promise<RulesPayload> {
    return structuredClone(fixture.rules_payload);
  }

  async matches(ruleId: number, limit: number): Promise<MatchesPayload> {
    if (this.matchesError) throw this.matchesError;
    const source =
      this.matchesSource ?? (limit <= 20 ? fixture.matches_page1 : fixture.matches_page2);
    return {
      rule: ruleId,
      text: source.text,
      matches: structuredClone(source.matches.slice(0, limit)),
    };
  }

  selection(ruleIds: number[], minMatches: number, category: string | null): Promise<SelectionPayload> {
    this.selectionCalls.push({ ruleIds, minMatches, category });
    if (this.selectionError) return Promise.reject(this.selectionError);
    if (this.manualSelection) {
      const d = deferred<SelectionPayload>();
      this.selectionQueue.push(d);
      return d.promise;
    }
    return Promise.resolve(structuredClone(this.selectionResponse));
  }

  async merge(body: { source_ids: number[]; slots?: string[][]; rule_text?: string }): Promise<RuleRow> {
    this.mergeCalls.push(body);
    if (this.mergeError) throw this.mergeError;
    return structuredClone(fixture.merge_payload);
  }

  async undo(): Promise<{ rules: number }> {
    return { rules: fixture.rules_payload.rules.length };
  }

  async exportRules(): Promise<unknown> {
    return {};
  }
}

export function makeController(api: MockApi) {
  const states: AppState[] = [];
  const pending: Array<() => void> = [];
  const controller = new Controller(
    api,
    (s) => states.push(structuredClone(s)),
    (fn) => pending.push(fn),
    0,
  );
  const flushDebounce = () => {
    while (pending.length) pending.shift()!();
  };
  return { controller, states, flushDebounce };
}

export async function settle(): Promise<void> {
  // let queued promise callbacks run
  for (let i = 0; i < 5; i++) await Promise.resolve();
}
