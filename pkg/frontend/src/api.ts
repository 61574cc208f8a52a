import type { MatchesPayload, RuleRow, RulesPayload, SelectionPayload } from "./types.js";

export class ApiError extends Error {
  constructor(public status: number, public detail: string) {
    super(`HTTP ${status}: ${detail}`);
  }
}

// Everything the UI needs from the server. Tests substitute a mock; the
// browser build uses HttpApiClient below.
export interface ApiClient {
  rules(): Promise<RulesPayload>;
  matches(ruleId: number, limit: number): Promise<MatchesPayload>;
  selection(ruleIds: number[], minMatches: number, category: string | null): Promise<SelectionPayload>;
  merge(body: { source_ids: number[]; slots?: string[][]; rule_text?: string }): Promise<RuleRow>;
  undo(): Promise<{ rules: number }>;
  exportRules(path: string | null): Promise<unknown>;
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  let resp: Response;
  try {
    resp = await fetch(url, init);
  } catch (err) {
    throw new ApiError(0, String(err));
  }
  if (!resp.ok) {
    let detail = resp.statusText;
    try {
      const body = await resp.json();
      if (body && typeof body.detail === "string") detail = body.detail;
    } catch {
      // non-JSON error body; keep the status text
    }
    throw new ApiError(resp.status, detail);
  }
  return (await resp.json()) as T;
}

function post<T>(url: string, body: unknown): Promise<T> {
  return request<T>(url, {
    method: "POST",
    headers: { "content-type": "application/json" },
    body: JSON.stringify(body),
  });
}

export class HttpApiClient implements ApiClient {
  constructor(private base: string = "") {}

  rules(): Promise<RulesPayload> {
    return request(`${this.base}/api/rules`);
  }

  matches(ruleId: number, limit: number): Promise<MatchesPayload> {
    return request(`${this.base}/api/rules/${ruleId}/matches?limit=${limit}`);
  }

  selection(ruleIds: number[], minMatches: number, category: string | null): Promise<SelectionPayload> {
    const body: Record<string, unknown> = { rule_ids: ruleIds, min_matches: minMatches };
    if (category) body.category = category;
    return post(`${this.base}/api/selection`, body);
  }

  merge(body: { source_ids: number[]; slots?: string[][]; rule_text?: string }): Promise<RuleRow> {
    return post(`${this.base}/api/rules/merge`, body);
  }

  undo(): Promise<{ rules: number }> {
    return post(`${this.base}/api/undo`, {});
  }

  exportRules(path: string | null): Promise<unknown> {
    return post(`${this.base}/api/export`, path ? { path } : {});
  }
}
