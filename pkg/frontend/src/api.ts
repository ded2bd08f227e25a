// Thin client for the read-only serve endpoints.  The UI never recomputes
// closed forms client-side; every displayed number comes from here.

import type { ApiErrorBody, CatalogEntry, CurveJson, Report } from "./types.js";

export class ApiError extends Error {
  readonly status: number;
  readonly code: string;
  readonly precondition?: string;

  constructor(status: number, body: ApiErrorBody | null, fallback: string) {
    super(body?.error.message ?? fallback);
    this.status = status;
    this.code = body?.error.code ?? "unknown";
    this.precondition = body?.error.precondition;
  }

  /** Widget the error belongs to: preconditions read "name <op> bound". */
  offendingParam(): string | null {
    if (!this.precondition) return null;
    const first = this.precondition.split(/\s/, 1)[0];
    return /^[a-z_]+$/i.test(first) ? first : null;
  }
}

/**
 * Pull the literal JSON number tokens following every `"key":` occurrence,
 * in document order.  Used to show backend numbers verbatim (string
 * equality with the serialized wire value, not a re-rendering).
 */
export function extractRawNumberTokens(text: string, key: string): string[] {
  const pattern = new RegExp(`"${key}"\\s*:\\s*(-?\\d+(?:\\.\\d+)?(?:[eE][+-]?\\d+)?)`, "g");
  const tokens: string[] = [];
  for (const match of text.matchAll(pattern)) {
    tokens.push(match[1]);
  }
  return tokens;
}

export type ParamValues = Record<string, string | number>;

function query(paradox: string, params: ParamValues): string {
  const search = new URLSearchParams({ paradox });
  for (const [name, value] of Object.entries(params)) {
    search.set(name, String(value));
  }
  return search.toString();
}

export class ApiClient {
  constructor(readonly baseUrl: string, private readonly fetcher: typeof fetch = fetch) {}

  private async request(path: string): Promise<Response> {
    let response: Response;
    try {
      response = await this.fetcher(`${this.baseUrl}${path}`);
    } catch (cause) {
      throw new ApiError(0, null, `backend unreachable at ${this.baseUrl}`);
    }
    if (!response.ok) {
      let body: ApiErrorBody | null = null;
      try {
        body = (await response.json()) as ApiErrorBody;
      } catch {
        body = null;
      }
      throw new ApiError(response.status, body, `HTTP ${response.status}`);
    }
    return response;
  }

  async catalog(): Promise<CatalogEntry[]> {
    const response = await this.request("/api/paradoxes");
    return (await response.json()) as CatalogEntry[];
  }

  async run(paradox: string, params: ParamValues): Promise<Report[]> {
    const response = await this.request(`/api/run?${query(paradox, params)}`);
    const text = await response.text();
    const parsed = JSON.parse(text) as Omit<Report, "rawFloatValue">[];
    const raw = extractRawNumberTokens(text, "float_value");
    return parsed.map((report, index) => ({
      ...report,
      rawFloatValue: raw[index] ?? String(report.float_value),
    }));
  }

  async geometry(paradox: string, params: ParamValues): Promise<CurveJson> {
    const response = await this.request(`/api/geometry?${query(paradox, params)}`);
    return (await response.json()) as CurveJson;
  }

  svgUrl(paradox: string, params: ParamValues): string {
    return `${this.baseUrl}/api/svg?${query(paradox, params)}`;
  }
}
