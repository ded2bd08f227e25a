// Explorer state: one store drives the form, the canvas, the sequence
// panel, and the verdict strip.  All numbers displayed are backend
// responses; the store never computes a closed form.

import { ApiClient, ApiError, type ParamValues } from "./api.js";
import { checkAll, defaults, type FormValues } from "./params.js";
import type { CatalogEntry, CurveJson, Report } from "./types.js";

export interface SequenceRow {
  n: number;
  /** backend float_value, verbatim token */
  length: string;
  supDistance: number | null;
}

export interface InlineError {
  param: string | null;
  message: string;
}

export type Listener = () => void;

export class ExplorerStore {
  catalog: CatalogEntry[] = [];
  catalogError: string | null = null;

  selected: CatalogEntry | null = null;
  values: FormValues = {};
  reports: Report[] = [];
  curve: CurveJson | null = null;
  inlineError: InlineError | null = null;
  playing = false;

  private requestSeq = 0;
  private appliedSeq = 0;
  private listeners: Listener[] = [];

  constructor(private readonly api: ApiClient) {}

  subscribe(listener: Listener): void {
    this.listeners.push(listener);
  }

  private notify(): void {
    for (const listener of this.listeners) listener();
  }

  async loadCatalog(): Promise<void> {
    this.catalogError = null;
    try {
      this.catalog = await this.api.catalog();
      if (!this.selected && this.catalog.length > 0) {
        this.select(this.catalog[0].name);
        return; // select() notifies and fetches
      }
    } catch (error) {
      this.catalog = [];
      this.catalogError =
        error instanceof ApiError ? error.message : String(error);
    }
    this.notify();
  }

  select(paradox: string): void {
    const entry = this.catalog.find((e) => e.name === paradox);
    if (!entry) return;
    this.selected = entry;
    this.values = defaults(entry);
    this.reports = [];
    this.curve = null;
    this.inlineError = null;
    this.notify();
    void this.exploreStep({});
  }

  /** The stepping flag: advance n by one (up to the schema max). */
  stepN(): Promise<void> {
    const current = Number(this.values["n"] ?? 1);
    const spec = this.selected?.params.find((p) => p.name === "n");
    const max = spec?.max ?? current;
    return this.exploreStep({ n: Math.min(current + 1, max) });
  }

  /**
   * Apply new parameter values, re-fetch reports and geometry, discard
   * stale responses (only the latest request sequence number lands).
   */
  async exploreStep(newParams: FormValues): Promise<void> {
    if (!this.selected) return;
    const entry = this.selected;
    this.values = { ...this.values, ...newParams };
    const violations = checkAll(entry, this.values);
    if (violations.length > 0) {
      this.inlineError = violations[0];
      this.notify();
      return;
    }
    this.inlineError = null;
    const seq = ++this.requestSeq;
    const params = this.requestParams();
    try {
      const reports = await this.api.run(entry.name, params);
      let curve: CurveJson | null = null;
      if (entry.name !== "dissection") {
        curve = await this.api.geometry(entry.name, params);
      }
      if (seq <= this.appliedSeq) return; // a newer response already landed
      this.appliedSeq = seq;
      this.reports = reports;
      this.curve = curve;
    } catch (error) {
      if (seq <= this.appliedSeq) return;
      this.appliedSeq = seq;
      if (error instanceof ApiError) {
        this.inlineError = {
          param: error.offendingParam(),
          message: error.message,
        };
      } else {
        this.inlineError = { param: null, message: String(error) };
      }
    }
    this.notify();
  }

  private requestParams(): ParamValues {
    const params: ParamValues = {};
    if (!this.selected) return params;
    for (const spec of this.selected.params) {
      const value = this.values[spec.name];
      if (value === undefined || value === "" || value === null) continue;
      params[spec.name] = value as string | number;
    }
    return params;
  }

  /** Sequence panel rows: (n, S_n verbatim, sup-distance). */
  sequenceRows(): SequenceRow[] {
    return this.reports.map((report) => ({
      n: report.n,
      length: report.rawFloatValue,
      supDistance: report.sup_distance,
    }));
  }

  verdict(): string {
    const last = this.reports[this.reports.length - 1];
    return last ? last.verdict : "";
  }
}
