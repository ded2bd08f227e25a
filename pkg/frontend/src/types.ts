// Wire types mirroring the serve API's JSON schemas.

export interface ParamSpec {
  name: string;
  type: "float" | "int" | "enum";
  default: number | string | null;
  min?: number;
  max?: number;
  min_exclusive?: boolean;
  max_exclusive?: boolean;
  choices?: string[];
  for_model?: string;
  optional?: boolean;
}

export interface CatalogEntry {
  name: string;
  title: string;
  params: ParamSpec[];
}

export interface ExactTerm {
  tag: string;
  coeff: string;
}

export type ClosedForm = ExactTerm[] | { inexact: number } | null;

export interface Report {
  paradox: string;
  params: Record<string, number | string | null>;
  n: number;
  closed_form: ClosedForm;
  float_value: number;
  oracle_value: number | null;
  sup_distance: number | null;
  verdict: string;
  extras: Record<string, unknown> | null;
  /** The float_value token exactly as the backend serialized it. */
  rawFloatValue: string;
}

export interface SegmentJson {
  kind: "segment";
  a: [number, number];
  b: [number, number];
}

export interface ArcJson {
  kind: "arc";
  center: [number, number];
  radius: number;
  start_angle: number;
  end_angle: number;
  orientation: "ccw" | "cw";
}

export type PrimitiveJson = SegmentJson | ArcJson;

export interface CurveJson {
  n: number;
  start: [number, number];
  end: [number, number];
  primitives: PrimitiveJson[];
}

export interface ApiErrorBody {
  error: {
    code: string;
    message: string;
    precondition?: string;
  };
}
