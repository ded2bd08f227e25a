// Schema-driven form model: the widgets enforce exactly the ranges the
// serve endpoints validate, because both read the same catalog schema.

import type { CatalogEntry, ParamSpec } from "./types.js";

export type FormValues = Record<string, string | number>;

export function defaults(entry: CatalogEntry): FormValues {
  const values: FormValues = {};
  for (const spec of entry.params) {
    if (spec.default !== null && spec.default !== undefined) {
      values[spec.name] = spec.default;
    }
  }
  return values;
}

/** Widgets to show for the current values (e.g. the lambda slider only for
 * the lambda model). */
export function visibleParams(entry: CatalogEntry, values: FormValues): ParamSpec[] {
  const model = values["model"];
  return entry.params.filter(
    (spec) => spec.for_model === undefined || spec.for_model === model,
  );
}

export interface Violation {
  param: string;
  message: string;
}

export function checkValue(spec: ParamSpec, raw: string | number): Violation | null {
  if (spec.type === "enum") {
    return spec.choices && spec.choices.includes(String(raw))
      ? null
      : { param: spec.name, message: `expected one of ${spec.choices?.join(", ")}` };
  }
  const value = Number(raw);
  if (!Number.isFinite(value)) {
    return { param: spec.name, message: "not a number" };
  }
  if (spec.type === "int" && !Number.isInteger(value)) {
    return { param: spec.name, message: "must be an integer" };
  }
  if (spec.min !== undefined) {
    if (spec.min_exclusive ? value <= spec.min : value < spec.min) {
      const op = spec.min_exclusive ? ">" : ">=";
      return { param: spec.name, message: `must be ${op} ${spec.min}` };
    }
  }
  if (spec.max !== undefined) {
    if (spec.max_exclusive ? value >= spec.max : value > spec.max) {
      const op = spec.max_exclusive ? "<" : "<=";
      return { param: spec.name, message: `must be ${op} ${spec.max}` };
    }
  }
  return null;
}

export function checkAll(entry: CatalogEntry, values: FormValues): Violation[] {
  const violations: Violation[] = [];
  for (const spec of visibleParams(entry, values)) {
    const raw = values[spec.name];
    if (raw === undefined || raw === "") {
      if (!spec.optional) continue; // omitted -> backend default
      continue;
    }
    const violation = checkValue(spec, raw);
    if (violation) violations.push(violation);
  }
  return violations;
}
