// The central contrast, end to end through the store: stepping the
// semicircle model leaves the displayed length at the backend's pi value
// (string-identical) while the drawn curve flattens onto the segment.

import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { boxHeight, curveBox } from "../src/geometry.js";
import { ExplorerStore } from "../src/state.js";
import { startBackend, type Backend } from "./backend.js";

let backend: Backend;
let api: ApiClient;

beforeAll(async () => {
  backend = await startBackend();
  api = new ApiClient(backend.baseUrl);
}, 30000);

afterAll(() => backend.stop());

describe("semicircle stepping n: 1 -> 6", () => {
  it("length readout stays string-identical while the curve flattens 16x", async () => {
    const store = new ExplorerStore(api);
    await store.loadCatalog();
    store.select("staircase");
    await store.exploreStep({ model: "semicircle", n: 1 });
    expect(store.curve).not.toBeNull();
    const heightAtN1 = boxHeight(curveBox(store.curve!));

    const readouts = new Set<string>();
    for (const row of store.sequenceRows()) readouts.add(row.length);
    for (let n = 2; n <= 6; n++) {
      await store.stepN();
      for (const row of store.sequenceRows()) readouts.add(row.length);
    }

    // every displayed length is the same backend token: pi, verbatim
    expect(readouts.size).toBe(1);
    const [token] = [...readouts];
    expect(token).toBe("3.141592653589793");

    const heightAtN6 = boxHeight(curveBox(store.curve!));
    expect(heightAtN1 / heightAtN6).toBeGreaterThanOrEqual(16);

    // the sequence panel accumulated rows n = 1..6
    expect(store.sequenceRows().map((r) => r.n)).toEqual([1, 2, 3, 4, 5, 6]);
    expect(store.verdict()).toContain("πR");
  });

  it("bisect stepping descends 4.0 -> 2.309... -> toward 2", async () => {
    const store = new ExplorerStore(api);
    await store.loadCatalog();
    store.select("staircase");
    await store.exploreStep({ model: "bisect", omega_deg: 60, n: 8 });
    const values = store.sequenceRows().map((row) => Number(row.length));
    expect(values[0]).toBeCloseTo(4.0, 12);
    expect(values[1]).toBeCloseTo(2.309401076758503, 12);
    for (let i = 1; i < values.length; i++) {
      expect(values[i]).toBeLessThan(values[i - 1]);
      expect(values[i]).toBeGreaterThan(2.0);
    }
  });

  it("displayed numbers come from the wire, not a client recomputation", async () => {
    const reports = await api.run("staircase", { model: "iso-right", n: 3 });
    for (const report of reports) {
      // raw token parses back to exactly the parsed float; displaying the
      // token is displaying the backend value verbatim
      expect(Number(report.rawFloatValue)).toBe(report.float_value);
      expect(report.rawFloatValue).toBe("2.8284271247461903");
    }
  });
});
