// Wires the store to the DOM: catalog menu, schema-driven form, canvas,
// sequence table, chart, verdict strip, play/pause stepping.

import { ApiClient } from "./api.js";
import { ExplorerStore } from "./state.js";
import { visibleParams } from "./params.js";
import { drawChart, drawCurve } from "./render.js";
import type { ParamSpec } from "./types.js";

const DEFAULT_BASE = "http://127.0.0.1:8765";

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

const baseUrl =
  new URLSearchParams(location.search).get("api") ??
  localStorage.getItem("paradoxlab-api") ??
  DEFAULT_BASE;
localStorage.setItem("paradoxlab-api", baseUrl);

const store = new ExplorerStore(new ApiClient(baseUrl));

const banner = el<HTMLDivElement>("banner");
const menu = el<HTMLSelectElement>("paradox-menu");
const form = el<HTMLDivElement>("param-form");
const inlineError = el<HTMLDivElement>("inline-error");
const verdict = el<HTMLDivElement>("verdict");
const seqBody = el<HTMLTableSectionElement>("sequence-body");
const curveCanvas = el<HTMLCanvasElement>("curve-canvas");
const chartCanvas = el<HTMLCanvasElement>("chart-canvas");
const svgFigure = el<HTMLImageElement>("svg-figure");
const logToggle = el<HTMLInputElement>("log-toggle");
const stepButton = el<HTMLButtonElement>("step-button");
const playButton = el<HTMLButtonElement>("play-button");
const retryButton = el<HTMLButtonElement>("retry-button");

let playTimer: number | null = null;

function widget(spec: ParamSpec, value: string | number | undefined): HTMLElement {
  const wrap = document.createElement("label");
  wrap.className = "param";
  wrap.dataset.param = spec.name;
  const caption = document.createElement("span");
  caption.textContent = spec.name;
  wrap.appendChild(caption);
  if (spec.type === "enum") {
    const select = document.createElement("select");
    for (const choice of spec.choices ?? []) {
      const option = document.createElement("option");
      option.value = choice;
      option.textContent = choice;
      option.selected = choice === value;
      select.appendChild(option);
    }
    select.addEventListener("change", () => {
      void store.exploreStep({ [spec.name]: select.value });
    });
    wrap.appendChild(select);
  } else {
    const input = document.createElement("input");
    const slider = spec.min !== undefined && spec.max !== undefined;
    input.type = slider ? "range" : "number";
    if (spec.min !== undefined)
      input.min = String(spec.min_exclusive ? spec.min + (spec.type === "int" ? 1 : 0.01) : spec.min);
    if (spec.max !== undefined)
      input.max = String(spec.max_exclusive ? spec.max - (spec.type === "int" ? 1 : 0.01) : spec.max);
    input.step = spec.type === "int" ? "1" : "0.01";
    if (value !== undefined) input.value = String(value);
    const readout = document.createElement("em");
    readout.textContent = input.value;
    input.addEventListener("input", () => {
      readout.textContent = input.value;
      void store.exploreStep({
        [spec.name]: spec.type === "int" ? parseInt(input.value, 10) : parseFloat(input.value),
      });
    });
    wrap.appendChild(input);
    wrap.appendChild(readout);
  }
  return wrap;
}

function renderForm(): void {
  form.replaceChildren();
  if (!store.selected) return;
  for (const spec of visibleParams(store.selected, store.values)) {
    form.appendChild(widget(spec, store.values[spec.name]));
  }
}

function renderSequence(): void {
  seqBody.replaceChildren();
  for (const row of store.sequenceRows()) {
    const tr = document.createElement("tr");
    const supText = row.supDistance === null ? "-" : row.supDistance.toExponential(3);
    for (const text of [String(row.n), row.length, supText]) {
      const td = document.createElement("td");
      td.textContent = text;
      tr.appendChild(td);
    }
    seqBody.appendChild(tr);
  }
}

function renderChart(): void {
  const rows = store.sequenceRows();
  drawChart(
    chartCanvas,
    [
      {
        label: "S_n",
        points: rows.map((r) => ({ n: r.n, value: Number(r.length) })),
      },
      {
        label: "sup-distance",
        points: rows
          .filter((r) => r.supDistance !== null)
          .map((r) => ({ n: r.n, value: r.supDistance as number })),
      },
    ],
    logToggle.checked,
  );
}

function render(): void {
  banner.hidden = store.catalogError === null;
  if (store.catalogError !== null) {
    el<HTMLSpanElement>("banner-text").textContent = store.catalogError;
  }
  const names = store.catalog.map((entry) => entry.name);
  if (menu.dataset.names !== names.join(",")) {
    menu.dataset.names = names.join(",");
    menu.replaceChildren();
    for (const entry of store.catalog) {
      const option = document.createElement("option");
      option.value = entry.name;
      option.textContent = entry.title;
      menu.appendChild(option);
    }
  }
  if (store.selected) menu.value = store.selected.name;
  renderForm();

  inlineError.hidden = store.inlineError === null;
  form.querySelectorAll(".param").forEach((node) => node.classList.remove("invalid"));
  if (store.inlineError) {
    inlineError.textContent = store.inlineError.message;
    if (store.inlineError.param) {
      form
        .querySelector(`.param[data-param="${store.inlineError.param}"]`)
        ?.classList.add("invalid");
      inlineError.textContent = `${store.inlineError.param}: ${store.inlineError.message}`;
    }
  }

  verdict.textContent = store.verdict();
  renderSequence();
  renderChart();

  const isDissection = store.selected?.name === "dissection";
  curveCanvas.hidden = isDissection;
  svgFigure.hidden = !isDissection;
  if (isDissection && store.selected) {
    svgFigure.src = new ApiClient(baseUrl).svgUrl("dissection", {});
  } else if (store.curve) {
    drawCurve(curveCanvas, store.curve);
  }
}

store.subscribe(render);

menu.addEventListener("change", () => store.select(menu.value));
logToggle.addEventListener("change", renderChart);
stepButton.addEventListener("click", () => void store.stepN());
retryButton.addEventListener("click", () => void store.loadCatalog());
playButton.addEventListener("click", () => {
  store.playing = !store.playing;
  playButton.textContent = store.playing ? "pause" : "play";
  if (store.playing) {
    playTimer = window.setInterval(() => {
      void store.stepN();
    }, 1200);
  } else if (playTimer !== null) {
    window.clearInterval(playTimer);
    playTimer = null;
  }
});

void store.loadCatalog();
