/** DOM wiring for the edge calculator form and distribution chart. */

import { EdgeApiClient, DistributionResponse } from "./api.js";
import { computeBars, renderChartSvg } from "./chart.js";
import { FormController, debounce } from "./controller.js";
import { convertOddsDisplay, formatOddsValue } from "./format.js";
import { FormFields, FieldName, parseNumber, parseOdds, formIsComplete } from "./validation.js";
import type { OddsFormat } from "./api.js";

const API_BASE_URL =
  (window as { SPREAD_EDGE_API_URL?: string }).SPREAD_EDGE_API_URL ?? "http://127.0.0.1:8000";

const client = new EdgeApiClient(API_BASE_URL);
const controller = new FormController(client);

const el = {
  form: document.getElementById("edge-form") as HTMLFormElement,
  projected: document.getElementById("projected-spread") as HTMLInputElement,
  book: document.getElementById("sportsbook-spread") as HTMLInputElement,
  format: document.getElementById("odds-format") as HTMLSelectElement,
  odds: document.getElementById("odds") as HTMLInputElement,
  submit: document.getElementById("compute") as HTMLButtonElement,
  result: document.getElementById("result") as HTMLElement,
  banner: document.getElementById("banner") as HTMLElement,
  chart: document.getElementById("chart") as HTMLElement,
  fieldErrors: {
    projected_spread: document.getElementById("err-projected-spread") as HTMLElement,
    book_spread: document.getElementById("err-sportsbook-spread") as HTMLElement,
    odds_format: document.getElementById("err-odds-format") as HTMLElement,
    odds: document.getElementById("err-odds") as HTMLElement,
  } as Record<FieldName, HTMLElement>,
};

let lastDistribution: DistributionResponse | null = null;
let lastFormat: OddsFormat = "american";

function readFields(): FormFields {
  return {
    projectedSpread: el.projected.value,
    sportsbookSpread: el.book.value,
    oddsFormat: el.format.value as OddsFormat,
    odds: el.odds.value,
  };
}

function clearFieldErrors(): void {
  for (const node of Object.values(el.fieldErrors)) node.textContent = "";
}

function refreshSubmitState(): void {
  el.submit.disabled = !formIsComplete(readFields());
}

function renderChart(): void {
  if (!lastDistribution) return;
  const book = parseNumber(el.book.value);
  const geometry = computeBars(lastDistribution.margins, lastDistribution.probabilities, book);
  el.chart.innerHTML = renderChartSvg(geometry);
}

const fetchDistribution = debounce(async () => {
  const projected = parseNumber(el.projected.value);
  if (projected === null) return;
  try {
    lastDistribution = await client.getDistribution(projected);
    el.chart.classList.remove("unavailable");
    renderChart();
  } catch {
    el.chart.classList.add("unavailable");
    el.chart.innerHTML =
      '<p class="placeholder">distribution unavailable <button type="button" id="chart-retry">retry</button></p>';
    document.getElementById("chart-retry")?.addEventListener("click", () => fetchDistribution());
  }
}, 250);

async function onSubmit(event: Event): Promise<void> {
  event.preventDefault();
  clearFieldErrors();
  el.banner.textContent = "";
  const outcome = await controller.submit(readFields());
  switch (outcome.kind) {
    case "result": {
      const v = outcome.view;
      el.result.innerHTML = `
        <p class="edge ${v.edgePositive ? "positive" : "negative"}">Edge: ${v.edgeText}</p>
        <dl>
          <dt>Cover</dt><dd>${v.coverText}</dd>
          <dt>Push</dt><dd>${v.pushText}</dd>
          <dt>Break-even</dt><dd>${v.breakEvenText}</dd>
          <dt>EV per unit</dt><dd>${v.evText}</dd>
        </dl>`;
      el.result.dataset.requestSeq = String(v.requestSeq);
      break;
    }
    case "fieldErrors":
      for (const [field, message] of Object.entries(outcome.errors)) {
        const node = el.fieldErrors[field as FieldName];
        if (node) node.textContent = message ?? "invalid value";
      }
      break;
    case "outOfModel":
      el.fieldErrors.projected_spread.textContent = outcome.message;
      break;
    case "network":
      el.banner.innerHTML =
        `request failed: ${outcome.message} <button type="button" id="retry">retry</button>`;
      document.getElementById("retry")?.addEventListener("click", () => el.form.requestSubmit());
      break;
    case "stale":
    case "busy":
      break;
  }
}

function onFormatChange(): void {
  const next = el.format.value as OddsFormat;
  const current = parseOdds(el.odds.value, lastFormat);
  if (current !== null) {
    el.odds.value = formatOddsValue(convertOddsDisplay(current, lastFormat, next), next);
  }
  lastFormat = next;
  refreshSubmitState();
}

el.form.addEventListener("submit", onSubmit);
el.format.addEventListener("change", onFormatChange);
for (const input of [el.projected, el.book, el.odds]) {
  input.addEventListener("input", refreshSubmitState);
}
el.projected.addEventListener("input", () => fetchDistribution());
// the highlight follows the line locally, no refetch
el.book.addEventListener("input", renderChart);

refreshSubmitState();
fetchDistribution();
