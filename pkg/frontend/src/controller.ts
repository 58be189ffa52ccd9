/** Form submission and distribution-fetch orchestration, DOM-free.
 *
 * Each submit is tagged with a sequence number echoed through the
 * result, so a stale response can never overwrite a newer one; at most
 * one edge request is in flight at a time.
 */

import { ApiError, EdgeApiClient, EdgeResponse } from "./api.js";
import { FieldName, FormFields, validateForm } from "./validation.js";
import { formatPercent, formatSignedPercent } from "./format.js";

export interface ResultView {
  edgeText: string;
  edgePositive: boolean;
  coverText: string;
  pushText: string;
  breakEvenText: string;
  evText: string;
  /** displayed edge must equal cover - break-even at displayed precision */
  consistent: boolean;
  response: EdgeResponse;
  requestSeq: number;
}

export type SubmitOutcome =
  | { kind: "result"; view: ResultView }
  | { kind: "fieldErrors"; errors: Partial<Record<FieldName, string>> }
  | { kind: "outOfModel"; message: string }
  | { kind: "network"; message: string }
  | { kind: "stale" }
  | { kind: "busy" };

export function buildResultView(response: EdgeResponse, requestSeq: number): ResultView {
  const edgeText = formatSignedPercent(response.edge);
  const derived = formatSignedPercent(response.cover_probability - response.break_even_probability);
  return {
    edgeText,
    edgePositive: response.edge >= 0,
    coverText: formatPercent(response.cover_probability),
    pushText: formatPercent(response.push_probability),
    breakEvenText: formatPercent(response.break_even_probability),
    evText: response.ev_per_unit.toFixed(4),
    consistent: edgeText === derived,
    response,
    requestSeq,
  };
}

export class FormController {
  private seq = 0;
  private latestDelivered = 0;
  private inFlight = false;

  constructor(private readonly client: EdgeApiClient) {}

  async submit(fields: FormFields): Promise<SubmitOutcome> {
    const { request, errors } = validateForm(fields);
    if (!request) return { kind: "fieldErrors", errors };
    if (this.inFlight) return { kind: "busy" };

    const mySeq = ++this.seq;
    this.inFlight = true;
    try {
      const response = await this.client.postEdge(request);
      if (mySeq < this.latestDelivered) return { kind: "stale" };
      this.latestDelivered = mySeq;
      return { kind: "result", view: buildResultView(response, mySeq) };
    } catch (error) {
      if (error instanceof ApiError) {
        if (error.status === 422) return { kind: "outOfModel", message: error.message };
        if (error.status === 400 && Object.keys(error.fieldErrors).length > 0) {
          return { kind: "fieldErrors", errors: error.fieldErrors };
        }
        return { kind: "network", message: error.message };
      }
      return { kind: "network", message: error instanceof Error ? error.message : String(error) };
    } finally {
      this.inFlight = false;
    }
  }
}

export function debounce<A extends unknown[]>(
  fn: (...args: A) => void,
  waitMs: number,
): (...args: A) => void {
  let timer: ReturnType<typeof setTimeout> | undefined;
  return (...args: A) => {
    if (timer !== undefined) clearTimeout(timer);
    timer = setTimeout(() => fn(...args), waitMs);
  };
}
