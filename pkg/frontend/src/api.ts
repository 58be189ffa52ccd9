/** Typed client for the edge service JSON API. */

export type OddsFormat = "american" | "decimal";

export interface EdgeRequest {
  projected_spread: number;
  book_spread: number;
  odds: number;
  odds_format: OddsFormat;
}

export interface EdgeResponse {
  cover_probability: number;
  push_probability: number;
  break_even_probability: number;
  edge: number;
  ev_per_unit: number;
  model: {
    cell_sd: number;
    ref_sigma: number;
    weights_version: string;
  };
}

export interface DistributionResponse {
  margins: number[];
  probabilities: number[];
}

/** Non-2xx response; carries per-field messages for 400s. */
export class ApiError extends Error {
  readonly status: number;
  readonly fieldErrors: Record<string, string>;

  constructor(status: number, message: string, fieldErrors: Record<string, string> = {}) {
    super(message);
    this.name = "ApiError";
    this.status = status;
    this.fieldErrors = fieldErrors;
  }
}

async function raiseForStatus(response: Response): Promise<void> {
  if (response.ok) return;
  let detail = `request failed with status ${response.status}`;
  const fieldErrors: Record<string, string> = {};
  try {
    const body = await response.json();
    if (Array.isArray(body.errors)) {
      for (const err of body.errors) {
        if (err.field) fieldErrors[err.field] = err.message ?? "invalid value";
      }
      detail = body.errors.map((e: { message?: string }) => e.message).join("; ") || detail;
    } else if (typeof body.detail === "string") {
      detail = body.detail;
    }
  } catch {
    // non-JSON error body; keep the generic message
  }
  throw new ApiError(response.status, detail, fieldErrors);
}

export class EdgeApiClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchFn: typeof fetch = fetch,
  ) {}

  async postEdge(request: EdgeRequest): Promise<EdgeResponse> {
    const response = await this.fetchFn(`${this.baseUrl}/api/v1/edge`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(request),
    });
    await raiseForStatus(response);
    return (await response.json()) as EdgeResponse;
  }

  async getDistribution(projectedSpread: number): Promise<DistributionResponse> {
    const url = `${this.baseUrl}/api/v1/distribution?projected_spread=${encodeURIComponent(projectedSpread)}`;
    const response = await this.fetchFn(url);
    await raiseForStatus(response);
    return (await response.json()) as DistributionResponse;
  }
}
