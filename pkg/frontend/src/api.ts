/**
 * Typed client for the screening service JSON API.
 *
 * Every numeric field below is produced by the server; the UI renders
 * these values and never derives probabilities of its own. `fetch` is
 * injectable so tests can replay recorded responses.
 */

export interface RemainingPlan {
  status: "Planned" | "AlreadyMet" | "NonInformativeTest" | "InfeasibleTarget";
  raw_n: number | null;
  n_i: number | null;
}

export interface SessionView {
  id: string;
  test: { sens: number; spec: number };
  initial_prior: number;
  target: number | null;
  results: string[];
  trajectory: number[];
  posterior: number;
  created_at: number;
  remaining: RemainingPlan | null;
}

export interface CurveResponse {
  kind: "ppv" | "npv";
  points: [number, number][];
}

export interface ThresholdResponse {
  sens: number;
  spec: number;
  phi_e: number;
  epsilon: number;
}

export interface IterationsResponse extends RemainingPlan {
  prev: number;
  target: number;
  log_lr: number | null;
}

export interface TableResponse {
  target_rho: number;
  log_lr_values: number[];
  phi_values: number[];
  cells: number[][];
  cells_ceiled: number[][];
  cells_display: string[][];
}

export interface ApiErrorBody {
  error: string;
  message: string;
}

export class ApiError extends Error {
  readonly status: number;
  readonly kind: string;

  constructor(status: number, body: ApiErrorBody) {
    super(body.message);
    this.status = status;
    this.kind = body.error;
  }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  private readonly base: string;
  private readonly fetchFn: FetchLike;

  constructor(base = "", fetchFn: FetchLike = (...args) => fetch(...args)) {
    this.base = base;
    this.fetchFn = fetchFn;
  }

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const response = await this.fetchFn(this.base + path, {
      method,
      headers: body === undefined ? undefined : { "Content-Type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    const payload = await response.json();
    if (!response.ok) {
      throw new ApiError(response.status, payload as ApiErrorBody);
    }
    return payload as T;
  }

  createSession(body: {
    sens: number;
    spec: number;
    prev: number;
    target: number | null;
  }): Promise<SessionView> {
    return this.request("POST", "/api/session", body);
  }

  getSession(id: string): Promise<SessionView> {
    return this.request("GET", `/api/session/${id}`);
  }

  postResult(id: string, result: "+" | "-"): Promise<SessionView> {
    return this.request("POST", `/api/session/${id}/result`, { result });
  }

  undoResult(id: string): Promise<SessionView> {
    return this.request("DELETE", `/api/session/${id}/result`);
  }

  curve(body: { sens: number; spec: number; kind: "ppv" | "npv"; points: number }): Promise<CurveResponse> {
    return this.request("POST", "/api/curve", body);
  }

  threshold(body: { sens: number; spec: number }): Promise<ThresholdResponse> {
    return this.request("POST", "/api/threshold", body);
  }

  iterations(body: {
    sens: number;
    spec: number;
    prev: number;
    target: number;
  }): Promise<IterationsResponse> {
    return this.request("POST", "/api/iterations", body);
  }

  table(target: number): Promise<TableResponse> {
    return this.request("POST", "/api/table", { target });
  }
}
