/** Thin client for the proof-checking service; the UI never interprets proofs itself. */

export interface DiagnosticDto {
  line: number;
  code: string;
  message: string;
  refs: number[];
}

export interface SequentDto {
  premises: string[];
  conclusion: string;
}

export interface CheckResponse {
  verdict: string;
  diagnostics: DiagnosticDto[];
  sequent?: SequentDto;
  countermodel?: Record<string, string>;
  grade_ok?: boolean;
}

export type LatexResult =
  | { ok: true; latex: string }
  | { ok: false; report: CheckResponse };

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  constructor(message: string, readonly status?: number) {
    super(message);
    this.name = "ApiError";
  }
}

export class ApiClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchImpl: FetchLike,
  ) {}

  private async post(path: string, body: unknown): Promise<Response> {
    let response: Response;
    try {
      response = await this.fetchImpl(`${this.baseUrl}${path}`, {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify(body),
      });
    } catch (err) {
      throw new ApiError(`cannot reach the checking service at ${this.baseUrl}: ${String(err)}`);
    }
    return response;
  }

  /** POST /check; every verdict (including parse_error) arrives as HTTP 200. */
  async check(proof: string): Promise<CheckResponse> {
    const response = await this.post("/check", { proof });
    if (!response.ok) {
      throw new ApiError(`service rejected the request (HTTP ${response.status})`, response.status);
    }
    return (await response.json()) as CheckResponse;
  }

  /** POST /latex; a 422 carries the parse diagnostics instead of LaTeX. */
  async latex(proof: string): Promise<LatexResult> {
    const response = await this.post("/latex", { proof });
    if (response.status === 422) {
      return { ok: false, report: (await response.json()) as CheckResponse };
    }
    if (!response.ok) {
      throw new ApiError(`service rejected the request (HTTP ${response.status})`, response.status);
    }
    const body = (await response.json()) as { latex: string };
    return { ok: true, latex: body.latex };
  }

  async health(): Promise<{ status: string; version: string }> {
    let response: Response;
    try {
      response = await this.fetchImpl(`${this.baseUrl}/health`);
    } catch (err) {
      throw new ApiError(`cannot reach the checking service at ${this.baseUrl}: ${String(err)}`);
    }
    return (await response.json()) as { status: string; version: string };
  }
}
