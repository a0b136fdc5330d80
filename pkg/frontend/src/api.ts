/**
 * Thin fetch client for the play service.  Every non-2xx response is raised
 * as an ApiError carrying the server's error code and human-readable detail,
 * which the UI shows verbatim for rejected moves.
 */

import type { ApiErrorBody, Position, Session } from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    readonly detail: string,
  ) {
    super(`${code}: ${detail}`);
    this.name = "ApiError";
  }
}

export interface CreateSessionRequest {
  k: number;
  bound: number;
  start: Position;
  engine_first?: boolean;
}

export interface Classification {
  class: "terminal-P" | "pair-P" | "N";
  pair_index: number | null;
}

async function raiseError(response: Response): Promise<never> {
  let body: ApiErrorBody | null = null;
  try {
    body = (await response.json()) as ApiErrorBody;
  } catch {
    body = null;
  }
  throw new ApiError(
    response.status,
    body?.error ?? "http_error",
    body?.detail ?? response.statusText,
  );
}

export class ApiClient {
  constructor(private readonly baseUrl: string = "") {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await fetch(`${this.baseUrl}${path}`, init);
    if (!response.ok) await raiseError(response);
    return (await response.json()) as T;
  }

  private post<T>(path: string, body: unknown): Promise<T> {
    return this.request<T>(path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
  }

  health(): Promise<{ status: string }> {
    return this.request("/healthz");
  }

  createSession(request: CreateSessionRequest): Promise<Session> {
    return this.post("/sessions", request);
  }

  move(sessionId: string, to: Position, version: number): Promise<Session> {
    return this.post(`/sessions/${encodeURIComponent(sessionId)}/move`, { to, version });
  }

  async hints(sessionId: string): Promise<Position[]> {
    const body = await this.request<{ winning_moves: Position[] }>(
      `/sessions/${encodeURIComponent(sessionId)}/hints`,
    );
    return body.winning_moves;
  }

  classify(k: number, p: Position): Promise<Classification> {
    return this.request(`/classify?k=${k}&x=${p.x}&y=${p.y}`);
  }

  pPositions(k: number, bound: number): Promise<Position[]> {
    return this.request(`/ppositions?k=${k}&bound=${bound}`);
  }
}
