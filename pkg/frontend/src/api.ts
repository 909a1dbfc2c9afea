// Thin client for the play service. All game logic stays on the server; the
// client only ships actions and renders snapshots.

import type { SessionDescriptor, TranscriptDoc } from "./types.js";

export interface PlayApi {
  createSession(l: number, role: "painter" | "builder", opponent?: string, seed?: number): Promise<SessionDescriptor>;
  getSession(id: string): Promise<SessionDescriptor>;
  submitColor(id: string, color: "R" | "B"): Promise<SessionDescriptor>;
  submitEdge(id: string, u: number, v: number): Promise<SessionDescriptor>;
  fetchTranscript(id: string): Promise<TranscriptDoc>;
  subscribe(id: string, onSnapshot: (d: SessionDescriptor) => void): () => void;
}

export class ApiError extends Error {
  constructor(public code: string, detail: string) {
    super(detail);
  }
}

async function asJson<T>(resp: Response): Promise<T> {
  const body = await resp.json();
  if (!resp.ok) {
    throw new ApiError(body.error ?? "http_error", body.detail ?? resp.statusText);
  }
  return body as T;
}

export class HttpPlayApi implements PlayApi {
  constructor(private base: string = "") {}

  async createSession(
    l: number,
    role: "painter" | "builder",
    opponent?: string,
    seed = 0,
  ): Promise<SessionDescriptor> {
    const body: Record<string, unknown> = { l, role, seed };
    if (opponent) body.opponent = opponent;
    return asJson(
      await fetch(`${this.base}/sessions`, {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify(body),
      }),
    );
  }

  async getSession(id: string): Promise<SessionDescriptor> {
    return asJson(await fetch(`${this.base}/sessions/${id}`));
  }

  async submitColor(id: string, color: "R" | "B"): Promise<SessionDescriptor> {
    return asJson(
      await fetch(`${this.base}/sessions/${id}/move`, {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify({ color }),
      }),
    );
  }

  async submitEdge(id: string, u: number, v: number): Promise<SessionDescriptor> {
    return asJson(
      await fetch(`${this.base}/sessions/${id}/move`, {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify({ u, v }),
      }),
    );
  }

  async fetchTranscript(id: string): Promise<TranscriptDoc> {
    return asJson(await fetch(`${this.base}/sessions/${id}/transcript`));
  }

  subscribe(id: string, onSnapshot: (d: SessionDescriptor) => void): () => void {
    const source = new EventSource(`${this.base}/sessions/${id}/events`);
    source.onmessage = (ev) => onSnapshot(JSON.parse(ev.data) as SessionDescriptor);
    return () => source.close();
  }
}
