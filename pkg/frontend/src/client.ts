// Thin fetch wrapper over the workbench service.

import type {
  GraphDoc,
  GreenSeqReport,
  QuiverDoc,
  ServiceClient,
  SessionState,
} from "./types";

export class ServiceError extends Error {
  constructor(
    message: string,
    readonly status: number,
  ) {
    super(message);
  }
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  const res = await fetch(url, {
    headers: { "content-type": "application/json" },
    ...init,
  });
  if (!res.ok) {
    let detail = res.statusText;
    try {
      const body = await res.json();
      if (body && typeof body.detail === "string") detail = body.detail;
    } catch {
      // keep the status text
    }
    throw new ServiceError(detail, res.status);
  }
  return (await res.json()) as T;
}

export function createClient(baseUrl: string): ServiceClient {
  const base = baseUrl.replace(/\/$/, "");
  return {
    async createSession(quiver: QuiverDoc): Promise<SessionState> {
      const doc = await request<{ id: string; state: SessionState }>(
        `${base}/sessions`,
        { method: "POST", body: JSON.stringify({ quiver }) },
      );
      return doc.state;
    },
    async mutate(id: string, k: number): Promise<SessionState> {
      const doc = await request<{ state: SessionState }>(
        `${base}/sessions/${id}/mutate`,
        { method: "POST", body: JSON.stringify({ k }) },
      );
      return doc.state;
    },
    async undo(id: string): Promise<SessionState> {
      const doc = await request<{ state: SessionState }>(
        `${base}/sessions/${id}/undo`,
        { method: "POST" },
      );
      return doc.state;
    },
    async getSession(id: string): Promise<SessionState> {
      const doc = await request<{ state: SessionState }>(`${base}/sessions/${id}`);
      return doc.state;
    },
    async explore(quiver, limits) {
      return request<GraphDoc>(`${base}/explore`, {
        method: "POST",
        body: JSON.stringify({ quiver, limits: limits ?? {} }),
      });
    },
    async greenSeqs(quiver, limits) {
      return request<GreenSeqReport>(`${base}/green-seqs`, {
        method: "POST",
        body: JSON.stringify({ quiver, limits: limits ?? {} }),
      });
    },
  };
}
