// Typed client for the puzzle service REST API.  All legality decisions
// live server-side; this module only moves JSON around.

export interface GraphDoc {
  vertices: number[];
  edges: [number, number][];
}

export interface SessionState {
  graph: GraphDoc;
  oddVertices: number[];
  legalEdgeCount: number;
  moveCount: number;
  won: boolean;
  boundaryMod3?: number;
}

export interface MoveDelta {
  refinedEdge: [number, number];
  newVertex: number;
  flipped: number[];
}

export interface Hint {
  edge: [number, number];
  target: number;
  rationale: string;
}

export interface ComponentDoc {
  edges: [number, number][];
  boundary: boolean;
  undirected: boolean;
}

export interface Analysis {
  oddVertices: number[];
  components: { components: ComponentDoc[] } | null;
  curvature: { total: string } | null;
}

export type Mode = "Closed" | "Ball";

export class ApiError extends Error {
  constructor(
    public status: number,
    public code: string,
    message: string,
    public detail: Record<string, unknown> = {},
  ) {
    super(message);
  }
}

type FetchLike = typeof fetch;

export class PuzzleApi {
  constructor(
    private baseUrl: string,
    private fetchFn: FetchLike = fetch,
  ) {
    this.baseUrl = baseUrl.replace(/\/$/, "");
  }

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const resp = await this.fetchFn(`${this.baseUrl}${path}`, {
      headers: { "content-type": "application/json" },
      ...init,
    });
    const body = await resp.json().catch(() => ({}));
    if (!resp.ok) {
      const detail = (body?.detail ?? {}) as Record<string, unknown>;
      throw new ApiError(
        resp.status,
        String(detail.error ?? "Unknown"),
        String(detail.message ?? resp.statusText),
        detail,
      );
    }
    return body as T;
  }

  health(): Promise<{ status: string }> {
    return this.request("/health");
  }

  createSession(graph: GraphDoc, mode: Mode = "Closed"):
      Promise<{ id: string; state: SessionState }> {
    return this.request("/api/session", {
      method: "POST",
      body: JSON.stringify({ mode, graph }),
    });
  }

  getState(id: string): Promise<SessionState> {
    return this.request(`/api/session/${id}`);
  }

  move(id: string, edge: [number, number]):
      Promise<{ state: SessionState; delta: MoveDelta }> {
    return this.request(`/api/session/${id}/move`, {
      method: "POST",
      body: JSON.stringify({ edge }),
    });
  }

  undo(id: string): Promise<{ state: SessionState; undone: MoveDelta }> {
    return this.request(`/api/session/${id}/undo`, { method: "POST" });
  }

  hint(id: string): Promise<Hint> {
    return this.request(`/api/session/${id}/hint`);
  }

  analysis(id: string): Promise<Analysis> {
    return this.request(`/api/session/${id}/analysis`);
  }

  consistency(id: string): Promise<{ consistent: boolean; moveCount: number }> {
    return this.request(`/api/session/${id}/consistency`);
  }
}
