// Payload shapes of the workbench service (see docs/api.md).

export interface QuiverDoc {
  v?: number;
  n: number;
  m: number;
  b: number[][];
}

export type Color = "green" | "red" | "neither";

export interface SessionState {
  id: string;
  quiver: QuiverDoc;
  colors: Color[];
  c_matrix: number[][];
  g_matrix: number[][];
  variables: string[] | null;
  variables_omitted_reason?: string;
  history: number[];
  all_green: boolean;
  all_red: boolean;
}

export interface GraphVertexDoc {
  key: string;
  b: number[][];
}

export interface GraphDoc {
  v?: number;
  vertices: GraphVertexDoc[];
  edges: [number, number, number][];
  complete: boolean;
}

export interface GreenSeqReport {
  v?: number;
  sequences: number[][];
  exhausted: boolean;
  frontier_remaining: number;
}

export interface ServiceClient {
  createSession(quiver: QuiverDoc): Promise<SessionState>;
  mutate(id: string, k: number): Promise<SessionState>;
  undo(id: string): Promise<SessionState>;
  getSession(id: string): Promise<SessionState>;
  explore(
    quiver: QuiverDoc,
    limits?: { max_vertices?: number; max_depth?: number },
  ): Promise<GraphDoc>;
  greenSeqs(
    quiver: QuiverDoc,
    limits?: { max_len?: number; max_entry?: number },
  ): Promise<GreenSeqReport>;
}
