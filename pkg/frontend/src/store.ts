// Session store: the single source of truth for everything on screen.
// Every number displayed comes from the last successful service
// response; the store never derives mathematical values locally.

import { ServiceError } from "./client";
import type {
  GraphDoc,
  GreenSeqReport,
  QuiverDoc,
  ServiceClient,
  SessionState,
} from "./types";

export type Listener = () => void;

type Op = { kind: "mutate"; k: number } | { kind: "undo" };

export const ALL_RED_BANNER = "all vertices red — maximal green sequence complete";

export class WorkbenchStore {
  state: SessionState | null = null;
  toasts: string[] = [];
  greenReport: GreenSeqReport | null = null;
  minimap: GraphDoc | null = null;
  replaySequence: number[] | null = null;
  replayPos = 0;

  private initialQuiver: QuiverDoc | null = null;
  private queue: Op[] = [];
  private draining = false;
  private listeners: Listener[] = [];
  private idleResolvers: (() => void)[] = [];

  constructor(private client: ServiceClient) {}

  subscribe(fn: Listener): () => void {
    this.listeners.push(fn);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== fn);
    };
  }

  private notify(): void {
    for (const fn of this.listeners) fn();
  }

  private toast(message: string): void {
    this.toasts.push(message);
    if (this.toasts.length > 5) this.toasts.shift();
    this.notify();
  }

  dismissToast(index: number): void {
    this.toasts.splice(index, 1);
    this.notify();
  }

  /** Frames the quiver server-side and opens a session. */
  async start(quiver: QuiverDoc): Promise<void> {
    this.initialQuiver = quiver;
    this.queue = [];
    this.replaySequence = null;
    this.replayPos = 0;
    this.greenReport = null;
    this.minimap = null;
    try {
      this.state = await this.client.createSession(quiver);
    } catch (err) {
      this.state = null;
      this.toast(`could not start session: ${describe(err)}`);
      throw err;
    }
    this.notify();
  }

  get pending(): number {
    return this.queue.length + (this.draining ? 1 : 0);
  }

  get banner(): string | null {
    return this.state?.all_red ? ALL_RED_BANNER : null;
  }

  clickVertex(k: number): void {
    if (!this.state) return;
    this.queue.push({ kind: "mutate", k });
    void this.drain();
  }

  undo(): void {
    if (!this.state) return;
    this.queue.push({ kind: "undo" });
    void this.drain();
  }

  /** Resolves once the operation queue is empty. */
  idle(): Promise<void> {
    if (!this.draining && this.queue.length === 0) return Promise.resolve();
    return new Promise((resolve) => this.idleResolvers.push(resolve));
  }

  private async drain(): Promise<void> {
    if (this.draining) return;
    this.draining = true;
    try {
      while (this.queue.length > 0) {
        const op = this.queue.shift()!;
        await this.apply(op);
      }
    } finally {
      this.draining = false;
      const resolvers = this.idleResolvers;
      this.idleResolvers = [];
      for (const r of resolvers) r();
      this.notify();
    }
  }

  private async apply(op: Op, retried = false): Promise<void> {
    if (!this.state) return;
    const id = this.state.id;
    try {
      if (op.kind === "mutate") {
        this.state = await this.client.mutate(id, op.k);
      } else {
        this.state = await this.client.undo(id);
      }
      this.notify();
    } catch (err) {
      if (err instanceof ServiceError && err.status === 404 && !retried) {
        // stale session (service restarted): rebuild it by replay
        const recovered = await this.recover();
        if (recovered) {
          await this.apply(op, true);
          return;
        }
      }
      this.toast(describe(err));
    }
  }

  private async recover(): Promise<boolean> {
    if (!this.initialQuiver || !this.state) return false;
    const history = [...this.state.history];
    try {
      let state = await this.client.createSession(this.initialQuiver);
      for (const k of history) {
        state = await this.client.mutate(state.id, k);
      }
      this.state = state;
      this.notify();
      return true;
    } catch (err) {
      this.toast(`session recovery failed: ${describe(err)}`);
      return false;
    }
  }

  async findGreenSequences(maxLen = 16): Promise<void> {
    if (!this.initialQuiver) return;
    try {
      this.greenReport = await this.client.greenSeqs(this.initialQuiver, {
        max_len: maxLen,
      });
    } catch (err) {
      this.toast(`green-sequence search failed: ${describe(err)}`);
      return;
    }
    this.notify();
  }

  async loadMinimap(maxVertices = 60): Promise<void> {
    if (!this.initialQuiver) return;
    try {
      const graph = await this.client.explore(this.initialQuiver, {
        max_vertices: maxVertices,
        max_depth: 100,
      });
      this.minimap = graph.vertices.length <= maxVertices ? graph : null;
      if (!this.minimap) this.toast("exchange graph too large for the minimap");
    } catch (err) {
      this.toast(`explore failed: ${describe(err)}`);
      return;
    }
    this.notify();
  }

  /** Rewind to the initial seed, then arm step-by-step replay. */
  startReplay(sequence: number[]): void {
    if (!this.state) return;
    for (let i = 0; i < this.state.history.length; i++) {
      this.queue.push({ kind: "undo" });
    }
    this.replaySequence = [...sequence];
    this.replayPos = 0;
    void this.drain();
  }

  replayStep(): void {
    if (!this.replaySequence || this.replayPos >= this.replaySequence.length) return;
    this.clickVertex(this.replaySequence[this.replayPos]);
    this.replayPos += 1;
    this.notify();
  }

  get replayDone(): boolean {
    return (
      this.replaySequence !== null && this.replayPos >= this.replaySequence.length
    );
  }
}

function describe(err: unknown): string {
  if (err instanceof ServiceError) return `${err.message} (HTTP ${err.status})`;
  if (err instanceof Error) return err.message;
  return String(err);
}
