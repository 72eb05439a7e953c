// Deterministic force-directed layout.  Frozen vertices are pinned on
// an outer ring; mutable vertices start on an inner ring and relax
// under spring forces from the arrows plus all-pairs repulsion.

import type { QuiverDoc } from "./types";

export interface Point {
  x: number;
  y: number;
}

export interface LayoutOptions {
  width: number;
  height: number;
  iterations?: number;
}

export function layoutQuiver(q: QuiverDoc, opts: LayoutOptions): Point[] {
  const { width, height } = opts;
  const iterations = opts.iterations ?? 150;
  const cx = width / 2;
  const cy = height / 2;
  const outer = 0.42 * Math.min(width, height);
  const inner = 0.22 * Math.min(width, height);
  const total = q.n + q.m;

  const pos: Point[] = [];
  for (let i = 0; i < q.n; i++) {
    const angle = (2 * Math.PI * i) / Math.max(1, q.n) - Math.PI / 2;
    pos.push({ x: cx + inner * Math.cos(angle), y: cy + inner * Math.sin(angle) });
  }
  for (let f = 0; f < q.m; f++) {
    const angle = (2 * Math.PI * f) / Math.max(1, q.m) - Math.PI / 2;
    pos.push({ x: cx + outer * Math.cos(angle), y: cy + outer * Math.sin(angle) });
  }
  if (q.n <= 1) return pos;

  // undirected adjacency weights from the matrix
  const edges: [number, number][] = [];
  for (let i = 0; i < total; i++) {
    for (let j = 0; j < q.n; j++) {
      if (i !== j && q.b[i][j] > 0) edges.push([i, j]);
    }
  }

  const spring = inner * 1.1;
  const step0 = inner / 12;
  for (let it = 0; it < iterations; it++) {
    const step = step0 * (1 - it / iterations);
    const force: Point[] = pos.map(() => ({ x: 0, y: 0 }));
    for (let i = 0; i < q.n; i++) {
      for (let j = 0; j < total; j++) {
        if (i === j) continue;
        const dx = pos[i].x - pos[j].x;
        const dy = pos[i].y - pos[j].y;
        const d2 = Math.max(25, dx * dx + dy * dy);
        const rep = (spring * spring) / d2 / 8;
        force[i].x += dx * rep;
        force[i].y += dy * rep;
      }
    }
    for (const [a, b] of edges) {
      const dx = pos[b].x - pos[a].x;
      const dy = pos[b].y - pos[a].y;
      const d = Math.max(5, Math.hypot(dx, dy));
      const pull = (d - spring) / d / 6;
      if (a < q.n) {
        force[a].x += dx * pull;
        force[a].y += dy * pull;
      }
      if (b < q.n) {
        force[b].x -= dx * pull;
        force[b].y -= dy * pull;
      }
    }
    for (let i = 0; i < q.n; i++) {
      // frozen vertices stay pinned; mutable ones move with a capped step
      const f = force[i];
      const mag = Math.hypot(f.x, f.y);
      const scale = mag > step ? step / mag : 1;
      pos[i].x += f.x * scale;
      pos[i].y += f.y * scale;
      pos[i].x = Math.min(width - 30, Math.max(30, pos[i].x));
      pos[i].y = Math.min(height - 30, Math.max(30, pos[i].y));
    }
  }
  return pos;
}

/** Ring positions for the exchange-graph minimap (<= 60 nodes). */
export function layoutRing(count: number, opts: LayoutOptions): Point[] {
  const cx = opts.width / 2;
  const cy = opts.height / 2;
  const r = 0.4 * Math.min(opts.width, opts.height);
  const pts: Point[] = [];
  for (let i = 0; i < count; i++) {
    const angle = (2 * Math.PI * i) / Math.max(1, count) - Math.PI / 2;
    pts.push({ x: cx + r * Math.cos(angle), y: cy + r * Math.sin(angle) });
  }
  return pts;
}
