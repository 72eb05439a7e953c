// Quiver editor model used before a session starts: build up the
// mutable-only exchange matrix by adding vertices and arrows.

import type { QuiverDoc } from "./types";

export class QuiverEditor {
  private b: number[][] = [];

  get n(): number {
    return this.b.length;
  }

  addVertex(): number {
    for (const row of this.b) row.push(0);
    this.b.push(new Array(this.b.length + 1).fill(0));
    return this.b.length;
  }

  removeVertex(v: number): void {
    this.check(v);
    this.b.splice(v - 1, 1);
    for (const row of this.b) row.splice(v - 1, 1);
  }

  /** Add one arrow i -> j (net encoding: cancels an existing j -> i). */
  addArrow(i: number, j: number): void {
    this.check(i);
    this.check(j);
    if (i === j) throw new Error("loops are not allowed");
    this.b[i - 1][j - 1] += 1;
    this.b[j - 1][i - 1] -= 1;
  }

  removeArrow(i: number, j: number): void {
    this.check(i);
    this.check(j);
    if (this.b[i - 1][j - 1] <= 0) throw new Error(`no arrow ${i} -> ${j}`);
    this.b[i - 1][j - 1] -= 1;
    this.b[j - 1][i - 1] += 1;
  }

  arrowCount(i: number, j: number): number {
    this.check(i);
    this.check(j);
    return Math.max(0, this.b[i - 1][j - 1]);
  }

  loadPreset(rows: number[][]): void {
    this.b = rows.map((r) => [...r]);
  }

  toQuiver(): QuiverDoc {
    if (this.n === 0) throw new Error("add at least one vertex");
    return { n: this.n, m: 0, b: this.b.map((r) => [...r]) };
  }

  private check(v: number): void {
    if (!Number.isInteger(v) || v < 1 || v > this.n) {
      throw new Error(`vertex ${v} out of range 1..${this.n}`);
    }
  }
}

export const PRESETS: Record<string, number[][]> = {
  A1: [[0]],
  A2: [
    [0, 1],
    [-1, 0],
  ],
  A3: [
    [0, 1, 0],
    [-1, 0, 1],
    [0, -1, 0],
  ],
  Kronecker: [
    [0, 2],
    [-2, 0],
  ],
  Markov: [
    [0, 2, -2],
    [-2, 0, 2],
    [2, -2, 0],
  ],
};
