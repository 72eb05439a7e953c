// Download payload builders.  Formatting only: the matrix and colours
// come verbatim from the service state.

import type { SessionState } from "./types";

export function quiverJson(state: SessionState): string {
  const q = state.quiver;
  return JSON.stringify({ v: 1, n: q.n, m: q.m, b: q.b });
}

export function quiverDot(state: SessionState): string {
  const q = state.quiver;
  const lines = ["digraph quiver {"];
  for (let i = 0; i < q.n; i++) {
    const color = state.colors[i] === "green" ? "green2" : state.colors[i] === "red" ? "red2" : "grey";
    lines.push(`  v${i + 1} [label="${i + 1}" shape=circle style=filled color=${color}];`);
  }
  for (let f = 0; f < q.m; f++) {
    lines.push(
      `  v${q.n + f + 1} [label="${q.n + f + 1}" shape=box style=filled color=lightblue];`,
    );
  }
  for (let i = 0; i < q.n + q.m; i++) {
    for (let j = 0; j < q.n; j++) {
      const c = q.b[i][j];
      if (c > 0 && i !== j) lines.push(`  v${i + 1} -> v${j + 1} [label="${c}"];`);
    }
  }
  lines.push("}");
  return lines.join("\n") + "\n";
}
