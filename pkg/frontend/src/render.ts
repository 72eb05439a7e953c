// SVG and panel markup.  Pure string builders so they can be tested
// without a DOM; every value shown originates from a service response.

import { layoutQuiver, layoutRing } from "./layout";
import type { Color, GraphDoc, SessionState } from "./types";

// colour-blind-safe palette: green/red differ in brightness, and
// mutable vertex shapes differ by colour too (circle vs diamond)
const FILL: Record<Color, string> = {
  green: "#1b9e77",
  red: "#d95f02",
  neither: "#999999",
};

function esc(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

export function renderQuiverSvg(
  state: SessionState,
  width = 480,
  height = 420,
): string {
  const q = state.quiver;
  const pos = layoutQuiver(q, { width, height });
  const parts: string[] = [
    `<svg viewBox="0 0 ${width} ${height}" xmlns="http://www.w3.org/2000/svg">`,
    `<defs><marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" ` +
      `markerWidth="7" markerHeight="7" orient="auto-start-reverse">` +
      `<path d="M 0 0 L 10 5 L 0 10 z" fill="#444"/></marker></defs>`,
  ];
  const total = q.n + q.m;
  for (let i = 0; i < total; i++) {
    for (let j = 0; j < q.n; j++) {
      const count = q.b[i][j];
      if (count <= 0 || i === j) continue;
      const a = pos[i];
      const b = pos[j];
      const dx = b.x - a.x;
      const dy = b.y - a.y;
      const len = Math.max(1, Math.hypot(dx, dy));
      const pad = 24;
      const x1 = a.x + (dx / len) * pad;
      const y1 = a.y + (dy / len) * pad;
      const x2 = b.x - (dx / len) * pad;
      const y2 = b.y - (dy / len) * pad;
      parts.push(
        `<line x1="${x1.toFixed(1)}" y1="${y1.toFixed(1)}" x2="${x2.toFixed(1)}" ` +
          `y2="${y2.toFixed(1)}" stroke="#444" stroke-width="1.6" marker-end="url(#arrow)"/>`,
      );
      if (count > 1) {
        const mx = (x1 + x2) / 2;
        const my = (y1 + y2) / 2 - 6;
        parts.push(
          `<text x="${mx.toFixed(1)}" y="${my.toFixed(1)}" class="mult" ` +
            `text-anchor="middle">${count}</text>`,
        );
      }
    }
  }
  for (let i = 0; i < q.n; i++) {
    const color = state.colors[i];
    const p = pos[i];
    const fill = FILL[color];
    if (color === "red") {
      // red vertices are diamonds so colour is not the only cue
      parts.push(
        `<rect x="${(p.x - 15).toFixed(1)}" y="${(p.y - 15).toFixed(1)}" width="30" height="30" ` +
          `transform="rotate(45 ${p.x.toFixed(1)} ${p.y.toFixed(1)})" fill="${fill}" ` +
          `class="vertex mutable" data-vertex="${i + 1}"/>`,
      );
    } else {
      parts.push(
        `<circle cx="${p.x.toFixed(1)}" cy="${p.y.toFixed(1)}" r="17" fill="${fill}" ` +
          `class="vertex mutable" data-vertex="${i + 1}"/>`,
      );
    }
    parts.push(
      `<text x="${p.x.toFixed(1)}" y="${(p.y + 4).toFixed(1)}" text-anchor="middle" ` +
        `class="vlabel" data-vertex="${i + 1}">${i + 1}</text>`,
    );
  }
  for (let f = 0; f < q.m; f++) {
    const p = pos[q.n + f];
    parts.push(
      `<rect x="${(p.x - 14).toFixed(1)}" y="${(p.y - 14).toFixed(1)}" width="28" height="28" ` +
        `fill="#7fa8d9" class="vertex frozen"/>`,
      `<text x="${p.x.toFixed(1)}" y="${(p.y + 4).toFixed(1)}" text-anchor="middle" ` +
        `class="vlabel">${q.n + f + 1}</text>`,
    );
  }
  parts.push("</svg>");
  return parts.join("");
}

export function renderMatrix(mat: number[][], title: string): string {
  const rows = mat
    .map(
      (row) =>
        "<tr>" + row.map((e) => `<td>${e}</td>`).join("") + "</tr>",
    )
    .join("");
  return `<h3>${esc(title)}</h3><table class="matrix">${rows}</table>`;
}

export function renderVariables(state: SessionState): string {
  if (state.variables === null) {
    return `<h3>cluster variables</h3><p class="muted">${esc(
      state.variables_omitted_reason ?? "unavailable",
    )}</p>`;
  }
  const items = state.variables
    .map((v, i) => `<li><b>u${i + 1}</b> = ${esc(v)}</li>`)
    .join("");
  return `<h3>cluster variables</h3><ul class="vars">${items}</ul>`;
}

export function renderHistory(history: number[]): string {
  if (history.length === 0) {
    return `<h3>history</h3><p class="muted">no mutations yet</p>`;
  }
  const items = history.map((k) => `<li>&mu;<sub>${k}</sub></li>`).join("");
  return `<h3>history</h3><ol class="history">${items}</ol>`;
}

export function renderMinimap(graph: GraphDoc, width = 240, height = 240): string {
  const pos = layoutRing(graph.vertices.length, { width, height });
  const parts = [
    `<svg viewBox="0 0 ${width} ${height}" xmlns="http://www.w3.org/2000/svg">`,
  ];
  for (const [src, dst] of graph.edges) {
    const a = pos[src];
    const b = pos[dst];
    parts.push(
      `<line x1="${a.x.toFixed(1)}" y1="${a.y.toFixed(1)}" x2="${b.x.toFixed(1)}" ` +
        `y2="${b.y.toFixed(1)}" stroke="#bbb" stroke-width="1"/>`,
    );
  }
  pos.forEach((p, i) => {
    parts.push(
      `<circle cx="${p.x.toFixed(1)}" cy="${p.y.toFixed(1)}" r="5" ` +
        `fill="${i === 0 ? "#1b9e77" : "#888"}"/>`,
    );
  });
  parts.push("</svg>");
  return parts.join("");
}
