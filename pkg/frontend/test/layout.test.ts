import { describe, expect, it } from "vitest";

import { layoutQuiver, layoutRing } from "../src/layout";
import { renderMatrix, renderQuiverSvg } from "../src/render";
import { quiverDot, quiverJson } from "../src/export";
import type { SessionState } from "../src/types";

const FRAMED_A2 = { n: 2, m: 2, b: [[0, 1], [-1, 0], [1, 0], [0, 1]] };

const STATE: SessionState = {
  id: "s0",
  quiver: FRAMED_A2,
  colors: ["red", "green"],
  c_matrix: [
    [-1, 1],
    [0, 1],
  ],
  g_matrix: [
    [1, 0],
    [0, 1],
  ],
  variables: ["(x2+x3)/x1", "x2"],
  history: [1],
  all_green: false,
  all_red: false,
};

describe("layoutQuiver", () => {
  it("pins frozen vertices on the outer ring", () => {
    const opts = { width: 400, height: 400 };
    const pos = layoutQuiver(FRAMED_A2, opts);
    expect(pos).toHaveLength(4);
    const r = (p: { x: number; y: number }) => Math.hypot(p.x - 200, p.y - 200);
    // frozen radii exactly at the ring; mutable strictly inside
    expect(r(pos[2])).toBeCloseTo(0.42 * 400, 5);
    expect(r(pos[3])).toBeCloseTo(0.42 * 400, 5);
    expect(r(pos[0])).toBeLessThan(0.42 * 400);
    expect(r(pos[1])).toBeLessThan(0.42 * 400);
  });

  it("is deterministic", () => {
    const opts = { width: 400, height: 400 };
    expect(layoutQuiver(FRAMED_A2, opts)).toEqual(layoutQuiver(FRAMED_A2, opts));
  });

  it("keeps vertices inside the viewport", () => {
    const big = {
      n: 6,
      m: 0,
      b: [
        [0, 3, 0, 0, 0, -3],
        [-3, 0, 3, 0, 0, 0],
        [0, -3, 0, 3, 0, 0],
        [0, 0, -3, 0, 3, 0],
        [0, 0, 0, -3, 0, 3],
        [3, 0, 0, 0, -3, 0],
      ],
    };
    for (const p of layoutQuiver(big, { width: 300, height: 200 })) {
      expect(p.x).toBeGreaterThanOrEqual(30);
      expect(p.x).toBeLessThanOrEqual(270);
      expect(p.y).toBeGreaterThanOrEqual(30);
      expect(p.y).toBeLessThanOrEqual(170);
    }
  });

  it("ring layout spaces nodes evenly", () => {
    const pts = layoutRing(4, { width: 200, height: 200 });
    expect(pts).toHaveLength(4);
    expect(pts[0].x).toBeCloseTo(100, 5);
    expect(pts[0].y).toBeCloseTo(20, 5);
  });
});

describe("rendering", () => {
  it("svg encodes colours, shapes and click targets", () => {
    const svg = renderQuiverSvg(STATE);
    // red vertex 1 is a diamond, green vertex 2 a circle
    expect(svg).toContain('data-vertex="1"');
    expect(svg).toContain('data-vertex="2"');
    expect(svg).toMatch(/<rect[^>]*rotate\(45[^>]*class="vertex mutable" data-vertex="1"/);
    expect(svg).toMatch(/<circle[^>]*class="vertex mutable" data-vertex="2"/);
    // two frozen boxes
    expect((svg.match(/class="vertex frozen"/g) ?? []).length).toBe(2);
  });

  it("matrix panel renders all entries", () => {
    const html = renderMatrix(STATE.c_matrix, "c-matrix");
    expect(html).toContain("<td>-1</td>");
    expect(html).toContain("c-matrix");
  });

  it("exports JSON and DOT from service state only", () => {
    const json = JSON.parse(quiverJson(STATE));
    expect(json.b).toEqual(FRAMED_A2.b);
    const dot = quiverDot(STATE);
    expect(dot).toContain("digraph quiver");
    expect(dot).toContain("v1 [label=\"1\" shape=circle style=filled color=red2]");
    expect(dot).toContain("v3 -> v1");
  });
});
