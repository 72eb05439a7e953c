// End-to-end: the workbench store driving the real Python service over
// HTTP.  Covers the acceptance flow: A2 session, click vertex 1 (red,
// c-matrix [[-1,1],[0,1]]), click again (identity panels), replay the
// sequence 1,2,1 to the all-red banner.

import { spawn, type ChildProcess } from "node:child_process";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { createClient } from "../src/client";
import { ALL_RED_BANNER, WorkbenchStore } from "../src/store";
import type { QuiverDoc } from "../src/types";

const PORT = 8931;
const BASE = `http://127.0.0.1:${PORT}`;
const A2: QuiverDoc = { n: 2, m: 0, b: [[0, 1], [-1, 0]] };

let service: ChildProcess | null = null;

async function waitForService(timeoutMs = 30_000): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  while (Date.now() < deadline) {
    try {
      const res = await fetch(`${BASE}/docs`);
      if (res.ok) return;
    } catch {
      // not up yet
    }
    await new Promise((resolve) => setTimeout(resolve, 200));
  }
  throw new Error("service did not come up");
}

beforeAll(async () => {
  service = spawn(
    "python3",
    [
      "-c",
      "from greenseq.service import create_app; import uvicorn; " +
        `uvicorn.run(create_app(), host='127.0.0.1', port=${PORT}, log_level='error')`,
    ],
    { stdio: "ignore" },
  );
  await waitForService();
}, 40_000);

afterAll(() => {
  service?.kill("SIGTERM");
});

describe("workbench against the live service", () => {
  it("runs the click / click-again / replay acceptance flow", async () => {
    const store = new WorkbenchStore(createClient(BASE));
    await store.start(A2);
    expect(store.state?.colors).toEqual(["green", "green"]);
    expect(store.state?.c_matrix).toEqual([
      [1, 0],
      [0, 1],
    ]);

    store.clickVertex(1);
    await store.idle();
    expect(store.state?.colors).toEqual(["red", "green"]);
    expect(store.state?.c_matrix).toEqual([
      [-1, 1],
      [0, 1],
    ]);
    expect(store.state?.variables?.[0]).toBe("(x2+x3)/x1");

    store.clickVertex(1);
    await store.idle();
    expect(store.state?.c_matrix).toEqual([
      [1, 0],
      [0, 1],
    ]);
    expect(store.state?.g_matrix).toEqual([
      [1, 0],
      [0, 1],
    ]);
    expect(store.state?.variables).toEqual(["x1", "x2"]);
    expect(store.banner).toBeNull();

    await store.findGreenSequences();
    const sequences = store.greenReport!.sequences;
    expect(sequences).toContainEqual([1, 2, 1]);
    const long = sequences.find((s) => s.length === 3)!;
    store.startReplay(long);
    await store.idle();
    while (!store.replayDone) {
      store.replayStep();
      await store.idle();
    }
    expect(store.state?.all_red).toBe(true);
    expect(store.banner).toBe(ALL_RED_BANNER);
    expect(store.state?.history).toEqual([1, 2, 1]);
  }, 30_000);

  it("loads the pentagon minimap and undoes back to the start", async () => {
    const store = new WorkbenchStore(createClient(BASE));
    await store.start(A2);
    await store.loadMinimap();
    expect(store.minimap?.vertices).toHaveLength(5);
    expect(store.minimap?.complete).toBe(true);

    store.clickVertex(2);
    store.clickVertex(1);
    await store.idle();
    expect(store.state?.all_red).toBe(true);
    store.undo();
    store.undo();
    await store.idle();
    expect(store.state?.history).toEqual([]);
    expect(store.state?.all_green).toBe(true);
  }, 30_000);
});
