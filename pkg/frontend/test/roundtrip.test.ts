// End-to-end: a real `eulerizer serve` process, the real App, and the real
// fetch.  Plays the icosahedron by following hints until the victory banner
// shows, then overlays the ergodic components.

import { spawn, type ChildProcess } from "node:child_process";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { PuzzleApi } from "../src/api.js";
import { App } from "../src/app.js";
import { ICOSAHEDRON } from "../src/shapes.js";

const PORT = 20000 + (process.pid % 9000);
const BASE = `http://127.0.0.1:${PORT}`;

let server: ChildProcess;

async function waitForHealth(timeoutMs: number): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  while (Date.now() < deadline) {
    try {
      const resp = await fetch(`${BASE}/health`);
      if (resp.ok) return;
    } catch {
      // not up yet
    }
    await new Promise((r) => setTimeout(r, 200));
  }
  throw new Error(`service did not come up on ${BASE}`);
}

beforeAll(async () => {
  server = spawn("python3", ["-m", "eulerizer.cli", "serve", "--port", String(PORT)], {
    stdio: ["ignore", "pipe", "pipe"],
  });
  server.stderr?.on("data", (chunk) => {
    const text = String(chunk);
    if (text.includes("Traceback")) console.error(text);
  });
  await waitForHealth(30000);
});

afterAll(() => {
  server?.kill();
});

describe("browser client against the live service", () => {
  it("follows hints to victory and overlays the components", async () => {
    document.body.innerHTML = '<div id="app"></div>';
    const app = new App(document.getElementById("app")!, new PuzzleApi(BASE));
    await app.start(ICOSAHEDRON, "Closed");
    expect(app.state?.won).toBe(false);

    let moves = 0;
    while (!app.state?.won && moves < 500) {
      const hint = await app.showHint();
      expect(hint).not.toBeNull();
      await app.playMove(hint!.edge);
      moves += 1;
    }

    expect(app.state?.won).toBe(true);
    expect(moves).toBeLessThanOrEqual(500);
    expect(app.banner.hidden).toBe(false);
    expect(app.banner.textContent).toContain(`${moves} moves`);

    const componentCount = await app.overlayComponents();
    expect(componentCount).toBeGreaterThanOrEqual(1);
    const tinted = app.svg.querySelectorAll("line");
    expect(tinted.length).toBe(app.state!.graph.edges.length);

    const api = new PuzzleApi(BASE);
    const check = await api.consistency(app.sessionId);
    expect(check).toEqual({ consistent: true, moveCount: moves });
  }, 120000);

  it("reloads an equivalent view from the server state alone", async () => {
    document.body.innerHTML = '<div id="app"></div>';
    const api = new PuzzleApi(BASE);
    const app = new App(document.getElementById("app")!, api);
    await app.start(ICOSAHEDRON, "Closed");
    const hint = await app.showHint();
    await app.playMove(hint!.edge);
    const moveCount = app.state!.moveCount;

    document.body.innerHTML = '<div id="app"></div>';
    const twin = new App(document.getElementById("app")!, api);
    twin.sessionId = app.sessionId;
    await twin.refresh();
    expect(twin.state!.moveCount).toBe(moveCount);
    expect(twin.svg.querySelectorAll("circle").length)
      .toBe(app.svg.querySelectorAll("circle").length);
  });

  it("flags an unwinnable ball board", async () => {
    // wheel(10): disc with boundary length 10, not divisible by 3
    const wheel10 = {
      vertices: [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10],
      edges: [
        ...[1, 2, 3, 4, 5, 6, 7, 8, 9, 10].map((v) => [0, v]),
        [1, 2], [2, 3], [3, 4], [4, 5], [5, 6],
        [6, 7], [7, 8], [8, 9], [9, 10], [1, 10],
      ] as [number, number][],
    };
    document.body.innerHTML = '<div id="app"></div>';
    const app = new App(document.getElementById("app")!, new PuzzleApi(BASE));
    await app.start(wheel10, "Ball");
    const hint = await app.showHint();
    expect(hint).toBeNull();
    expect(app.message.textContent).toBe("unwinnable: boundary length mod 3 = 1");
  });
});
