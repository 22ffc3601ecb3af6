import { describe, expect, it } from "vitest";

import { IncrementalLayout } from "../src/layout.js";
import { OCTAHEDRON } from "../src/shapes.js";

describe("IncrementalLayout", () => {
  it("is deterministic and keeps every vertex in bounds", () => {
    const a = new IncrementalLayout(800, 600);
    const b = new IncrementalLayout(800, 600);
    a.initialize(OCTAHEDRON);
    b.initialize(OCTAHEDRON);
    expect(a.positions.size).toBe(6);
    for (const [v, p] of a.positions) {
      expect(p.x).toBeGreaterThanOrEqual(10);
      expect(p.x).toBeLessThanOrEqual(790);
      expect(p.y).toBeGreaterThanOrEqual(10);
      expect(p.y).toBeLessThanOrEqual(590);
      expect(b.positions.get(v)).toEqual(p);
      expect(Number.isFinite(p.x) && Number.isFinite(p.y)).toBe(true);
    }
  });

  it("pins existing vertices when inserting a refinement vertex", () => {
    const layout = new IncrementalLayout(800, 600);
    layout.initialize(OCTAHEDRON);
    const before = new Map(
      [...layout.positions].map(([v, p]) => [v, { ...p }]),
    );

    const refined = {
      vertices: [...OCTAHEDRON.vertices, 7],
      edges: [
        ...OCTAHEDRON.edges.filter(([a, b]) => !(a === 1 && b === 2)),
        [1, 7], [2, 7], [3, 7], [4, 7],
      ] as [number, number][],
    };
    layout.insertVertex(7, 1, 2, refined);

    for (const v of OCTAHEDRON.vertices) {
      expect(layout.positions.get(v)).toEqual(before.get(v));
    }
    expect(layout.positions.has(7)).toBe(true);
  });

  it("starts the new vertex near the refined edge before relaxing", () => {
    const layout = new IncrementalLayout(800, 600);
    const path = {
      vertices: [1, 2],
      edges: [[1, 2]] as [number, number][],
    };
    layout.initialize(path);
    const p1 = layout.positions.get(1)!;
    const p2 = layout.positions.get(2)!;
    const graph = {
      vertices: [1, 2, 3],
      edges: [[1, 3], [2, 3]] as [number, number][],
    };
    layout.insertVertex(3, 1, 2, graph);
    const p3 = layout.positions.get(3)!;
    const mid = { x: (p1.x + p2.x) / 2, y: (p1.y + p2.y) / 2 };
    const drift = Math.hypot(p3.x - mid.x, p3.y - mid.y);
    expect(drift).toBeLessThan(120);
  });

  it("forgets removed vertices", () => {
    const layout = new IncrementalLayout();
    layout.initialize(OCTAHEDRON);
    layout.removeVertex(6);
    expect(layout.positions.has(6)).toBe(false);
  });

  it("refuses to insert on unknown endpoints", () => {
    const layout = new IncrementalLayout();
    layout.initialize(OCTAHEDRON);
    expect(() => layout.insertVertex(7, 1, 99, OCTAHEDRON)).toThrow();
  });
});
