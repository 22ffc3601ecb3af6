// Incremental force-directed layout.  Existing vertices stay pinned when a
// refinement inserts a new one, so the player's mental map survives moves.

import type { GraphDoc } from "./api.js";

export interface Point {
  x: number;
  y: number;
}

const ITERATIONS = 120;
const SPRING = 0.02;
const REPULSION = 4000;
const REST_LENGTH = 80;

function edgeList(graph: GraphDoc): [number, number][] {
  return graph.edges.map(([a, b]) => (a < b ? [a, b] : [b, a]));
}

export class IncrementalLayout {
  positions = new Map<number, Point>();

  constructor(
    private width = 800,
    private height = 600,
  ) {}

  // Deterministic: seed on a circle in vertex order, then relax.
  initialize(graph: GraphDoc): void {
    this.positions.clear();
    const vs = [...graph.vertices].sort((p, q) => p - q);
    const r = Math.min(this.width, this.height) * 0.38;
    vs.forEach((v, i) => {
      const angle = (2 * Math.PI * i) / vs.length;
      this.positions.set(v, {
        x: this.width / 2 + r * Math.cos(angle),
        y: this.height / 2 + r * Math.sin(angle),
      });
    });
    this.relax(graph, new Set(vs), ITERATIONS);
  }

  // New vertex lands on the refined edge's midpoint; only it may move.
  insertVertex(v: number, a: number, b: number, graph: GraphDoc): void {
    const pa = this.positions.get(a);
    const pb = this.positions.get(b);
    if (!pa || !pb) throw new Error(`layout has no positions for ${a}, ${b}`);
    this.positions.set(v, { x: (pa.x + pb.x) / 2, y: (pa.y + pb.y) / 2 });
    this.relax(graph, new Set([v]), 20);
  }

  removeVertex(v: number): void {
    this.positions.delete(v);
  }

  // Spring-electric relaxation restricted to the movable set.
  private relax(graph: GraphDoc, movable: Set<number>, rounds: number): void {
    const vs = graph.vertices;
    const edges = edgeList(graph);
    for (let round = 0; round < rounds; round++) {
      const force = new Map<number, Point>();
      for (const v of movable) force.set(v, { x: 0, y: 0 });
      for (const v of movable) {
        const pv = this.positions.get(v)!;
        const fv = force.get(v)!;
        for (const u of vs) {
          if (u === v) continue;
          const pu = this.positions.get(u)!;
          const dx = pv.x - pu.x;
          const dy = pv.y - pu.y;
          const d2 = Math.max(dx * dx + dy * dy, 1);
          const push = REPULSION / d2;
          const d = Math.sqrt(d2);
          fv.x += (dx / d) * push;
          fv.y += (dy / d) * push;
        }
      }
      for (const [a, b] of edges) {
        const pa = this.positions.get(a)!;
        const pb = this.positions.get(b)!;
        const dx = pb.x - pa.x;
        const dy = pb.y - pa.y;
        const d = Math.max(Math.sqrt(dx * dx + dy * dy), 1);
        const pull = SPRING * (d - REST_LENGTH);
        if (movable.has(a)) {
          const fa = force.get(a)!;
          fa.x += (dx / d) * pull;
          fa.y += (dy / d) * pull;
        }
        if (movable.has(b)) {
          const fb = force.get(b)!;
          fb.x += (dx / d) * pull * -1;
          fb.y += (dy / d) * pull * -1;
        }
      }
      for (const v of movable) {
        const p = this.positions.get(v)!;
        const f = force.get(v)!;
        p.x = Math.min(Math.max(p.x + f.x, 10), this.width - 10);
        p.y = Math.min(Math.max(p.y + f.y, 10), this.height - 10);
      }
    }
  }
}
