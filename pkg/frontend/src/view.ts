// SVG rendering of the current server state.  The view is a pure function
// of (state, layout, decorations): re-rendering never invents graph facts.

import type { GraphDoc, SessionState } from "./api.js";
import type { IncrementalLayout } from "./layout.js";

export const COMPONENT_PALETTE = [
  "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
  "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
];

const SVG_NS = "http://www.w3.org/2000/svg";

export function edgeKey(a: number, b: number): string {
  return a < b ? `${a},${b}` : `${b},${a}`;
}

export interface Decorations {
  hintEdge?: [number, number];
  hintTarget?: number;
  newVertex?: number;
  flipped?: number[];
  selection?: [number, number];
  componentTints?: Map<string, number>; // edgeKey -> palette index
}

export interface ViewCallbacks {
  onEdgeClick?: (edge: [number, number]) => void;
}

export class GraphView {
  constructor(
    private svg: SVGSVGElement,
    private layout: IncrementalLayout,
    private callbacks: ViewCallbacks = {},
  ) {}

  render(state: SessionState, deco: Decorations = {}): void {
    const graph = state.graph;
    const odd = new Set(state.oddVertices);
    this.svg.innerHTML = "";

    const edgeGroup = document.createElementNS(SVG_NS, "g");
    edgeGroup.setAttribute("class", "edges");
    for (const [a, b] of graph.edges) {
      edgeGroup.appendChild(this.edgeLine(a, b, deco));
    }
    this.svg.appendChild(edgeGroup);

    const vertexGroup = document.createElementNS(SVG_NS, "g");
    vertexGroup.setAttribute("class", "vertices");
    for (const v of graph.vertices) {
      vertexGroup.appendChild(this.vertexDisc(v, odd, deco));
    }
    this.svg.appendChild(vertexGroup);
  }

  private edgeLine(a: number, b: number, deco: Decorations): SVGLineElement {
    const pa = this.layout.positions.get(a)!;
    const pb = this.layout.positions.get(b)!;
    const line = document.createElementNS(SVG_NS, "line");
    line.setAttribute("x1", String(pa.x));
    line.setAttribute("y1", String(pa.y));
    line.setAttribute("x2", String(pb.x));
    line.setAttribute("y2", String(pb.y));
    line.setAttribute("data-edge", edgeKey(a, b));
    line.setAttribute("stroke-width", "3");

    const key = edgeKey(a, b);
    const tint = deco.componentTints?.get(key);
    line.setAttribute(
      "stroke",
      tint === undefined ? "#555" : COMPONENT_PALETTE[tint % COMPONENT_PALETTE.length],
    );

    const classes = ["edge"];
    if (deco.hintEdge && edgeKey(...deco.hintEdge) === key) classes.push("pulse");
    if (deco.selection && edgeKey(...deco.selection) === key) classes.push("selected");
    line.setAttribute("class", classes.join(" "));

    line.addEventListener("click", () => this.callbacks.onEdgeClick?.([a, b]));
    return line;
  }

  private vertexDisc(v: number, odd: Set<number>, deco: Decorations): SVGGElement {
    const p = this.layout.positions.get(v)!;
    const group = document.createElementNS(SVG_NS, "g");
    const disc = document.createElementNS(SVG_NS, "circle");
    disc.setAttribute("cx", String(p.x));
    disc.setAttribute("cy", String(p.y));
    disc.setAttribute("r", "9");
    disc.setAttribute("data-vertex", String(v));

    // Odd vertices are the "particles": filled red.  Even ones are hollow.
    if (odd.has(v)) {
      disc.setAttribute("fill", "#d62728");
      disc.setAttribute("stroke", "#7f1416");
    } else {
      disc.setAttribute("fill", "#ffffff");
      disc.setAttribute("stroke", "#333");
    }
    disc.setAttribute("stroke-width", "2");

    const classes = ["vertex"];
    if (deco.newVertex === v) classes.push("flash");
    if (deco.flipped?.includes(v)) classes.push("flipped");
    if (deco.hintTarget === v) classes.push("hint-target");
    disc.setAttribute("class", classes.join(" "));
    group.appendChild(disc);

    const label = document.createElementNS(SVG_NS, "text");
    label.setAttribute("x", String(p.x));
    label.setAttribute("y", String(p.y - 12));
    label.setAttribute("text-anchor", "middle");
    label.setAttribute("class", "vertex-label");
    label.textContent = String(v);
    group.appendChild(label);
    return group;
  }
}

// Edge -> palette index mapping for the ergodic component overlay.
export function componentTints(
  components: { edges: [number, number][] }[],
): Map<string, number> {
  const tints = new Map<string, number>();
  components.forEach((comp, i) => {
    for (const [a, b] of comp.edges) tints.set(edgeKey(a, b), i);
  });
  return tints;
}

export function graphVertexCount(graph: GraphDoc): number {
  return graph.vertices.length;
}
