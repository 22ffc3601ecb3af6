// Game controller: owns one session, wires the buttons, and keeps the view
// a pure function of the last server response plus the layout cache.
// No legality checks happen here; the server is the referee.

import { ApiError, PuzzleApi } from "./api.js";
import type { GraphDoc, Hint, Mode, SessionState } from "./api.js";
import { IncrementalLayout } from "./layout.js";
import { componentTints, GraphView } from "./view.js";
import type { Decorations } from "./view.js";

export class App {
  sessionId = "";
  state: SessionState | null = null;
  mode: Mode = "Closed";
  private layout = new IncrementalLayout();
  private view: GraphView;
  private deco: Decorations = {};
  private busy = false;

  readonly svg: SVGSVGElement;
  readonly banner: HTMLDivElement;
  readonly message: HTMLDivElement;
  readonly badge: HTMLSpanElement;
  readonly hintButton: HTMLButtonElement;
  readonly undoButton: HTMLButtonElement;
  readonly overlayButton: HTMLButtonElement;
  readonly status: HTMLSpanElement;

  constructor(
    root: HTMLElement,
    private api: PuzzleApi,
  ) {
    root.innerHTML = `
      <div class="toolbar">
        <button data-role="hint">Hint</button>
        <button data-role="undo">Undo</button>
        <button data-role="overlay">Components</button>
        <span data-role="badge" class="badge" hidden>ergodic</span>
        <span data-role="status"></span>
      </div>
      <div data-role="message" class="message"></div>
      <div data-role="banner" class="banner" hidden></div>
      <svg data-role="board" width="800" height="600"></svg>
    `;
    this.svg = root.querySelector("svg[data-role=board]")!;
    this.banner = root.querySelector("[data-role=banner]")!;
    this.message = root.querySelector("[data-role=message]")!;
    this.badge = root.querySelector("[data-role=badge]")!;
    this.hintButton = root.querySelector("button[data-role=hint]")!;
    this.undoButton = root.querySelector("button[data-role=undo]")!;
    this.overlayButton = root.querySelector("button[data-role=overlay]")!;
    this.status = root.querySelector("[data-role=status]")!;

    this.hintButton.addEventListener("click", () => void this.showHint());
    this.undoButton.addEventListener("click", () => void this.undoMove());
    this.overlayButton.addEventListener("click", () => void this.overlayComponents());
    this.view = new GraphView(this.svg, this.layout, {
      onEdgeClick: (edge) => void this.playMove(edge),
    });
  }

  async start(graph: GraphDoc, mode: Mode = "Closed"): Promise<void> {
    const { id, state } = await this.api.createSession(graph, mode);
    this.sessionId = id;
    this.mode = mode;
    this.state = state;
    this.layout.initialize(state.graph);
    this.deco = {};
    this.redraw();
  }

  // Reload path: rebuild an equivalent view from the server state alone.
  async refresh(): Promise<void> {
    const state = await this.api.getState(this.sessionId);
    this.state = state;
    this.layout.initialize(state.graph);
    this.deco = {};
    this.redraw();
  }

  async playMove(edge: [number, number]): Promise<void> {
    if (this.busy || !this.state) return;
    this.busy = true;
    this.clearMessage();
    try {
      const { state, delta } = await this.api.move(this.sessionId, edge);
      this.state = state;
      const [a, b] = delta.refinedEdge;
      this.layout.insertVertex(delta.newVertex, a, b, state.graph);
      this.deco = { newVertex: delta.newVertex, flipped: delta.flipped };
      this.redraw();
    } catch (err) {
      this.surface(err, {
        IllegalEdge: "illegal: boundary edge",
        EdgeGone: "that edge is gone; the board may have changed",
        SessionFrozen: "already solved; undo to keep playing",
      });
    } finally {
      this.busy = false;
    }
  }

  async showHint(): Promise<Hint | null> {
    if (this.busy || !this.state) return null;
    this.clearMessage();
    try {
      const hint = await this.api.hint(this.sessionId);
      this.deco = { ...this.deco, hintEdge: hint.edge, hintTarget: hint.target };
      this.redraw();
      return hint;
    } catch (err) {
      if (err instanceof ApiError && err.code === "RefusedBoundaryNotMod3") {
        const n = Number(err.detail["boundary_length"] ?? NaN);
        this.showMessage(`unwinnable: boundary length mod 3 = ${((n % 3) + 3) % 3}`);
        return null;
      }
      this.surface(err, {});
      return null;
    }
  }

  async undoMove(): Promise<void> {
    if (this.busy || !this.state) return;
    this.busy = true;
    this.clearMessage();
    try {
      const { state, undone } = await this.api.undo(this.sessionId);
      this.state = state;
      this.layout.removeVertex(undone.newVertex);
      this.deco = {};
      this.redraw();
    } catch (err) {
      this.surface(err, { NothingToUndo: "nothing to undo" });
    } finally {
      this.busy = false;
    }
  }

  async overlayComponents(): Promise<number> {
    if (!this.state) return 0;
    this.clearMessage();
    const analysis = await this.api.analysis(this.sessionId);
    if (!analysis.components) {
      this.showMessage("overlay unavailable while odd interior vertices exist");
      return 0;
    }
    const comps = analysis.components.components;
    this.deco = { ...this.deco, componentTints: componentTints(comps) };
    this.badge.hidden = comps.length !== 1;
    this.redraw();
    return comps.length;
  }

  private redraw(): void {
    if (!this.state) return;
    this.view.render(this.state, this.deco);
    const s = this.state;
    this.status.textContent =
      `${this.mode} | moves ${s.moveCount} | odd ${s.oddVertices.length}` +
      (s.boundaryMod3 === undefined ? "" : ` | boundary mod 3 = ${s.boundaryMod3}`);

    this.hintButton.disabled = s.won;
    this.undoButton.disabled = s.moveCount === 0;
    // Closed games have no flow while odd vertices remain; Ball games defer
    // to the server, which reports null components when the flow is undefined.
    this.overlayButton.disabled =
      this.mode === "Closed" && !s.won && s.oddVertices.length > 0;

    if (s.won) {
      this.banner.hidden = false;
      this.banner.textContent =
        `Eulerian! Solved in ${s.moveCount} moves - overlay the components?`;
    } else {
      this.banner.hidden = true;
      this.badge.hidden = true;
    }
  }

  private surface(err: unknown, texts: Record<string, string>): void {
    if (err instanceof ApiError) {
      this.showMessage(texts[err.code] ?? `${err.code}: ${err.message}`);
    } else {
      this.showMessage(String(err));
    }
  }

  private showMessage(text: string): void {
    this.message.textContent = text;
  }

  private clearMessage(): void {
    this.message.textContent = "";
  }
}
