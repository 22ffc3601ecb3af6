// Entry point: pick a board, create a session, hand over to the controller.

import { PuzzleApi } from "./api.js";
import { App } from "./app.js";
import { BOARDS } from "./shapes.js";

const params = new URLSearchParams(location.search);
const baseUrl = params.get("api") ?? "http://127.0.0.1:8000";
const boardName = params.get("board") ?? "icosahedron";

const board = BOARDS[boardName];
if (!board) {
  document.body.textContent =
    `unknown board "${boardName}"; try one of: ${Object.keys(BOARDS).join(", ")}`;
} else {
  const root = document.getElementById("app")!;
  const app = new App(root, new PuzzleApi(baseUrl));
  app.start(board.graph, board.mode).catch((err) => {
    root.textContent = `could not reach the puzzle service at ${baseUrl}: ${err}`;
  });
}
