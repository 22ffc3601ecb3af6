// Starting boards, mirroring the generator fixtures served by the backend.

import type { GraphDoc } from "./api.js";

export const ICOSAHEDRON: GraphDoc = {
  vertices: [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12],
  edges: [
    [1, 2], [1, 3], [1, 4], [1, 5], [1, 6], [2, 5], [2, 6], [2, 9],
    [2, 10], [3, 4], [3, 5], [3, 8], [3, 11], [4, 6], [4, 8], [4, 12],
    [5, 9], [5, 11], [6, 10], [6, 12], [7, 8], [7, 9], [7, 10], [7, 11],
    [7, 12], [8, 11], [8, 12], [9, 10], [9, 11], [10, 12],
  ],
};

export const OCTAHEDRON: GraphDoc = {
  vertices: [1, 2, 3, 4, 5, 6],
  edges: [
    [1, 2], [1, 3], [1, 4], [1, 5], [2, 3], [2, 4],
    [2, 6], [3, 5], [3, 6], [4, 5], [4, 6], [5, 6],
  ],
};

export const WHEEL9: GraphDoc = {
  vertices: [0, 1, 2, 3, 4, 5, 6, 7, 8, 9],
  edges: [
    [0, 1], [0, 2], [0, 3], [0, 4], [0, 5], [0, 6], [0, 7], [0, 8],
    [0, 9], [1, 2], [1, 9], [2, 3], [3, 4], [4, 5], [5, 6], [6, 7],
    [7, 8], [8, 9],
  ],
};

export const BOARDS: Record<string, { graph: GraphDoc; mode: "Closed" | "Ball" }> = {
  icosahedron: { graph: ICOSAHEDRON, mode: "Closed" },
  octahedron: { graph: OCTAHEDRON, mode: "Closed" },
  "wheel(9)": { graph: WHEEL9, mode: "Ball" },
};
