/**
 * DOM layer: draws the grid that cellViews describes and reports clicks.
 * The x coordinate is the row (downward) and y the column (rightward), so
 * (0,0) is the upper-left corner and every move heads toward it.
 */

import { positionKey } from "./geometry.js";
import type { Position } from "./types.js";
import { cellViews, type BoardView } from "./view.js";

export type CellClickHandler = (p: Position) => void;

export function renderBoard(
  root: HTMLElement,
  view: BoardView,
  onCellClick: CellClickHandler,
  animate: Position | null = null,
): void {
  root.textContent = "";
  root.style.setProperty("--board-size", String(view.bound + 1));
  const animateKey = animate ? positionKey(animate) : null;
  for (const cell of cellViews(view)) {
    const el = document.createElement("button");
    el.type = "button";
    el.className = "cell";
    if (cell.terminal) el.classList.add("terminal");
    if (cell.queen) el.classList.add("queen");
    if (cell.reachable) el.classList.add("reachable");
    if (cell.hinted) el.classList.add("hinted");
    if (cell.marked) el.classList.add("marked");
    const key = positionKey({ x: cell.x, y: cell.y });
    if (animateKey === key) el.classList.add("just-moved");
    el.dataset.x = String(cell.x);
    el.dataset.y = String(cell.y);
    el.title = `(${cell.x}, ${cell.y})`;
    if (cell.queen) el.textContent = "♛";
    el.addEventListener("click", () => onCellClick({ x: cell.x, y: cell.y }));
    root.appendChild(el);
  }
}
