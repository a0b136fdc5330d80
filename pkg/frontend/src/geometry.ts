/**
 * Queen-move geometry, mirrored from the server rules so the client can
 * reject bad clicks before making a request.  A move shrinks one coordinate,
 * the other coordinate, or both by the same amount; nothing ever grows.
 */

import type { Position } from "./types.js";

export type MoveKind = "horizontal" | "vertical" | "diagonal" | "illegal";

export function samePosition(a: Position, b: Position): boolean {
  return a.x === b.x && a.y === b.y;
}

export function positionKey(p: Position): string {
  return `${p.x},${p.y}`;
}

export function isTerminal(p: Position, k: number): boolean {
  return p.x + p.y <= k;
}

export function moveKind(from: Position, to: Position): MoveKind {
  if (to.x < 0 || to.y < 0) return "illegal";
  const dx = from.x - to.x;
  const dy = from.y - to.y;
  if (dx < 0 || dy < 0 || (dx === 0 && dy === 0)) return "illegal";
  if (dy === 0) return "horizontal";
  if (dx === 0) return "vertical";
  return dx === dy ? "diagonal" : "illegal";
}

export function isLegalMove(from: Position, to: Position, bound: number): boolean {
  if (to.x > bound || to.y > bound) return false;
  return moveKind(from, to) !== "illegal";
}

/** Every target the queen can move to, in no particular order. */
export function reachableFrom(from: Position): Position[] {
  const out: Position[] = [];
  for (let u = 0; u < from.x; u++) out.push({ x: u, y: from.y });
  for (let v = 0; v < from.y; v++) out.push({ x: from.x, y: v });
  const steps = Math.min(from.x, from.y);
  for (let t = 1; t <= steps; t++) out.push({ x: from.x - t, y: from.y - t });
  return out;
}
