/**
 * Pure view-model: everything the DOM layer draws is derived here from the
 * last server-confirmed session plus local overlay flags, so the board can
 * never disagree with the service about the game state.
 */

import { isTerminal, positionKey, reachableFrom, samePosition } from "./geometry.js";
import type { Overlay, Position, Session } from "./types.js";

export interface BoardView {
  k: number;
  bound: number;
  queen: Position;
  overlay: Overlay;
  session: Session | null;
  /** Winning moves last fetched for the current position; null = not fetched. */
  hints: Position[] | null;
  /** P-positions last fetched for the current k/bound; null = not fetched. */
  pPositions: Position[] | null;
}

export interface CellView {
  x: number;
  y: number;
  terminal: boolean;
  queen: boolean;
  /** The queen can move here; styled on hover. */
  reachable: boolean;
  /** Badged winning move under the hints overlay. */
  hinted: boolean;
  /** Marked under the p-positions overlay. */
  marked: boolean;
}

export const NO_WINNING_MOVE_MESSAGE = "no winning move exists from here";

export function initialView(k: number, bound: number): BoardView {
  return {
    k,
    bound,
    queen: { x: bound, y: bound - 1 },
    overlay: "off",
    session: null,
    hints: null,
    pPositions: null,
  };
}

/** One CellView per cell, row-major from the upper-left origin (0,0). */
export function cellViews(view: BoardView): CellView[] {
  const playing = view.session !== null && view.session.status === "in-progress";
  const reachable = new Set(
    playing ? reachableFrom(view.queen).map(positionKey) : [],
  );
  const hinted = new Set(
    view.overlay === "hints" && view.hints ? view.hints.map(positionKey) : [],
  );
  const marked = new Set(
    view.overlay === "p-positions" && view.pPositions
      ? view.pPositions.map(positionKey)
      : [],
  );
  const cells: CellView[] = [];
  for (let x = 0; x <= view.bound; x++) {
    for (let y = 0; y <= view.bound; y++) {
      const key = `${x},${y}`;
      cells.push({
        x,
        y,
        terminal: isTerminal({ x, y }, view.k),
        queen: samePosition(view.queen, { x, y }),
        reachable: reachable.has(key),
        hinted: hinted.has(key),
        marked: marked.has(key),
      });
    }
  }
  return cells;
}

export function victoryBanner(session: Session | null): string | null {
  if (session === null) return null;
  if (session.status === "human-won") return "You reached the terminal region. You win!";
  if (session.status === "engine-won") return "The engine reached the terminal region. Engine wins.";
  return null;
}

/** Caption for the hints overlay; null when the overlay is off or unloaded. */
export function hintCaption(view: BoardView): string | null {
  if (view.overlay !== "hints" || view.hints === null) return null;
  if (view.hints.length === 0) return NO_WINNING_MOVE_MESSAGE;
  const n = view.hints.length;
  return n === 1 ? "1 winning move" : `${n} winning moves`;
}

/**
 * Whether a server response should replace the known session.  Responses for
 * another session or with a version not newer than the known one are stale
 * (e.g. a reply that was overtaken by a newer confirmed move) and dropped.
 */
export function shouldAdopt(current: Session | null, incoming: Session): boolean {
  if (current === null) return true;
  if (incoming.id !== current.id) return false;
  return incoming.version > current.version;
}

/** Fold a confirmed session into the view; overlay data is position-bound, so clear it. */
export function adoptSession(view: BoardView, session: Session): BoardView {
  return {
    ...view,
    k: session.k,
    bound: session.bound,
    queen: session.current,
    session,
    hints: null,
    pPositions: view.pPositions,
  };
}
