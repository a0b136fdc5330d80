import { describe, expect, it } from "vitest";

import {
  isLegalMove,
  isTerminal,
  moveKind,
  positionKey,
  reachableFrom,
  samePosition,
} from "../src/geometry.js";

describe("moveKind", () => {
  it("classifies the three queen directions", () => {
    expect(moveKind({ x: 12, y: 7 }, { x: 4, y: 7 })).toBe("horizontal");
    expect(moveKind({ x: 12, y: 7 }, { x: 12, y: 0 })).toBe("vertical");
    expect(moveKind({ x: 12, y: 7 }, { x: 5, y: 0 })).toBe("diagonal");
  });

  it("rejects everything else", () => {
    expect(moveKind({ x: 5, y: 3 }, { x: 5, y: 3 })).toBe("illegal");
    expect(moveKind({ x: 5, y: 3 }, { x: 4, y: 1 })).toBe("illegal");
    expect(moveKind({ x: 5, y: 3 }, { x: 6, y: 3 })).toBe("illegal");
    expect(moveKind({ x: 5, y: 3 }, { x: 5, y: 4 })).toBe("illegal");
    expect(moveKind({ x: 5, y: 3 }, { x: -1, y: 3 })).toBe("illegal");
    expect(moveKind({ x: 2, y: 6 }, { x: 1, y: 4 })).toBe("illegal");
  });
});

describe("isLegalMove", () => {
  it("accepts on-board queen moves only", () => {
    expect(isLegalMove({ x: 12, y: 7 }, { x: 12, y: 6 }, 31)).toBe(true);
    expect(isLegalMove({ x: 12, y: 7 }, { x: 5, y: 0 }, 31)).toBe(true);
    expect(isLegalMove({ x: 12, y: 7 }, { x: 40, y: 7 }, 31)).toBe(false);
    expect(isLegalMove({ x: 12, y: 7 }, { x: 11, y: 5 }, 31)).toBe(false);
  });

  it("mirrors the server's rules for every target on a small board", () => {
    // the client must never submit a move the server would reject
    const bound = 9;
    const from = { x: 7, y: 5 };
    for (let x = -1; x <= bound + 1; x++) {
      for (let y = -1; y <= bound + 1; y++) {
        const onBoard = x >= 0 && y >= 0 && x <= bound && y <= bound;
        const dx = from.x - x;
        const dy = from.y - y;
        const queenly =
          (dx > 0 && dy === 0) ||
          (dx === 0 && dy > 0) ||
          (dx > 0 && dx === dy);
        expect(isLegalMove(from, { x, y }, bound)).toBe(onBoard && queenly);
      }
    }
  });
});

describe("reachableFrom", () => {
  it("lists x + y + min(x, y) distinct targets", () => {
    for (const p of [
      { x: 0, y: 0 },
      { x: 3, y: 0 },
      { x: 0, y: 4 },
      { x: 12, y: 7 },
      { x: 9, y: 9 },
    ]) {
      const targets = reachableFrom(p);
      expect(targets).toHaveLength(p.x + p.y + Math.min(p.x, p.y));
      expect(new Set(targets.map(positionKey)).size).toBe(targets.length);
      for (const t of targets) {
        expect(moveKind(p, t)).not.toBe("illegal");
      }
    }
  });
});

describe("isTerminal", () => {
  it("uses the coordinate sum against k", () => {
    expect(isTerminal({ x: 2, y: 3 }, 5)).toBe(true);
    expect(isTerminal({ x: 5, y: 0 }, 5)).toBe(true);
    expect(isTerminal({ x: 3, y: 3 }, 5)).toBe(false);
    expect(isTerminal({ x: 0, y: 0 }, 0)).toBe(true);
    expect(isTerminal({ x: 1, y: 0 }, 0)).toBe(false);
  });
});

describe("samePosition", () => {
  it("compares coordinates", () => {
    expect(samePosition({ x: 1, y: 2 }, { x: 1, y: 2 })).toBe(true);
    expect(samePosition({ x: 1, y: 2 }, { x: 2, y: 1 })).toBe(false);
  });
});
