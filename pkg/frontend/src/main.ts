/**
 * Controller: owns one BoardView, talks to the service, and re-renders after
 * every confirmed change.  At most one move request is in flight at a time,
 * and responses that are not strictly newer than the known session version
 * are discarded.
 */

import { ApiClient, ApiError } from "./api.js";
import { isLegalMove, moveKind, samePosition } from "./geometry.js";
import { renderBoard } from "./board.js";
import type { Overlay, Position, Session } from "./types.js";
import {
  adoptSession,
  hintCaption,
  initialView,
  shouldAdopt,
  victoryBanner,
  type BoardView,
} from "./view.js";

const DEFAULT_SIZE = 32;

function localRejection(from: Position, to: Position, bound: number): string {
  if (to.x > bound || to.y > bound) return "off-board";
  if (to.x > from.x || to.y > from.y) return "coordinate increased";
  return "not a queen move";
}

class App {
  private view: BoardView;
  private moveInFlight = false;
  private lastEngineMove: Position | null = null;

  constructor(
    private readonly client: ApiClient,
    private readonly els: {
      board: HTMLElement;
      banner: HTMLElement;
      caption: HTMLElement;
      message: HTMLElement;
      kSelect: HTMLSelectElement;
      sizeSelect: HTMLSelectElement;
      engineFirst: HTMLInputElement;
      newGame: HTMLButtonElement;
      overlayInputs: HTMLInputElement[];
    },
  ) {
    this.view = initialView(Number(els.kSelect.value), DEFAULT_SIZE - 1);
    els.newGame.addEventListener("click", () => void this.newGame());
    for (const input of els.overlayInputs) {
      input.addEventListener("change", () => {
        if (input.checked) void this.setOverlay(input.value as Overlay);
      });
    }
    this.render();
  }

  private render(): void {
    renderBoard(
      this.els.board,
      this.view,
      (p) => void this.onCellClick(p),
      this.lastEngineMove,
    );
    const banner = victoryBanner(this.view.session);
    this.els.banner.textContent = banner ?? "";
    this.els.banner.hidden = banner === null;
    this.els.caption.textContent = hintCaption(this.view) ?? "";
  }

  private say(text: string): void {
    this.els.message.textContent = text;
  }

  async newGame(): Promise<void> {
    const k = Number(this.els.kSelect.value);
    const bound = Number(this.els.sizeSelect.value) - 1;
    const start = { x: bound, y: bound - 1 };
    this.say("");
    try {
      const session = await this.client.createSession({
        k,
        bound,
        start,
        engine_first: this.els.engineFirst.checked,
      });
      this.lastEngineMove = this.engineTarget(session);
      this.view = adoptSession({ ...this.view, pPositions: null }, session);
      await this.refreshOverlay();
      this.render();
    } catch (err) {
      this.say(this.describe(err));
    }
  }

  private engineTarget(session: Session): Position | null {
    const last = session.history[session.history.length - 1];
    return last !== undefined && last.mover === "engine" ? last.to : null;
  }

  private async onCellClick(to: Position): Promise<void> {
    const session = this.view.session;
    if (session === null || session.status !== "in-progress" || this.moveInFlight) {
      return;
    }
    const from = this.view.queen;
    if (samePosition(from, to) || !isLegalMove(from, to, this.view.bound)) {
      this.say(`rejected: ${localRejection(from, to, this.view.bound)}`);
      return;
    }
    this.say(`${moveKind(from, to)} move to (${to.x}, ${to.y})`);
    this.moveInFlight = true;
    try {
      const updated = await this.client.move(session.id, to, session.version);
      if (shouldAdopt(this.view.session, updated)) {
        this.lastEngineMove = this.engineTarget(updated);
        this.view = adoptSession(this.view, updated);
        await this.refreshOverlay();
      }
    } catch (err) {
      this.say(this.describe(err));
    } finally {
      this.moveInFlight = false;
      this.render();
    }
  }

  private async setOverlay(overlay: Overlay): Promise<void> {
    this.view = { ...this.view, overlay };
    await this.refreshOverlay();
    this.render();
  }

  private async refreshOverlay(): Promise<void> {
    const view = this.view;
    try {
      if (view.overlay === "hints" && view.hints === null && view.session !== null) {
        const hints = await this.client.hints(view.session.id);
        this.view = { ...this.view, hints };
      } else if (view.overlay === "p-positions" && view.pPositions === null) {
        const pPositions = await this.client.pPositions(view.k, view.bound);
        this.view = { ...this.view, pPositions };
      }
    } catch (err) {
      this.say(this.describe(err));
    }
  }

  private describe(err: unknown): string {
    if (err instanceof ApiError) return `rejected: ${err.detail}`;
    return err instanceof Error ? err.message : String(err);
  }
}

function overlayInputs(): HTMLInputElement[] {
  return Array.from(
    document.querySelectorAll<HTMLInputElement>('input[name="overlay"]'),
  );
}

function byId<T extends HTMLElement>(id: string): T {
  const el = document.getElementById(id);
  if (el === null) throw new Error(`missing element #${id}`);
  return el as T;
}

export function start(): void {
  const client = new ApiClient(
    new URLSearchParams(window.location.search).get("api") ?? "http://127.0.0.1:8000",
  );
  new App(client, {
    board: byId("board"),
    banner: byId("banner"),
    caption: byId("caption"),
    message: byId("message"),
    kSelect: byId<HTMLSelectElement>("k-select"),
    sizeSelect: byId<HTMLSelectElement>("size-select"),
    engineFirst: byId<HTMLInputElement>("engine-first"),
    newGame: byId<HTMLButtonElement>("new-game"),
    overlayInputs: overlayInputs(),
  });
}

start();
