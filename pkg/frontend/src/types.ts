export interface Position {
  x: number;
  y: number;
}

export interface MoveRecord {
  mover: "human" | "engine";
  from: Position;
  to: Position;
}

export type SessionStatus = "in-progress" | "human-won" | "engine-won";

export interface Session {
  id: string;
  k: number;
  bound: number;
  current: Position;
  status: SessionStatus;
  version: number;
  history: MoveRecord[];
}

export interface ApiErrorBody {
  error: string;
  detail: string;
}

export type Overlay = "off" | "hints" | "p-positions";
