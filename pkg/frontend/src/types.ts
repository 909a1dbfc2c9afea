// Wire types, verbatim from the play service schemas.

export type ColorLetter = "R" | "B";
export type Status = "ongoing" | "red_hit" | "blue_hit";

export interface MoveEntry {
  r: number;
  u: number;
  v: number;
  c: ColorLetter;
}

export interface BoardDoc {
  vertices: number;
  edges: [number, number, ColorLetter][];
}

export interface SessionDescriptor {
  id: string;
  l: number;
  role: "painter" | "builder";
  opponent: string;
  budget: number;
  status: Status;
  rounds: number;
  closed: boolean;
  board: BoardDoc;
  moves: MoveEntry[];
  pending: { u: number; v: number } | null;
  witness: [number, number][] | null;
  revision: number;
}

export interface TranscriptDoc {
  targets: { red: string; blue: string };
  cap: number;
  moves: MoveEntry[];
  status: Status;
  rounds: number;
}
