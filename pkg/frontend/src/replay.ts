// Transcript stepping for replay mode: purely presentational folding of the
// recorded moves (rules and statuses stay the server's business; the
// recorded status is displayed, never recomputed).

import type { ColorLetter, MoveEntry, TranscriptDoc } from "./types.js";

export type EdgeTriple = [number, number, ColorLetter];

export function edgesAfter(moves: MoveEntry[], step: number): EdgeTriple[] {
  const out: EdgeTriple[] = [];
  for (const m of moves.slice(0, step)) {
    const [u, v] = m.u < m.v ? [m.u, m.v] : [m.v, m.u];
    out.push([u, v, m.c]);
  }
  out.sort((a, b) => a[0] - b[0] || a[1] - b[1]);
  return out;
}

export class ReplayCursor {
  step = 0;

  constructor(public doc: TranscriptDoc) {}

  get length(): number {
    return this.doc.moves.length;
  }

  edges(): EdgeTriple[] {
    return edgesAfter(this.doc.moves, this.step);
  }

  forward(): void {
    if (this.step < this.length) this.step += 1;
  }

  back(): void {
    if (this.step > 0) this.step -= 1;
  }

  atEnd(): boolean {
    return this.step === this.length;
  }

  statusLabel(): string {
    return this.atEnd() ? this.doc.status : "ongoing";
  }
}
