// Game controller: owns the latest SessionDescriptor and turns user intents
// into API calls. The view model below is a pure function of the snapshot,
// so a reload plus refetch reproduces the identical view.

import type { PlayApi } from "./api.js";
import type { BoardEdge, BoardModel } from "./board.js";
import type { SessionDescriptor } from "./types.js";

export interface ViewState {
  board: BoardModel;
  roundLabel: string; // e.g. "3 / 10"
  banner: string | null; // terminal message, null while ongoing
  askColor: boolean; // painter has a pending proposal to answer
  askEdge: boolean; // builder should pick an edge
}

export function viewStateOf(d: SessionDescriptor): ViewState {
  const ids = new Set<number>();
  for (const [u, v] of d.board.edges) {
    ids.add(u);
    ids.add(v);
  }
  if (d.pending) {
    ids.add(d.pending.u);
    ids.add(d.pending.v);
  }
  const witness = new Set((d.witness ?? []).map(([u, v]) => `${Math.min(u, v)}-${Math.max(u, v)}`));
  const edges: BoardEdge[] = d.board.edges.map(([u, v, c]) => ({
    u,
    v,
    color: c,
    highlight: witness.has(`${Math.min(u, v)}-${Math.max(u, v)}`),
  }));
  if (d.pending) {
    edges.push({ u: d.pending.u, v: d.pending.v, color: "pending" });
  }
  let banner: string | null = null;
  if (d.status === "blue_hit") {
    banner = `Blue path P${d.l} complete in ${d.rounds} rounds`;
  } else if (d.status === "red_hit") {
    banner = `Red K1,3 complete in ${d.rounds} rounds`;
  } else if (d.closed) {
    banner = `Painter survived the ${d.budget}-round budget`;
  }
  return {
    board: {
      vertexIds: [...ids].sort((a, b) => a - b),
      edges,
      selectable: d.role === "builder" && !d.closed,
    },
    roundLabel: `${d.rounds} / ${d.budget}`,
    banner,
    askColor: d.role === "painter" && !d.closed && d.pending !== null,
    askEdge: d.role === "builder" && !d.closed,
  };
}

export class GameController {
  session: SessionDescriptor | null = null;
  picked: number | "new" | null = null;
  lastError: string | null = null;
  private unsubscribe: (() => void) | null = null;

  constructor(
    private api: PlayApi,
    private onChange: (view: ViewState) => void,
  ) {}

  private push(d: SessionDescriptor): void {
    // Push events may race a POST response; never go backwards.
    if (this.session && this.session.id === d.id && d.revision < this.session.revision) {
      return;
    }
    this.session = d;
    this.onChange(viewStateOf(d));
  }

  async start(l: number, role: "painter" | "builder", opponent?: string, seed = 0): Promise<void> {
    this.stop();
    const d = await this.api.createSession(l, role, opponent, seed);
    this.push(d);
    this.unsubscribe = this.api.subscribe(d.id, (snap) => this.push(snap));
  }

  stop(): void {
    if (this.unsubscribe) {
      this.unsubscribe();
      this.unsubscribe = null;
    }
  }

  async answer(color: "R" | "B"): Promise<void> {
    if (!this.session) return;
    try {
      this.push(await this.api.submitColor(this.session.id, color));
      this.lastError = null;
    } catch (e) {
      this.lastError = String(e);
    }
  }

  /** Builder vertex taps: two picks submit an edge; "new" is a fresh vertex. */
  async pick(id: number | "new"): Promise<void> {
    if (!this.session) return;
    if (this.picked === null) {
      this.picked = id;
      return;
    }
    const first = this.picked;
    this.picked = null;
    const enc = (x: number | "new") => (x === "new" ? -1 : x);
    try {
      this.push(await this.api.submitEdge(this.session.id, enc(first), enc(id)));
      this.lastError = null;
    } catch (e) {
      this.lastError = String(e); // surfaced inline; state stays server-truth
    }
  }
}
