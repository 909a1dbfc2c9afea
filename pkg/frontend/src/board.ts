// SVG board: vertices on a circle, edges straight, colors by CSS class.
// Everything drawn comes from the latest snapshot; the renderer holds no
// game state of its own.

import type { ColorLetter } from "./types.js";

export interface BoardEdge {
  u: number;
  v: number;
  color: ColorLetter | "pending";
  highlight?: boolean;
}

export interface BoardModel {
  vertexIds: number[];
  edges: BoardEdge[];
  selectable: boolean; // builder mode: vertices are click targets
}

const SVG_NS = "http://www.w3.org/2000/svg";
const SIZE = 420;
const R = 170;

export type VertexHandler = (id: number | "new") => void;

export class BoardRenderer {
  private svg: SVGSVGElement;

  constructor(host: HTMLElement, private onVertex?: VertexHandler) {
    this.svg = document.createElementNS(SVG_NS, "svg");
    this.svg.setAttribute("viewBox", `0 0 ${SIZE} ${SIZE}`);
    this.svg.classList.add("board");
    host.appendChild(this.svg);
  }

  private positions(ids: number[]): Map<number, [number, number]> {
    const pos = new Map<number, [number, number]>();
    const n = Math.max(ids.length, 1);
    ids.forEach((id, i) => {
      const angle = (2 * Math.PI * i) / n - Math.PI / 2;
      pos.set(id, [SIZE / 2 + R * Math.cos(angle), SIZE / 2 + R * Math.sin(angle)]);
    });
    return pos;
  }

  render(model: BoardModel, selected: Set<number> = new Set()): void {
    this.svg.textContent = "";
    const pos = this.positions(model.vertexIds);
    for (const e of model.edges) {
      const a = pos.get(e.u);
      const b = pos.get(e.v);
      if (!a || !b) continue;
      const line = document.createElementNS(SVG_NS, "line");
      line.setAttribute("x1", String(a[0]));
      line.setAttribute("y1", String(a[1]));
      line.setAttribute("x2", String(b[0]));
      line.setAttribute("y2", String(b[1]));
      line.classList.add("edge", e.color === "R" ? "red" : e.color === "B" ? "blue" : "pending");
      if (e.highlight) line.classList.add("witness");
      line.dataset.edge = `${Math.min(e.u, e.v)}-${Math.max(e.u, e.v)}`;
      this.svg.appendChild(line);
    }
    for (const id of model.vertexIds) {
      const [x, y] = pos.get(id)!;
      const circle = document.createElementNS(SVG_NS, "circle");
      circle.setAttribute("cx", String(x));
      circle.setAttribute("cy", String(y));
      circle.setAttribute("r", "14");
      circle.classList.add("vertex");
      if (selected.has(id)) circle.classList.add("selected");
      circle.dataset.vertex = String(id);
      if (model.selectable && this.onVertex) {
        circle.addEventListener("click", () => this.onVertex!(id));
      }
      this.svg.appendChild(circle);
      const label = document.createElementNS(SVG_NS, "text");
      label.setAttribute("x", String(x));
      label.setAttribute("y", String(y + 4));
      label.setAttribute("text-anchor", "middle");
      label.classList.add("vertex-label");
      label.textContent = String(id);
      this.svg.appendChild(label);
    }
  }
}
