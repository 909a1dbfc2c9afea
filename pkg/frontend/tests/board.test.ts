// DOM-level check of the SVG renderer under jsdom.

import { beforeEach, describe, expect, it } from "vitest";

import { BoardRenderer } from "../src/board.js";

describe("board renderer", () => {
  let host: HTMLDivElement;

  beforeEach(() => {
    document.body.innerHTML = "";
    host = document.createElement("div");
    document.body.appendChild(host);
  });

  it("draws one line per edge with color classes", () => {
    const renderer = new BoardRenderer(host);
    renderer.render({
      vertexIds: [0, 1, 2],
      edges: [
        { u: 0, v: 1, color: "R" },
        { u: 1, v: 2, color: "B" },
        { u: 0, v: 2, color: "pending" },
      ],
      selectable: false,
    });
    const lines = host.querySelectorAll("line.edge");
    expect(lines.length).toBe(3);
    expect(host.querySelectorAll("line.red").length).toBe(1);
    expect(host.querySelectorAll("line.blue").length).toBe(1);
    expect(host.querySelectorAll("line.pending").length).toBe(1);
    expect(host.querySelectorAll("circle.vertex").length).toBe(3);
  });

  it("re-rendering replaces the scene instead of stacking it", () => {
    const renderer = new BoardRenderer(host);
    const model = {
      vertexIds: [0, 1],
      edges: [{ u: 0, v: 1, color: "R" as const }],
      selectable: false,
    };
    renderer.render(model);
    renderer.render(model);
    expect(host.querySelectorAll("line.edge").length).toBe(1);
  });

  it("marks witness edges and selected vertices", () => {
    const renderer = new BoardRenderer(host);
    renderer.render(
      {
        vertexIds: [0, 1],
        edges: [{ u: 0, v: 1, color: "B", highlight: true }],
        selectable: true,
      },
      new Set([1]),
    );
    expect(host.querySelectorAll("line.witness").length).toBe(1);
    expect(host.querySelectorAll("circle.selected").length).toBe(1);
  });

  it("forwards vertex clicks in selectable mode", () => {
    const clicks: (number | "new")[] = [];
    const renderer = new BoardRenderer(host, (id) => clicks.push(id));
    renderer.render({
      vertexIds: [0, 1],
      edges: [],
      selectable: true,
    });
    (host.querySelector('circle[data-vertex="1"]') as SVGCircleElement).dispatchEvent(
      new MouseEvent("click", { bubbles: true }),
    );
    expect(clicks).toEqual([1]);
  });
});
