// Page wiring: play screen and replay screen share the board renderer.

import { HttpPlayApi } from "./api.js";
import { BoardRenderer } from "./board.js";
import { GameController, viewStateOf } from "./controller.js";
import { ReplayCursor } from "./replay.js";
import type { TranscriptDoc } from "./types.js";

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

export function setupPlay(): void {
  const api = new HttpPlayApi("");
  const boardHost = el<HTMLDivElement>("board");
  const banner = el<HTMLDivElement>("banner");
  const rounds = el<HTMLSpanElement>("rounds");
  const colorButtons = el<HTMLDivElement>("color-buttons");
  const errorBox = el<HTMLDivElement>("error");

  const controller = new GameController(api, (view) => {
    renderer.render(view.board, selection());
    rounds.textContent = view.roundLabel;
    banner.textContent = view.banner ?? "";
    banner.className = view.banner ? "banner shown" : "banner";
    colorButtons.style.display = view.askColor ? "block" : "none";
    errorBox.textContent = controller.lastError ?? "";
  });

  const selection = () =>
    new Set(typeof controller.picked === "number" ? [controller.picked] : []);

  const renderer = new BoardRenderer(boardHost, (id) => {
    void controller.pick(id).then(() => {
      if (controller.session) {
        renderer.render(viewStateOf(controller.session).board, selection());
      }
    });
  });

  el<HTMLButtonElement>("pick-red").addEventListener("click", () => void controller.answer("R"));
  el<HTMLButtonElement>("pick-blue").addEventListener("click", () => void controller.answer("B"));
  el<HTMLButtonElement>("pick-new").addEventListener("click", () => void controller.pick("new"));

  el<HTMLButtonElement>("start").addEventListener("click", () => {
    const l = Number(el<HTMLInputElement>("path-order").value);
    const role = el<HTMLSelectElement>("role").value as "painter" | "builder";
    void controller.start(l, role);
  });
}

export function setupReplay(): void {
  const host = el<HTMLDivElement>("replay-board");
  const renderer = new BoardRenderer(host);
  const status = el<HTMLSpanElement>("replay-status");
  let cursor: ReplayCursor | null = null;

  const draw = () => {
    if (!cursor) return;
    renderer.render({
      vertexIds: [...new Set(cursor.edges().flatMap(([u, v]) => [u, v]))].sort((a, b) => a - b),
      edges: cursor.edges().map(([u, v, c]) => ({ u, v, color: c })),
      selectable: false,
    });
    status.textContent = `step ${cursor.step}/${cursor.length} (${cursor.statusLabel()})`;
  };

  el<HTMLInputElement>("replay-file").addEventListener("change", (ev) => {
    const input = ev.target as HTMLInputElement;
    const file = input.files?.[0];
    if (!file) return;
    void file.text().then((text) => {
      cursor = new ReplayCursor(JSON.parse(text) as TranscriptDoc);
      draw();
    });
  });
  el<HTMLButtonElement>("replay-back").addEventListener("click", () => {
    cursor?.back();
    draw();
  });
  el<HTMLButtonElement>("replay-forward").addEventListener("click", () => {
    cursor?.forward();
    draw();
  });
}

if (typeof document !== "undefined" && document.getElementById("board")) {
  setupPlay();
  setupReplay();
}
