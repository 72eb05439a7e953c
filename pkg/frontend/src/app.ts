// DOM wiring for the workbench.  All state lives in WorkbenchStore;
// this file only translates events to store calls and store state to
// markup.

import { createClient } from "./client";
import { PRESETS, QuiverEditor } from "./editor";
import { quiverDot, quiverJson } from "./export";
import {
  renderHistory,
  renderMatrix,
  renderMinimap,
  renderQuiverSvg,
  renderVariables,
} from "./render";
import { WorkbenchStore } from "./store";

function el<T extends HTMLElement>(id: string): T {
  const found = document.getElementById(id);
  if (!found) throw new Error(`missing element #${id}`);
  return found as T;
}

function download(filename: string, text: string, mime: string): void {
  const blob = new Blob([text], { type: mime });
  const a = document.createElement("a");
  a.href = URL.createObjectURL(blob);
  a.download = filename;
  a.click();
  URL.revokeObjectURL(a.href);
}

export function boot(): void {
  const base = window.location.origin;
  const store = new WorkbenchStore(createClient(base));
  const editor = new QuiverEditor();
  editor.loadPreset(PRESETS.A2);

  const editorState = el<HTMLElement>("editor-state");
  const quiverPane = el<HTMLElement>("quiver");
  const panels = el<HTMLElement>("panels");
  const historyPane = el<HTMLElement>("history");
  const bannerPane = el<HTMLElement>("banner");
  const toastPane = el<HTMLElement>("toasts");
  const greenPane = el<HTMLElement>("green-seqs");
  const minimapPane = el<HTMLElement>("minimap");

  function renderEditor(): void {
    const q = editor.toQuiver();
    editorState.textContent = `vertices: ${q.n}   matrix: ${JSON.stringify(q.b)}`;
  }

  function render(): void {
    const state = store.state;
    bannerPane.textContent = store.banner ?? "";
    bannerPane.className = store.banner ? "banner on" : "banner";
    toastPane.innerHTML = store.toasts
      .map((t, i) => `<div class="toast" data-toast="${i}">${t}</div>`)
      .join("");
    if (!state) {
      quiverPane.innerHTML = "<p class='muted'>no session — build a quiver and press start</p>";
      panels.innerHTML = "";
      historyPane.innerHTML = "";
      greenPane.innerHTML = "";
      return;
    }
    quiverPane.innerHTML = renderQuiverSvg(state);
    panels.innerHTML =
      renderMatrix(state.c_matrix, "c-matrix") +
      renderMatrix(state.g_matrix, "g-matrix") +
      renderVariables(state);
    historyPane.innerHTML =
      renderHistory(state.history) +
      `<button id="undo" ${state.history.length ? "" : "disabled"}>undo</button>`;
    el<HTMLButtonElement>("undo").onclick = () => store.undo();

    if (store.greenReport) {
      const report = store.greenReport;
      const rows = report.sequences
        .map(
          (s, i) =>
            `<li>${s.join(" ")} <button data-replay="${i}">replay</button></li>`,
        )
        .join("");
      greenPane.innerHTML =
        `<h3>maximal green sequences</h3><ul>${rows}</ul>` +
        `<p class="muted">exhausted: ${report.exhausted}</p>` +
        (store.replaySequence && !store.replayDone
          ? `<button id="replay-step">next step (${store.replayPos + 1}/${store.replaySequence.length})</button>`
          : "");
      greenPane.querySelectorAll("button[data-replay]").forEach((btn) => {
        (btn as HTMLButtonElement).onclick = () => {
          const i = Number(btn.getAttribute("data-replay"));
          store.startReplay(report.sequences[i]);
        };
      });
      const step = document.getElementById("replay-step");
      if (step) (step as HTMLButtonElement).onclick = () => store.replayStep();
    } else {
      greenPane.innerHTML = "";
    }
    minimapPane.innerHTML = store.minimap ? renderMinimap(store.minimap) : "";
  }

  store.subscribe(render);

  quiverPane.addEventListener("click", (event) => {
    const target = event.target as HTMLElement;
    const vertex = target.getAttribute("data-vertex");
    if (vertex) store.clickVertex(Number(vertex));
  });
  toastPane.addEventListener("click", (event) => {
    const target = event.target as HTMLElement;
    const idx = target.getAttribute("data-toast");
    if (idx !== null) store.dismissToast(Number(idx));
  });

  el<HTMLSelectElement>("preset").onchange = (event) => {
    const name = (event.target as HTMLSelectElement).value;
    if (PRESETS[name]) {
      editor.loadPreset(PRESETS[name]);
      renderEditor();
    }
  };
  el<HTMLButtonElement>("add-vertex").onclick = () => {
    editor.addVertex();
    renderEditor();
  };
  el<HTMLButtonElement>("add-arrow").onclick = () => {
    try {
      const i = Number(el<HTMLInputElement>("arrow-from").value);
      const j = Number(el<HTMLInputElement>("arrow-to").value);
      editor.addArrow(i, j);
      renderEditor();
    } catch (err) {
      alert(String(err));
    }
  };
  el<HTMLButtonElement>("start").onclick = () => {
    void store.start(editor.toQuiver()).then(() => store.loadMinimap());
  };
  el<HTMLButtonElement>("find-green").onclick = () => void store.findGreenSequences();
  el<HTMLButtonElement>("export-json").onclick = () => {
    if (store.state) download("quiver.json", quiverJson(store.state), "application/json");
  };
  el<HTMLButtonElement>("export-dot").onclick = () => {
    if (store.state) download("quiver.dot", quiverDot(store.state), "text/vnd.graphviz");
  };

  renderEditor();
  render();
}

if (typeof document !== "undefined") {
  document.addEventListener("DOMContentLoaded", boot);
}
