// Wiring: DOM controls <-> session <-> engine client.

import { EngineClient, EngineError } from "./api.js";
import { renderQuiver } from "./render.js";
import { Session } from "./session.js";

function byId<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

const engineUrlInput = byId<HTMLInputElement>("engine-url");
const fixtureSelect = byId<HTMLSelectElement>("fixture-select");
const targetSelect = byId<HTMLSelectElement>("target-select");
const loadButton = byId<HTMLButtonElement>("load-button");
const undoButton = byId<HTMLButtonElement>("undo-button");
const redoButton = byId<HTMLButtonElement>("redo-button");
const searchButton = byId<HTMLButtonElement>("search-button");
const exportButton = byId<HTMLButtonElement>("export-button");
const sequenceOut = byId<HTMLElement>("sequence");
const matchBadge = byId<HTMLElement>("match-badge");
const banner = byId<HTMLElement>("banner");
const svg = byId<HTMLElement>("canvas") as unknown as SVGSVGElement;

let client = new EngineClient(engineUrlInput.value);
let session = new Session(client);

function showError(err: unknown): void {
  banner.textContent = err instanceof EngineError ? `engine ${err.status}: ${err.message}` : String(err);
  banner.style.display = "block";
}

function clearError(): void {
  banner.style.display = "none";
}

function redraw(): void {
  const snap = session.snapshot();
  if (snap.current) {
    renderQuiver(svg, snap.current, session.layout, (v) => {
      void onVertexClick(v);
    });
  }
  sequenceOut.textContent = snap.sequence.length ? snap.sequence.join(",") : "(empty)";
  undoButton.disabled = !snap.canUndo;
  redoButton.disabled = !snap.canRedo;
  matchBadge.textContent = snap.targetName
    ? snap.match
      ? `matches ${snap.targetName}`
      : `no match with ${snap.targetName}`
    : "no target";
  matchBadge.className = snap.match ? "badge on" : "badge";
}

async function onVertexClick(vertex: number): Promise<void> {
  try {
    clearError();
    await session.clickMutate(vertex);
  } catch (err) {
    showError(err);
  }
  redraw();
}

async function populate(): Promise<void> {
  try {
    clearError();
    const names = await client.fixtures();
    for (const select of [fixtureSelect, targetSelect]) {
      select.innerHTML = "";
      if (select === targetSelect) {
        const none = document.createElement("option");
        none.value = "";
        none.textContent = "(no target)";
        select.appendChild(none);
      }
      for (const name of names) {
        const opt = document.createElement("option");
        opt.value = name;
        opt.textContent = name;
        select.appendChild(opt);
      }
    }
  } catch (err) {
    showError(err);
  }
}

loadButton.addEventListener("click", () => {
  void (async () => {
    try {
      clearError();
      await session.load(fixtureSelect.value);
    } catch (err) {
      showError(err);
    }
    redraw();
  })();
});

targetSelect.addEventListener("change", () => {
  void (async () => {
    try {
      clearError();
      await session.setTarget(targetSelect.value || null);
    } catch (err) {
      showError(err);
    }
    redraw();
  })();
});

undoButton.addEventListener("click", () => {
  session.undo();
  redraw();
});

redoButton.addEventListener("click", () => {
  session.redo();
  redraw();
});

searchButton.addEventListener("click", () => {
  void (async () => {
    try {
      clearError();
      const seq = await session.autoSearch(7);
      banner.style.display = "block";
      banner.textContent = seq
        ? `search found: ${seq.join(",")} (apply it by clicking, or export)`
        : "search exhausted the depth bound without a match";
    } catch (err) {
      showError(err);
    }
    redraw();
  })();
});

exportButton.addEventListener("click", () => {
  const text = session.exportSequence();
  sequenceOut.textContent = text || "(empty)";
  void navigator.clipboard?.writeText(text).catch(() => undefined);
});

const jsonInput = byId<HTMLTextAreaElement>("json-input");
const jsonLoadButton = byId<HTMLButtonElement>("json-load-button");

jsonLoadButton.addEventListener("click", () => {
  // parse and shape-check before touching the session: malformed input
  // surfaces in the banner and leaves the state unchanged
  try {
    const data = JSON.parse(jsonInput.value);
    if (!Array.isArray(data?.vertices) || !Array.isArray(data?.arrows)) {
      throw new Error("quiver JSON needs 'vertices' and 'arrows' arrays");
    }
    clearError();
    session.loadJson({ vertices: data.vertices, arrows: data.arrows });
  } catch (err) {
    showError(err);
    return;
  }
  redraw();
});

engineUrlInput.addEventListener("change", () => {
  client = new EngineClient(engineUrlInput.value);
  session = new Session(client);
  void populate().then(redraw);
});

void populate().then(redraw);
