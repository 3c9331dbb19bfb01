// SVG rendering of a quiver: grid layout from fixture hints when present,
// circle layout otherwise; parallel arrows get a multiplicity badge.

import { Layout, QuiverJson } from "./api.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const CELL = 110;
const PAD = 60;
const RADIUS = 22;

interface Point {
  x: number;
  y: number;
}

function positions(quiver: QuiverJson, layout: Layout): Map<number, Point> {
  const out = new Map<number, Point>();
  const hinted = quiver.vertices.filter((v) => layout[String(v.id)]);
  if (hinted.length === quiver.vertices.length && quiver.vertices.length > 0) {
    for (const v of quiver.vertices) {
      const [row, col] = layout[String(v.id)];
      out.set(v.id, { x: PAD + col * CELL, y: PAD + row * CELL });
    }
    return out;
  }
  const n = quiver.vertices.length;
  const r = Math.max(2, n) * 26;
  quiver.vertices.forEach((v, i) => {
    const angle = (2 * Math.PI * i) / n - Math.PI / 2;
    out.set(v.id, { x: r + PAD + r * Math.cos(angle), y: r + PAD + r * Math.sin(angle) });
  });
  return out;
}

function el<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string>,
): SVGElementTagNameMap[K] {
  const node = document.createElementNS(SVG_NS, tag);
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, v);
  return node;
}

export function renderQuiver(
  svg: SVGSVGElement,
  quiver: QuiverJson,
  layout: Layout,
  onVertexClick: (id: number) => void,
): void {
  svg.innerHTML = "";
  const pos = positions(quiver, layout);
  let maxX = 0;
  let maxY = 0;
  for (const p of pos.values()) {
    maxX = Math.max(maxX, p.x);
    maxY = Math.max(maxY, p.y);
  }
  svg.setAttribute("viewBox", `0 0 ${maxX + PAD} ${maxY + PAD}`);

  const defs = el("defs", {});
  const marker = el("marker", {
    id: "arrowhead",
    markerWidth: "8",
    markerHeight: "8",
    refX: "7",
    refY: "3",
    orient: "auto",
  });
  marker.appendChild(el("path", { d: "M0,0 L8,3 L0,6 Z", fill: "#445" }));
  defs.appendChild(marker);
  svg.appendChild(defs);

  for (const arrow of quiver.arrows) {
    const a = pos.get(arrow.from)!;
    const b = pos.get(arrow.to)!;
    const dx = b.x - a.x;
    const dy = b.y - a.y;
    const len = Math.hypot(dx, dy) || 1;
    const ux = dx / len;
    const uy = dy / len;
    const start = { x: a.x + ux * RADIUS, y: a.y + uy * RADIUS };
    const end = { x: b.x - ux * (RADIUS + 4), y: b.y - uy * (RADIUS + 4) };
    // bow long arrows slightly so grid diagonals and returns stay readable
    const bend = len > CELL * 1.6 ? 0.18 : 0.0;
    const mx = (start.x + end.x) / 2 - uy * len * bend;
    const my = (start.y + end.y) / 2 + ux * len * bend;
    const path = el("path", {
      d: `M${start.x},${start.y} Q${mx},${my} ${end.x},${end.y}`,
      fill: "none",
      stroke: "#445",
      "stroke-width": "1.6",
      "marker-end": "url(#arrowhead)",
    });
    svg.appendChild(path);
    if (arrow.mult > 1) {
      const badge = el("text", {
        x: String(mx),
        y: String(my - 4),
        "font-size": "12",
        fill: "#a33",
        "text-anchor": "middle",
      });
      badge.textContent = `×${arrow.mult}`;
      svg.appendChild(badge);
    }
  }

  for (const v of quiver.vertices) {
    const p = pos.get(v.id)!;
    const g = el("g", { cursor: "pointer" });
    const circle = el("circle", {
      cx: String(p.x),
      cy: String(p.y),
      r: String(RADIUS),
      fill: "#eef2ff",
      stroke: "#445",
      "stroke-width": "1.5",
    });
    const idText = el("text", {
      x: String(p.x),
      y: String(p.y + 4),
      "text-anchor": "middle",
      "font-size": "14",
      "font-weight": "600",
      fill: "#223",
    });
    idText.textContent = String(v.id);
    const labelText = el("text", {
      x: String(p.x),
      y: String(p.y + RADIUS + 14),
      "text-anchor": "middle",
      "font-size": "10",
      fill: "#667",
    });
    labelText.textContent = v.label;
    g.appendChild(circle);
    g.appendChild(idText);
    g.appendChild(labelText);
    g.addEventListener("click", () => onVertexClick(v.id));
    svg.appendChild(g);
  }
}
