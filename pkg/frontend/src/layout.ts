// Deterministic layouts: same vertices and edges always land on the same
// coordinates (no randomness), which keeps board renders snapshot-stable.

import type { BoardEdge } from './protocol.js';

export interface Point {
  x: number;
  y: number;
}

export function circularLayout(vertices: number[], width: number,
                               height: number): Map<number, Point> {
  const sorted = [...vertices].sort((a, b) => a - b);
  const cx = width / 2;
  const cy = height / 2;
  const r = Math.min(width, height) / 2 - 40;
  const out = new Map<number, Point>();
  sorted.forEach((v, i) => {
    const angle = (2 * Math.PI * i) / sorted.length - Math.PI / 2;
    out.set(v, { x: cx + r * Math.cos(angle), y: cy + r * Math.sin(angle) });
  });
  return out;
}

const GOLDEN_ANGLE = Math.PI * (3 - Math.sqrt(5));

export function springLayout(vertices: number[], edges: BoardEdge[],
                             width: number, height: number): Map<number, Point> {
  const sorted = [...vertices].sort((a, b) => a - b);
  const cx = width / 2;
  const cy = height / 2;
  const pos = new Map<number, Point>();
  // sunflower seeding: stable initial spread as vertices appear
  sorted.forEach((v, i) => {
    const r = 18 * Math.sqrt(i + 1);
    const angle = i * GOLDEN_ANGLE;
    pos.set(v, { x: cx + r * Math.cos(angle), y: cy + r * Math.sin(angle) });
  });
  const ideal = 90;
  for (let iter = 0; iter < 60; iter++) {
    const force = new Map<number, Point>();
    for (const v of sorted) force.set(v, { x: 0, y: 0 });
    for (let i = 0; i < sorted.length; i++) {
      for (let j = i + 1; j < sorted.length; j++) {
        const a = pos.get(sorted[i])!;
        const b = pos.get(sorted[j])!;
        const dx = a.x - b.x;
        const dy = a.y - b.y;
        const d2 = Math.max(dx * dx + dy * dy, 1);
        const push = (ideal * ideal) / d2 / Math.sqrt(d2);
        const fa = force.get(sorted[i])!;
        const fb = force.get(sorted[j])!;
        fa.x += dx * push;
        fa.y += dy * push;
        fb.x -= dx * push;
        fb.y -= dy * push;
      }
    }
    for (const [u, v] of edges) {
      const a = pos.get(u);
      const b = pos.get(v);
      if (!a || !b) continue;
      const dx = b.x - a.x;
      const dy = b.y - a.y;
      const d = Math.max(Math.sqrt(dx * dx + dy * dy), 1);
      const pull = (d - ideal) / d / 8;
      const fu = force.get(u)!;
      const fv = force.get(v)!;
      fu.x += dx * pull;
      fu.y += dy * pull;
      fv.x -= dx * pull;
      fv.y -= dy * pull;
    }
    for (const v of sorted) {
      const p = pos.get(v)!;
      const f = force.get(v)!;
      p.x = Math.min(width - 24, Math.max(24, p.x + f.x * 4));
      p.y = Math.min(height - 24, Math.max(24, p.y + f.y * 4));
    }
  }
  return pos;
}
