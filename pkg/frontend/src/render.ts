// Board renderer: GameView in, SVG string out. Pure and deterministic, so a
// replayed message log reproduces the final picture byte for byte.

import { circularLayout, springLayout, Point } from './layout.js';
import { computeProgress } from './progress.js';
import type { GameView } from './view.js';

const W = 640;
const H = 480;

function fmt(x: number): string {
  return x.toFixed(1);
}

function escapeText(s: string): string {
  return s.replace(/&/g, '&amp;').replace(/</g, '&lt;').replace(/>/g, '&gt;');
}

function boardVertices(view: GameView): number[] {
  const seen = new Set<number>();
  for (const [u, v] of view.edges) {
    seen.add(u);
    seen.add(v);
  }
  if (view.pending) {
    seen.add(view.pending[0]);
    seen.add(view.pending[1]);
  }
  if (view.terminal?.witness) {
    for (const v of view.terminal.witness.vertices) seen.add(v);
  }
  // builders need clickable fresh vertices: show two spares
  if (view.role === 'builder' && view.terminal === null) {
    const top = seen.size ? Math.max(...seen) + 1 : 0;
    seen.add(top);
    seen.add(top + 1);
  }
  return [...seen].sort((a, b) => a - b);
}

export function renderBoardSVG(view: GameView): string {
  const vertices = boardVertices(view);
  const progress = computeProgress(view.edges);
  const cyclePhase =
    view.target?.blue.kind === 'cycle' && progress.blueCycleLengths.length > 0;
  const pos: Map<number, Point> = cyclePhase
    ? circularLayout(vertices, W, H)
    : springLayout(vertices, view.edges, W, H);

  const witnessEdges = new Set<string>();
  if (view.terminal?.witness) {
    for (const [u, v] of view.terminal.witness.edges) {
      witnessEdges.add(`${Math.min(u, v)}-${Math.max(u, v)}`);
    }
  }

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${W}" height="${H}" viewBox="0 0 ${W} ${H}">`,
    `<rect width="${W}" height="${H}" fill="#fdfdf8"/>`,
  );

  for (const [u, v, color] of view.edges) {
    const a = pos.get(u)!;
    const b = pos.get(v)!;
    const key = `${Math.min(u, v)}-${Math.max(u, v)}`;
    const inWitness = witnessEdges.has(key);
    const stroke = color === 'red' ? '#c0392b' : '#2c60c0';
    parts.push(
      `<line class="edge${inWitness ? ' witness' : ''}" x1="${fmt(a.x)}" y1="${fmt(a.y)}"` +
      ` x2="${fmt(b.x)}" y2="${fmt(b.y)}" stroke="${stroke}"` +
      ` stroke-width="${inWitness ? 6 : 3}"${inWitness ? ' opacity="0.95"' : ''}/>`,
    );
  }

  if (view.pending && view.terminal === null) {
    const a = pos.get(view.pending[0])!;
    const b = pos.get(view.pending[1])!;
    parts.push(
      `<line class="pending" x1="${fmt(a.x)}" y1="${fmt(a.y)}" x2="${fmt(b.x)}" y2="${fmt(b.y)}"` +
      ` stroke="#888" stroke-width="3" stroke-dasharray="7 5"/>`,
    );
  }

  for (const v of vertices) {
    const p = pos.get(v)!;
    const inWitness = view.terminal?.witness?.vertices.includes(v) ?? false;
    parts.push(
      `<circle class="vertex" data-vertex="${v}" cx="${fmt(p.x)}" cy="${fmt(p.y)}" r="12"` +
      ` fill="${inWitness ? '#f5d76e' : '#ffffff'}" stroke="#333" stroke-width="1.5"/>`,
      `<text x="${fmt(p.x)}" y="${fmt(p.y + 4)}" font-size="11" text-anchor="middle"` +
      ` font-family="monospace">${v}</text>`,
    );
  }

  // round counter and budget bar
  const budget = view.budget ?? 0;
  const frac = budget > 0 ? Math.min(view.round / budget, 1) : 0;
  parts.push(
    `<text x="12" y="20" font-size="13" font-family="monospace">round ${view.round}` +
    `${budget ? ` / budget ${budget}` : ''}</text>`,
    `<rect x="12" y="28" width="180" height="8" fill="#eee" stroke="#999"/>`,
    `<rect x="12" y="28" width="${fmt(180 * frac)}" height="8" fill="#666"/>`,
  );

  const lines = [
    `longest red path: ${progress.longestRedPath}`,
    `max red degree: ${progress.maxRedDegree}`,
    `longest blue path: ${progress.longestBluePath}`,
    `blue cycles: ${progress.blueCycleLengths.join(',') || 'none'}`,
  ];
  lines.forEach((line, i) => {
    parts.push(
      `<text x="12" y="${58 + 16 * i}" font-size="12" font-family="monospace"` +
      ` fill="#444">${escapeText(line)}</text>`,
    );
  });

  if (view.terminal) {
    const label = view.terminal.result.replace('_', ' ');
    const detail = view.terminal.witness
      ? `${view.terminal.witness.kind} on ${view.terminal.witness.vertices.length} vertices`
      : 'no witness';
    parts.push(
      `<rect class="overlay" x="${W / 2 - 170}" y="${H / 2 - 44}" width="340" height="88"` +
      ` rx="10" fill="#222" opacity="0.85"/>`,
      `<text x="${W / 2}" y="${H / 2 - 10}" font-size="22" text-anchor="middle"` +
      ` fill="#fff" font-family="monospace">${escapeText(label)}</text>`,
      `<text x="${W / 2}" y="${H / 2 + 18}" font-size="13" text-anchor="middle"` +
      ` fill="#ddd" font-family="monospace">${escapeText(detail)} in ${view.terminal.rounds} rounds</text>`,
    );
  }

  parts.push('</svg>');
  return parts.join('\n');
}
