// Target progress read-outs derived from the rendered edge list. Pure display
// math over small boards; the server alone decides wins.

import type { BoardEdge, ColorName } from './protocol.js';

export interface Progress {
  longestRedPath: number;
  maxRedDegree: number;
  longestBluePath: number;
  blueCycleLengths: number[];
}

function adjacency(edges: BoardEdge[], color: ColorName): Map<number, number[]> {
  const adj = new Map<number, number[]>();
  for (const [u, v, c] of edges) {
    if (c !== color) continue;
    if (!adj.has(u)) adj.set(u, []);
    if (!adj.has(v)) adj.set(v, []);
    adj.get(u)!.push(v);
    adj.get(v)!.push(u);
  }
  for (const nbrs of adj.values()) nbrs.sort((a, b) => a - b);
  return adj;
}

export function longestPath(edges: BoardEdge[], color: ColorName): number {
  const adj = adjacency(edges, color);
  // a single vertex is always a path on 1 vertex, matching the engine
  if (adj.size === 0) return 1;
  let best = 1;
  const extend = (v: number, seen: Set<number>, len: number) => {
    if (len > best) best = len;
    for (const w of adj.get(v) ?? []) {
      if (!seen.has(w)) {
        seen.add(w);
        extend(w, seen, len + 1);
        seen.delete(w);
      }
    }
  };
  for (const s of adj.keys()) extend(s, new Set([s]), 1);
  return best;
}

export function maxDegree(edges: BoardEdge[], color: ColorName): number {
  const deg = new Map<number, number>();
  for (const [u, v, c] of edges) {
    if (c !== color) continue;
    deg.set(u, (deg.get(u) ?? 0) + 1);
    deg.set(v, (deg.get(v) ?? 0) + 1);
  }
  return Math.max(0, ...deg.values());
}

export function cycleLengths(edges: BoardEdge[], color: ColorName): number[] {
  const adj = adjacency(edges, color);
  const lengths = new Set<number>();
  const walk = (start: number, v: number, seen: Set<number>, len: number) => {
    for (const w of adj.get(v) ?? []) {
      if (w === start && len >= 3) lengths.add(len);
      if (w > start && !seen.has(w)) {
        seen.add(w);
        walk(start, w, seen, len + 1);
        seen.delete(w);
      }
    }
  };
  for (const s of adj.keys()) walk(s, s, new Set([s]), 1);
  return [...lengths].sort((a, b) => a - b);
}

export function computeProgress(edges: BoardEdge[]): Progress {
  return {
    longestRedPath: longestPath(edges, 'red'),
    maxRedDegree: maxDegree(edges, 'red'),
    longestBluePath: longestPath(edges, 'blue'),
    blueCycleLengths: cycleLengths(edges, 'blue'),
  };
}
