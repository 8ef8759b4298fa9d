// Pure view model: folding the message log always reproduces the same view,
// so the board render is snapshot-testable. No game logic lives here; the
// edge list mirrors the latest state message verbatim.

import type {
  BoardEdge,
  ClientMessage,
  Role,
  Target,
  TerminalMsg,
} from './protocol.js';

export interface GameView {
  session: string | null;
  role: Role;
  target: Target | null;
  budget: number | null;
  round: number;
  edges: BoardEdge[];
  pending: [number, number] | null;
  terminal: TerminalMsg | null;
  lastError: string | null;
}

export function emptyView(): GameView {
  return {
    session: null,
    role: 'painter',
    target: null,
    budget: null,
    round: 0,
    edges: [],
    pending: null,
    terminal: null,
    lastError: null,
  };
}

export function canColor(view: GameView): boolean {
  return view.role === 'painter' && view.pending !== null && view.terminal === null;
}

export function applyClient(view: GameView, msg: ClientMessage): GameView {
  if (msg.type === 'create') {
    return {
      ...emptyView(),
      role: msg.role,
      target: msg.target ?? null,
      budget: msg.budget ?? null,
    };
  }
  return view;
}

export function applyServer(view: GameView, raw: unknown): GameView {
  if (typeof raw !== 'object' || raw === null || typeof (raw as { type?: unknown }).type !== 'string') {
    return { ...view, lastError: 'malformed server message' };
  }
  const msg = raw as { type: string } & Record<string, unknown>;
  switch (msg.type) {
    case 'created': {
      if (typeof msg.session !== 'string') {
        return { ...view, lastError: 'malformed created message' };
      }
      return { ...view, session: msg.session, lastError: null };
    }
    case 'state': {
      if (!Array.isArray(msg.edges) || typeof msg.round !== 'number') {
        return { ...view, lastError: 'malformed state message' };
      }
      return {
        ...view,
        round: msg.round,
        edges: (msg.edges as BoardEdge[]).map((e) => [e[0], e[1], e[2]]),
        pending: null,
        lastError: null,
      };
    }
    case 'propose': {
      if (!Array.isArray(msg.edge) || msg.edge.length !== 2) {
        return { ...view, lastError: 'malformed propose message' };
      }
      const [u, v] = msg.edge as [number, number];
      return { ...view, pending: [u, v], lastError: null };
    }
    case 'terminal': {
      return {
        ...view,
        terminal: msg as unknown as TerminalMsg,
        pending: null,
        lastError: null,
      };
    }
    case 'error': {
      const text = typeof msg.message === 'string' ? msg.message : 'unknown error';
      return { ...view, lastError: text };
    }
    default:
      return { ...view, lastError: `unknown message type ${msg.type}` };
  }
}

export interface LogEntry {
  dir: 'send' | 'recv';
  msg: unknown;
}

export function applyLog(entries: LogEntry[]): GameView {
  let view = emptyView();
  for (const entry of entries) {
    if (entry.dir === 'send') {
      view = applyClient(view, entry.msg as ClientMessage);
    } else {
      view = applyServer(view, entry.msg);
    }
  }
  return view;
}
