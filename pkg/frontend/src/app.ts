// Browser wiring: create form, websocket, board interaction. All game state
// lives in the pure view module; this file only shuttles messages and DOM.

import type { ClientMessage, ColorName, CreateMsg, Target } from './protocol.js';
import { renderBoardSVG } from './render.js';
import { GameView, applyClient, applyServer, canColor, emptyView } from './view.js';

const $ = <T extends HTMLElement>(id: string): T => {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el as T;
};

let view: GameView = emptyView();
let ws: WebSocket | null = null;
let lastCreate: CreateMsg | null = null;
let pickedVertex: number | null = null;

function wsUrl(): string {
  const scheme = location.protocol === 'https:' ? 'wss' : 'ws';
  return `${scheme}://${location.host}/ws`;
}

function toast(text: string): void {
  const el = $('toast');
  el.textContent = text;
  el.classList.add('show');
  window.setTimeout(() => el.classList.remove('show'), 4000);
}

function send(msg: ClientMessage): void {
  if (!ws || ws.readyState !== WebSocket.OPEN) {
    toast('not connected');
    return;
  }
  view = applyClient(view, msg);
  ws.send(JSON.stringify(msg));
  redraw();
}

function redraw(): void {
  $('board').innerHTML = renderBoardSVG(view);
  const colorable = canColor(view);
  ($('btn-red') as HTMLButtonElement).disabled = !colorable;
  ($('btn-blue') as HTMLButtonElement).disabled = !colorable;
  $('status').textContent = view.terminal
    ? `game over: ${view.terminal.result}`
    : view.pending
      ? `proposal: edge [${view.pending[0]}, ${view.pending[1]}]`
      : view.session
        ? (view.role === 'builder' ? 'your move: click two vertices' : 'waiting for the engine')
        : 'create a game to start';
  const dl = $('download') as HTMLAnchorElement;
  if (view.terminal && view.session) {
    dl.href = `/sessions/${view.session}/transcript`;
    dl.style.display = 'inline';
  } else {
    dl.style.display = 'none';
  }
  for (const circle of document.querySelectorAll<SVGCircleElement>('circle.vertex')) {
    circle.addEventListener('click', () => {
      onVertexClick(Number(circle.dataset.vertex));
    });
    if (Number(circle.dataset.vertex) === pickedVertex) {
      circle.setAttribute('stroke', '#e67e22');
      circle.setAttribute('stroke-width', '3');
    }
  }
}

function onVertexClick(v: number): void {
  if (view.role !== 'builder' || view.terminal || !view.session) return;
  if (pickedVertex === null) {
    pickedVertex = v;
  } else if (pickedVertex === v) {
    pickedVertex = null;
  } else {
    send({ type: 'edge', session: view.session, edge: [pickedVertex, v] });
    pickedVertex = null;
  }
  redraw();
}

function onServerMessage(raw: unknown): void {
  const before = view.lastError;
  view = applyServer(view, raw);
  if (view.lastError && view.lastError !== before) toast(view.lastError);
  redraw();
}

function connect(): void {
  ws = new WebSocket(wsUrl());
  ws.onopen = () => {
    $('banner').style.display = 'none';
    if (lastCreate && view.session) {
      ws?.send(JSON.stringify({ type: 'attach', session: view.session }));
    }
  };
  ws.onmessage = (event) => {
    try {
      onServerMessage(JSON.parse(event.data));
    } catch {
      toast('malformed server message');
    }
  };
  ws.onclose = () => {
    $('banner').style.display = 'block';
  };
}

function readTarget(): Target {
  return {
    red: {
      kind: ($('red-kind') as HTMLSelectElement).value,
      size: Number(($('red-size') as HTMLInputElement).value),
    },
    blue: {
      kind: ($('blue-kind') as HTMLSelectElement).value,
      size: Number(($('blue-size') as HTMLInputElement).value),
    },
  };
}

function readParams(): Record<string, number> {
  const out: Record<string, number> = {};
  for (const key of ['k', 'n', 'm', 't', 'seed_blue_path']) {
    const raw = ($(`param-${key}`) as HTMLInputElement).value.trim();
    if (raw !== '') out[key] = Number(raw);
  }
  return out;
}

function onCreate(): void {
  const role = ($('role') as HTMLSelectElement).value as 'painter' | 'builder';
  const msg: CreateMsg = {
    type: 'create',
    role,
    budget: Number(($('budget') as HTMLInputElement).value),
    engine: ($('engine') as HTMLSelectElement).value,
    params: readParams(),
  };
  if (role === 'builder') {
    msg.target = readTarget();
  }
  pickedVertex = null;
  send(msg);
}

function init(): void {
  $('create').addEventListener('click', onCreate);
  $('btn-red').addEventListener('click', () => {
    if (view.session && canColor(view)) {
      send({ type: 'color', session: view.session, color: 'red' as ColorName });
    }
  });
  $('btn-blue').addEventListener('click', () => {
    if (view.session && canColor(view)) {
      send({ type: 'color', session: view.session, color: 'blue' as ColorName });
    }
  });
  $('reconnect').addEventListener('click', connect);
  $('role').addEventListener('change', () => {
    const builder = ($('role') as HTMLSelectElement).value === 'builder';
    $('target-row').style.display = builder ? 'flex' : 'none';
    $('engine-row').style.display = 'flex';
  });
  connect();
  redraw();
}

document.addEventListener('DOMContentLoaded', init);
