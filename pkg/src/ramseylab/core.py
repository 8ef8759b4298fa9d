"""Game board, target detection, and round mechanics for the Builder-Painter game.

The board lives on a lazily allocated vertex pool (vertex ids are naturals,
handed out in order), so the conceptually infinite host graph never has to be
materialized. Edge colors are irrevocable: replaying a colored edge burns a
round but changes nothing.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional


class Color(Enum):
    RED = "red"
    BLUE = "blue"

    @property
    def opposite(self) -> "Color":
        return Color.BLUE if self is Color.RED else Color.RED


Edge = tuple[int, int]


class IllegalMove(ValueError):
    """Raised for self-loops, negative vertex ids, or moves after the game ended."""


def edge(u: int, v: int) -> Edge:
    """Normalize an unordered vertex pair to (min, max)."""
    if u == v:
        raise IllegalMove(f"self-loop at vertex {u}")
    if u < 0 or v < 0:
        raise IllegalMove(f"negative vertex id in ({u}, {v})")
    return (u, v) if u < v else (v, u)


class ColoredGraph:
    """A 2-edge-colored graph: edge -> color map plus the touched-vertex set."""

    __slots__ = ("edges", "touched", "next_fresh")

    def __init__(self, edges: dict[Edge, Color] | None = None,
                 touched: set[int] | None = None, next_fresh: int = 0):
        self.edges: dict[Edge, Color] = edges if edges is not None else {}
        self.touched: set[int] = touched if touched is not None else set()
        self.next_fresh = next_fresh

    def copy(self) -> "ColoredGraph":
        return ColoredGraph(dict(self.edges), set(self.touched), self.next_fresh)

    def color_of(self, e: Edge) -> Optional[Color]:
        return self.edges.get(e)

    def add_edge(self, e: Edge, color: Color) -> None:
        """Mutating insert; callers that need value semantics copy first."""
        u, v = e
        self.edges[e] = color
        self.touched.add(u)
        self.touched.add(v)
        if v >= self.next_fresh:
            self.next_fresh = v + 1
        if u >= self.next_fresh:
            self.next_fresh = u + 1

    def adjacency(self, color: Color) -> dict[int, list[int]]:
        """Sorted adjacency lists of the monochromatic subgraph."""
        adj: dict[int, list[int]] = {}
        for (u, v), c in self.edges.items():
            if c is color:
                adj.setdefault(u, []).append(v)
                adj.setdefault(v, []).append(u)
        for nbrs in adj.values():
            nbrs.sort()
        return adj

    def degree(self, v: int, color: Color) -> int:
        return sum(1 for e, c in self.edges.items() if c is color and v in e)

    def __len__(self) -> int:
        return len(self.edges)


# --------------------------------------------------------------------------
# Targets


@dataclass(frozen=True)
class PathTarget:
    size: int
    kind = "path"

    def __post_init__(self):
        if self.size < 1:
            raise ValueError("path target needs size >= 1")


@dataclass(frozen=True)
class StarTarget:
    """Star with `size` leaves (a center of monochromatic degree `size`)."""
    size: int
    kind = "star"

    def __post_init__(self):
        if self.size < 1:
            raise ValueError("star target needs size >= 1")


@dataclass(frozen=True)
class CycleTarget:
    size: int
    kind = "cycle"

    def __post_init__(self):
        if self.size < 3:
            raise ValueError("cycle target needs size >= 3")


RedTarget = PathTarget | StarTarget
BlueTarget = PathTarget | CycleTarget


@dataclass(frozen=True)
class TargetSpec:
    red: RedTarget
    blue: BlueTarget

    def __post_init__(self):
        if isinstance(self.red, CycleTarget):
            raise ValueError("red target must be a path or a star")
        if isinstance(self.blue, StarTarget):
            raise ValueError("blue target must be a path or a cycle")

    def to_dict(self) -> dict:
        return {
            "red": {"kind": self.red.kind, "size": self.red.size},
            "blue": {"kind": self.blue.kind, "size": self.blue.size},
        }

    @staticmethod
    def from_dict(d: dict) -> "TargetSpec":
        return TargetSpec(red=parse_target(d["red"]["kind"], d["red"]["size"], side="red"),
                          blue=parse_target(d["blue"]["kind"], d["blue"]["size"], side="blue"))


def parse_target(kind: str, size: int, side: str) -> PathTarget | StarTarget | CycleTarget:
    size = int(size)
    if kind == "path":
        return PathTarget(size)
    if kind == "star" and side == "red":
        return StarTarget(size)
    if kind == "cycle" and side == "blue":
        return CycleTarget(size)
    raise ValueError(f"invalid {side} target kind {kind!r}")


# --------------------------------------------------------------------------
# Witnesses


@dataclass(frozen=True)
class Witness:
    kind: str  # red_path | red_star | blue_path | blue_cycle
    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]

    @property
    def color(self) -> Color:
        return Color.RED if self.kind.startswith("red") else Color.BLUE

    def validate(self, board: ColoredGraph) -> None:
        """Check the witness against its structural invariants on this board."""
        for e in self.edges:
            if board.color_of(e) is not self.color:
                raise ValueError(f"witness edge {e} is not {self.color.value} on the board")
        vs = self.vertices
        if self.kind in ("red_path", "blue_path"):
            if len(set(vs)) != len(vs):
                raise ValueError("path witness repeats a vertex")
            want = tuple(edge(a, b) for a, b in zip(vs, vs[1:]))
            if self.edges != want:
                raise ValueError("path witness edges do not match its vertex order")
        elif self.kind == "blue_cycle":
            if len(vs) < 3 or len(set(vs)) != len(vs):
                raise ValueError("cycle witness vertices invalid")
            want = tuple(edge(a, b) for a, b in zip(vs, vs[1:])) + (edge(vs[-1], vs[0]),)
            if self.edges != want:
                raise ValueError("cycle witness edges do not match")
        elif self.kind == "red_star":
            center, leaves = vs[0], vs[1:]
            if len(set(vs)) != len(vs):
                raise ValueError("star witness repeats a vertex")
            want = tuple(edge(center, leaf) for leaf in leaves)
            if self.edges != want:
                raise ValueError("star witness edges do not match")
        else:
            raise ValueError(f"unknown witness kind {self.kind!r}")

    def to_dict(self) -> dict:
        return {"kind": self.kind, "vertices": list(self.vertices),
                "edges": [list(e) for e in self.edges]}


@dataclass(frozen=True)
class Terminal:
    result: str  # "red_win" | "blue_win"
    witness: Witness


# --------------------------------------------------------------------------
# Detection
#
# All detectors are exact and return the lexicographically least witness
# (determinism for tests); exhaustive DFS is fine at desk scale because the
# monochromatic subgraphs the strategies produce stay small.


def _path_witness(kind: str, vs: list[int]) -> Witness:
    es = tuple(edge(a, b) for a, b in zip(vs, vs[1:]))
    return Witness(kind, tuple(vs), es)


def _detect_path(g: ColoredGraph, color: Color, k: int) -> Optional[Witness]:
    kind = "red_path" if color is Color.RED else "blue_path"
    if k == 1:
        v = min(g.touched) if g.touched else 0
        return Witness(kind, (v,), ())
    adj = g.adjacency(color)
    if not adj:
        return None
    verts = sorted(adj)

    def extend(path: list[int], seen: set[int]) -> Optional[list[int]]:
        if len(path) == k:
            return path
        for w in adj[path[-1]]:
            if w not in seen:
                seen.add(w)
                path.append(w)
                found = extend(path, seen)
                if found is not None:
                    return found
                path.pop()
                seen.remove(w)
        return None

    for s in verts:
        found = extend([s], {s})
        if found is not None:
            return _path_witness(kind, found)
    return None


def _detect_star(g: ColoredGraph, color: Color, k: int) -> Optional[Witness]:
    kind = "red_star" if color is Color.RED else "blue_star"
    adj = g.adjacency(color)
    for center in sorted(adj):
        nbrs = adj[center]
        if len(nbrs) >= k:
            leaves = tuple(nbrs[:k])
            return Witness(kind, (center,) + leaves,
                           tuple(edge(center, leaf) for leaf in leaves))
    return None


def _detect_cycle(g: ColoredGraph, color: Color, n: int) -> Optional[Witness]:
    """Cycle on exactly n vertices (a longer cycle does not contain it)."""
    kind = "blue_cycle" if color is Color.BLUE else "red_cycle"
    adj = g.adjacency(color)
    verts = sorted(v for v in adj if len(adj[v]) >= 2)

    def extend(start: int, path: list[int], seen: set[int]) -> Optional[list[int]]:
        if len(path) == n:
            return path if start in adj[path[-1]] else None
        for w in adj[path[-1]]:
            if w > start and w not in seen:
                seen.add(w)
                path.append(w)
                found = extend(start, path, seen)
                if found is not None:
                    return found
                path.pop()
                seen.remove(w)
        return None

    for s in verts:
        found = extend(s, [s], {s})
        if found is not None:
            vs = tuple(found)
            es = tuple(edge(a, b) for a, b in zip(vs, vs[1:])) + (edge(vs[-1], vs[0]),)
            return Witness(kind, vs, es)
    return None


def detect_red_path(g: ColoredGraph, k: int) -> Optional[Witness]:
    if k < 1:
        raise ValueError("k >= 1 required")
    return _detect_path(g, Color.RED, k)


def detect_blue_path(g: ColoredGraph, n: int) -> Optional[Witness]:
    if n < 1:
        raise ValueError("n >= 1 required")
    return _detect_path(g, Color.BLUE, n)


def detect_red_star(g: ColoredGraph, k: int) -> Optional[Witness]:
    if k < 1:
        raise ValueError("k >= 1 required")
    return _detect_star(g, Color.RED, k)


def detect_blue_cycle(g: ColoredGraph, n: int) -> Optional[Witness]:
    if n < 3:
        raise ValueError("n >= 3 required")
    return _detect_cycle(g, Color.BLUE, n)


def detect(g: ColoredGraph, color: Color, target: RedTarget | BlueTarget) -> Optional[Witness]:
    if isinstance(target, PathTarget):
        return _detect_path(g, color, target.size)
    if isinstance(target, StarTarget):
        return _detect_star(g, color, target.size)
    return _detect_cycle(g, color, target.size)


# Fast screens: after a play, a *new* target copy must use the new edge, so a
# cheap through-edge existence test gates the full (lex-least) detector.

def _creates_path(g: ColoredGraph, color: Color, k: int, e: Edge) -> bool:
    if k == 1:
        return True
    adj = g.adjacency(color)
    u, v = e

    def arms(root: int, banned: int) -> list[set[int]]:
        """Vertex sets of simple paths starting at root, avoiding banned."""
        out = []
        stack = [([root], {root, banned})]
        while stack:
            path, seen = stack.pop()
            out.append(set(path))
            if len(path) >= k - 1:
                continue
            for w in adj.get(path[-1], ()):
                if w not in seen:
                    stack.append((path + [w], seen | {w}))
        return out

    left = arms(u, v)
    for left_set in left:
        need = k - len(left_set)
        if need < 1:
            continue
        # DFS from v for `need` vertices avoiding the left arm
        stack = [(v, {v})]
        sizes = [1]
        while stack:
            last, seen = stack.pop()
            size = sizes.pop()
            if size == need:
                return True
            for w in adj.get(last, ()):
                if w not in seen and w not in left_set:
                    stack.append((w, seen | {w}))
                    sizes.append(size + 1)
    return False


def _creates_star(g: ColoredGraph, color: Color, k: int, e: Edge) -> bool:
    return g.degree(e[0], color) >= k or g.degree(e[1], color) >= k


def _creates_cycle(g: ColoredGraph, color: Color, n: int, e: Edge) -> bool:
    adj = g.adjacency(color)
    u, v = e
    # path from v back to u on exactly n vertices, not re-using edge e itself
    stack = [([v], {v})]
    while stack:
        path, seen = stack.pop()
        if len(path) == n - 1:
            if u in adj.get(path[-1], ()) and path[-1] != v:
                return True
            continue
        for w in adj.get(path[-1], ()):
            if w == u or w in seen:
                continue
            stack.append((path + [w], seen | {w}))
    return False


def _screen(g: ColoredGraph, color: Color, target, e: Edge) -> bool:
    if isinstance(target, PathTarget):
        return _creates_path(g, color, target.size, e)
    if isinstance(target, StarTarget):
        return _creates_star(g, color, target.size, e)
    return _creates_cycle(g, color, target.size, e)


def evaluate_terminal(board: ColoredGraph, target: TargetSpec,
                      new_edge: Edge | None = None) -> Optional[Terminal]:
    """Red target checked before blue (fixed tie-break when one move makes both)."""
    if new_edge is None or _screen(board, Color.RED, target.red, new_edge):
        w = detect(board, Color.RED, target.red)
        if w is not None:
            return Terminal("red_win", w)
    if new_edge is None or _screen(board, Color.BLUE, target.blue, new_edge):
        w = detect(board, Color.BLUE, target.blue)
        if w is not None:
            return Terminal("blue_win", w)
    return None


# --------------------------------------------------------------------------
# Game state


class TranscriptEntry:
    __slots__ = ("edge", "color", "repeat")

    def __init__(self, e: Edge, color: Color, repeat: bool):
        self.edge = e
        self.color = color
        self.repeat = repeat


class _Node:
    """Transcript as a shared-prefix linked list so plays stay O(1)."""
    __slots__ = ("entry", "prev")

    def __init__(self, entry: TranscriptEntry, prev: Optional["_Node"]):
        self.entry = entry
        self.prev = prev


class GameState:
    """Board + target + round counter + transcript + terminal status.

    A value type: play_edge returns a fresh state and never mutates its input
    (the only in-place operation is fresh-vertex allocation, which is pure
    bookkeeping on the state's own counter).
    """

    __slots__ = ("board", "target", "round", "terminal", "seeded", "_tail")

    def __init__(self, board: ColoredGraph, target: TargetSpec, round_: int = 0,
                 terminal: Optional[Terminal] = None,
                 seeded: tuple[Edge, ...] = (), tail: Optional[_Node] = None):
        self.board = board
        self.target = target
        self.round = round_
        self.terminal = terminal
        self.seeded = seeded
        self._tail = tail

    @staticmethod
    def new(target: TargetSpec) -> "GameState":
        board = ColoredGraph()
        return GameState(board, target, terminal=evaluate_terminal(board, target))

    def copy(self) -> "GameState":
        return GameState(self.board.copy(), self.target, self.round,
                         self.terminal, self.seeded, self._tail)

    def fresh_vertex(self) -> int:
        """Allocate the next untouched vertex id."""
        v = self.board.next_fresh
        self.board.next_fresh = v + 1
        return v

    def transcript(self) -> list[TranscriptEntry]:
        out = []
        node = self._tail
        while node is not None:
            out.append(node.entry)
            node = node.prev
        out.reverse()
        return out


def fresh_vertex(state: GameState) -> int:
    return state.fresh_vertex()


def play_edge(state: GameState, e: Edge, painter_choice: Color) -> GameState:
    """One round: Builder proposes e, Painter colors it.

    A previously colored edge keeps its color (the choice is ignored, the
    round still counts). Terminal is evaluated after every round.
    """
    if state.terminal is not None:
        raise IllegalMove("game already ended")
    e = edge(*e)
    existing = state.board.color_of(e)
    if existing is not None:
        entry = TranscriptEntry(e, existing, True)
        return GameState(state.board, state.target, state.round + 1,
                         None, state.seeded, _Node(entry, state._tail))
    board = state.board.copy()
    board.add_edge(e, painter_choice)
    entry = TranscriptEntry(e, painter_choice, False)
    terminal = evaluate_terminal(board, state.target, new_edge=e)
    return GameState(board, state.target, state.round + 1,
                     terminal, state.seeded, _Node(entry, state._tail))


# --------------------------------------------------------------------------
# Seeding (fabricated preconditions; rounds are not charged)


def seeded_state(target: TargetSpec, blue_paths: Iterable[int]) -> GameState:
    """Board holding disjoint blue paths of the given sizes and nothing else.

    Path i occupies the next block of consecutive vertex ids, so callers know
    the vertices without a back-channel: sizes (3, 2) give paths [0,1,2] and
    [3,4].
    """
    board = ColoredGraph()
    seeds: list[Edge] = []
    nxt = 0
    for n in blue_paths:
        if n < 1:
            raise ValueError("blue path seed needs size >= 1")
        ids = list(range(nxt, nxt + n))
        nxt += n
        for a, b in zip(ids, ids[1:]):
            e = edge(a, b)
            board.add_edge(e, Color.BLUE)
            seeds.append(e)
        board.next_fresh = max(board.next_fresh, nxt)
    return GameState(board, target, terminal=evaluate_terminal(board, target),
                     seeded=tuple(seeds))


def seed_blue_path(n: int, target: TargetSpec) -> GameState:
    return seeded_state(target, (n,))


# --------------------------------------------------------------------------
# Transcript serialization (one JSON object per round, plus a game header)


def transcript_header(state: GameState) -> dict:
    return {"target": state.target.to_dict(),
            "seeded": [list(e) for e in state.seeded]}


def transcript_rounds(state: GameState) -> list[dict]:
    out = []
    for i, entry in enumerate(state.transcript(), start=1):
        out.append({"round": i, "edge": list(entry.edge),
                    "color": entry.color.value, "repeat": entry.repeat})
    return out


def transcript_jsonl(state: GameState) -> str:
    lines = [json.dumps(transcript_header(state), sort_keys=True)]
    lines.extend(json.dumps(r, sort_keys=True) for r in transcript_rounds(state))
    return "\n".join(lines) + "\n"
