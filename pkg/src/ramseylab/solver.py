"""Exact game values: the least round count Builder can guarantee, computed by
iterative deepening over canonically hashed board positions.

States are memoized up to color-preserving isomorphism: the canonical form is
exact (refinement plus backtracking over ambiguous cells), so the memo key is
sound and the search is a finite minimax proof.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import Color, ColoredGraph, Edge, GameState, TargetSpec, edge, play_edge
from .strategies import BuilderStrategy


class SizeCapExceeded(Exception):
    pass


class MemoCapExceeded(Exception):
    def __init__(self, msg: str, best_lower: int | None = None):
        super().__init__(msg)
        self.best_lower = best_lower


# --------------------------------------------------------------------------
# Canonical forms
#
# A disconnected board canonicalizes as the sorted multiset of its component
# forms; per component we refine by colored-degree signatures and backtrack
# over ambiguous cells, keeping the least encoding over all discrete leaves.
# Isolated vertices never appear (touched vertices all carry an edge), and on
# the lazily allocated infinite board they would be interchangeable anyway.

_EMPTY_FORM = b"\x00"


def _canon_component(adj: list[list[int]]) -> bytes:
    n = len(adj)

    def refine(cells: list[list[int]]) -> list[list[int]]:
        cells = list(cells)
        changed = True
        while changed:
            changed = False
            for ci, cell in enumerate(cells):
                if len(cell) == 1:
                    continue
                sigs: dict[tuple, list[int]] = {}
                for v in cell:
                    row = adj[v]
                    sig = tuple(
                        (sum(1 for u in other if row[u] == 1),
                         sum(1 for u in other if row[u] == 2))
                        for other in cells)
                    sigs.setdefault(sig, []).append(v)
                if len(sigs) > 1:
                    cells[ci:ci + 1] = [grp for _, grp in sorted(sigs.items())]
                    changed = True
                    break
        return cells

    best: bytes | None = None

    def encode(cells: list[list[int]]) -> bytes:
        order = [c[0] for c in cells]
        out = bytearray([n])
        for i in range(n):
            ri = adj[order[i]]
            for j in range(i + 1, n):
                out.append(ri[order[j]])
        return bytes(out)

    def search(cells: list[list[int]]) -> None:
        nonlocal best
        cells = refine(cells)
        for i, cell in enumerate(cells):
            if len(cell) > 1:
                for v in cell:
                    rest = [u for u in cell if u != v]
                    search(cells[:i] + [[v], rest] + cells[i + 1:])
                return
        enc = encode(cells)
        if best is None or enc < best:
            best = enc

    search([list(range(n))])
    return best


def canonicalize(g: ColoredGraph, size_cap: int = 16) -> bytes:
    """Byte string identical for color-isomorphic boards, distinct otherwise."""
    verts = sorted(g.touched)
    if not verts:
        return _EMPTY_FORM
    if len(verts) > size_cap:
        raise SizeCapExceeded(f"{len(verts)} touched vertices exceed cap {size_cap}")
    idx = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    nbrs: list[list[int]] = [[] for _ in range(n)]
    codes: dict[tuple[int, int], int] = {}
    for (u, v), color in g.edges.items():
        iu, iv = idx[u], idx[v]
        nbrs[iu].append(iv)
        nbrs[iv].append(iu)
        codes[(iu, iv)] = codes[(iv, iu)] = 1 if color is Color.RED else 2
    # connected components over both colors
    seen = [False] * n
    forms = []
    for s in range(n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        stack = [s]
        while stack:
            x = stack.pop()
            for y in nbrs[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    stack.append(y)
        comp.sort()
        back = {v: i for i, v in enumerate(comp)}
        sub = [[0] * len(comp) for _ in comp]
        for v in comp:
            for u in nbrs[v]:
                sub[back[v]][back[u]] = codes[(v, u)]
        forms.append(_canon_component(sub))
    forms.sort()
    return b"\xff".join(forms)


# --------------------------------------------------------------------------
# Search


@dataclass
class SolveStats:
    nodes: int = 0
    memo_hits: int = 0
    peak_memo: int = 0


class SolverSession:
    """Holds the memo tables and move generator for one target."""

    def __init__(self, target: TargetSpec, memo_cap: int = 2_000_000,
                 size_cap: int = 32, use_memo: bool = True):
        self.target = target
        self.memo_cap = memo_cap
        self.size_cap = size_cap
        self.use_memo = use_memo
        self.win_memo: dict[tuple[bytes, int], bool] = {}
        self.survive_memo: dict[tuple[bytes, int], bool] = {}
        self.stats = SolveStats()

    def builder_moves(self, state: GameState) -> list[Edge]:
        """Candidate edges: uncolored touched pairs, one edge to a fresh
        vertex per touched vertex, and one fresh-fresh edge. Sufficient on
        the infinite board because fresh vertices are interchangeable.
        Replays are never generated: a spent round with an unchanged board
        cannot help a round-minimizing Builder."""
        board = state.board
        touched = sorted(board.touched)
        f = board.next_fresh
        moves: list[Edge] = []
        for i, u in enumerate(touched):
            for v in touched[i + 1:]:
                if (u, v) not in board.edges:
                    moves.append((u, v))
        moves.extend((u, f) for u in touched)
        moves.append((f, f + 1))
        hot = self._blue_core(board)
        if hot:
            moves.sort(key=lambda e: (e[0] not in hot and e[1] not in hot, e))
        return moves

    @staticmethod
    def _blue_core(board: ColoredGraph) -> frozenset:
        """Vertices of one longest blue path; edges touching it are tried first."""
        adj = board.adjacency(Color.BLUE)
        if not adj:
            return frozenset()
        best: list[int] = []

        def dfs(path: list[int], seen: set[int]) -> None:
            nonlocal best
            if len(path) > len(best):
                best = list(path)
            for w in adj[path[-1]]:
                if w not in seen:
                    seen.add(w)
                    path.append(w)
                    dfs(path, seen)
                    path.pop()
                    seen.remove(w)

        for s in adj:
            dfs([s], {s})
        return frozenset(best)

    def can_win(self, state: GameState, rounds: int) -> bool:
        """Builder forces a target within `rounds` from this position."""
        if state.terminal is not None:
            return True
        if rounds <= 0:
            return False
        key = None
        if self.use_memo:
            key = (canonicalize(state.board, self.size_cap), rounds)
            cached = self.win_memo.get(key)
            if cached is not None:
                self.stats.memo_hits += 1
                return cached
            if len(self.win_memo) >= self.memo_cap:
                raise MemoCapExceeded(f"memo cap {self.memo_cap} reached")
        self.stats.nodes += 1
        result = False
        for e in self.builder_moves(state):
            if not self.can_win(play_edge(state, e, Color.RED), rounds - 1):
                continue
            if self.can_win(play_edge(state, e, Color.BLUE), rounds - 1):
                result = True
                break
        if key is not None:
            self.win_memo[key] = result
            self.stats.peak_memo = max(self.stats.peak_memo,
                                       len(self.win_memo) + len(self.survive_memo))
        return result

    def survives(self, state: GameState, rounds: int) -> bool:
        """Painter survives `rounds` more rounds whatever Builder plays (the
        max/min dual of can_win, searched independently)."""
        if state.terminal is not None:
            return False
        if rounds <= 0:
            return True
        key = None
        if self.use_memo:
            key = (canonicalize(state.board, self.size_cap), rounds)
            cached = self.survive_memo.get(key)
            if cached is not None:
                self.stats.memo_hits += 1
                return cached
            if len(self.survive_memo) >= self.memo_cap:
                raise MemoCapExceeded(f"memo cap {self.memo_cap} reached")
        self.stats.nodes += 1
        result = True
        for e in self.builder_moves(state):
            if not (self.survives(play_edge(state, e, Color.RED), rounds - 1)
                    or self.survives(play_edge(state, e, Color.BLUE), rounds - 1)):
                result = False
                break
        if key is not None:
            self.survive_memo[key] = result
            self.stats.peak_memo = max(self.stats.peak_memo,
                                       len(self.win_memo) + len(self.survive_memo))
        return result


class OptimalStrategy(BuilderStrategy):
    """Replayable Builder policy extracted from a solved session: at every
    position it picks the first move whose both children stay winning."""

    name = "solver-optimal"

    def __init__(self, session: SolverSession, budget: int):
        self.session = session
        self.budget = budget
        self._start: int | None = None

    def setup(self, state: GameState) -> None:
        self._start = state.round

    def propose(self, state: GameState) -> Edge:
        remaining = self.budget - (state.round - self._start)
        moves = self.session.builder_moves(state)
        if remaining >= 1:
            for e in moves:
                if self.session.can_win(play_edge(state, e, Color.RED), remaining - 1) and \
                        self.session.can_win(play_edge(state, e, Color.BLUE), remaining - 1):
                    return e
        return moves[0]  # losing position: deterministic filler

    def clone(self) -> "OptimalStrategy":
        c = OptimalStrategy(self.session, self.budget)
        c._start = self._start
        return c


@dataclass
class SolveResult:
    target: TargetSpec
    value: int | None  # None: no win within max_rounds ("> max_rounds")
    max_rounds: int
    stats: SolveStats
    session: SolverSession = field(repr=False)

    def optimal_strategy(self, budget: int | None = None) -> OptimalStrategy:
        if self.value is None:
            raise ValueError("no strategy: value exceeds max_rounds")
        return OptimalStrategy(self.session, self.value if budget is None else budget)

    def to_dict(self) -> dict:
        return {"target": self.target.to_dict(),
                "value": self.value,
                "max_rounds": self.max_rounds,
                "nodes": self.stats.nodes,
                "memo_hits": self.stats.memo_hits,
                "peak_memo": self.stats.peak_memo}


def solve(target: TargetSpec, max_rounds: int, memo_cap: int = 2_000_000,
          use_memo: bool = True, size_cap: int | None = None) -> SolveResult:
    """Exact online Ramsey value up to max_rounds, by iterative deepening
    (anytime: every failed depth r proves the value exceeds r)."""
    if size_cap is None:
        size_cap = max(16, 2 * max_rounds + 2)
    session = SolverSession(target, memo_cap=memo_cap, size_cap=size_cap,
                            use_memo=use_memo)
    root = GameState.new(target)
    value = None
    for r in range(max_rounds + 1):
        try:
            if session.can_win(root, r):
                value = r
                break
        except MemoCapExceeded as exc:
            raise MemoCapExceeded(str(exc), best_lower=r) from exc
    return SolveResult(target, value, max_rounds, session.stats, session)


def lower_bound_via_painter(target: TargetSpec, rounds: int,
                            memo_cap: int = 2_000_000,
                            size_cap: int | None = None) -> bool:
    """True iff Painter can survive `rounds` rounds against every Builder."""
    if size_cap is None:
        size_cap = max(16, 2 * rounds + 2)
    session = SolverSession(target, memo_cap=memo_cap, size_cap=size_cap)
    return session.survives(GameState.new(target), rounds)


class OptimalPainter:
    """Painter policy backed by the survival search: picks a color that keeps
    Painter alive for the remaining budget whenever one exists. Only viable
    for tiny targets (the session guard enforces that)."""

    def __init__(self, target: TargetSpec, budget: int):
        self.budget = budget
        self.session = SolverSession(target, size_cap=max(16, 2 * budget + 2))

    def color_response(self, state: GameState, proposed: Edge) -> Color:
        remaining = self.budget - state.round - 1
        if remaining < 0:
            remaining = 0
        for c in (Color.RED, Color.BLUE):
            child = play_edge(state, proposed, c)
            if child.terminal is None and self.session.survives(child, remaining):
                return c
        # doomed either way: still avoid immediate completion if possible
        for c in (Color.RED, Color.BLUE):
            if play_edge(state, proposed, c).terminal is None:
                return c
        return Color.RED
