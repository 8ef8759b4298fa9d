"""Builder strategies: resumable decision processes with declared round budgets.

Each constructor realizes one forcing argument: it keeps explicit bookkeeping
(tracked blue/red paths, a tracked cycle, phase markers) and proposes the next
edge from that bookkeeping alone, so identical painter color sequences always
yield identical transcripts.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    Color,
    CycleTarget,
    Edge,
    GameState,
    PathTarget,
    StarTarget,
    TargetSpec,
    Witness,
    detect_blue_cycle,
    detect_blue_path,
    edge,
    play_edge,
)


class StrategyError(Exception):
    pass


class PreconditionViolation(StrategyError):
    pass


class FailedGuarantee(StrategyError):
    """The strategy believes it is done but the board has no winning copy."""


class BudgetExceeded(StrategyError):
    pass


class AdapterMismatch(StrategyError):
    """A composite stage's output did not satisfy the next stage's precondition."""


class InternalError(StrategyError):
    """A bookkeeping identity failed (always a bug, never painter's doing)."""


class BuilderStrategy:
    """Base interface. propose() returns the next edge, or None once the
    strategy's own goal is met (composites use that to hand over)."""

    name = "builder-strategy"
    budget: int = 0

    def setup(self, state: GameState) -> None:
        pass

    def propose(self, state: GameState) -> Edge | None:
        raise NotImplementedError

    def observe(self, state: GameState, e: Edge, color: Color) -> None:
        pass

    def clone(self) -> "BuilderStrategy":
        raise NotImplementedError

    @property
    def product(self) -> dict:
        """Tracked structures handed to the next composite stage."""
        return {}


# --------------------------------------------------------------------------
# Pair extension: grow a tracked blue path and a tracked red path in 2-round
# blocks, total tracked length gaining at least 1 per block.


class ExtendPair(BuilderStrategy):
    name = "extend-pair"

    def __init__(self, k: int, t: int, blue_path: list[int] | None = None,
                 blue_goal: int | None = None):
        if k < 1 or t < 0:
            raise PreconditionViolation("extend-pair needs k >= 1 and t >= 0")
        self.k = k
        self.t = t
        self.blue: list[int] | None = list(blue_path) if blue_path is not None else None
        self.red: list[int] = []
        self.blue_goal = blue_goal
        self.budget = 2 * (k + t)
        self._pending: tuple | None = None

    def setup(self, state: GameState) -> None:
        if self.blue is None:
            self.blue = [state.fresh_vertex()]
        if self.blue_goal is None:
            self.blue_goal = len(self.blue) + self.t
        self.red = [state.fresh_vertex()]

    def _finished(self) -> bool:
        return len(self.blue) >= self.blue_goal or len(self.red) >= self.k

    def propose(self, state: GameState) -> Edge | None:
        if self._pending is None:
            if self._finished():
                return None
            va, ub = self.blue[-1], self.red[-1]
            self._pending = ("first", va, ub)
            return edge(va, ub)
        tag, va, ub, c1 = self._pending
        w = state.fresh_vertex()
        self._pending = ("second", va, ub, c1, w)
        return edge(ub, w) if c1 is Color.BLUE else edge(va, w)

    def observe(self, state: GameState, e: Edge, color: Color) -> None:
        p = self._pending
        if p[0] == "first":
            _, va, ub = p
            self._pending = ("mid", va, ub, color)
            return
        _, va, ub, c1, w = p
        c2 = color
        before = len(self.blue) + len(self.red)
        if c1 is Color.RED and c2 is Color.RED:
            self.red = self.red + [va, w]
            self.blue = [state.fresh_vertex()] if len(self.blue) == 1 else self.blue[:-1]
        elif c1 is Color.BLUE and c2 is Color.BLUE:
            self.blue = self.blue + [ub, w]
            self.red = [state.fresh_vertex()] if len(self.red) == 1 else self.red[:-1]
        elif c1 is Color.RED:  # c2 blue: blue tip gains the fresh vertex
            self.blue = self.blue + [w]
        else:  # c1 blue, c2 red: red tip gains the fresh vertex
            self.red = self.red + [w]
        if len(self.blue) + len(self.red) < before + 1:
            raise InternalError("tracked paths did not grow over a block")
        self._pending = None

    def clone(self) -> "ExtendPair":
        c = ExtendPair.__new__(ExtendPair)
        c.k, c.t, c.blue_goal, c.budget = self.k, self.t, self.blue_goal, self.budget
        c.blue = None if self.blue is None else list(self.blue)
        c.red = list(self.red)
        c._pending = self._pending
        return c

    @property
    def product(self) -> dict:
        return {"blue_path": list(self.blue)}


def extend_pair(k: int, t: int, blue_path: list[int] | None = None) -> ExtendPair:
    """Extend a tracked blue path by t, or force a red path on k vertices."""
    return ExtendPair(k, t, blue_path=blue_path)


# --------------------------------------------------------------------------
# Path joining: zig-zag between two disjoint blue paths.


class JoinPaths(BuilderStrategy):
    name = "join-paths"

    def __init__(self, k: int, path_a: list[int], path_b: list[int]):
        m, n = len(path_a), len(path_b)
        if 2 * min(m, n) <= k:
            raise PreconditionViolation(
                f"join-paths needs min(m, n) > k/2, got m={m}, n={n}, k={k}")
        self.k = k
        self.a = list(path_a)
        self.b = list(path_b)
        self.budget = k - 1
        # zig-zag walk a1 b1 a2 b2 ... on k vertices; its k-1 edges are the
        # proposals (the precondition guarantees the indices exist)
        walk: list[int] = []
        i = 0
        while len(walk) < k:
            walk.append(self.a[i])
            if len(walk) < k:
                walk.append(self.b[i])
            i += 1
        self.edges = [edge(x, y) for x, y in zip(walk, walk[1:])]
        self._idx = 0
        self._joined: list[int] | None = None

    def propose(self, state: GameState) -> Edge | None:
        if self._joined is not None or self._idx >= len(self.edges):
            return None
        return self.edges[self._idx]

    def observe(self, state: GameState, e: Edge, color: Color) -> None:
        j = self._idx
        self._idx += 1
        if color is not Color.BLUE:
            return
        i = j // 2
        if j % 2 == 0:  # edge (a[i], b[i])
            joined = list(reversed(self.a[i:])) + self.b[i:]
        else:  # edge (b[i], a[i+1])
            joined = list(reversed(self.b[i:])) + self.a[i + 1:]
        m, n = len(self.a), len(self.b)
        if len(joined) < m + n - self.k:
            raise InternalError("joined blue path shorter than m+n-k")
        if detect_blue_path(state.board, m + n - self.k) is None:
            raise InternalError("board lacks the joined blue path")
        self._joined = joined

    def clone(self) -> "JoinPaths":
        c = JoinPaths.__new__(JoinPaths)
        c.k, c.a, c.b, c.budget, c.edges = self.k, self.a, self.b, self.budget, self.edges
        c._idx = self._idx
        c._joined = None if self._joined is None else list(self._joined)
        return c

    @property
    def product(self) -> dict:
        return {"blue_path": list(self._joined)}


def join_paths(k: int, path_a: list[int], path_b: list[int]) -> JoinPaths:
    return JoinPaths(k, path_a, path_b)


# --------------------------------------------------------------------------
# Cycle closing with a calibrated chord: fold a blue path into a blue cycle,
# then space chords so that any blue one closes a cycle on exactly n-k
# vertices.


class CloseCycleChord(BuilderStrategy):
    name = "close-cycle-chord"

    def __init__(self, k: int, n: int, path: list[int] | None = None):
        if n < k * k + k:
            raise PreconditionViolation(
                f"close-cycle-chord needs n >= k^2+k so chord indices fit, got n={n}, k={k}")
        self.k = k
        self.n = n
        self.path = list(path) if path is not None else list(range(n))
        if len(self.path) != n:
            raise PreconditionViolation("path length must equal n")
        self.budget = 2 * k
        # fold proposals: ends inward - (v1,vn), (vn,v2), (v2,v_{n-1}), ...
        walk: list[int] = []
        lo, hi = 0, n - 1
        while len(walk) < k:
            walk.append(lo)
            if len(walk) < k:
                walk.append(hi)
            lo, hi = lo + 1, hi - 1
        self._fold = [edge(self.path[x], self.path[y]) for x, y in zip(walk, walk[1:])]
        self._fold_pos = {v: i for i, v in enumerate(self.path)}
        self.phase = "close"
        self._idx = 0
        self.cycle: list[int] | None = None
        self.alpha: int | None = None
        self._chords: list[Edge] = []

    def propose(self, state: GameState) -> Edge | None:
        if self.phase == "close":
            if self._idx >= len(self._fold):
                return None
            return self._fold[self._idx]
        if self._idx >= len(self._chords):
            return None
        return self._chords[self._idx]

    def observe(self, state: GameState, e: Edge, color: Color) -> None:
        j = self._idx
        self._idx += 1
        if self.phase == "close":
            if color is not Color.BLUE:
                return
            s, t = sorted(self._fold_pos[v] for v in e)
            size = t - s + 1
            if not (self.n - self.k < size <= self.n):
                raise InternalError(f"closed cycle size {size} outside (n-k, n]")
            self.cycle = self.path[s:t + 1]
            self.alpha = size + self.k - self.n + 1
            if size - self.alpha + 1 != self.n - self.k:
                raise InternalError("chord offset identity violated")
            if self.k * self.alpha > size:
                raise InternalError("chord indices overflow the cycle")
            marks = [self.cycle[i * self.alpha - 1] for i in range(1, self.k + 1)]
            self._chords = [edge(x, y) for x, y in zip(marks, marks[1:])]
            self.phase = "chord"
            self._idx = 0
        else:
            if color is not Color.BLUE:
                return
            if detect_blue_cycle(state.board, self.n - self.k) is None:
                raise InternalError("blue chord did not close a cycle on n-k vertices")


    def clone(self) -> "CloseCycleChord":
        c = CloseCycleChord.__new__(CloseCycleChord)
        c.k, c.n, c.path, c.budget = self.k, self.n, self.path, self.budget
        c._fold, c._fold_pos = self._fold, self._fold_pos
        c.phase, c._idx = self.phase, self._idx
        c.cycle = None if self.cycle is None else list(self.cycle)
        c.alpha = self.alpha
        c._chords = self._chords
        return c


def close_cycle_chord(k: int, n: int, path: list[int] | None = None) -> CloseCycleChord:
    return CloseCycleChord(k, n, path=path)


# --------------------------------------------------------------------------
# Star strategies: probe at the blue tip with fresh vertices; reds pile up on
# one center.


class StarPathExtender(BuilderStrategy):
    """Extend a tracked blue path one vertex at a time (t rounds of up to k
    probes each), or force k red edges at some tip."""

    name = "star-extend-by"

    def __init__(self, k: int, t: int, path: list[int] | None = None):
        if k < 1 or t < 0:
            raise PreconditionViolation("star extension needs k >= 1 and t >= 0")
        self.k = k
        self.t = t
        self.path: list[int] | None = list(path) if path is not None else None
        self.budget = t * k
        self._done = 0
        self._probes = 0
        self._pending: int | None = None

    def setup(self, state: GameState) -> None:
        if self.path is None:
            self.path = [state.fresh_vertex()]

    def propose(self, state: GameState) -> Edge | None:
        if self._done >= self.t:
            return None
        w = state.fresh_vertex()
        self._pending = w
        return edge(self.path[-1], w)

    def observe(self, state: GameState, e: Edge, color: Color) -> None:
        w = self._pending
        self._pending = None
        if color is Color.BLUE:
            self.path = self.path + [w]
            self._done += 1
            self._probes = 0
        else:
            self._probes += 1
            if self._probes > self.k:
                raise InternalError("probe count exceeded k without a red star")

    def clone(self) -> "StarPathExtender":
        c = StarPathExtender.__new__(StarPathExtender)
        c.k, c.t, c.budget, c.name = self.k, self.t, self.budget, self.name
        c.path = None if self.path is None else list(self.path)
        c._done, c._probes, c._pending = self._done, self._probes, self._pending
        return c

    @property
    def product(self) -> dict:
        return {"blue_path": list(self.path)}


def star_extend(k: int, path: list[int] | None = None) -> StarPathExtender:
    s = StarPathExtender(k, 1, path=path)
    s.name = "star-extend"
    return s


def star_extend_by(k: int, t: int, path: list[int] | None = None) -> StarPathExtender:
    return StarPathExtender(k, t, path=path)


class StarJoin(BuilderStrategy):
    name = "star-join"

    def __init__(self, k: int, path_a: list[int], path_b: list[int]):
        if len(path_a) < k:
            raise PreconditionViolation(
                f"star-join needs the first path at least k long, got {len(path_a)} < {k}")
        self.k = k
        self.a = list(path_a)
        self.b = list(path_b)
        self.budget = k
        self._idx = 0
        self._joined: list[int] | None = None

    def propose(self, state: GameState) -> Edge | None:
        if self._joined is not None or self._idx >= self.k:
            return None
        return edge(self.b[0], self.a[self._idx])

    def observe(self, state: GameState, e: Edge, color: Color) -> None:
        j = self._idx
        self._idx += 1
        if color is not Color.BLUE:
            return
        joined = list(reversed(self.b)) + self.a[j:]
        m, n = len(self.a), len(self.b)
        if len(joined) < m + n - self.k + 1:
            raise InternalError("joined blue path shorter than m+n-k+1")
        self._joined = joined

    def clone(self) -> "StarJoin":
        c = StarJoin.__new__(StarJoin)
        c.k, c.a, c.b, c.budget, c._idx = self.k, self.a, self.b, self.budget, self._idx
        c._joined = None if self._joined is None else list(self._joined)
        return c

    @property
    def product(self) -> dict:
        return {"blue_path": list(self._joined)}


def star_join(k: int, path_a: list[int], path_b: list[int]) -> StarJoin:
    return StarJoin(k, path_a, path_b)


class StarCycle(BuilderStrategy):
    """Close a blue path into a big blue cycle, then force two blue chords at
    one hub vertex framing a cycle on exactly n-2k vertices."""

    name = "star-cycle"

    def __init__(self, k: int, n: int, path: list[int] | None = None):
        if n < 3 * k + 2:
            raise PreconditionViolation(f"star-cycle needs n >= 3k+2, got n={n}, k={k}")
        self.k = k
        self.n = n
        self.path = list(path) if path is not None else list(range(n))
        if len(self.path) != n:
            raise PreconditionViolation("path length must equal n")
        self.budget = 3 * k
        self.phase = "close"
        self._idx = 0
        self.cycle: list[int] | None = None
        self._chords: list[Edge] = []

    def propose(self, state: GameState) -> Edge | None:
        if self.phase == "close":
            if self._idx >= self.k:
                return None
            return edge(self.path[self._idx], self.path[-1])
        if self._idx >= len(self._chords):
            return None
        return self._chords[self._idx]

    def observe(self, state: GameState, e: Edge, color: Color) -> None:
        j = self._idx
        self._idx += 1
        if self.phase == "close":
            if color is not Color.BLUE:
                return
            self.cycle = self.path[j:]
            size = len(self.cycle)
            if not (self.n - self.k + 1 <= size <= self.n):
                raise InternalError(f"closed cycle size {size} outside [n-k+1, n]")
            hub = self.cycle[0]
            n, k = self.n, self.k
            self._chords = []
            for i in range(1, k + 1):
                self._chords.append(edge(hub, self.cycle[i + 1]))
                self._chords.append(edge(hub, self.cycle[n - 2 * k + i - 1]))
            self.phase = "chord"
            self._idx = 0
        # chord phase needs no bookkeeping: a fully blue pair puts the framed
        # cycle on the board and detection ends the game; otherwise reds pile
        # up on the hub until the star fires

    def clone(self) -> "StarCycle":
        c = StarCycle.__new__(StarCycle)
        c.k, c.n, c.path, c.budget = self.k, self.n, self.path, self.budget
        c.phase, c._idx = self.phase, self._idx
        c.cycle = None if self.cycle is None else list(self.cycle)
        c._chords = self._chords
        return c


def star_cycle(k: int, n: int, path: list[int] | None = None) -> StarCycle:
    return StarCycle(k, n, path=path)


# --------------------------------------------------------------------------
# Sequential composition


class SequentialComposite(BuilderStrategy):
    """Run stages in order; each stage factory receives the products of the
    finished stages. A red win anywhere short-circuits the whole chain via
    normal terminal detection."""

    def __init__(self, name: str, factories: list, budget: int):
        self.name = name
        self.factories = list(factories)
        self.budget = budget
        self._idx = 0
        self._current: BuilderStrategy | None = None
        self._products: list[dict] = []

    def propose(self, state: GameState) -> Edge | None:
        while True:
            if self._current is None:
                if self._idx >= len(self.factories):
                    return None
                try:
                    stage = self.factories[self._idx](state, self._products)
                except StrategyError:
                    raise
                except Exception as exc:
                    raise AdapterMismatch(f"stage {self._idx} of {self.name}: {exc}") from exc
                stage.setup(state)
                self._current = stage
                self._idx += 1
            e = self._current.propose(state)
            if e is not None:
                return e
            self._products.append(self._current.product)
            self._current = None

    def observe(self, state: GameState, e: Edge, color: Color) -> None:
        self._current.observe(state, e, color)

    def clone(self) -> "SequentialComposite":
        c = SequentialComposite.__new__(SequentialComposite)
        c.name, c.factories, c.budget, c._idx = self.name, self.factories, self.budget, self._idx
        c._current = None if self._current is None else self._current.clone()
        c._products = list(self._products)
        return c


def compose_sequential(parts: list, name: str = "composite", budget: int = 0) -> SequentialComposite:
    return SequentialComposite(name, parts, budget)


def path_sum_composite(k: int, m: int, n: int) -> SequentialComposite:
    """Force a red path on k vertices or a blue path on m+n, from scratch:
    build blue paths of m+k and n separately, then zig-zag join them."""
    if 2 * n <= k:
        raise PreconditionViolation("needs n > k/2 for the final join")
    factories = [
        lambda state, products: ExtendPair(k, m + k - 1),
        lambda state, products: ExtendPair(k, n - 1),
        lambda state, products: JoinPaths(k, products[0]["blue_path"], products[1]["blue_path"]),
    ]
    budget = 2 * (2 * k + m) + 2 * (k + n) + k
    return SequentialComposite("composite:path-sum", factories, budget)


def cycle_sum_composite(k: int, m: int, n: int) -> SequentialComposite:
    """Force a red path on k vertices or a blue cycle on m+n, from scratch."""
    if 2 * n <= k:
        raise PreconditionViolation("needs n > k/2 for the join")
    if m + n < k * k:
        raise PreconditionViolation("needs m+n >= k^2 for the chord phase")
    factories = [
        lambda state, products: ExtendPair(k, m + 2 * k - 1),
        lambda state, products: ExtendPair(k, n - 1),
        lambda state, products: JoinPaths(k, products[0]["blue_path"], products[1]["blue_path"]),
        # stage outputs may overshoot; the chord phase needs exactly this many
        lambda state, products: CloseCycleChord(k, m + n + k,
                                                path=products[2]["blue_path"][:m + n + k]),
    ]
    budget = 2 * (3 * k + m) + 2 * (k + n) + 3 * k
    return SequentialComposite("composite:cycle-sum", factories, budget)


def path_cycle_equiv_composite(k: int, n: int, path: list[int] | None = None) -> SequentialComposite:
    """From a blue path on n vertices, force a red path on k vertices or a
    blue cycle on exactly n vertices, in at most 6k extra rounds."""
    if n < k * k:
        raise PreconditionViolation("needs n >= k^2 for the chord phase")
    seed = list(path) if path is not None else list(range(n))
    factories = [
        lambda state, products: ExtendPair(k, k, blue_path=seed),
        lambda state, products: CloseCycleChord(k, n + k,
                                                path=products[0]["blue_path"][:n + k]),
    ]
    return SequentialComposite("composite:path-cycle-equiv", factories, 6 * k)


def star_path_sum_composite(k: int, m: int, n: int) -> SequentialComposite:
    """Force a red star with k leaves or a blue path on m+n, from scratch."""
    factories = [
        lambda state, products: StarPathExtender(k, m + k - 1),
        lambda state, products: StarPathExtender(k, n - 1),
        lambda state, products: StarJoin(k, products[0]["blue_path"], products[1]["blue_path"]),
    ]
    budget = k * (m - 1) + k * (n - 1) + k + k * k
    return SequentialComposite("composite:star-path-sum", factories, budget)


def star_cycle_sum_composite(k: int, m: int, n: int) -> SequentialComposite:
    """Force a red star with k leaves or a blue cycle on m+n, from scratch."""
    if m + n < k + 2:
        raise PreconditionViolation("needs m+n >= k+2 for the chord phase")
    factories = [
        lambda state, products: StarPathExtender(k, m + 3 * k - 1),
        lambda state, products: StarPathExtender(k, n - 1),
        lambda state, products: StarJoin(k, products[0]["blue_path"], products[1]["blue_path"]),
        lambda state, products: StarCycle(k, m + n + 2 * k,
                                          path=products[2]["blue_path"][:m + n + 2 * k]),
    ]
    budget = k * (m - 1) + k * (n - 1) + 4 * k + 3 * k * k
    return SequentialComposite("composite:star-cycle-sum", factories, budget)


def star_path_cycle_equiv_composite(k: int, n: int, path: list[int] | None = None) -> SequentialComposite:
    """From a blue path on n vertices, force a red star with k leaves or a
    blue cycle on exactly n vertices, in at most 3k + 2k^2 extra rounds."""
    if n < k + 2:
        raise PreconditionViolation("needs n >= k+2 for the chord phase")
    seed = list(path) if path is not None else list(range(n))
    factories = [
        lambda state, products: StarPathExtender(k, 2 * k, path=seed),
        lambda state, products: StarCycle(k, n + 2 * k, path=products[0]["blue_path"]),
    ]
    return SequentialComposite("composite:star-path-cycle-equiv", factories,
                               3 * k + 2 * k * k)


# --------------------------------------------------------------------------
# Mutation wrapper (testing aid): swallow one proposal so the guarantee breaks


class DropMove(BuilderStrategy):
    """Plays a throwaway fresh edge instead of the inner strategy's n-th
    proposal while the inner bookkeeping believes its move was made. Used to
    check that the exhaustive verifier actually catches broken strategies."""

    def __init__(self, inner: BuilderStrategy, drop_index: int):
        self.inner = inner
        self.drop_index = drop_index
        self.name = inner.name + ":dropped"
        self.budget = inner.budget
        self._count = 0
        self._lie: Edge | None = None

    def setup(self, state: GameState) -> None:
        self.inner.setup(state)

    def propose(self, state: GameState) -> Edge | None:
        e = self.inner.propose(state)
        if e is None:
            return None
        if self._count == self.drop_index:
            self._lie = e
            e = edge(state.fresh_vertex(), state.fresh_vertex())
        self._count += 1
        return e

    def observe(self, state: GameState, e: Edge, color: Color) -> None:
        if self._lie is not None:
            self.inner.observe(state, self._lie, color)
            self._lie = None
        else:
            self.inner.observe(state, e, color)

    def clone(self) -> "DropMove":
        c = DropMove.__new__(DropMove)
        c.inner = self.inner.clone()
        c.drop_index, c.name, c.budget = self.drop_index, self.name, self.budget
        c._count, c._lie = self._count, self._lie
        return c


# --------------------------------------------------------------------------
# Game loop


# --------------------------------------------------------------------------
# Named setups: stable strategy identifiers for the CLI and the session API.
# Each entry yields a target, a declared budget, and a factory building a
# fresh (seeded state, strategy) pair per call.

STRATEGY_NAMES = (
    "extend-pair", "join-paths", "close-cycle-chord", "star-extend",
    "star-extend-by", "star-join", "star-cycle",
    "composite:path-sum", "composite:cycle-sum", "composite:path-cycle-equiv",
    "composite:star-path-sum", "composite:star-cycle-sum",
    "composite:star-path-cycle-equiv",
)


def named_setup(name: str, k: int | None = None, n: int | None = None,
                m: int | None = None, t: int | None = None,
                seed_blue_path: int | None = None):
    """Resolve a strategy id plus parameters into (setup, budget, target).

    setup() builds a fresh (GameState, BuilderStrategy) pair per call, with
    the seeded precondition each lemma expects.
    """
    from .core import GameState, seed_blue_path as seed_path, seeded_state

    def need(**kw):
        missing = [key for key, val in kw.items() if val is None]
        if missing:
            raise PreconditionViolation(f"{name} needs --" + ", --".join(missing))
        return [kw[key] for key in kw]

    if name == "extend-pair":
        if seed_blue_path is not None:
            (k, t, s) = need(k=k, t=t, seed_blue_path=seed_blue_path)
            target = TargetSpec(PathTarget(k), PathTarget(s + t))
            return (lambda: (seed_path(s, target),
                             ExtendPair(k, t, blue_path=list(range(s)))),
                    2 * (k + t), target)
        (k, n) = need(k=k, n=n)
        target = TargetSpec(PathTarget(k), PathTarget(n))
        return (lambda: (GameState.new(target), ExtendPair(k, n - 1)),
                2 * (k + n), target)
    if name == "join-paths":
        (k, m, n) = need(k=k, m=m, n=n)
        target = TargetSpec(PathTarget(k), PathTarget(m + n - k))
        return (lambda: (seeded_state(target, [m, n]),
                         JoinPaths(k, list(range(m)), list(range(m, m + n)))),
                k - 1, target)
    if name == "close-cycle-chord":
        (k, n) = need(k=k, n=n)
        target = TargetSpec(PathTarget(k), CycleTarget(n - k))
        return (lambda: (seed_path(n, target), CloseCycleChord(k, n)),
                2 * k, target)
    if name == "star-extend":
        (k,) = need(k=k)
        s = seed_blue_path if seed_blue_path is not None else n
        (s,) = need(seed_blue_path=s)
        target = TargetSpec(StarTarget(k), PathTarget(s + 1))
        return (lambda: (seed_path(s, target), star_extend(k, path=list(range(s)))),
                k, target)
    if name == "star-extend-by":
        (k, t) = need(k=k, t=t)
        s = seed_blue_path if seed_blue_path is not None else n
        (s,) = need(seed_blue_path=s)
        target = TargetSpec(StarTarget(k), PathTarget(s + t))
        return (lambda: (seed_path(s, target), star_extend_by(k, t, path=list(range(s)))),
                t * k, target)
    if name == "star-join":
        (k, m, n) = need(k=k, m=m, n=n)
        target = TargetSpec(StarTarget(k), PathTarget(m + n - k))
        return (lambda: (seeded_state(target, [m, n]),
                         StarJoin(k, list(range(m)), list(range(m, m + n)))),
                k, target)
    if name == "star-cycle":
        (k, n) = need(k=k, n=n)
        target = TargetSpec(StarTarget(k), CycleTarget(n - 2 * k))
        return (lambda: (seed_path(n, target), StarCycle(k, n)),
                3 * k, target)
    if name == "composite:path-sum":
        (k, m, n) = need(k=k, m=m, n=n)
        target = TargetSpec(PathTarget(k), PathTarget(m + n))
        proto = path_sum_composite(k, m, n)
        return (lambda: (GameState.new(target), path_sum_composite(k, m, n)),
                proto.budget, target)
    if name == "composite:cycle-sum":
        (k, m, n) = need(k=k, m=m, n=n)
        target = TargetSpec(PathTarget(k), CycleTarget(m + n))
        proto = cycle_sum_composite(k, m, n)
        return (lambda: (GameState.new(target), cycle_sum_composite(k, m, n)),
                proto.budget, target)
    if name == "composite:path-cycle-equiv":
        (k, n) = need(k=k, n=n)
        target = TargetSpec(PathTarget(k), CycleTarget(n))
        proto = path_cycle_equiv_composite(k, n)
        return (lambda: (seed_path(n, target), path_cycle_equiv_composite(k, n)),
                proto.budget, target)
    if name == "composite:star-path-sum":
        (k, m, n) = need(k=k, m=m, n=n)
        target = TargetSpec(StarTarget(k), PathTarget(m + n))
        proto = star_path_sum_composite(k, m, n)
        return (lambda: (GameState.new(target), star_path_sum_composite(k, m, n)),
                proto.budget, target)
    if name == "composite:star-cycle-sum":
        (k, m, n) = need(k=k, m=m, n=n)
        target = TargetSpec(StarTarget(k), CycleTarget(m + n))
        proto = star_cycle_sum_composite(k, m, n)
        return (lambda: (GameState.new(target), star_cycle_sum_composite(k, m, n)),
                proto.budget, target)
    if name == "composite:star-path-cycle-equiv":
        (k, n) = need(k=k, n=n)
        target = TargetSpec(StarTarget(k), CycleTarget(n))
        proto = star_path_cycle_equiv_composite(k, n)
        return (lambda: (seed_path(n, target), star_path_cycle_equiv_composite(k, n)),
                proto.budget, target)
    raise KeyError(f"unknown strategy id {name!r}")


@dataclass
class StrategyOutcome:
    result: str  # "red_win" | "blue_win"
    witness: Witness
    rounds_used: int
    final_state: GameState


def run_strategy(seed: GameState, strategy: BuilderStrategy, painter,
                 budget: int | None = None) -> StrategyOutcome:
    """Alternate propose/color until terminal; the painter is anything with a
    color_response(state, edge) method."""
    if budget is None:
        budget = strategy.budget
    state = seed.copy()
    strategy.setup(state)
    start = state.round
    while state.terminal is None:
        if state.round - start >= budget:
            raise BudgetExceeded(
                f"{strategy.name}: no terminal within {budget} rounds")
        e = strategy.propose(state)
        if e is None:
            raise FailedGuarantee(
                f"{strategy.name} stopped proposing but no target is on the board")
        choice = painter.color_response(state, e)
        state = play_edge(state, e, choice)
        strategy.observe(state, e, state.board.color_of(e))
    witness = state.terminal.witness
    witness.validate(state.board)
    return StrategyOutcome(state.terminal.result, witness, state.round - start, state)
