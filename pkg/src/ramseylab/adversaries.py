"""Painter policies, including the exhaustive adversary that proves strategy
guarantees at desk scale by walking every painter color sequence."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Optional

from .core import Color, Edge, GameState, TargetSpec, edge, play_edge
from .strategies import BuilderStrategy, StrategyError


class ScriptExhausted(Exception):
    pass


class EnumerationCapExceeded(Exception):
    def __init__(self, required: int, cap: int):
        super().__init__(f"enumeration needs up to {required} leaves, cap is {cap}")
        self.required = required
        self.cap = cap


def _decisions_so_far(state: GameState) -> int:
    """Number of rounds Painter actually decided (repeats do not consult him)."""
    n = 0
    node = state._tail
    while node is not None:
        if not node.entry.repeat:
            n += 1
        node = node.prev
    return n


class PainterPolicy:
    def color_response(self, state: GameState, proposed: Edge) -> Color:
        raise NotImplementedError


class AllRed(PainterPolicy):
    def color_response(self, state, proposed):
        return Color.RED


class AllBlue(PainterPolicy):
    def color_response(self, state, proposed):
        return Color.BLUE


class Alternating(PainterPolicy):
    def __init__(self, start: Color = Color.RED):
        self.start = start

    def color_response(self, state, proposed):
        return self.start if _decisions_so_far(state) % 2 == 0 else self.start.opposite


class RandomSeeded(PainterPolicy):
    """Reproducible: the color is a pure function of (seed, decision index)."""

    def __init__(self, seed: int):
        self.seed = seed

    def color_response(self, state, proposed):
        r = random.Random(f"{self.seed}:{_decisions_so_far(state)}")
        return Color.RED if r.random() < 0.5 else Color.BLUE


class Scripted(PainterPolicy):
    def __init__(self, colors):
        if isinstance(colors, str):
            colors = [Color.RED if ch in "Rr" else Color.BLUE for ch in colors]
        self.colors = list(colors)

    def color_response(self, state, proposed):
        i = _decisions_so_far(state)
        if i >= len(self.colors):
            raise ScriptExhausted(f"script of length {len(self.colors)} exhausted")
        return self.colors[i]


class GreedyAvoid(PainterPolicy):
    """Smoke-test adversary: avoid completing a target now, then (with
    lookahead) avoid colors from which Builder mates within `depth` rounds.
    Ties go red."""

    MAX_DEPTH = 2

    def __init__(self, depth: int = 0):
        self.depth = min(depth, self.MAX_DEPTH)

    def color_response(self, state, proposed):
        best, best_score = Color.RED, -1
        for c in (Color.RED, Color.BLUE):
            child = play_edge(state, proposed, c)
            if child.terminal is not None:
                score = 0
            elif self.depth > 0 and not _survives(child, self.depth):
                score = 1
            else:
                score = 2
            if score > best_score:
                best, best_score = c, score
        return best


def _candidate_edges(state: GameState) -> list[Edge]:
    touched = sorted(state.board.touched)
    f = state.board.next_fresh
    out = []
    for i, u in enumerate(touched):
        for v in touched[i + 1:]:
            if state.board.color_of((u, v)) is None:
                out.append((u, v))
    out.extend(edge(u, f) for u in touched)
    out.append((f, f + 1))
    return out


def _survives(state: GameState, rounds: int) -> bool:
    """Painter survives `rounds` more rounds against every Builder move."""
    if state.terminal is not None:
        return False
    if rounds == 0:
        return True
    for e in _candidate_edges(state):
        if not any(_survives(play_edge(state, e, c), rounds - 1)
                   for c in (Color.RED, Color.BLUE)):
            return False
    return True


class Exhaustive(PainterPolicy):
    """Marker policy: realized by verify_guarantee, not by per-move calls."""

    def color_response(self, state, proposed):
        raise NotImplementedError(
            "the exhaustive adversary is the verifier; use verify_guarantee")


# --------------------------------------------------------------------------
# Exhaustive verification


@dataclass
class VerificationReport:
    strategy: str
    params: dict
    budget: int
    passed: bool
    worst_rounds: int
    leaves: int
    counterexample: Optional[str] = None
    failure: Optional[str] = None
    coverage_num: int = 0  # sum of 2^(budget - branches) over leaves; full tree = 2^budget

    def to_dict(self) -> dict:
        d = {"strategy": self.strategy, "params": self.params, "budget": self.budget,
             "pass": self.passed, "worst_rounds": self.worst_rounds, "leaves": self.leaves,
             "counterexample": self.counterexample}
        if self.failure:
            d["failure"] = self.failure
        return d


def verify_guarantee(setup: Callable[[], tuple[GameState, BuilderStrategy]],
                     budget: int,
                     expect: TargetSpec | None = None,
                     enum_cap: int = 2 ** 22,
                     params: dict | None = None) -> VerificationReport:
    """Walk the full binary tree of painter choices (red branch first,
    depth-first, pruned at terminal nodes). A pass is a machine proof of the
    round bound at these parameters: the game is finite and Builder is
    deterministic.

    setup() must build a fresh (seeded state, strategy) pair per call.
    """
    if 2 ** budget > enum_cap:
        raise EnumerationCapExceeded(2 ** budget, enum_cap)
    state, strategy = setup()
    if expect is not None and state.target != expect:
        raise ValueError(f"seed target {state.target} differs from expected {expect}")
    state = state.copy()
    strategy.setup(state)
    start = state.round

    report = VerificationReport(strategy=strategy.name, params=params or {},
                                budget=budget, passed=True, worst_rounds=0, leaves=0)
    script: list[str] = []

    def fail(reason: str) -> bool:
        if report.passed:
            report.passed = False
            report.failure = reason
            report.counterexample = "".join(script)
        return False

    def walk(state: GameState, strategy: BuilderStrategy, branches: int) -> bool:
        while True:
            if state.terminal is not None:
                try:
                    state.terminal.witness.validate(state.board)
                except ValueError as exc:
                    return fail(f"invalid witness: {exc}")
                report.leaves += 1
                report.worst_rounds = max(report.worst_rounds, state.round - start)
                report.coverage_num += 1 << (budget - branches)
                return True
            if state.round - start >= budget:
                return fail("budget exhausted without a terminal")
            try:
                e = strategy.propose(state)
            except StrategyError as exc:
                return fail(f"{type(exc).__name__}: {exc}")
            if e is None:
                return fail("strategy stopped proposing with no target present")
            if state.board.color_of(e) is not None:
                # repeated edge: the round is spent, Painter has no say
                state = play_edge(state, e, Color.RED)
                try:
                    strategy.observe(state, e, state.board.color_of(e))
                except StrategyError as exc:
                    return fail(f"{type(exc).__name__}: {exc}")
                continue
            for c in (Color.RED, Color.BLUE):
                branch_strategy = strategy.clone() if c is Color.RED else strategy
                script.append("R" if c is Color.RED else "B")
                child = play_edge(state, e, c)
                try:
                    branch_strategy.observe(child, e, c)
                except StrategyError as exc:
                    return fail(f"{type(exc).__name__}: {exc}")
                if not walk(child, branch_strategy, branches + 1):
                    return False
                script.pop()
            return True

    walk(state, strategy, 0)
    return report
