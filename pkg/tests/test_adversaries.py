from fractions import Fraction

import pytest

from ramseylab.adversaries import (
    AllBlue,
    AllRed,
    Alternating,
    EnumerationCapExceeded,
    Exhaustive,
    GreedyAvoid,
    RandomSeeded,
    Scripted,
    ScriptExhausted,
    verify_guarantee,
)
from ramseylab.core import (
    Color,
    GameState,
    PathTarget,
    TargetSpec,
    play_edge,
    seed_blue_path,
)
from ramseylab.strategies import DropMove, extend_pair, run_strategy


PP34 = TargetSpec(PathTarget(3), PathTarget(4))


def test_all_blue_and_all_red():
    s = GameState.new(TargetSpec(PathTarget(9), PathTarget(9)))
    assert AllBlue().color_response(s, (0, 1)) is Color.BLUE
    assert AllRed().color_response(s, (0, 1)) is Color.RED


def test_alternating_follows_decisions_not_rounds():
    s = GameState.new(TargetSpec(PathTarget(9), PathTarget(9)))
    p = Alternating(Color.BLUE)
    assert p.color_response(s, (0, 1)) is Color.BLUE
    s = play_edge(s, (0, 1), Color.BLUE)
    assert p.color_response(s, (1, 2)) is Color.RED
    s = play_edge(s, (0, 1), Color.RED)  # repeat: no painter decision consumed
    assert p.color_response(s, (1, 2)) is Color.RED


def test_random_seeded_reproducible():
    s = GameState.new(TargetSpec(PathTarget(9), PathTarget(9)))
    a = [RandomSeeded(5).color_response(s, (0, 1)) for _ in range(3)]
    b = [RandomSeeded(5).color_response(s, (0, 1)) for _ in range(3)]
    assert a == b


def test_scripted_exhaustion():
    s = GameState.new(TargetSpec(PathTarget(9), PathTarget(9)))
    p = Scripted([Color.RED, Color.BLUE])
    s = play_edge(s, (0, 1), p.color_response(s, (0, 1)))
    s = play_edge(s, (1, 2), p.color_response(s, (1, 2)))
    with pytest.raises(ScriptExhausted):
        p.color_response(s, (2, 3))


def test_greedy_avoid_dodges_immediate_completion():
    t = TargetSpec(PathTarget(9), PathTarget(3))
    s = GameState.new(t)
    s = play_edge(s, (0, 1), Color.BLUE)
    # blue on (1,2) would complete the blue path; greedy must pick red
    assert GreedyAvoid(0).color_response(s, (1, 2)) is Color.RED


def test_greedy_avoid_ties_red():
    s = GameState.new(TargetSpec(PathTarget(9), PathTarget(9)))
    assert GreedyAvoid(0).color_response(s, (0, 1)) is Color.RED


def test_greedy_avoid_lookahead_sees_forks():
    # red target K_{1,2} is one move from done after two red edges at vertex 0;
    # a depth-1 greedy painter refuses the second red
    from ramseylab.core import StarTarget
    t = TargetSpec(StarTarget(2), PathTarget(3))
    s = GameState.new(t)
    s = play_edge(s, (0, 1), Color.RED)
    c = GreedyAvoid(1).color_response(s, (0, 2))
    assert c is Color.BLUE  # red would lose instantly; blue survives a round


def test_exhaustive_is_a_marker():
    s = GameState.new(PP34)
    with pytest.raises(NotImplementedError):
        Exhaustive().color_response(s, (0, 1))


# --------------------------------------------------------------------------
# verify_guarantee mechanics


def setup_pair():
    state = seed_blue_path(2, PP34)
    return state, extend_pair(3, 2, blue_path=[0, 1])


def test_verify_passes_and_counts_leaves():
    rep = verify_guarantee(setup_pair, budget=10, expect=PP34)
    assert rep.passed
    assert rep.leaves >= 2
    assert rep.worst_rounds <= 10
    assert rep.counterexample is None


def test_leaf_coverage_is_exact():
    # sum over leaves of 2^-branches must be exactly 1: pruning accounted
    rep = verify_guarantee(setup_pair, budget=10, expect=PP34)
    assert Fraction(rep.coverage_num, 2 ** rep.budget) == 1


def test_enumeration_cap_guard():
    with pytest.raises(EnumerationCapExceeded):
        verify_guarantee(setup_pair, budget=30, expect=PP34, enum_cap=2 ** 22)


def test_broken_strategy_yields_replayable_counterexample():
    def broken():
        state = seed_blue_path(2, PP34)
        return state, DropMove(extend_pair(3, 2, blue_path=[0, 1]), 1)

    rep = verify_guarantee(broken, budget=10, expect=PP34)
    assert not rep.passed
    assert rep.counterexample
    state, strategy = broken()
    from ramseylab.strategies import StrategyError
    with pytest.raises(StrategyError):
        run_strategy(state, strategy, Scripted(rep.counterexample), budget=10)


def test_report_json_shape():
    rep = verify_guarantee(setup_pair, budget=10, expect=PP34,
                           params={"k": 3, "t": 2})
    d = rep.to_dict()
    assert d["pass"] is True
    assert d["strategy"] == "extend-pair"
    assert d["params"] == {"k": 3, "t": 2}
    assert set(d) >= {"strategy", "params", "budget", "pass", "worst_rounds",
                      "leaves", "counterexample"}


def test_verify_rejects_target_mismatch():
    with pytest.raises(ValueError):
        verify_guarantee(setup_pair, budget=10,
                         expect=TargetSpec(PathTarget(4), PathTarget(4)))
