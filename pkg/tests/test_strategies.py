import pytest

from ramseylab.core import (
    Color,
    CycleTarget,
    GameState,
    PathTarget,
    StarTarget,
    TargetSpec,
    detect_blue_cycle,
    seed_blue_path,
    seeded_state,
)
from ramseylab.strategies import (
    BudgetExceeded,
    DropMove,
    PreconditionViolation,
    StrategyError,
    close_cycle_chord,
    compose_sequential,
    cycle_sum_composite,
    extend_pair,
    join_paths,
    path_cycle_equiv_composite,
    path_sum_composite,
    run_strategy,
    star_cycle,
    star_cycle_sum_composite,
    star_extend,
    star_extend_by,
    star_join,
    star_path_cycle_equiv_composite,
    star_path_sum_composite,
)
from ramseylab.adversaries import AllBlue, AllRed, Scripted, verify_guarantee


def pp(k, n):
    return TargetSpec(PathTarget(k), PathTarget(n))


def sp(k, n):
    return TargetSpec(StarTarget(k), PathTarget(n))


# --------------------------------------------------------------------------
# extend_pair


def test_extend_pair_seeded_guarantee():
    target = pp(3, 4)
    rep = verify_guarantee(
        lambda: (seed_blue_path(2, target), extend_pair(3, 2, blue_path=[0, 1])),
        budget=10, expect=target)
    assert rep.passed
    assert rep.worst_rounds <= 10


def test_extend_pair_from_scratch_guarantee():
    target = pp(3, 4)
    rep = verify_guarantee(
        lambda: (GameState.new(target), extend_pair(3, 3)),
        budget=14, expect=target)
    assert rep.passed


def test_extend_pair_all_blue_grows_two_per_block():
    target = pp(3, 20)  # blue goal far away so we can watch the bookkeeping
    state = seed_blue_path(2, target)
    s = extend_pair(3, 6, blue_path=[0, 1])
    state = state.copy()
    s.setup(state)
    from ramseylab.core import play_edge
    sizes = [len(s.blue)]
    for _ in range(3):  # three full blocks of blue/blue answers
        for _ in range(2):
            e = s.propose(state)
            state = play_edge(state, e, Color.BLUE)
            s.observe(state, e, Color.BLUE)
        sizes.append(len(s.blue))
    assert sizes == [2, 4, 6, 8]


def test_extend_pair_all_red_wins_red():
    target = pp(3, 9)
    out = run_strategy(seed_blue_path(2, target), extend_pair(3, 7, blue_path=[0, 1]),
                       AllRed(), budget=20)
    assert out.result == "red_win"
    assert out.rounds_used == 2  # first block: join red, then tip extension red


# --------------------------------------------------------------------------
# join_paths


def test_join_paths_guarantee():
    target = pp(3, 5)
    rep = verify_guarantee(
        lambda: (seeded_state(target, [4, 4]),
                 join_paths(3, list(range(4)), list(range(4, 8)))),
        budget=2, expect=target)
    assert rep.passed
    assert rep.leaves <= 4


def test_join_paths_first_blue_keeps_everything():
    target = pp(3, 8)
    state = seeded_state(target, [4, 4])
    out = run_strategy(state, join_paths(3, list(range(4)), list(range(4, 8))),
                       AllBlue(), budget=2)
    assert out.result == "blue_win"
    assert len(out.witness.vertices) == 8  # m + n, nothing lost at i = 1


def test_join_paths_precondition():
    with pytest.raises(PreconditionViolation):
        join_paths(4, [0, 1], [2, 3])  # min(m, n) = 2 <= k/2


# --------------------------------------------------------------------------
# close_cycle_chord


def test_close_cycle_chord_guarantee_and_exact_cycle():
    target = TargetSpec(PathTarget(2), CycleTarget(6))
    rep = verify_guarantee(
        lambda: (seed_blue_path(8, target), close_cycle_chord(2, 8)),
        budget=4, expect=target)
    assert rep.passed
    # every blue-win leaf carries a cycle on exactly n-k vertices by target
    # construction; the alpha identity is asserted inside the strategy


def test_close_cycle_chord_worked_example_n30():
    # painter closes the fold at the third proposal: cycle on 28 vertices,
    # chord offset 4, first chord blue gives the 25-cycle
    t = TargetSpec(PathTarget(5), CycleTarget(25))
    strat = close_cycle_chord(5, 30)
    out = run_strategy(seed_blue_path(30, t), strat, Scripted("RRBB"), budget=10)
    assert out.result == "blue_win"
    assert len(out.witness.vertices) == 25
    assert strat.alpha == 4
    assert len(strat.cycle) == 28
    assert detect_blue_cycle(out.final_state.board, 25) is not None


@pytest.mark.parametrize("n,k", [(8, 2), (12, 3), (30, 5)])
def test_chord_offset_identity(n, k):
    for N in range(n - k + 1, n + 1):
        alpha = N + k - n + 1
        assert N - alpha + 1 == n - k
        assert k * alpha <= N  # guaranteed by n >= k^2 + k


def test_close_cycle_chord_threshold():
    with pytest.raises(PreconditionViolation):
        close_cycle_chord(3, 11)  # needs n >= k^2 + k = 12


# --------------------------------------------------------------------------
# star strategies


def test_star_extend_guarantee():
    target = sp(3, 4)
    rep = verify_guarantee(
        lambda: (seed_blue_path(3, target), star_extend(3, path=[0, 1, 2])),
        budget=3, expect=target)
    assert rep.passed


def test_star_extend_all_blue_one_round():
    target = sp(3, 4)
    out = run_strategy(seed_blue_path(3, target), star_extend(3, path=[0, 1, 2]),
                       AllBlue(), budget=3)
    assert out.result == "blue_win"
    assert out.rounds_used == 1


def test_star_extend_all_red_exactly_k_rounds():
    target = sp(3, 4)
    out = run_strategy(seed_blue_path(3, target), star_extend(3, path=[0, 1, 2]),
                       AllRed(), budget=3)
    assert out.result == "red_win"
    assert out.rounds_used == 3
    assert out.witness.kind == "red_star"


def test_star_extend_by_guarantee():
    target = sp(2, 5)
    rep = verify_guarantee(
        lambda: (seed_blue_path(2, target), star_extend_by(2, 3, path=[0, 1])),
        budget=6, expect=target)
    assert rep.passed


def test_star_extend_by_zero_is_identity():
    target = sp(2, 2)
    out = run_strategy(seed_blue_path(2, target), star_extend_by(2, 0, path=[0, 1]),
                       AllRed(), budget=0)
    assert out.rounds_used == 0
    assert out.result == "blue_win"  # the seed itself is the target


def test_star_join_guarantee():
    target = sp(2, 4)
    rep = verify_guarantee(
        lambda: (seeded_state(target, [3, 3]), star_join(2, [0, 1, 2], [3, 4, 5])),
        budget=2, expect=target)
    assert rep.passed


def test_star_join_first_blue_full_length():
    target = sp(2, 6)
    out = run_strategy(seeded_state(target, [3, 3]),
                       star_join(2, [0, 1, 2], [3, 4, 5]), AllBlue(), budget=2)
    assert out.result == "blue_win"
    assert len(out.witness.vertices) == 6


def test_star_join_precondition():
    with pytest.raises(PreconditionViolation):
        star_join(2, [0], [1, 2, 3])  # m = 1 < k


def test_star_cycle_guarantee():
    target = TargetSpec(StarTarget(2), CycleTarget(4))
    rep = verify_guarantee(
        lambda: (seed_blue_path(8, target), star_cycle(2, 8)),
        budget=6, expect=target)
    assert rep.passed


def test_star_cycle_worked_example_n20():
    # phase A closes at the fifth proposal (N = 16); first chord pair blue
    # frames the 10-cycle
    t = TargetSpec(StarTarget(5), CycleTarget(10))
    strat = star_cycle(5, 20)
    out = run_strategy(seed_blue_path(20, t), strat, Scripted("RRRRBBB"), budget=15)
    assert out.result == "blue_win"
    assert len(out.witness.vertices) == 10
    assert len(strat.cycle) == 16


@pytest.mark.parametrize("n,k", [(8, 2), (20, 5)])
def test_star_cycle_length_identity(n, k):
    for j in range(1, k + 1):
        assert (n - 2 * k + j) - (j + 2) + 2 == n - 2 * k


def test_star_cycle_precondition():
    with pytest.raises(PreconditionViolation):
        star_cycle(2, 7)  # needs n >= 3k + 2 = 8


# --------------------------------------------------------------------------
# composites


def test_path_sum_composite_guarantee():
    target = pp(3, 6)
    comp = path_sum_composite(3, 3, 3)
    rep = verify_guarantee(lambda: (GameState.new(target), path_sum_composite(3, 3, 3)),
                           budget=comp.budget, expect=target, enum_cap=2 ** 40)
    assert rep.passed
    assert comp.budget == 2 * (2 * 3 + 3) + 2 * (3 + 3) + 3


def test_path_sum_composite_exercises_all_stages():
    # k=2 keeps the first stage short of the final target, forcing the join
    target = pp(2, 6)
    comp = path_sum_composite(2, 3, 3)
    rep = verify_guarantee(lambda: (GameState.new(target), path_sum_composite(2, 3, 3)),
                           budget=comp.budget, expect=target, enum_cap=2 ** 40)
    assert rep.passed


def test_cycle_sum_composite_guarantee():
    target = TargetSpec(PathTarget(2), CycleTarget(4))
    comp = cycle_sum_composite(2, 2, 2)
    rep = verify_guarantee(lambda: (GameState.new(target), cycle_sum_composite(2, 2, 2)),
                           budget=comp.budget, expect=target, enum_cap=2 ** 40)
    assert rep.passed


def test_path_to_cycle_sandwich_composite():
    # seeded blue path to blue cycle of the same size within 6k extra rounds
    target = TargetSpec(PathTarget(2), CycleTarget(8))
    comp = path_cycle_equiv_composite(2, 8)
    assert comp.budget == 12
    rep = verify_guarantee(lambda: (seed_blue_path(8, target), path_cycle_equiv_composite(2, 8)),
                           budget=12, expect=target)
    assert rep.passed


def test_star_composites_guarantee():
    t1 = sp(2, 4)
    c1 = star_path_sum_composite(2, 2, 2)
    rep = verify_guarantee(lambda: (GameState.new(t1), star_path_sum_composite(2, 2, 2)),
                           budget=c1.budget, expect=t1, enum_cap=2 ** 40)
    assert rep.passed

    t2 = TargetSpec(StarTarget(2), CycleTarget(4))
    c2 = star_cycle_sum_composite(2, 2, 2)
    rep = verify_guarantee(lambda: (GameState.new(t2), star_cycle_sum_composite(2, 2, 2)),
                           budget=c2.budget, expect=t2, enum_cap=2 ** 40)
    assert rep.passed

    t3 = TargetSpec(StarTarget(2), CycleTarget(8))
    c3 = star_path_cycle_equiv_composite(2, 8)
    assert c3.budget == 3 * 2 + 2 * 4
    rep = verify_guarantee(lambda: (seed_blue_path(8, t3), star_path_cycle_equiv_composite(2, 8)),
                           budget=c3.budget, expect=t3, enum_cap=2 ** 40)
    assert rep.passed


def test_adapter_mismatch_is_loud():
    from ramseylab.strategies import AdapterMismatch, compose_sequential

    comp = compose_sequential(
        [lambda state, products: join_paths(3, products[0]["blue_path"], [9])],
        name="broken", budget=5)
    state = seed_blue_path(2, pp(3, 9))
    with pytest.raises(AdapterMismatch):
        run_strategy(state, comp, AllRed(), budget=5)


def test_empty_composite_is_identity():
    comp = compose_sequential([], name="noop")
    state = seed_blue_path(3, pp(2, 3))  # terminal at seed
    out = run_strategy(state, comp, AllRed(), budget=0)
    assert out.rounds_used == 0


def test_composite_budget_formulas():
    k, m, n = 3, 4, 5
    assert star_path_sum_composite(k, m, n).budget == k * (m - 1) + k * (n - 1) + k + k * k
    assert star_cycle_sum_composite(k, m, n).budget == k * (m - 1) + k * (n - 1) + 4 * k + 3 * k * k
    assert star_path_cycle_equiv_composite(k, 2 * k * k).budget == 3 * k + 2 * k * k


# --------------------------------------------------------------------------
# run mechanics


def test_determinism_same_script_same_transcript():
    target = pp(3, 4)
    outs = []
    for _ in range(2):
        out = run_strategy(seed_blue_path(2, target),
                           extend_pair(3, 2, blue_path=[0, 1]),
                           Scripted("BRBRBRBRBR"), budget=10)
        outs.append([(e.edge, e.color) for e in out.final_state.transcript()])
    assert outs[0] == outs[1]


def test_budget_exceeded_raises():
    target = pp(9, 9)
    with pytest.raises(BudgetExceeded):
        run_strategy(seed_blue_path(2, target), extend_pair(9, 7, blue_path=[0, 1]),
                     AllBlue(), budget=1)


def test_mutated_strategies_fail_with_counterexample():
    cases = []
    t1 = pp(3, 4)
    cases.append((lambda: (seed_blue_path(2, t1),
                           DropMove(extend_pair(3, 2, blue_path=[0, 1]), 1)), 10, t1))
    t2 = pp(3, 5)
    cases.append((lambda: (seeded_state(t2, [4, 4]),
                           DropMove(join_paths(3, list(range(4)), list(range(4, 8))), 1)), 2, t2))
    t3 = TargetSpec(PathTarget(2), CycleTarget(6))
    cases.append((lambda: (seed_blue_path(8, t3),
                           DropMove(close_cycle_chord(2, 8), 1)), 4, t3))
    t4 = sp(3, 4)
    cases.append((lambda: (seed_blue_path(3, t4),
                           DropMove(star_extend(3, path=[0, 1, 2]), 1)), 3, t4))
    t5 = sp(2, 5)
    cases.append((lambda: (seed_blue_path(2, t5),
                           DropMove(star_extend_by(2, 3, path=[0, 1]), 1)), 6, t5))
    t6 = sp(2, 4)
    cases.append((lambda: (seeded_state(t6, [3, 3]),
                           DropMove(star_join(2, [0, 1, 2], [3, 4, 5]), 1)), 2, t6))
    t7 = TargetSpec(StarTarget(2), CycleTarget(4))
    cases.append((lambda: (seed_blue_path(8, t7),
                           DropMove(star_cycle(2, 8), 1)), 6, t7))
    for setup, budget, target in cases:
        rep = verify_guarantee(setup, budget=budget, expect=target)
        assert not rep.passed
        assert rep.counterexample is not None
        # the counterexample replays to a failure
        state, strategy = setup()
        with pytest.raises(StrategyError):
            run_strategy(state, strategy, Scripted(rep.counterexample), budget=budget)
