import random
from itertools import permutations

import pytest

from ramseylab.core import Color, ColoredGraph, edge


def random_colored_graph(rng: random.Random, n_vertices: int,
                         p_red: float = 0.25, p_blue: float = 0.25) -> ColoredGraph:
    g = ColoredGraph()
    for u in range(n_vertices):
        for v in range(u + 1, n_vertices):
            r = rng.random()
            if r < p_red:
                g.add_edge(edge(u, v), Color.RED)
            elif r < p_red + p_blue:
                g.add_edge(edge(u, v), Color.BLUE)
    return g


def brute_force_has_path(g: ColoredGraph, color: Color, k: int) -> bool:
    """Oracle: enumerate every ordered vertex tuple of size k."""
    if k == 1:
        return True
    vs = sorted(g.touched)
    for combo in permutations(vs, k):
        if all(g.color_of(edge(a, b)) is color for a, b in zip(combo, combo[1:])):
            return True
    return False


def brute_force_has_cycle(g: ColoredGraph, color: Color, n: int) -> bool:
    """Oracle: enumerate every ordered vertex tuple of size n plus the closing edge."""
    vs = sorted(g.touched)
    for combo in permutations(vs, n):
        if combo[0] != min(combo):
            continue
        ring = list(combo) + [combo[0]]
        if all(g.color_of(edge(a, b)) is color for a, b in zip(ring, ring[1:])):
            return True
    return False


@pytest.fixture
def rng():
    return random.Random(0)
