"""Builder-Painter online Ramsey game lab."""

__version__ = "0.1.0"

from .core import (  # noqa: F401
    Color,
    ColoredGraph,
    CycleTarget,
    GameState,
    PathTarget,
    StarTarget,
    TargetSpec,
    Witness,
    detect_blue_cycle,
    detect_blue_path,
    detect_red_path,
    detect_red_star,
    play_edge,
    seed_blue_path,
    seeded_state,
)
