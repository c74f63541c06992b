"""Backtracking levels of plays in game arenas.

Covers how far a play jumps back along its pointers and what that does to
the length of an interaction between two bounded innocent strategies.
"""

from .backtrack import (
    ActivityTable,
    LevelReport,
    activity,
    crosses,
    inactivates,
    level_report,
    move_level,
    move_levels,
    strategy_level,
)
from .bounds import SymbolicTower, hyperexp, interaction_bound
from .core import (
    INFINITE,
    STAR,
    Arena,
    InfiniteDepthError,
    InvalidPlayError,
    NotVisibleError,
    Play,
    Polarity,
    Violation,
    arena_depth,
    validate_arena,
    validate_justified_sequence,
    validate_play,
)
from .expansion import ExpansionTree, Term, check_expansion_ordering, expansion_to_strategy, prenex_arena
from .gadget import GadgetPlay, apply_gadget, normalization_report, strip_gadget, verify_gadget_views
from .generate import GenConfig
from .strategy import InnocentStrategy, Interaction, Status, interact, validate_strategy
from .trim import TrimSpec, answer_cost_violations, complexities, lex_less, trim, trimmed_complexity, verify_spring
from .views import View, is_visible, view, view_of_prefix, view_shape

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
