from __future__ import annotations

import sys
from pathlib import Path

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from hogames.generate import GenConfig, case_rng, random_arena, random_play  # noqa: E402

settings.register_profile("default", max_examples=150, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def visible_plays(draw, max_length: int = 30):
    """A random arena and a visible play over it, driven by hypothesis-chosen knobs."""
    cfg = GenConfig(
        seed=draw(st.integers(0, 2**63 - 1)),
        depth=(draw(st.integers(2, 8)),) * 2,
        branching=(1, draw(st.integers(1, 3))),
        length=max_length,
        propensity=draw(st.floats(0.0, 1.0)),
    )
    rng = case_rng(cfg.seed, 0, "hypothesis")
    arena = random_arena(rng, cfg)
    return random_play(rng, arena, draw(st.integers(1, max_length)), cfg.propensity)
