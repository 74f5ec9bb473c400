from __future__ import annotations

import os
from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from k3walls.lattice import MukaiClass, SurfaceData

settings.register_profile(
    "default", max_examples=150, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("thorough", max_examples=1000, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def rationals(bound: int = 20, max_den: int = 12) -> st.SearchStrategy[Fraction]:
    return st.builds(
        Fraction,
        st.integers(-bound * max_den, bound * max_den),
        st.integers(1, max_den),
    )


def positive_rationals(bound: int = 20, max_den: int = 12) -> st.SearchStrategy[Fraction]:
    return st.builds(Fraction, st.integers(1, bound * max_den), st.integers(1, max_den))


def integral_classes(bound: int = 10) -> st.SearchStrategy[MukaiClass]:
    i = st.integers(-bound, bound)
    return st.builds(MukaiClass, i, i, i)


def rational_classes(bound: int = 10) -> st.SearchStrategy[MukaiClass]:
    q = rationals(bound, 6)
    return st.builds(MukaiClass, q, q, q)


surfaces = st.builds(SurfaceData, st.integers(1, 12))
