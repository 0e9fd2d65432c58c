"""Shared test helpers: independent primality oracle and instance strategy."""

from hypothesis import strategies as st

from subsetsum_ma import Instance


def is_prime_trial(m: int) -> bool:
    """Trial division; the independent oracle for every primality claim."""
    if m < 2:
        return False
    d = 2
    while d * d <= m:
        if m % d == 0:
            return False
        d += 1
    return True


@st.composite
def instances(draw, max_n: int = 8, max_t: int = 30):
    """Random valid instances with all weights in [1, t]."""
    t = draw(st.integers(min_value=1, max_value=max_t))
    n = draw(st.integers(min_value=1, max_value=max_n))
    weights = draw(st.lists(st.integers(1, t), min_size=n, max_size=n))
    return Instance(tuple(weights), t)
