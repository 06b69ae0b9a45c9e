"""Shared generators and assertion helpers."""

from __future__ import annotations

import numpy as np
from hypothesis import strategies as st

from goldinterp import NodeSequence


def random_sequence(
    rng: np.random.Generator,
    n: int | None = None,
    max_n: int = 20,
    with_k0: bool = False,
    distinct_y: bool = False,
) -> NodeSequence:
    """A valid random sequence with coordinates in [-100, 100] and sane gaps."""
    if n is None:
        n = int(rng.integers(1, max_n + 1))
    gaps = rng.uniform(0.5, 8.0, n)
    if gaps.sum() > 190.0:
        gaps *= 190.0 / gaps.sum()
    x0 = float(rng.uniform(-100.0, 100.0 - gaps.sum()))
    xs = x0 + np.concatenate([[0.0], np.cumsum(gaps)])
    while True:
        ys = rng.uniform(-100.0, 100.0, n + 1)
        if not distinct_y or len(np.unique(ys)) == n + 1:
            break
    k0 = float(rng.uniform(-5.0, 5.0)) if with_k0 else None
    return NodeSequence.from_pairs(zip(xs, ys), k0)


@st.composite
def node_sequences(draw, max_n: int = 12, with_k0: bool = False, distinct_y: bool = False):
    n = draw(st.integers(min_value=1, max_value=max_n))
    seed = draw(st.integers(min_value=0, max_value=2**31 - 1))
    rng = np.random.default_rng(seed)
    return random_sequence(rng, n=n, with_k0=with_k0, distinct_y=distinct_y)


def assert_interpolates(f, seq: NodeSequence, rel: float = 1e-9) -> None:
    """Every input node's ordinate is attained at its abscissa."""
    for node in seq.nodes:
        got = f(node.x)
        assert abs(got - node.y) <= rel * (1.0 + abs(node.y)), (
            f"f({node.x}) = {got}, expected {node.y}"
        )


def one_sided_derivative_gaps(f) -> list[float]:
    """|left - right| derivative mismatch at each interior knot, relative."""
    gaps = []
    for i in range(len(f.pieces) - 1):
        x = f.breakpoints[i + 1]
        left = f.derivative_on_piece(i, x)
        right = f.derivative_on_piece(i + 1, x)
        gaps.append(abs(left - right) / (1.0 + abs(right)))
    return gaps
