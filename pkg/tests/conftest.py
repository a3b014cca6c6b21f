import random

import pytest
from hypothesis import strategies as st

from newtonjump import Support


@st.composite
def convenient_supports(draw, box=12, max_extra=6, dimension=3):
    axes = [draw(st.integers(1, box)) for _ in range(dimension)]
    points = {tuple(w if i == k else 0 for i in range(dimension)) for k, w in enumerate(axes)}
    coords = st.tuples(*[st.integers(0, box)] * dimension).filter(any)
    points |= set(draw(st.lists(coords, max_size=max_extra)))
    return Support(dimension, frozenset(points))


def random_convenient_support(rng, box=12, max_extra=6, dimension=3):
    points = set()
    for k in range(dimension):
        points.add(tuple(rng.randint(1, box) if i == k else 0 for i in range(dimension)))
    for _ in range(rng.randint(0, max_extra)):
        p = tuple(rng.randint(0, box) for _ in range(dimension))
        if any(p):
            points.add(p)
    return Support(dimension, frozenset(points))


@pytest.fixture
def rng():
    return random.Random(20140901)


@pytest.fixture
def paper_example():
    return Support.of((11, 0, 0), (0, 6, 0), (0, 0, 5))
