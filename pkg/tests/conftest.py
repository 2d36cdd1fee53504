import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from subchord.census import all_realizable  # noqa: E402
from subchord.word import GaussWord  # noqa: E402


@st.composite
def gauss_words(draw, max_n=7):
    """Arbitrary double-occurrence words, not necessarily realizable."""
    n = draw(st.integers(0, max_n))
    letters = draw(st.permutations([a for a in range(1, n + 1) for _ in range(2)]))
    return GaussWord(tuple(letters))


def realizable_words(max_n=6):
    return st.sampled_from(all_realizable(max_n))


@st.composite
def symmetry_images(draw, w: GaussWord):
    """A random rotation, optional reversal and relabelling of ``w``."""
    if not w.letters:
        return w
    out = w.rotate(draw(st.integers(0, len(w) - 1)))
    if draw(st.booleans()):
        out = out.reverse()
    labels = w.labels()
    perm = draw(st.permutations([a * 7 + 3 for a in labels]))
    return out.relabel(dict(zip(labels, perm)))


@pytest.fixture(scope="session")
def small_realizable():
    return all_realizable(5)
