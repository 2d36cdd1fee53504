"""Integer invariants built from sub-chord counts.

``lambda_invariant`` is (3h - 3tr + cross) / 4, invariant under RI and strong
RIII.  ``averaged`` is -(J+ + 2St)/2, computed as a signed sum over crossing
chord pairs after fixing a base point.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from subchord.embed import (
    SphericalEmbedding,
    crossing_signs,
    is_realizable,
    some_embedding,
)
from subchord.errors import NonIntegral, NotRealizable
from subchord.pattern import PatternCounts, count_named, count_small
from subchord.word import GaussWord, chords_cross, connected_sum, decompose, interlace_degrees

RI = frozenset({"RI"})
RI_WEAK_RIII = frozenset({"RI", "weakRIII"})
RI_STRONG_RIII = frozenset({"RI", "strongRIII"})
MOVESETS = {"RI": RI, "RI+weakRIII": RI_WEAK_RIII, "RI+strongRIII": RI_STRONG_RIII}


def _require_realizable(w: GaussWord):
    if not is_realizable(w):
        raise NotRealizable(f"{w} is not the word of a spherical curve")


def lambda_from_counts(c: PatternCounts) -> int:
    num = 3 * c.h - 3 * c.triple + c.cross
    if num % 4:
        raise NonIntegral(f"3h - 3tr + cross = {num} is not divisible by 4")
    return num // 4


def lambda_invariant(w: GaussWord, check: bool = False) -> int:
    """(3h - 3tr + cross) / 4.

    Divisibility by 4 holds for every realizable word, so a remainder means the
    input is not realizable (or a counting bug) and raises ``NonIntegral``.
    With ``check=True`` realizability is verified first.
    """
    if check:
        _require_realizable(w)
    return lambda_from_counts(count_small(w))


def torus_word(i: int) -> GaussWord:
    """Word of the (2, 2i+1)-torus projection: 1..(2i+1) written twice."""
    if i < 1:
        raise ValueError("i must be a positive integer")
    m = 2 * i + 1
    return GaussWord(tuple(range(1, m + 1)) * 2)


def torus_lambda(i: int) -> int:
    m = 2 * i + 1
    num = comb(m, 2) - 3 * comb(m, 3)
    assert num % 4 == 0
    return num // 4


def indicators(w: GaussWord) -> tuple[int, int, int, int]:
    """(H, X~, cross mod 2, cross mod 3)."""
    c = count_named(w)
    return (int(c.h > 0), int(c.cross > 0), c.cross % 2, c.cross % 3)


def averaged_from(e: SphericalEmbedding, basepoint: int = 0) -> int:
    w = e.word
    sign = crossing_signs(e, basepoint).sign
    pos = w.positions()
    labels = w.labels()
    total = 0
    for i, a in enumerate(labels):
        for b in labels[i + 1:]:
            if chords_cross(pos[a], pos[b]):
                total += sign[a] * sign[b]
    return total


def averaged(w: GaussWord, embedding: SphericalEmbedding | None = None, basepoint: int = 0) -> int:
    """a(P) = -(J+ + 2St)/2.

    Fix a base point, sign each double point by its first passage, and sum
    the product of the two signs over every pair of crossing chords.  The
    value does not depend on the base point or on the embedding chosen.
    """
    if embedding is None:
        embedding = some_embedding(w)
        if embedding is None:
            raise NotRealizable(f"{w} is not the word of a spherical curve")
    return averaged_from(embedding, basepoint)


def trivializable(w: GaussWord, moveset) -> bool:
    """Whether ``w`` can be brought to the simple closed curve.

    ``moveset`` is one of :data:`RI`, :data:`RI_WEAK_RIII`,
    :data:`RI_STRONG_RIII` (or its name in :data:`MOVESETS`).
    """
    if isinstance(moveset, str):
        moveset = MOVESETS[moveset]
    moveset = frozenset(moveset)
    _require_realizable(w)
    h_ind, x_ind, _, _ = indicators(w)
    if moveset in (RI, RI_WEAK_RIII):
        return x_ind == 0
    if moveset == RI_STRONG_RIII:
        return h_ind == 0 and lambda_invariant(w) == 0
    raise ValueError(f"unsupported move set {sorted(moveset)}")


def trivializable_by_ri_counts(w: GaussWord) -> bool:
    """Equivalent test for the RI move set: tr = 0 and lambda = 0."""
    _require_realizable(w)
    c = count_named(w)
    return c.triple == 0 and lambda_from_counts(c) == 0


def st_factor_check(w: GaussWord) -> bool:
    """Every connected-sum factor is the one-crossing curve or has all of its
    chords pairwise crossing (a (2, 2i+1)-torus projection)."""
    _require_realizable(w)
    for f in decompose(w):
        if f.n == 1:
            continue
        degs = interlace_degrees(f.letters)
        if any(d != f.n - 1 for d in degs.values()):
            return False
    return True


# lambda = -3; the n=7 census entry the surjectivity recipe uses
SEVEN_THREE = GaussWord((1, 2, 3, 4, 5, 1, 6, 7, 2, 3, 4, 5, 7, 6))
FOUR_ONE = GaussWord((1, 2, 3, 4, 2, 1, 4, 3))
FIVE_ONE = torus_word(2)
THREE_ONE = torus_word(1)


def word_with_lambda(k: int) -> GaussWord:
    """A projection with lambda = k, built from connected sums.

    k > 0 uses k copies of (4_1 # 7_3), k < 0 uses |k| copies of (4_1 # 5_1),
    k = 0 gives the trefoil projection.
    """
    if k == 0:
        return THREE_ONE
    block = connected_sum(FOUR_ONE, SEVEN_THREE if k > 0 else FIVE_ONE)
    out = GaussWord(())
    for _ in range(abs(k)):
        out = connected_sum(out, block)
    return out


@dataclass(frozen=True)
class InvariantReport:
    lambda_: int
    h_ind: int
    x_ind: int
    cross_mod2: int
    cross_mod3: int
    averaged: int

    def as_dict(self) -> dict[str, int]:
        return {
            "lambda": self.lambda_,
            "H": self.h_ind,
            "Xtilde": self.x_ind,
            "cross_mod2": self.cross_mod2,
            "cross_mod3": self.cross_mod3,
            "averaged": self.averaged,
        }

    @classmethod
    def from_dict(cls, d) -> InvariantReport:
        return cls(d["lambda"], d["H"], d["Xtilde"], d["cross_mod2"], d["cross_mod3"], d["averaged"])


def invariant_report(w: GaussWord) -> InvariantReport:
    _require_realizable(w)
    return InvariantReport(lambda_invariant(w), *indicators(w), averaged(w))
