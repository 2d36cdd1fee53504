"""Spherical realizability of Gauss words via rotation systems.

The 4-valent graph of a word has one vertex per label and one edge per gap
between consecutive letters (edge ``k`` joins position ``k`` to ``k+1``).
Half-edges (darts) are numbered ``2k`` (edge ``k`` leaving position ``k``
forwards) and ``2k+1`` (edge ``k`` leaving position ``k+1`` backwards), so
``d ^ 1`` is the opposite end of the same edge.

At a double point with positions ``p < q`` the four darts are ``in_p``,
``out_p``, ``in_q``, ``out_q``.  A transversal crossing alternates the two
passages, which leaves two counterclockwise orders::

    config 0:  in_p, in_q,  out_p, out_q
    config 1:  in_p, out_q, out_p, in_q

A word is realizable on the sphere iff some choice of configs gives
``n + 2`` faces.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from subchord.errors import BoundExceeded, EmbeddingMismatch
from subchord.word import GaussWord, interlace_degrees

DEFAULT_BOUND = 16


@dataclass(frozen=True)
class SphericalEmbedding:
    """A genus-0 rotation system for ``word``.

    ``vertex_config[i]`` is the config (0 or 1) of the i-th label in order of
    first occurrence.  ``orientation`` is +1 or -1 and only affects signs.
    """

    word: GaussWord
    vertex_config: tuple[int, ...]
    orientation: int = 1

    def config_of(self) -> dict[int, int]:
        return dict(zip(self.word.labels(), self.vertex_config))

    def flipped(self) -> SphericalEmbedding:
        return SphericalEmbedding(self.word, self.vertex_config, -self.orientation)

    def mirror(self) -> SphericalEmbedding:
        return SphericalEmbedding(
            self.word, tuple(1 - c for c in self.vertex_config), self.orientation
        )

    def to_json(self) -> str:
        return json.dumps(
            {
                "word": str(self.word),
                "vertex_config": list(self.vertex_config),
                "orientation": self.orientation,
            }
        )

    @classmethod
    def from_json(cls, text: str) -> SphericalEmbedding:
        from subchord.word import parse_gauss_word

        d = json.loads(text)
        w = parse_gauss_word(d["word"])
        e = cls(w, tuple(int(c) for c in d["vertex_config"]), int(d["orientation"]))
        check_embedding(e)
        return e


@dataclass(frozen=True)
class FaceSet:
    """Faces as cyclic lists of darts; a dart stands for one side of an edge."""

    faces: tuple[tuple[int, ...], ...]

    @property
    def degrees(self) -> list[int]:
        return [len(f) for f in self.faces]

    def face_of(self) -> dict[int, int]:
        return {d: i for i, f in enumerate(self.faces) for d in f}


@dataclass(frozen=True)
class SignAssignment:
    basepoint: int
    sign: dict[int, int]


def _rotation(letters, configs):
    """ccw successor of each dart, or None for the empty word."""
    L = len(letters)
    sigma = [0] * (2 * L)
    pos: dict[int, list[int]] = {}
    for i, a in enumerate(letters):
        pos.setdefault(a, []).append(i)
    for a, (p, q) in pos.items():
        in_p, out_p = 2 * ((p - 1) % L) + 1, 2 * p
        in_q, out_q = 2 * ((q - 1) % L) + 1, 2 * q
        if configs[a] == 0:
            cyc = (in_p, in_q, out_p, out_q)
        else:
            cyc = (in_p, out_q, out_p, in_q)
        for j in range(4):
            sigma[cyc[j]] = cyc[(j + 1) % 4]
    return sigma


def _trace(sigma):
    """Orbits of the face permutation ``d -> sigma[d ^ 1]``."""
    seen = [False] * len(sigma)
    faces = []
    for d0 in range(len(sigma)):
        if seen[d0]:
            continue
        f = []
        d = d0
        while not seen[d]:
            seen[d] = True
            f.append(d)
            d = sigma[d ^ 1]
        faces.append(tuple(f))
    return faces


def _count_faces(sigma):
    seen = [False] * len(sigma)
    count = 0
    for d0 in range(len(sigma)):
        if seen[d0]:
            continue
        count += 1
        d = d0
        while not seen[d]:
            seen[d] = True
            d = sigma[d ^ 1]
    return count


def _check_bound(w: GaussWord, bound: int):
    if w.n > bound:
        raise BoundExceeded(f"n={w.n} exceeds embedding bound {bound}")


def _even_degrees(w: GaussWord) -> bool:
    return all(d % 2 == 0 for d in interlace_degrees(w.letters).values())


def _search(w: GaussWord, first_only: bool):
    labels = w.labels()
    n = len(labels)
    found = []
    for combo in itertools.product((0, 1), repeat=n):
        if first_only and combo and combo[0] == 1:
            break
        sigma = _rotation(w.letters, dict(zip(labels, combo)))
        if _count_faces(sigma) == n + 2:
            found.append(SphericalEmbedding(w, combo, 1))
            if first_only:
                break
    return found


def spherical_embeddings(w: GaussWord, bound: int = DEFAULT_BOUND) -> list[SphericalEmbedding]:
    """All genus-0 configs of ``w``, in lexicographic order of configs."""
    _check_bound(w, bound)
    if w.n == 0:
        return [SphericalEmbedding(w, (), 1)]
    return _search(w, first_only=False)


def is_realizable(w: GaussWord, bound: int = DEFAULT_BOUND) -> bool:
    """Whether ``w`` is the Gauss word of a spherical curve.

    Words with an odd interlacement degree are rejected before searching.
    Mirroring every vertex preserves the face count, so the search fixes the
    first vertex's config.
    """
    _check_bound(w, bound)
    if w.n == 0:
        return True
    if not _even_degrees(w):
        return False
    return bool(_search(w, first_only=True))


def some_embedding(w: GaussWord, bound: int = DEFAULT_BOUND) -> SphericalEmbedding | None:
    _check_bound(w, bound)
    if w.n == 0:
        return SphericalEmbedding(w, (), 1)
    if not _even_degrees(w):
        return None
    found = _search(w, first_only=True)
    return found[0] if found else None


def check_embedding(e: SphericalEmbedding) -> None:
    w = e.word
    if len(e.vertex_config) != w.n or any(c not in (0, 1) for c in e.vertex_config):
        raise EmbeddingMismatch("vertex_config does not match the word")
    if e.orientation not in (1, -1):
        raise EmbeddingMismatch("orientation must be +1 or -1")
    if w.n and _count_faces(_rotation(w.letters, e.config_of())) != w.n + 2:
        raise EmbeddingMismatch("rotation system is not spherical")


def faces(e: SphericalEmbedding) -> FaceSet:
    """Face walks of the embedding.

    The simple closed curve has one edge (gap 0) whose two sides, darts 0 and
    1, bound one face each.
    """
    if e.word.n == 0:
        return FaceSet(((0,), (1,)))
    sigma = _rotation(e.word.letters, e.config_of())
    return FaceSet(tuple(_trace(sigma)))


def frame_orientation(e: SphericalEmbedding) -> dict[int, int]:
    """+1 where (forward tangent at p, forward tangent at q) is ccw, p < q."""
    return {a: (1 if c == 0 else -1) for a, c in e.config_of().items()}


def crossing_signs(e: SphericalEmbedding, basepoint: int = 0) -> SignAssignment:
    """First-passage signs read from ``basepoint``.

    ``basepoint`` is a gap index ``b``: the base point sits just before
    position ``b``.  A double point gets -1 when the frame (first passage,
    second passage) agrees with the sphere orientation, +1 otherwise.
    """
    L = len(e.word)
    b = basepoint % L if L else 0
    fr = frame_orientation(e)
    signs = {}
    for a, (p, q) in e.word.positions().items():
        p_first = not (p < b <= q)
        agree = fr[a] * e.orientation
        signs[a] = -agree if p_first else agree
    return SignAssignment(b, signs)
