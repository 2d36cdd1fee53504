"""Reidemeister moves on Gauss words, split into strong and weak kinds.

Positions and gaps are 0-based; gap ``k`` is the edge between positions ``k``
and ``k + 1`` (cyclically).  For the simple closed curve the single edge is
gap 0.

Deletions are read off the word: a kink is a label whose two occurrences are
adjacent, a bigon is a pair of labels adjacent at both meetings.  A kink
always bounds a monogon face.  A bigon bounds a face in at least one
embedding of the word but not necessarily in every one, so ``list_sites``
keeps only the bigons that are faces of the embedding it is given.
Triangles and RII insertions are read off the embedding as well.

Strong RII joins two chords that do not cross; weak RII two that do.  Strong
RIII acts on three chords that pairwise all cross or all don't; weak RIII on
the mixed ones.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from functools import lru_cache

from subchord.embed import SphericalEmbedding, faces, spherical_embeddings
from subchord.errors import EmbeddingMismatch, SiteInvalid
from subchord.pattern import PatternCounts, count_named
from subchord.word import GaussWord, chords_cross

KINDS = (
    "RI_add",
    "RI_del",
    "RII_strong_add",
    "RII_strong_del",
    "RII_weak_add",
    "RII_weak_del",
    "RIII_strong",
    "RIII_weak",
)


@dataclass(frozen=True)
class MoveSite:
    """Where a move applies.

    ``labels``: existing letters (deletions, RIII).
    ``gaps``: RI insertion edge, or the three triangle edges for RIII.
    ``darts``: the two edge-sides on a common face for an RII insertion; a
    repeated dart folds that edge-side over itself.
    """

    kind: str
    labels: tuple[int, ...] = ()
    gaps: tuple[int, ...] = ()
    darts: tuple[int, ...] = ()

    def as_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.as_dict())

    @classmethod
    def from_dict(cls, d) -> MoveSite:
        return cls(d["kind"], tuple(d.get("labels", ())), tuple(d.get("gaps", ())), tuple(d.get("darts", ())))


@dataclass(frozen=True)
class DeltaReport:
    before: PatternCounts
    after: PatternCounts
    delta: PatternCounts = field(init=False)
    delta_lambda_numerator: int = field(init=False)

    def __post_init__(self):
        d = self.after - self.before
        object.__setattr__(self, "delta", d)
        object.__setattr__(self, "delta_lambda_numerator", 3 * d.h - 3 * d.triple + d.cross)

    @property
    def delta_lambda(self) -> int:
        """Change of lambda; exact because both endpoints are realizable."""
        return self.delta_lambda_numerator // 4

    def as_dict(self) -> dict:
        return {
            "before": self.before.as_dict(),
            "after": self.after.as_dict(),
            "delta": self.delta.as_dict(),
            "delta_lambda": self.delta_lambda_numerator / 4,
        }


def _adjacent(p: int, q: int, L: int) -> bool:
    return (q - p) % L in (1, L - 1)


def _kinks(w: GaussWord) -> list[int]:
    L = len(w)
    return [a for a, (p, q) in w.positions().items() if _adjacent(p, q, L)]


def _bigons(w: GaussWord) -> list[tuple[int, int]]:
    """Pairs of labels joined by two disjoint edges."""
    L = len(w)
    if L < 4:
        return []
    letters = w.letters
    edges: dict[frozenset, list[int]] = {}
    for k in range(L):
        a, b = letters[k], letters[(k + 1) % L]
        if a != b:
            edges.setdefault(frozenset((a, b)), []).append(k)
    out = []
    for pair, ks in edges.items():
        if len(ks) == 2:
            k1, k2 = ks
            if len({k1, (k1 + 1) % L, k2, (k2 + 1) % L}) == 4:
                a, b = sorted(pair, key=w.labels().index)
                out.append((a, b))
    return out


def _triangles(w: GaussWord, e: SphericalEmbedding):
    """(labels, gaps) for every triangular face with three distinct vertices."""
    L = len(w)
    letters = w.letters
    out = []
    for f in faces(e).faces:
        if len(f) != 3:
            continue
        gaps = tuple(d // 2 for d in f)
        ends = [frozenset((letters[k], letters[(k + 1) % L])) for k in gaps]
        verts = frozenset().union(*ends)
        if len(verts) != 3 or any(len(x) != 2 for x in ends) or len(set(ends)) != 3:
            continue
        out.append((tuple(sorted(verts, key=w.labels().index)), tuple(sorted(gaps))))
    return out


def _crossings_among(w: GaussWord, labels) -> int:
    pos = w.positions()
    labels = list(labels)
    return sum(
        chords_cross(pos[a], pos[b]) for i, a in enumerate(labels) for b in labels[i + 1:]
    )


def _gaps_between(w: GaussWord, a: int, b: int) -> frozenset[int]:
    L = len(w)
    return frozenset(k for k in range(L) if {w.letters[k], w.letters[(k + 1) % L]} == {a, b})


def deletion_sites(w: GaussWord) -> list[MoveSite]:
    """RI and RII deletions read off the word alone.

    Each is a face of at least one embedding of ``w``; use :func:`list_sites`
    for the sites of one particular embedding.
    """
    sites = [MoveSite("RI_del", (a,)) for a in _kinks(w)]
    pos = w.positions()
    for a, b in _bigons(w):
        kind = "RII_weak_del" if chords_cross(pos[a], pos[b]) else "RII_strong_del"
        sites.append(MoveSite(kind, (a, b)))
    return sites


def riii_sites(w: GaussWord, e: SphericalEmbedding) -> list[MoveSite]:
    sites = []
    for labels, gaps in _triangles(w, e):
        k = _crossings_among(w, labels)
        kind = "RIII_strong" if k in (0, 3) else "RIII_weak"
        sites.append(MoveSite(kind, labels, gaps))
    return sites


def ri_add_sites(w: GaussWord) -> list[MoveSite]:
    return [MoveSite("RI_add", gaps=(k,)) for k in range(max(len(w), 1))]


def rii_add_sites(w: GaussWord, e: SphericalEmbedding) -> list[MoveSite]:
    """One site per face and unordered pair of its edge-sides.

    Two edge-sides traversed in the same direction along the face boundary
    meet head-on, so the new chords are nested (strong); opposite directions
    make them cross (weak).
    """
    sites = []
    for f in faces(e).faces:
        for i in range(len(f)):
            for j in range(i, len(f)):
                d1, d2 = f[i], f[j]
                if d1 != d2 and d1 // 2 == d2 // 2:
                    continue
                strong = (d1 % 2) == (d2 % 2)
                kind = "RII_strong_add" if strong else "RII_weak_add"
                sites.append(MoveSite(kind, darts=(d1, d2)))
    return sites


def list_sites(w: GaussWord, e: SphericalEmbedding) -> list[MoveSite]:
    """Every move site of ``w`` for the embedding ``e``, in a fixed order:
    deletions, RIII, RI insertions, RII insertions."""
    if e.word != w:
        raise EmbeddingMismatch("embedding belongs to a different word")
    bigon_faces = {frozenset(d // 2 for d in f) for f in faces(e).faces if len(f) == 2}
    dels = [
        s for s in deletion_sites(w)
        if s.kind == "RI_del" or _gaps_between(w, *s.labels) in bigon_faces
    ]
    return dels + riii_sites(w, e) + ri_add_sites(w) + rii_add_sites(w, e)


@lru_cache(maxsize=4096)
def _face_data(letters: tuple[int, ...]):
    """Triangle gap sets and same-face dart pairs over all embeddings."""
    w = GaussWord(letters)
    triangles, pairs = set(), set()
    for e in spherical_embeddings(w):
        for _, gaps in _triangles(w, e):
            triangles.add(gaps)
        for f in faces(e).faces:
            pairs.update((d1, d2) for d1 in f for d2 in f)
    return frozenset(triangles), frozenset(pairs)


def _fresh(w: GaussWord, k: int = 1) -> list[int]:
    top = max(w.letters, default=0)
    return [top + i + 1 for i in range(k)]


def _insert(letters: list[int], gap: int, new: tuple[int, ...]) -> list[int]:
    # gap k sits after position k; for the empty word gap 0 is everything
    at = gap + 1 if letters else 0
    return letters[:at] + list(new) + letters[at:]


def _validate(w: GaussWord, s: MoveSite):
    L = len(w)
    if s.kind not in KINDS:
        raise SiteInvalid(f"unknown move kind {s.kind!r}")
    if s.kind == "RI_del":
        if len(s.labels) != 1 or s.labels[0] not in _kinks(w):
            raise SiteInvalid(f"{s.labels} is not a kink of {w}")
    elif s.kind.startswith("RII") and s.kind.endswith("_del"):
        if len(s.labels) != 2 or tuple(s.labels) not in _bigons(w):
            raise SiteInvalid(f"{s.labels} is not a bigon of {w}")
        pos = w.positions()
        weak = chords_cross(pos[s.labels[0]], pos[s.labels[1]])
        if weak != (s.kind == "RII_weak_del"):
            raise SiteInvalid(f"{s.kind} does not match the bigon type")
    elif s.kind.startswith("RIII"):
        if len(s.gaps) != 3 or len(s.labels) != 3:
            raise SiteInvalid("RIII needs three labels and three gaps")
        ends = [frozenset((w.letters[k % L], w.letters[(k + 1) % L])) for k in s.gaps]
        if frozenset().union(*ends) != frozenset(s.labels) or len(set(ends)) != 3 \
                or any(len(x) != 2 for x in ends):
            raise SiteInvalid(f"gaps {s.gaps} do not bound a triangle on {s.labels}")
        k = _crossings_among(w, s.labels)
        if (k in (0, 3)) != (s.kind == "RIII_strong"):
            raise SiteInvalid(f"{s.kind} does not match the triangle type")
        if tuple(sorted(s.gaps)) not in _face_data(w.letters)[0]:
            raise SiteInvalid(f"gaps {s.gaps} are not a triangular face of {w}")
    elif s.kind == "RI_add":
        if len(s.gaps) != 1 or not 0 <= s.gaps[0] < max(L, 1):
            raise SiteInvalid("RI_add needs one existing gap")
    else:
        if len(s.darts) != 2 or any(not 0 <= d < max(2 * L, 2) for d in s.darts):
            raise SiteInvalid("RII_add needs two darts")
        d1, d2 = s.darts
        if (d1 % 2 == d2 % 2) != (s.kind == "RII_strong_add"):
            raise SiteInvalid(f"{s.kind} does not match the dart directions")
        if d1 != d2 and d1 // 2 == d2 // 2:
            raise SiteInvalid("RII_add darts must lie on different edges")
        if (d1, d2) not in _face_data(w.letters)[1]:
            raise SiteInvalid(f"darts {s.darts} do not share a face of {w}")


def apply_move(w: GaussWord, s: MoveSite) -> GaussWord:
    """Apply the move at ``s``.  Insertions use fresh labels above max(w).

    RIII gaps and RII insertion darts must come from a face of some spherical
    embedding of ``w``, otherwise ``SiteInvalid`` is raised.
    """
    _validate(w, s)
    letters = list(w.letters)
    L = len(letters)
    if s.kind == "RI_add":
        (x,) = _fresh(w)
        return GaussWord(tuple(_insert(letters, s.gaps[0], (x, x))))
    if s.kind.endswith("_del"):
        drop = set(s.labels)
        return GaussWord(tuple(a for a in letters if a not in drop))
    if s.kind.startswith("RIII"):
        for k in s.gaps:
            i, j = k % L, (k + 1) % L
            letters[i], letters[j] = letters[j], letters[i]
        return GaussWord(tuple(letters))
    a, b = _fresh(w, 2)
    d1, d2 = s.darts
    if d1 == d2:
        return GaussWord(tuple(_insert(letters, d1 // 2, (a, b, b, a))))
    g1, g2 = d1 // 2, d2 // 2
    second = (b, a) if s.kind == "RII_strong_add" else (a, b)
    first_ins, second_ins = ((g1, (a, b)), (g2, second))
    # insert at the larger gap first so the smaller index stays valid
    for g, new in sorted((first_ins, second_ins), key=lambda t: -t[0]):
        letters = _insert(letters, g, new)
    return GaussWord(tuple(letters))


def pattern_delta(w: GaussWord, s: MoveSite) -> DeltaReport:
    return DeltaReport(count_named(w), count_named(apply_move(w, s)))


def delta_violations(kind: str, d: PatternCounts) -> list[str]:
    """Conditions of the increment table that ``d`` breaks for a ``kind`` move.

    Deletions are checked through the negated (insertion) delta.
    """
    if kind.endswith("_del"):
        d = PatternCounts() - d
    bad = []
    lam = 3 * d.h - 3 * d.triple + d.cross
    if lam % 4:
        bad.append(f"3h-3tr+cross changed by {lam}, not a multiple of 4")
    if kind.startswith("RI_"):
        if d.as_tuple() != (0, 0, 0, 0, 0):
            bad.append(f"RI changed counts by {d.as_tuple()}")
        return bad
    if kind.startswith("RII_strong"):
        if d.cross % 4:
            bad.append(f"strong RII: cross changed by {d.cross}, not 0 mod 4")
        tr_odd = False
    elif kind.startswith("RII_weak"):
        if d.cross % 4 != 3:
            bad.append(f"weak RII: cross changed by {d.cross}, not 3 mod 4")
        tr_odd = True
    elif kind == "RIII_strong":
        if abs(d.cross) != 3:
            bad.append(f"strong RIII: cross changed by {d.cross}, not +-3")
        if lam:
            bad.append(f"strong RIII changed 3h-3tr+cross by {lam}")
        tr_odd = True
    elif kind == "RIII_weak":
        if abs(d.cross) != 1:
            bad.append(f"weak RIII: cross changed by {d.cross}, not +-1")
        tr_odd = True
    else:
        raise ValueError(kind)
    if d.triple % 2 != int(tr_odd):
        bad.append(f"{kind}: triple changed by {d.triple}")
    if d.h % 2:
        bad.append(f"{kind}: h changed by {d.h}")
    if d.iii % 2:
        bad.append(f"{kind}: iii changed by {d.iii}")
    return bad
