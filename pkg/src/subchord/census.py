"""Census of spherical curves and exhaustive verification suites.

Words are generated directly in normalized form.  Only pairings in which the
two occurrences of every label sit an odd distance apart are produced; this is
the even-interlacement condition every realizable word satisfies, and at
``n = 7`` it leaves 5040 of the 135135 pairings.  Survivors are kept when they
are their own canonical form and admit a spherical embedding.
"""

from __future__ import annotations

import csv
import io
import json
import os
import random
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import lru_cache

from subchord.embed import crossing_signs, is_realizable, spherical_embeddings
from subchord.errors import BoundExceeded, PostconditionViolation
from subchord.flype import _checked, _rewrite, list_flype_sites
from subchord.invariant import (
    FIVE_ONE,
    FOUR_ONE,
    RI,
    RI_STRONG_RIII,
    RI_WEAK_RIII,
    SEVEN_THREE,
    averaged_from,
    indicators,
    lambda_from_counts,
    lambda_invariant,
    st_factor_check,
    torus_word,
    trivializable,
    trivializable_by_ri_counts,
    word_with_lambda,
)
from subchord.moves import (
    apply_move,
    deletion_sites,
    list_sites,
    ri_add_sites,
    riii_sites,
    delta_violations,
)
from subchord.pattern import COLUMNS, PatternCounts, count_named, graph_counts
from subchord.word import (
    GaussWord,
    canonical_letters,
    connected_sum,
    interlacement,
    is_prime,
    is_reduced,
)

DEFAULT_MAX_N = 8

# values of the averaged invariant over prime reduced projections, by n
AVERAGED_TABLE = {
    3: [-1],
    4: [0],
    5: [-2, -1],
    6: [0, -1, -2],
    7: [-3, -1, -2, -1, -2, -1, 0, -1, 0, -2],
}
PRIME_REDUCED_COUNTS = {3: 1, 4: 1, 5: 2, 6: 3, 7: 10}


def max_n() -> int:
    return int(os.environ.get("SUBCHORD_MAX_N", DEFAULT_MAX_N))


def _guard(n_max: int):
    if n_max > max_n():
        raise BoundExceeded(f"n_max={n_max} exceeds {max_n()} (set SUBCHORD_MAX_N to raise it)")


def parity_pairings(n: int):
    """Normalized double-occurrence words of length 2n whose labels all sit an
    odd distance apart.  Yields tuples."""
    L = 2 * n
    w = [0] * L
    first: dict[int, int] = {}

    def rec(k, nxt, open_):
        if k == L:
            yield tuple(w)
            return
        for a in sorted(open_):
            if (k - first[a]) % 2 == 1:
                w[k] = a
                open_.remove(a)
                yield from rec(k + 1, nxt, open_)
                open_.add(a)
        if nxt <= n and len(open_) < L - k:
            w[k] = nxt
            first[nxt] = k
            open_.add(nxt)
            yield from rec(k + 1, nxt + 1, open_)
            open_.remove(nxt)

    yield from rec(0, 1, set())


@lru_cache(maxsize=None)
def realizable_words(n: int) -> tuple[GaussWord, ...]:
    """Canonical realizable words with exactly ``n`` double points, sorted."""
    out = []
    for letters in parity_pairings(n):
        if canonical_letters(letters) != letters:
            continue
        w = GaussWord(letters)
        if is_realizable(w):
            out.append(w)
    return tuple(sorted(out, key=lambda w: w.letters))


def all_realizable(n_max: int) -> list[GaussWord]:
    return [w for n in range(n_max + 1) for w in realizable_words(n)]


@dataclass(frozen=True)
class CensusRecord:
    word: GaussWord
    n: int
    counts: PatternCounts
    lambda_: int
    h_ind: int
    x_ind: int
    averaged: int
    prime: bool
    reduced: bool

    def as_dict(self) -> dict:
        return {
            "word": str(self.word),
            "n": self.n,
            **self.counts.as_dict(),
            "lambda": self.lambda_,
            "H": self.h_ind,
            "Xtilde": self.x_ind,
            "averaged": self.averaged,
            "prime": self.prime,
            "reduced": self.reduced,
        }


def make_record(w: GaussWord) -> CensusRecord:
    c = count_named(w)
    h_ind, x_ind, _, _ = indicators(w)
    e = spherical_embeddings(w)[0]
    return CensusRecord(
        w, w.n, c, lambda_from_counts(c), h_ind, x_ind, averaged_from(e),
        is_prime(w), is_reduced(w),
    )


def enumerate_records(n_max: int, filter: str = "all") -> list[CensusRecord]:
    """Records of canonical realizable words with n <= n_max.

    ``filter`` is ``"all"`` or ``"prime_reduced"``.
    """
    _guard(n_max)
    if filter not in ("all", "prime_reduced"):
        raise ValueError(f"unknown filter {filter!r}")
    out = []
    for w in all_realizable(n_max):
        if filter == "prime_reduced" and not (is_prime(w) and is_reduced(w)):
            continue
        out.append(make_record(w))
    return sorted(out, key=lambda r: (r.n, r.word.letters))


CSV_COLUMNS = ("word", "n") + COLUMNS + ("lambda", "H", "Xtilde", "averaged")


def catalog(n_max: int, format: str = "json", filter: str = "prime_reduced") -> str:
    records = enumerate_records(n_max, filter)
    if format == "json":
        return json.dumps([r.as_dict() for r in records], indent=1) + "\n"
    if format == "csv":
        buf = io.StringIO()
        wr = csv.writer(buf, lineterminator="\n")
        wr.writerow(CSV_COLUMNS)
        for r in records:
            d = r.as_dict()
            wr.writerow([d[c] for c in CSV_COLUMNS])
        return buf.getvalue()
    raise ValueError(f"unknown format {format!r}")


# -- bounded reachability, the independent check of the trivializability tests


@lru_cache(maxsize=None)
def move_neighbours(letters: tuple[int, ...], moveset: frozenset) -> frozenset:
    """Canonical words one move away under ``moveset`` (RI always included)."""
    w = GaussWord(letters)
    sites = [s for s in deletion_sites(w) if s.kind == "RI_del"] + ri_add_sites(w)
    wanted = {"strongRIII": "RIII_strong", "weakRIII": "RIII_weak"}
    kinds = {wanted[m] for m in moveset if m in wanted}
    if kinds:
        for e in spherical_embeddings(w):
            sites.extend(s for s in riii_sites(w, e) if s.kind in kinds)
    return frozenset(canonical_letters(apply_move(w, s).letters) for s in sites)


def reachable_to_trivial(w: GaussWord, moveset, slack: int = 2) -> bool:
    """Breadth-first search from ``w`` to the simple closed curve, never
    passing through words with more than ``w.n + slack`` double points."""
    moveset = frozenset(moveset)
    start = canonical_letters(w.letters)
    limit = 2 * (w.n + slack)
    seen = {start}
    todo = deque([start])
    while todo:
        cur = todo.popleft()
        if not cur:
            return True
        for nxt in move_neighbours(cur, moveset):
            if len(nxt) <= limit and nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    return False


# -- verification suites


@dataclass
class VerificationReport:
    suite: str
    n_max: int
    checked: int = 0
    failures: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, word, site=None, observed=None):
        self.failures.append({"word": str(word), "site": site, "observed": observed})

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "n_max": self.n_max,
            "checked": self.checked,
            "passed": self.passed,
            "failures": self.failures,
            "details": self.details,
        }

    def render(self) -> str:
        lines = [
            f"suite {self.suite} (n <= {self.n_max}): "
            f"{'PASS' if self.passed else 'FAIL'}, {self.checked} checks, "
            f"{len(self.failures)} failures"
        ]
        for k, v in self.details.items():
            lines.append(f"  {k}: {v}")
        for f in self.failures[:20]:
            lines.append(f"  failure: {f}")
        return "\n".join(lines)


def _unique_sites(w: GaussWord):
    """(site, result) over every embedding, one per (kind, canonical result).

    Sites with the same kind and the same resulting curve have the same
    deltas, so only the first is kept.  Also returns the raw site count.
    """
    seen = set()
    out = []
    raw = 0
    for e in spherical_embeddings(w):
        for s in list_sites(w, e):
            raw += 1
            r = apply_move(w, s)
            key = (s.kind, canonical_letters(r.letters))
            if key not in seen:
                seen.add(key)
                out.append((s, r))
    return out, raw


def _suite_theorem1(rep: VerificationReport):
    # every listed site on every embedding is checked; counts and
    # realizability of a result are cached by its canonical form
    results: dict[tuple, tuple[PatternCounts, bool]] = {}
    words = all_realizable(rep.n_max)
    for w in words:
        before = count_named(w)
        for e in spherical_embeddings(w):
            for s in list_sites(w, e):
                rep.checked += 1
                r = apply_move(w, s)
                key = canonical_letters(r.letters)
                if key not in results:
                    results[key] = (count_named(r), is_realizable(r))
                after, ok = results[key]
                if not ok:
                    rep.fail(w, s.as_dict(), f"result {r} not realizable")
                    continue
                d = after - before
                bad = delta_violations(s.kind, d)
                if bad:
                    rep.fail(w, s.as_dict(), {"delta": d.as_dict(), "violations": bad})
    rep.details["words"] = len(words)
    rep.details["distinct results"] = len(results)


def _suite_theorem2(rep: VerificationReport):
    for w in all_realizable(rep.n_max):
        rep.checked += 1
        c = count_named(w)
        num = 3 * c.h - 3 * c.triple + c.cross
        if num % 4:
            rep.fail(w, None, f"3h-3tr+cross = {num}")
        if (c.cross - c.triple) % 2:
            rep.fail(w, None, f"cross={c.cross}, triple={c.triple} differ in parity")
    # invariance under the moves the statements name
    for w in all_realizable(min(rep.n_max, 6)):
        c0 = count_named(w)
        lam0 = lambda_from_counts(c0)
        h0, x0 = int(c0.h > 0), int(c0.cross > 0)
        for s, r in _unique_sites(w)[0]:
            c1 = count_named(r)
            rep.checked += 1
            if s.kind.startswith("RI_") or s.kind == "RIII_strong":
                if lambda_from_counts(c1) != lam0:
                    rep.fail(w, s.as_dict(), "lambda changed")
                if int(c1.h > 0) != h0:
                    rep.fail(w, s.as_dict(), "H changed")
            if s.kind.startswith("RI_") or s.kind == "RIII_weak":
                if int(c1.cross > 0) != x0:
                    rep.fail(w, s.as_dict(), "X~ changed")


def _suite_theorem3(rep: VerificationReport):
    names = {RI: "RI", RI_WEAK_RIII: "RI+weakRIII", RI_STRONG_RIII: "RI+strongRIII"}
    agree = Counter()
    for w in all_realizable(min(rep.n_max, 5)):
        for ms, name in names.items():
            rep.checked += 1
            fast = trivializable(w, ms)
            slow = reachable_to_trivial(w, ms, slack=2)
            if fast != slow:
                rep.fail(w, name, {"decider": fast, "search": slow})
            else:
                agree[(name, fast)] += 1
        rep.checked += 1
        if trivializable_by_ri_counts(w) != trivializable(w, RI):
            rep.fail(w, "RI", "tr=0 and lambda=0 disagrees with X~=0")
    for i, expected in ((1, True), (2, False)):
        rep.checked += 1
        if trivializable(torus_word(i), RI_STRONG_RIII) != expected:
            rep.fail(torus_word(i), "RI+strongRIII", f"expected {expected}")
    rep.details["agreements"] = {f"{k[0]}={k[1]}": v for k, v in sorted(agree.items())}


def _suite_flype(rep: VerificationReport):
    by_n: dict[int, set] = {}
    records = [w for w in all_realizable(rep.n_max) if is_prime(w) and is_reduced(w)]
    for w in records:
        by_n.setdefault(w.n, set()).add(w.letters)
    pairs = set()
    n_sites = 0
    for w in records:
        for f in list_flype_sites(w):
            if f.trivial:
                continue
            n_sites += 1
            rep.checked += 1
            try:
                r = _checked(w, f, _rewrite(w, f), True)
            except PostconditionViolation as exc:
                rep.fail(w, f.as_dict(), str(exc))
                continue
            key = canonical_letters(r.letters)
            if key not in by_n[w.n]:
                rep.fail(w, f.as_dict(), f"result {r} left the prime reduced census")
                continue
            back = {
                canonical_letters(_rewrite(r, g).letters)
                for g in list_flype_sites(r)
                if not g.trivial
            }
            if w.letters not in back:
                rep.fail(w, f.as_dict(), "no flype of the result returns the original")
            if key != w.letters:
                pairs.add(tuple(sorted((w.letters, key))))
    rep.details["flype sites"] = n_sites
    rep.details["pairs"] = [
        " | ".join(" ".join(map(str, x)) for x in p) for p in sorted(pairs)
    ]
    if rep.n_max >= 7:
        seven = [p for p in pairs if len(p[0]) == 14]
        rep.checked += 1
        if len(seven) < 3:
            rep.fail("n=7", None, f"only {len(seven)} flype pairs")


def _suite_averaged(rep: VerificationReport):
    empty = spherical_embeddings(GaussWord(()))[0]
    rep.checked += 1
    if averaged_from(empty) != 0:
        rep.fail("", None, "a(simple closed curve) != 0")
    got: dict[int, list[int]] = {}
    for w in all_realizable(rep.n_max):
        values = set()
        for e in spherical_embeddings(w):
            for b in range(max(len(w), 1)):
                values.add(averaged_from(e, b))
        rep.checked += 1
        if len(values) != 1:
            rep.fail(w, None, f"basepoint/embedding dependent: {sorted(values)}")
        if is_prime(w) and is_reduced(w):
            got.setdefault(w.n, []).append(min(values))
    for n, table in AVERAGED_TABLE.items():
        if n > rep.n_max:
            continue
        rep.checked += 1
        if Counter(got.get(n, [])) != Counter(table):
            rep.fail(f"n={n}", None, {"expected": sorted(table), "got": sorted(got.get(n, []))})
    rep.details["multisets"] = {n: sorted(v) for n, v in sorted(got.items())}
    # behaviour at move sites
    for w in all_realizable(min(rep.n_max, 5)):
        a0 = averaged_from(spherical_embeddings(w)[0])
        for s, r in _unique_sites(w)[0]:
            rep.checked += 1
            da = averaged_from(spherical_embeddings(r)[0]) - a0
            if s.kind.startswith("RI_") or s.kind.startswith("RII_strong"):
                ok = da == 0
            else:
                ok = abs(da) == 1
            if not ok:
                rep.fail(w, s.as_dict(), f"a changed by {da}")


def _suite_additivity(rep: VerificationReport, pairs: int = 1000, seed: int = 0):
    rng = random.Random(seed)
    pool = [w for w in all_realizable(rep.n_max) if w.n]
    for _ in range(pairs):
        w1, w2 = rng.choice(pool), rng.choice(pool)
        s = connected_sum(w1, w2)
        rep.checked += 1
        total = count_named(w1) + count_named(w2)
        if count_named(s) != total:
            rep.fail(s, None, {"sum": count_named(s).as_dict(), "parts": total.as_dict()})
        if lambda_invariant(s) != lambda_invariant(w1) + lambda_invariant(w2):
            rep.fail(s, None, "lambda not additive")
    spots = {
        "lambda(4_1 # 5_1)": (connected_sum(FOUR_ONE, FIVE_ONE), -1),
        "lambda(4_1 # 7_3)": (connected_sum(FOUR_ONE, SEVEN_THREE), 1),
    }
    for name, (w, expected) in spots.items():
        rep.checked += 1
        if lambda_invariant(w) != expected:
            rep.fail(w, name, lambda_invariant(w))
    for k in range(-5, 6):
        rep.checked += 1
        if lambda_invariant(word_with_lambda(k)) != k:
            rep.fail(word_with_lambda(k), f"lambda={k}", lambda_invariant(word_with_lambda(k)))


def c4_configurations() -> dict[str, set]:
    """Canonical 4-chord diagrams grouped by interlacement graph type."""
    from subchord.pattern import _canon_small

    groups: dict[str, set] = {}
    for letters in _all_pairings(4):
        g = interlacement(GaussWord(letters))
        degs = sorted(g.degree(v) for v in g.vertices)
        kind = {
            (2, 2, 2, 2): "C4" if len(g.edges) == 4 else None,
            (1, 1, 1, 3): "K13",
        }.get(tuple(degs))
        if kind:
            groups.setdefault(kind, set()).add(_canon_small(letters))
    return groups


def _all_pairings(n: int):
    L = 2 * n

    def rec(prefix, nxt, open_):
        if len(prefix) == L:
            yield tuple(prefix)
            return
        for a in sorted(open_):
            yield from rec(prefix + [a], nxt, open_ - {a})
        if nxt <= n:
            yield from rec(prefix + [nxt], nxt + 1, open_ | {nxt})

    yield from rec([], 1, frozenset())


def _suite_oracle(rep: VerificationReport):
    from subchord.pattern import HH, III

    groups = c4_configurations()
    rep.checked += 1
    c4_unique = groups.get("C4") == {HH.letters}
    if not c4_unique:
        rep.fail("4-chord diagrams", None, f"C4 configurations {groups.get('C4')}")
    rep.checked += 1
    if groups.get("K13") != {III.letters}:
        rep.fail("4-chord diagrams", None, f"K13 configurations {groups.get('K13')}")
    rep.details["C4 configurations unique"] = c4_unique
    for w in all_realizable(rep.n_max):
        rep.checked += 1
        a, b = count_named(w), graph_counts(w)
        if a != b:
            rep.fail(w, None, {"count_named": a.as_dict(), "graph_counts": b.as_dict()})
        rep.checked += 1
        if st_factor_check(w) != (a.h == 0):
            rep.fail(w, None, f"factor check {st_factor_check(w)} but h = {a.h}")


SUITES = {
    "theorem1": _suite_theorem1,
    "theorem2": _suite_theorem2,
    "theorem3": _suite_theorem3,
    "flype": _suite_flype,
    "averaged": _suite_averaged,
    "additivity": _suite_additivity,
    "oracle": _suite_oracle,
}


def verify(suite: str, n_max: int) -> VerificationReport:
    """Run one verification suite over all curves with at most ``n_max``
    double points.  Failures are collected, not raised."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {sorted(SUITES)}")
    _guard(n_max)
    rep = VerificationReport(suite, n_max)
    SUITES[suite](rep)
    return rep


def prime_reduced_by_n(n_max: int) -> dict[int, list[CensusRecord]]:
    out: dict[int, list[CensusRecord]] = {}
    for r in enumerate_records(n_max, "prime_reduced"):
        out.setdefault(r.n, []).append(r)
    return out


def signs_table(w: GaussWord) -> list[dict[int, int]]:
    """First-passage signs for every base point of the first embedding."""
    e = spherical_embeddings(w)[0]
    return [crossing_signs(e, b).sign for b in range(max(len(w), 1))]
