import csv
import io
import json

import pytest

from oracles import all_pairings, brute_canonical, planar_realizable
from subchord import census
from subchord.census import (
    CSV_COLUMNS,
    VerificationReport,
    catalog,
    enumerate_records,
    parity_pairings,
    reachable_to_trivial,
    realizable_words,
    verify,
)
from subchord.errors import BoundExceeded
from subchord.invariant import RI, RI_STRONG_RIII, RI_WEAK_RIII, lambda_invariant
from subchord.pattern import count_named
from subchord.word import is_prime, is_reduced, word


def test_parity_pairings_count():
    from math import factorial

    for n in range(0, 7):
        words = list(parity_pairings(n))
        assert len(words) == factorial(n)
        assert len(set(words)) == len(words)


@pytest.mark.parametrize("n", range(0, 6))
def test_realizable_words_against_planarity_oracle(n):
    expected = {brute_canonical(p) for p in all_pairings(n) if planar_realizable(p)}
    assert {w.letters for w in realizable_words(n)} == expected


class TestEnumerate:
    def test_three(self):
        recs = enumerate_records(3, "prime_reduced")
        assert [str(r.word) for r in recs] == ["1 2 3 1 2 3"]

    def test_two_is_empty(self):
        assert enumerate_records(2, "prime_reduced") == []

    def test_seven_counts(self):
        recs = enumerate_records(7, "prime_reduced")
        per_n = {n: sum(1 for r in recs if r.n == n) for n in range(3, 8)}
        assert per_n == {3: 1, 4: 1, 5: 2, 6: 3, 7: 10}

    def test_records_match_recomputation(self):
        for r in enumerate_records(6):
            assert r.counts == count_named(r.word)
            assert r.lambda_ == lambda_invariant(r.word)
            assert r.prime == is_prime(r.word) and r.reduced == is_reduced(r.word)
            assert r.n == r.word.n

    def test_sorted(self):
        recs = enumerate_records(6)
        keys = [(r.n, r.word.letters) for r in recs]
        assert keys == sorted(keys)

    def test_lambda_sum(self):
        recs = enumerate_records(7, "prime_reduced")
        for n in range(3, 8):
            rs = [r for r in recs if r.n == n]
            assert sum(4 * r.lambda_ for r in rs) == sum(
                3 * r.counts.h - 3 * r.counts.triple + r.counts.cross for r in rs
            )

    def test_bound(self, monkeypatch):
        with pytest.raises(BoundExceeded):
            enumerate_records(9)
        monkeypatch.setenv("SUBCHORD_MAX_N", "2")
        with pytest.raises(BoundExceeded):
            enumerate_records(3)
        with pytest.raises(BoundExceeded):
            verify("oracle", 3)

    def test_bad_filter(self):
        with pytest.raises(ValueError):
            enumerate_records(3, "composite")


class TestCatalog:
    def test_csv(self):
        text = catalog(5, "csv")
        rows = list(csv.DictReader(io.StringIO(text)))
        assert tuple(rows[0]) == CSV_COLUMNS
        by_n = {}
        for r in rows:
            by_n.setdefault(int(r["n"]), []).append(int(r["lambda"]))
        assert by_n[4] == [4]
        assert -5 in by_n[5]

    def test_json_seven(self):
        data = json.loads(catalog(7, "json"))
        assert -3 in [r["lambda"] for r in data if r["n"] == 7]
        assert set(data[0]) >= set(CSV_COLUMNS)

    def test_deterministic(self):
        assert catalog(6, "json") == catalog(6, "json")
        assert catalog(6, "csv", "all") == catalog(6, "csv", "all")

    def test_bad_format(self):
        with pytest.raises(ValueError):
            catalog(3, "xml")


class TestReachability:
    def test_examples(self):
        assert reachable_to_trivial(word("1 1 2 2"), RI)
        assert not reachable_to_trivial(word("1 2 3 1 2 3"), RI)
        assert reachable_to_trivial(word("1 2 3 1 2 3"), RI_STRONG_RIII)
        assert not reachable_to_trivial(word("1 2 3 4 2 1 4 3"), RI_STRONG_RIII)
        assert reachable_to_trivial(word("1 2 2 1"), RI_WEAK_RIII)

    def test_trefoil_needs_no_detour(self):
        # the trefoil needs no detour: both strong RIII sites remove all crossings
        assert reachable_to_trivial(word("1 2 3 1 2 3"), RI_STRONG_RIII, slack=0)


class TestVerify:
    def test_unknown_suite(self):
        with pytest.raises(ValueError):
            verify("theorem9", 3)

    def test_move_suite_small(self):
        rep = verify("theorem1", 5)
        assert rep.passed and rep.checked > 1000
        assert rep.details["words"] == len(census.all_realizable(5))

    def test_report_rendering(self):
        rep = VerificationReport("x", 3)
        assert rep.passed
        rep.fail(word("1 1"), None, "boom")
        assert not rep.passed
        d = rep.as_dict()
        assert d["failures"][0]["word"] == "1 1"
        assert "FAIL" in rep.render()
        json.dumps(d)
