import json
from collections import Counter

import pytest
from hypothesis import given, settings

from conftest import realizable_words
from subchord.census import all_realizable
from subchord.embed import is_realizable, some_embedding, spherical_embeddings
from subchord.errors import EmbeddingMismatch, SiteInvalid
from subchord.invariant import averaged, lambda_invariant
from subchord.moves import (
    DeltaReport,
    MoveSite,
    apply_move,
    deletion_sites,
    delta_violations,
    list_sites,
    pattern_delta,
)
from subchord.pattern import PatternCounts, count_named
from subchord.word import GaussWord, canonical_form, word

TREFOIL = word("1 2 3 1 2 3")


def kinds(sites):
    return Counter(s.kind for s in sites)


class TestListSites:
    def test_trefoil(self):
        k = kinds(list_sites(TREFOIL, some_embedding(TREFOIL)))
        assert k["RII_weak_del"] == 3
        assert k["RIII_strong"] == 2
        assert k["RI_del"] == 0
        assert k["RI_add"] == 6

    def test_kink(self):
        w = word("1 1")
        assert kinds(deletion_sites(w))["RI_del"] == 1

    def test_empty_only_insertions(self):
        w = GaussWord(())
        sites = list_sites(w, some_embedding(w))
        assert {s.kind for s in sites} == {"RI_add", "RII_strong_add"}

    def test_mismatch(self):
        with pytest.raises(EmbeddingMismatch):
            list_sites(TREFOIL, some_embedding(word("1 1")))


class TestApply:
    def test_strong_riii_on_trefoil(self):
        s = next(s for s in list_sites(TREFOIL, some_embedding(TREFOIL)) if s.kind == "RIII_strong")
        r = apply_move(TREFOIL, s)
        assert canonical_form(r) == canonical_form(word("1 2 2 3 3 1"))
        d = pattern_delta(TREFOIL, s).delta
        assert (d.cross, d.triple) == (-3, -1)

    def test_weak_rii_deletion(self):
        s = MoveSite("RII_weak_del", (1, 2))
        assert str(apply_move(TREFOIL, s)) == "3 3"
        assert pattern_delta(TREFOIL, s).delta == PatternCounts(-3, -1, 0, 0, 0)

    def test_ri_on_empty(self):
        assert str(apply_move(GaussWord(()), MoveSite("RI_add", gaps=(0,)))) == "1 1"

    def test_rii_on_empty_gives_nested_pair(self):
        e = some_embedding(GaussWord(()))
        results = {str(canonical_form(apply_move(GaussWord(()), s))) for s in list_sites(GaussWord(()), e)
                   if s.kind == "RII_strong_add"}
        assert results == {"1 1 2 2"}

    @pytest.mark.parametrize(
        "site",
        [
            MoveSite("RI_del", (1,)),
            MoveSite("RII_strong_del", (1, 2)),
            MoveSite("RIII_weak", (1, 2, 3), (0, 2, 4)),
            MoveSite("RI_add", gaps=(6,)),
            MoveSite("RII_weak_add", darts=(0, 2)),
            MoveSite("RIII_strong", (1, 2, 3), (0, 1, 2)),
            MoveSite("bogus"),
        ],
    )
    def test_invalid_sites(self, site):
        with pytest.raises(SiteInvalid):
            apply_move(TREFOIL, site)

    def test_json_round_trip(self):
        s = MoveSite("RIII_strong", (1, 2, 3), (0, 2, 4))
        assert MoveSite.from_dict(json.loads(s.to_json())) == s

    def test_delta_report(self):
        r = DeltaReport(PatternCounts(3, 1), PatternCounts())
        assert r.delta == PatternCounts(-3, -1)
        assert r.delta_lambda == 0


@pytest.mark.parametrize("w", all_realizable(5), ids=str)
def test_every_site_keeps_realizability_and_contract(w):
    for e in spherical_embeddings(w):
        for s in list_sites(w, e):
            r = apply_move(w, s)
            assert is_realizable(r), (s, r)
            d = count_named(r) - count_named(w)
            assert delta_violations(s.kind, d) == [], (s, d)


def test_riii_toggles_the_three_pairs():
    from subchord.word import interlacement

    for w in all_realizable(5):
        g = interlacement(w)
        for e in spherical_embeddings(w):
            for s in list_sites(w, e):
                if not s.kind.startswith("RIII"):
                    continue
                h = interlacement(apply_move(w, s))
                pairs = {frozenset(p) for p in ((s.labels[0], s.labels[1]),
                                                (s.labels[1], s.labels[2]),
                                                (s.labels[0], s.labels[2]))}
                assert g.edges ^ h.edges == pairs


@pytest.mark.parametrize("w", all_realizable(4), ids=str)
def test_add_then_delete_returns(w):
    target = canonical_form(w)
    for e in spherical_embeddings(w):
        for s in list_sites(w, e):
            if not s.kind.endswith("_add"):
                continue
            r = apply_move(w, s)
            back = {canonical_form(apply_move(r, t)) for t in deletion_sites(r)
                    if t.kind.replace("_del", "") == s.kind.replace("_add", "")}
            assert target in back, s


@pytest.mark.parametrize("w", all_realizable(4), ids=str)
def test_riii_is_an_involution(w):
    for e in spherical_embeddings(w):
        for s in list_sites(w, e):
            if s.kind.startswith("RIII"):
                r = apply_move(w, s)
                assert apply_move(r, MoveSite(s.kind, s.labels, s.gaps)) == w


@settings(max_examples=30, deadline=None)
@given(realizable_words(5))
def test_invariants_at_sites(w):
    lam, a = lambda_invariant(w), averaged(w)
    c0 = count_named(w)
    for e in spherical_embeddings(w):
        for s in list_sites(w, e):
            r = apply_move(w, s)
            c1 = count_named(r)
            if s.kind.startswith("RI_") or s.kind == "RIII_strong":
                assert lambda_invariant(r) == lam
                assert (c1.h > 0) == (c0.h > 0)
            if s.kind.startswith("RI_") or s.kind == "RIII_weak":
                assert (c1.cross > 0) == (c0.cross > 0)
            da = averaged(r) - a
            if s.kind.startswith("RI_") or s.kind.startswith("RII_strong"):
                assert da == 0, s
            else:
                assert abs(da) == 1, s


def test_violations_reported():
    assert delta_violations("RI_add", PatternCounts(1)) != []
    assert delta_violations("RIII_strong", PatternCounts(1, 1)) != []
    assert delta_violations("RII_weak_add", PatternCounts(3, 1)) == []
    assert delta_violations("RII_weak_del", PatternCounts(-3, -1)) == []
    with pytest.raises(ValueError):
        delta_violations("RV", PatternCounts())
