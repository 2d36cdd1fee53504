"""Flypes: turning a tangle over and passing a crossing across it.

The five counts and lambda survive any flype.  At seven crossings three
pairs of distinct prime reduced curves are one flype apart.
"""

from subchord import apply_flype, canonical_form, count_named, list_flype_sites, word

w = word("1 2 3 1 4 5 6 7 2 3 5 6 7 4")
seen = set()
for f in list_flype_sites(w):
    r = canonical_form(apply_flype(w, f))
    if r != canonical_form(w) and r not in seen:
        seen.add(r)
        print(f"Q={f.q} {f.case}: {w} -> {r}")
        print("  counts before", count_named(w).as_tuple(), "after", count_named(r).as_tuple())
