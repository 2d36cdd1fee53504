"""Counting small chord diagrams inside a big one.

Five small diagrams matter here: two crossing chords, three pairwise
crossing chords, the H shape, the III shape, and HH.  Counting them is a
matter of looking at every subset of chords.  The same numbers can be read
from the interlacement graph alone, which gives an independent check.
"""

from subchord import NAMED, count_named, count_pattern, graph_counts, word

for text in ("1 2 3 1 2 3", "1 2 3 4 2 1 4 3", "1 2 3 4 5 1 2 3 4 5"):
    w = word(text)
    c = count_named(w)
    print(f"{text:<22} {c.as_dict()}  graph agrees: {graph_counts(w) == c}")

w = word("1 2 3 1 4 5 6 3 2 6 5 4")
print({p.name: count_pattern(w, p) for p in NAMED})
