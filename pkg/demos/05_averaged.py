"""The averaged invariant a(P).

Pick a base point, sign each double point by the direction of its first
passage, then add up sign products over pairs of crossing chords.  The
total does not depend on the base point or on the embedding.
"""

from subchord import averaged, spherical_embeddings, word
from subchord.census import prime_reduced_by_n

w = word("1 2 3 4 2 1 4 3")
values = {averaged(w, e, b) for e in spherical_embeddings(w) for b in range(len(w))}
print("figure-eight, all base points and embeddings:", values)

for n, records in prime_reduced_by_n(7).items():
    print(f"n={n}:", sorted(r.averaged for r in records))
