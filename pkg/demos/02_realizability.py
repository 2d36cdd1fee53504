"""Which words come from curves on the sphere?

Not every double-occurrence word is drawn by a curve.  We search the 2^n
ways to arrange the strands at each double point and keep those whose faces
satisfy Euler's formula V - E + F = 2.
"""

from subchord import crossing_signs, faces, is_realizable, spherical_embeddings, word

for text in ("1 2 1 2", "1 2 2 1", "1 2 3 1 2 3", "1 2 3 4 2 1 4 3"):
    w = word(text)
    embs = spherical_embeddings(w)
    print(f"{text:<18} realizable={is_realizable(w)!s:<5} embeddings={len(embs)}")

t = word("1 2 3 1 2 3")
e = spherical_embeddings(t)[0]
print("trefoil face sizes:", sorted(faces(e).degrees))

# Signs from the first passage through each double point, for every base point.
for b in range(len(t)):
    print("base point", b, "signs", crossing_signs(e, b).sign)
