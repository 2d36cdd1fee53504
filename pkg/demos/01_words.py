"""Gauss words, their symmetries, and connected sums.

A spherical curve with n double points is recorded by walking along it and
writing down each double point as it is met.  Every label shows up twice.
Words that differ by a rotation, a reversal or a renaming describe the same
curve, so we compare them through a canonical form.
"""

from subchord import canonical_form, connected_sum, decompose, interlacement, is_prime, is_reduced, word

trefoil = word("1 2 3 1 2 3")
print("trefoil shadow:", trefoil, " n =", trefoil.n)

# A rotated, renamed copy is the same curve.
other = word("b c a b c a")
print("canonical forms agree:", canonical_form(other) == canonical_form(trefoil))

# Two chords cross when their endpoints alternate around the circle.
eight = word("1 2 3 4 2 1 4 3")
print("figure-eight crossings:", sorted(tuple(sorted(e)) for e in interlacement(eight).edges))

# Gluing two curves along an arc concatenates their words.
s = connected_sum(trefoil, word("1 1"))
print("trefoil # kink:", s)
print("factors:", [str(f) for f in decompose(s)])
print("prime?", is_prime(s), " reduced?", is_reduced(s))
