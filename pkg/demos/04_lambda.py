"""The integer lambda = (3h - 3tr + cross) / 4.

Divisibility by four holds for every curve on the sphere.  lambda does not
change under the first Reidemeister move or the strong third move, and it
adds under connected sum, so every integer occurs.
"""

from subchord import connected_sum, lambda_invariant, torus_word, word
from subchord.invariant import FIVE_ONE, FOUR_ONE, SEVEN_THREE, word_with_lambda

for name, w in (("3_1", word("1 2 3 1 2 3")), ("4_1", FOUR_ONE), ("5_1", FIVE_ONE), ("7_3", SEVEN_THREE)):
    print(f"lambda({name}) = {lambda_invariant(w)}")

print("lambda(4_1 # 5_1) =", lambda_invariant(connected_sum(FOUR_ONE, FIVE_ONE)))
print("lambda(4_1 # 7_3) =", lambda_invariant(connected_sum(FOUR_ONE, SEVEN_THREE)))

for i in range(1, 6):
    print(f"torus projection P_{i}: lambda = {lambda_invariant(torus_word(i))}")

print("hitting every value in -3..3:",
      [lambda_invariant(word_with_lambda(k)) for k in range(-3, 4)])
