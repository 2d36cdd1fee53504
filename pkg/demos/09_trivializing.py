"""When can a curve be undone with a restricted set of moves?

RI alone (or with weak RIII) undoes exactly the curves with no crossing
chords.  RI with strong RIII undoes exactly those with no H shape and
lambda = 0.  A breadth-first search over words confirms the answers.
"""

from subchord import MOVESETS, trivializable, word
from subchord.census import reachable_to_trivial

for text in ("1 2 2 1", "1 2 3 1 2 3", "1 2 3 4 5 1 2 3 4 5", "1 2 3 4 2 1 4 3"):
    w = word(text)
    verdicts = {name: trivializable(w, ms) for name, ms in MOVESETS.items()}
    search = {name: reachable_to_trivial(w, ms) for name, ms in MOVESETS.items()}
    print(f"{text:<22} {verdicts}  search agrees: {verdicts == search}")
