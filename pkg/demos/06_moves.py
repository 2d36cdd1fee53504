"""Reidemeister moves on words and what they do to the counts.

Deletions and RIII moves are read off small faces of an embedding, and
insertions may go into any face.  Every change in the five counts obeys a
short table of parities and residues, checked here with delta_violations.
"""

from subchord import apply_move, list_sites, pattern_delta, some_embedding, word
from subchord.moves import delta_violations

w = word("1 2 3 4 2 1 4 3")
e = some_embedding(w)
shown = set()
for s in list_sites(w, e):
    if s.kind in shown:
        continue
    shown.add(s.kind)
    d = pattern_delta(w, s).delta
    print(f"{s.kind:<15} -> {apply_move(w, s)!s:<28} delta={d.as_tuple()} "
          f"ok={not delta_violations(s.kind, d)}")
