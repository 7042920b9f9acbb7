"""The raw game-tree oracle.

The oracle plays the actual 3-row board game by exhaustive memoized
search, with an attached Nim heap standing in for the rest of a larger
position.  It knows nothing about the component calculus, so agreement
with the classification engine is a real check, not a tautology.
"""

from pawnnim import (GrundyTable, Word, enumerate_words, epsilon,
                     initial_position, oracle_epsilon, oracle_is_loony,
                     outcome)
from pawnnim.oracle import principal_variation

# A three-file component is a mutual Zugzwang: whoever moves loses.
pos = initial_position(["000"])
print("[000] alone:  side to move", "wins" if outcome(pos, 0) else "loses")
print("[000] + *1:   side to move", "wins" if outcome(pos, 1) else "loses")

# The heap size that turns a component into a second-player win is its
# value; the oracle recovers *2 for the stopped-file component.
print("\noracle value of 1000:", oracle_epsilon("1000"))
print("engine value of 1000:", epsilon("1000"))

# Loony moves lose whatever heap is attached.
for k in range(4):
    print(f"move on file {k + 1} of [1000] loony per oracle:",
          oracle_is_loony("1000", k))

# Exhaustive agreement on every small component.
table = GrundyTable()
checked = 0
for m in range(1, 6):
    for w in enumerate_words(m):
        assert oracle_epsilon(w) == epsilon(w, table)
        checked += 1
print(f"\noracle matches the engine on all {checked} words of length <= 5")

# A sample line of best play from the mutual Zugzwang plus one heap.
print("principal variation of [000] + *1:",
      " ".join(principal_variation(initial_position(["000"]), 1)))
