"""Chessboard embeddings of components.

Any list of components fits on a board of odd height (at least 9 when a
file is stopped) with six extra files of fixed furniture: a two-file
mutual Zugzwang so that losing the pawn fight costs the chess game, and
two corner locks that keep the kings out of play.  Stopped files are
realized by four immobile stopper pawns.
"""

from pawnnim import Word, embed, extract_components, render
from pawnnim.grundy import GrundyTable, epsilon

table = GrundyTable()

print("a five-file component on 9x12 (first player wins with the "
      "middle-file move):\n")
print(render(embed(["00000"], 9, 12)))

print("\nthe *2 component, first file stopped:\n")
print(render(embed(["1000"], 9, 12)))

print("\nthe same with a one-file heap component added; the sum is "
      "*2 + *1 = *3, still a first-player win:\n")
diag = embed(["1000", "0"], 9, 12)
print(render(diag))

comps = extract_components(diag)
values = [epsilon(w, table) for w in comps]
print("\nread back from the diagram:", [str(w) for w in comps],
      "-> values", values)

print("\nFEN-style, multi-digit empty runs allowed:")
print(render(diag, "fen"))

print("\na wider board with two bigger components:\n")
print(render(embed(["1000", "00100"], 9, 18)))
