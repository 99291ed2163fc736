"""The label-swapping involutions and a full promotion sweep on an increasing tableau.

Run with:  python demos/03_promotion_walkthrough.py
"""

from minuscule import (
    IncreasingTableau,
    ShapeDiagram,
    content_vector,
    k_bender_knuth,
    poset_from_shape,
    promotion,
    rotate_left,
)

# ---------------------------------------------------------------------------
# An increasing tableau labels each box so that labels strictly increase
# up and to the right.  The swap operator for i exchanges i and i+1 on every
# box that has no neighbor carrying the other label; boxes glued to a
# neighbor with the other label stay put.
# ---------------------------------------------------------------------------
hook = poset_from_shape(ShapeDiagram([(0, 4), (1, 2), (2, 1)]))
T = IncreasingTableau(hook, (1, 2, 3, 5, 4, 5, 6), 6)
print("start (rows bottom-to-top):")
print(T.to_text())
for i in (3, 4, 5):
    print(f"\nafter swapping {i} <-> {i + 1} where free:")
    print(k_bender_knuth(T, i).to_text())

# ---------------------------------------------------------------------------
# Promotion composes the swaps for i = 1 .. m-1.  A single sweep rotates
# the content vector (which labels occur) one step to the left.
# ---------------------------------------------------------------------------
image = promotion(T)
print("\npromotion of the starting tableau:")
print(image.to_text())
print("content before:", content_vector(T))
print("content after: ", content_vector(image))
assert content_vector(image) == rotate_left(content_vector(T))

# ---------------------------------------------------------------------------
# Iterating promotion walks a finite orbit.  This particular tableau is
# unusually symmetric and returns home after only two sweeps; orbit sizes
# over a whole shape are the subject of demo 05.
# ---------------------------------------------------------------------------
steps, cur = 0, T
while True:
    cur = promotion(cur)
    steps += 1
    if cur == T:
        break
print("\norbit size of the starting tableau:", steps)
