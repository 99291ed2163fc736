"""Deflation and inflation: compressing a tableau to its gapless core and back.

Run with:  python demos/04_deflation_inflation.py
"""

from minuscule import (
    IncreasingTableau,
    content_vector,
    deflate,
    enumerate_gapless,
    inflate,
    inflated_period,
    promotion,
    propeller,
    rectangle,
)

# ---------------------------------------------------------------------------
# Deflation renumbers the labels actually used down to 1..m_t; the content
# vector records which labels occurred.  Together they determine the
# original tableau, so (deflate, content) is a bijection onto pairs
# (gapless tableau, binary vector).
# ---------------------------------------------------------------------------
grid = rectangle(2, 3)
T = IncreasingTableau(grid, (1, 2, 5, 4, 5, 6), 7)
S = deflate(T)
v = content_vector(T)
print("tableau with ceiling 7:")
print(T.to_text())
print("\ngapless core (ceiling 5):")
print(S.to_text())
print("\ncontent vector:", v)
assert inflate(S, v) == T

# ---------------------------------------------------------------------------
# Every shape has finitely many gapless tableaux.  A propeller has exactly
# three: one at the minimal ceiling and a promotion 2-cycle one above it.
# ---------------------------------------------------------------------------
for p in (3, 4, 5):
    tabs = list(enumerate_gapless(propeller(p)))
    print(f"\npropeller-{p}: {len(tabs)} gapless tableaux at ceilings {sorted(t.m for t in tabs)}")

# ---------------------------------------------------------------------------
# The promotion period of any tableau is a formula in its gapless data:
# ceiling m, core size m_t, core period tau, content rotation period ell.
# Inflating the gapless ceiling-7 propeller tableau to ceiling 8 with one
# gap bumps its period from 1 to 8; a direct orbit walk agrees.
# ---------------------------------------------------------------------------
S7 = next(t for t in enumerate_gapless(propeller(4)) if t.m == 7)
T8 = inflate(S7, (1, 1, 1, 1, 1, 1, 1, 0))
predicted = inflated_period(8, 7, 1, 8)
steps, cur = 0, T8
while True:
    cur = promotion(cur)
    steps += 1
    if cur == T8:
        break
print(f"\ninflated period: formula {predicted}, orbit walk {steps}")
