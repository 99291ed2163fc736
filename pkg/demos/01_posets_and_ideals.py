"""Walk through the built-in poset families and rowmotion on their ideals.

Run with:  python demos/01_posets_and_ideals.py
"""

from minuscule import (
    OrderIdeal,
    cayley_moufang,
    enumerate_ideals,
    freudenthal,
    propeller,
    rectangle,
    rowmotion,
    rowmotion_orbits,
)

# ---------------------------------------------------------------------------
# The five minuscule families are built from box diagrams.  Rows are stored
# bottom-to-top; each box is covered by the box above it and the box to its
# right.  The two exceptional shapes have 16 and 27 boxes.
# ---------------------------------------------------------------------------
for P in (propeller(4), cayley_moufang(), freudenthal()):
    print(f"{P.family}: {P.n} elements, longest chain {P.rk},",
          f"{len(P.covers)} covers, diagram rows {P.shape.rows}")

# ---------------------------------------------------------------------------
# Order ideals are down-closed subsets.  The exceptional shapes have
# famously small ideal lattices: 27 and 56.
# ---------------------------------------------------------------------------
print("\nideal counts:",
      sum(1 for _ in enumerate_ideals(cayley_moufang())),
      "and",
      sum(1 for _ in enumerate_ideals(freudenthal())))

# ---------------------------------------------------------------------------
# Rowmotion sends an ideal to the down-closure of the minimal elements of
# its complement.  On the 2x2 grid the six ideals split into a 4-cycle
# (the chain of "staircase" ideals) and a 2-cycle (the two antichains).
# ---------------------------------------------------------------------------
square = rectangle(2, 2)
ideal = OrderIdeal(square, 0)
print("\nrowmotion walk on the 2x2 grid, starting from the empty ideal:")
for step in range(5):
    print(f"  step {step}: members {ideal.members()}")
    ideal = rowmotion(ideal)

summary = rowmotion_orbits(square, 1)
print("orbit sizes:", dict(summary.orbit_sizes), "over", summary.total_states, "ideals")
