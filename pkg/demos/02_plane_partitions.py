"""Plane partitions as ideals of a poset times a chain, and their generating function.

Run with:  python demos/02_plane_partitions.py
"""

from collections import Counter

from minuscule import (
    chain_product,
    enumerate_ideals,
    ideal_to_plane_partition,
    plane_partition_gf,
    plane_partition_to_ideal,
    propeller,
)

# ---------------------------------------------------------------------------
# A plane partition of height at most k over P is an order ideal of P x k,
# or equivalently a weakly order-reversing map P -> {0..k}.  The engine
# moves freely between the two encodings.
# ---------------------------------------------------------------------------
P = propeller(3)
product = chain_product(P, 2)
print(f"{P.family} x 2: {product.n} elements, longest chain {product.rk}")

ideals = list(enumerate_ideals(product))
example = ideals[len(ideals) // 2]
pp = ideal_to_plane_partition(example)
print("a sample ideal of size", len(example), "as heights:", pp.heights)
assert plane_partition_to_ideal(pp).mask == example.mask

# ---------------------------------------------------------------------------
# The generating function counts plane partitions by size and factors as a
# hook-style product over element heights rank(x) + 1.  Its coefficient at
# q^s is the number of ideals of cardinality s; at q = 1 it counts them all.
# ---------------------------------------------------------------------------
gf = plane_partition_gf(P, 2)
print("\ngenerating function coefficients:", list(gf.coeffs))
by_size = Counter(len(i) for i in ideals)
print("ideal counts by size:           ", [by_size.get(e, 0) for e in range(gf.degree + 1)])
print("total plane partitions:", gf(1), "=", len(ideals))
