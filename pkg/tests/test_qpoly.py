from fractions import Fraction
from itertools import combinations
from math import comb, gcd

import pytest

from minuscule import (
    ExactnessError,
    ParameterError,
    QPolynomial,
    UnsupportedPosetError,
    cayley_moufang,
    chain_product,
    cyclotomic,
    enumerate_ideals,
    eval_at_root,
    freudenthal,
    is_zero_at_primitive_root,
    plane_partition_gf,
    propeller,
    q_binomial,
    q_binomial_at_root,
    q_factorial,
    q_int,
    q_ratio_limit,
    rectangle,
    shifted_staircase,
)


def test_polynomial_basics():
    p = QPolynomial([1, 2, 0, 0])
    assert p.coeffs == (1, 2) and p.degree == 1
    assert (p * QPolynomial([0, 1])).coeffs == (0, 1, 2)
    assert p(3) == 7
    assert QPolynomial.zero().degree == -1
    q = QPolynomial.monomial(3) - QPolynomial.one()
    quot, rem = q.divmod(QPolynomial([-1, 1]))
    assert rem == QPolynomial.zero() and quot.coeffs == (1, 1, 1)
    with pytest.raises(ExactnessError):
        QPolynomial([1, 1]).exact_div(QPolynomial([0, 2]))


def test_q_binomial_values():
    assert q_binomial(4, 2).coeffs == (1, 1, 2, 1, 1)
    assert q_binomial(7, 0) == QPolynomial.one()
    assert q_binomial(2, 3) == QPolynomial.zero()
    for i in range(9):
        for j in range(i + 1):
            assert q_binomial(i, j)(1) == comb(i, j)


def test_q_binomial_brute_force_weight_oracle():
    # Sum of q^(sum of chosen positions - minimal sum) over j-subsets of [i].
    for i, j in ((4, 2), (5, 2), (6, 3)):
        weights = {}
        for subset in combinations(range(i), j):
            w = sum(subset) - sum(range(j))
            weights[w] = weights.get(w, 0) + 1
        oracle = QPolynomial(weights.get(e, 0) for e in range(max(weights) + 1))
        assert q_binomial(i, j) == oracle


def test_cyclotomic_small():
    assert cyclotomic(1).coeffs == (-1, 1)
    assert cyclotomic(2).coeffs == (1, 1)
    assert cyclotomic(3).coeffs == (1, 1, 1)
    assert cyclotomic(6).coeffs == (1, -1, 1)
    assert cyclotomic(12).coeffs == (1, 0, -1, 0, 1)
    for n in (4, 9, 15, 30):
        prod = QPolynomial.one()
        for d in range(1, n + 1):
            if n % d == 0:
                prod = prod * cyclotomic(d)
        assert prod == QPolynomial.monomial(n) - QPolynomial.one()


def test_eval_at_root_basics():
    f = QPolynomial([1, 1, 1])
    assert eval_at_root(f, 3, 1).equals_int(0)
    assert eval_at_root(f, 3, 3).equals_int(3)  # exponent n means evaluation at 1
    g = q_binomial(4, 2)
    assert eval_at_root(g, 4, 4).equals_int(6)
    assert not eval_at_root(QPolynomial([0, 1]), 8, 1).is_integer  # zeta_8 itself


def test_eval_at_root_agrees_with_closed_form():
    for i in range(1, 31):
        for d in range(1, i + 1):
            if i % d:
                continue
            for j in range(0, i + 3):
                got = eval_at_root(q_binomial(i, j), i, i // d)
                want = q_binomial_at_root(i, j, d)
                assert got.equals_int(want), (i, j, d)


def test_residue_degree_below_cyclotomic_degree():
    for n, d in ((12, 1), (12, 8), (30, 6), (7, 3), (9, 9)):
        value = eval_at_root(q_binomial(9, 4), n, d)
        from math import gcd

        n_prime = n // gcd(n, d)
        assert value.primitive_order == n_prime
        assert len(value.residue) <= cyclotomic(n_prime).degree


def test_q_binomial_at_root_examples():
    assert q_binomial_at_root(16, 8, 8) == comb(2, 1) == 2
    assert q_binomial_at_root(12, 8, 3) == 0
    for p in (3, 4, 5):
        for m in range(2 * p, 40):
            for d in range(2, m + 1):
                if m % d == 0 and (2 * p - 1) % d == 0:
                    assert q_binomial_at_root(m, 2 * p - 1, d) == comb(m // d, (2 * p - 1) // d)
    with pytest.raises(ParameterError):
        q_binomial_at_root(10, 4, 3)  # 3 does not divide 10


def test_character_sum_identity():
    # Summing the evaluations over all powers of a primitive root picks out
    # every n-th coefficient, n times.
    for i, j in ((6, 2), (8, 3), (12, 4)):
        f = q_binomial(i, j)
        total = 0
        for d in range(1, i + 1):
            value = eval_at_root(f, i, d)
            assert value.is_integer
            total += value.value
        expected = i * sum(c for e, c in enumerate(f.coeffs) if e % i == 0)
        assert total == expected


def test_q_ratio_limit():
    assert q_ratio_limit(10, 5, 20, 5) == Fraction(2)
    assert q_ratio_limit(7, 3, 8, 4) == Fraction(1)
    for d, n in ((3, 9), (5, 20)):
        assert q_ratio_limit(d, d, n, d) == Fraction(1)
    with pytest.raises(ParameterError):
        q_ratio_limit(7, 4, 8, 4)


def test_is_zero_at_primitive_root():
    n = 6
    assert is_zero_at_primitive_root(QPolynomial.monomial(n) - QPolynomial.one(), n)
    assert not is_zero_at_primitive_root(QPolynomial.one(), n)
    assert is_zero_at_primitive_root(q_int(6), 6)
    assert not is_zero_at_primitive_root(q_int(6), 4)


def test_gf_point_counts():
    assert plane_partition_gf(cayley_moufang(), 1)(1) == 27
    assert plane_partition_gf(freudenthal(), 1)(1) == 56
    for P in (propeller(3), propeller(4), cayley_moufang(), rectangle(2, 3), shifted_staircase(3)):
        for k in (0, 1, 2, 3):
            gf = plane_partition_gf(P, k)
            count = sum(1 for _ in enumerate_ideals(chain_product(P, k)))
            assert gf(1) == count, (P.family, k)
    for k in (0, 1, 2, 3):
        gf = plane_partition_gf(freudenthal(), k)
        assert gf(1) == sum(1 for _ in enumerate_ideals(chain_product(freudenthal(), k)))


def test_gf_shape_invariants():
    for P, k in ((cayley_moufang(), 2), (propeller(4), 3), (freudenthal(), 2)):
        gf = plane_partition_gf(P, k)
        assert gf.degree == k * P.n
        assert all(c >= 0 for c in gf.coeffs)
        assert gf.coeffs == gf.coeffs[::-1]  # rank-symmetric


def test_gf_propeller_closed_form():
    # Independent route: ratio of q-factorials and q-integers.
    for p in (3, 4, 5):
        for k in range(7):
            m = k + 2 * p - 1
            num = q_factorial(m) * q_int(m - (p - 1))
            den = q_factorial(2 * p - 1) * q_factorial(m - (2 * p - 1)) * q_int(p)
            assert plane_partition_gf(propeller(p), k) == num.exact_div(den)


def test_gf_rejects_custom_posets():
    from minuscule import ShapeDiagram, poset_from_shape

    hook = poset_from_shape(ShapeDiagram([(0, 3), (0, 1)]))
    with pytest.raises(UnsupportedPosetError):
        plane_partition_gf(hook, 1)
