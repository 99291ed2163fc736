"""Exact integer-coefficient polynomials in q and root-of-unity evaluation.

Polynomials are dense ascending coefficient tuples with no trailing zeros,
so the zero polynomial is the empty tuple.  All arithmetic is arbitrary
precision integer arithmetic; evaluation at a root of unity reduces modulo
the appropriate cyclotomic polynomial, so equality tests against integers
are exact and never touch floating point.

The module also provides the standard q-analogues ([a]_q, q-factorials,
q-binomials), their closed-form values at roots of unity, and the hook-style
product formula for the generating function of bounded-height plane
partitions over a built-in minuscule poset.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd

from .errors import ExactnessError, ParameterError, UnsupportedPosetError
from .poset import Poset


class QPolynomial:
    """Integer polynomial in q, stored as an ascending coefficient tuple."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(int(c) for c in coeffs)

    @classmethod
    def zero(cls) -> "QPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "QPolynomial":
        return cls((1,))

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "QPolynomial":
        if exponent < 0:
            raise ParameterError("exponent must be nonnegative")
        return cls([0] * exponent + [coeff])

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = QPolynomial((other,))
        return isinstance(other, QPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPolynomial(out)

    def __neg__(self):
        return QPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return QPolynomial(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return QPolynomial(out)

    __rmul__ = __mul__

    def __call__(self, x: int) -> int:
        val = 0
        for c in reversed(self.coeffs):
            val = val * x + c
        return val

    def divmod(self, divisor: "QPolynomial") -> tuple["QPolynomial", "QPolynomial"]:
        """Polynomial division staying in integers; quotient steps must divide exactly."""
        if not divisor:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dcs = divisor.coeffs
        lead = dcs[-1]
        qlen = len(rem) - len(dcs) + 1
        if qlen <= 0:
            return QPolynomial(), QPolynomial(rem)
        quot = [0] * qlen
        for i in range(qlen - 1, -1, -1):
            c = rem[i + len(dcs) - 1]
            if c == 0:
                continue
            step, r = divmod(c, lead)
            if r:
                raise ExactnessError("integer polynomial division step is not exact")
            quot[i] = step
            for j, dc in enumerate(dcs):
                rem[i + j] -= step * dc
        return QPolynomial(quot), QPolynomial(rem)

    def exact_div(self, divisor: "QPolynomial") -> "QPolynomial":
        quot, rem = self.divmod(divisor)
        if rem:
            raise ExactnessError("polynomial division left a nonzero remainder")
        return quot

    def __repr__(self):
        if not self.coeffs:
            return "QPolynomial(0)"
        terms = []
        for e, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if e == 0 else (f"{c}*q^{e}" if c != 1 else f"q^{e}"))
        return "QPolynomial(" + " + ".join(terms) + ")"


def q_int(a: int) -> QPolynomial:
    """[a]_q = 1 + q + ... + q^(a-1)."""
    if a < 0:
        raise ParameterError("q-integer index must be nonnegative")
    return QPolynomial([1] * a)


def q_factorial(a: int) -> QPolynomial:
    out = QPolynomial.one()
    for i in range(1, a + 1):
        out = out * q_int(i)
    return out


def q_binomial(i: int, j: int) -> QPolynomial:
    """Gaussian binomial coefficient; zero when j > i, and q_binomial(i, j)(1) = C(i, j)."""
    if i < 0 or j < 0:
        raise ParameterError("q-binomial arguments must be nonnegative")
    if j > i:
        return QPolynomial.zero()
    j = min(j, i - j)
    num = QPolynomial.one()
    for a in range(i - j + 1, i + 1):
        num = num * q_int(a)
    return num.exact_div(q_factorial(j))


_CYCLOTOMIC_CACHE: dict[int, QPolynomial] = {}


def cyclotomic(n: int) -> QPolynomial:
    """n-th cyclotomic polynomial, by exact division of q^n - 1 by the lower ones."""
    if n < 1:
        raise ParameterError("cyclotomic index must be >= 1")
    cached = _CYCLOTOMIC_CACHE.get(n)
    if cached is not None:
        return cached
    poly = QPolynomial.monomial(n) - QPolynomial.one()
    for d in range(1, n):
        if n % d == 0:
            poly = poly.exact_div(cyclotomic(d))
    _CYCLOTOMIC_CACHE[n] = poly
    return poly


@dataclass(frozen=True)
class RootOfUnityValue:
    """Value of a polynomial at zeta^exponent for zeta a primitive order-th root of unity.

    zeta^exponent is itself a primitive root of order primitive_order, and the
    value is stored as a residue modulo that cyclotomic polynomial, so the
    value is an integer exactly when the residue is constant.
    """

    order: int
    exponent: int
    primitive_order: int
    residue: tuple[int, ...]

    @property
    def is_integer(self) -> bool:
        return len(self.residue) <= 1

    @property
    def value(self) -> int | None:
        if not self.is_integer:
            return None
        return self.residue[0] if self.residue else 0

    def equals_int(self, m: int) -> bool:
        return self.is_integer and self.value == m


def eval_at_root(f: QPolynomial, n: int, d: int) -> RootOfUnityValue:
    """Evaluate f at zeta^d, zeta a primitive n-th root of unity, exactly.

    zeta^d is a primitive root of order n' = n / gcd(n, d); fold exponents
    modulo n' and reduce modulo the n'-th cyclotomic polynomial.
    """
    if n < 1:
        raise ParameterError("root order must be >= 1")
    np = n // gcd(n, d % n or n)
    folded = [0] * np
    for e, c in enumerate(f.coeffs):
        folded[e % np] += c
    _, rem = QPolynomial(folded).divmod(cyclotomic(np))
    return RootOfUnityValue(n, d, np, rem.coeffs)


def is_zero_at_primitive_root(f: QPolynomial, n: int) -> bool:
    """True iff f vanishes at a primitive n-th root of unity, i.e. the n-th cyclotomic divides f."""
    return not eval_at_root(f, n, 1).residue


def q_binomial_at_root(i: int, j: int, d: int) -> int:
    """q_binomial(i, j) at a primitive (i/d)-th power of a primitive i-th root of unity.

    Requires d | i; the value is C(i/d, j/d) when d | j and 0 otherwise,
    which also covers j > i through a vanishing binomial.
    """
    if i < 1 or j < 0 or d < 1:
        raise ParameterError("arguments must be positive (j may be zero)")
    if i % d:
        raise ParameterError(f"d = {d} must divide i = {i}")
    if j % d:
        return 0
    return comb(i // d, j // d)


def q_ratio_limit(n1: int, n2: int, n: int, d: int) -> Fraction:
    """Limit of [n1]_q / [n2]_q as q approaches a primitive d-th root of unity.

    Defined when n1 and n2 are congruent mod d: the limit is n1/n2 when both
    are divisible by d and 1 otherwise.
    """
    if d < 1 or n < 1 or n % d:
        raise ParameterError("d must be a positive divisor of the order n")
    if n1 < 1 or n2 < 1:
        raise ParameterError("q-integer indices must be positive")
    if (n1 - n2) % d:
        raise ParameterError(f"[{n1}]_q / [{n2}]_q at a primitive {d}-th root: indices differ mod {d}")
    if n1 % d == 0:
        return Fraction(n1, n2)
    return Fraction(1)


def plane_partition_gf(poset: Poset, k: int) -> QPolynomial:
    """Generating function counting plane partitions of height at most k by size.

    Uses the hook-style product over element heights h_x = rank(x) + 1:
    prod (1 - q^(h_x + k)) / prod (1 - q^(h_x)).  Only the built-in minuscule
    families are accepted; the division is checked to be exact.
    """
    if poset.family is None:
        raise UnsupportedPosetError("the product formula is only asserted for built-in minuscule posets")
    if k < 0:
        raise ParameterError("height bound must be nonnegative")
    num = QPolynomial.one()
    den = QPolynomial.one()
    for r in poset.rank:
        h = r + 1
        num = num * (QPolynomial.monomial(h + k) - QPolynomial.one())
        den = den * (QPolynomial.monomial(h) - QPolynomial.one())
    return num.exact_div(den)
