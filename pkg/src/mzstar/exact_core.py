"""Exact arithmetic kernel: rationals, Bernoulli numbers, pi-graded scalars.

Everything downstream (power series, closed-form evaluators, the cyclotomic
and partition-sum machinery) reduces to three ingredients kept here:

* ``Rational`` -- arbitrary-precision rationals, backed by ``gmpy2.mpq``.
  Values are always canonical: lowest terms, positive denominator.
* ``bernoulli(k)`` -- exact Bernoulli numbers from a shared growable table.
* ``PiValue`` -- a rational multiple of an integer power of pi, the result
  type of every closed-form evaluator in the package.
"""

from __future__ import annotations

import threading
from functools import lru_cache

from gmpy2 import bincoef, fac, mpq, mpz

# Canonical rational type for the whole package. gmpy2.mpq normalises on
# construction, so lowest-terms / positive-denominator invariants hold for
# free on every value that ever exists.
Rational = mpq


def rational(numerator, denominator=1) -> Rational:
    """Build a Rational; rejects a zero denominator like any division."""
    return mpq(numerator, denominator)


@lru_cache(maxsize=None)
def factorial(n: int):
    """n! as an exact integer, cached (factorials recur in denominators)."""
    return fac(n)


def binomial(n: int, k: int):
    """C(n, k) as an exact integer.

    Deliberately not cached: evaluators at benchmark sizes touch millions
    of distinct (n, k) pairs and the underlying C routine is fast.
    """
    return bincoef(n, k)


class GradingError(ValueError):
    """Mixed pi powers where a single grade is required."""


class PiValue:
    """An exact value coeff * pi**pi_power.

    Immutable. Addition and subtraction require equal pi powers: every
    closed form in this package is homogeneous in pi, so a mixed-power sum
    always indicates a bug upstream and is rejected rather than coerced.
    Multiplication adds powers; scalar multiplication and division by a
    nonzero scalar keep the power.
    """

    __slots__ = ("coeff", "pi_power")

    def __init__(self, coeff, pi_power: int = 0):
        p = int(pi_power)
        if p < 0:
            raise ValueError("pi_power must be >= 0, got %r" % pi_power)
        object.__setattr__(self, "coeff", mpq(coeff))
        object.__setattr__(self, "pi_power", p)

    def __setattr__(self, name, value):
        raise AttributeError("PiValue is immutable")

    @property
    def numerator(self):
        return self.coeff.numerator

    @property
    def denominator(self):
        return self.coeff.denominator

    def _check_same_grade(self, other: "PiValue"):
        if self.pi_power != other.pi_power:
            raise GradingError(
                "cannot add pi^%d term to pi^%d term"
                % (other.pi_power, self.pi_power)
            )

    def __add__(self, other):
        if not isinstance(other, PiValue):
            return NotImplemented
        self._check_same_grade(other)
        return PiValue(self.coeff + other.coeff, self.pi_power)

    def __sub__(self, other):
        if not isinstance(other, PiValue):
            return NotImplemented
        self._check_same_grade(other)
        return PiValue(self.coeff - other.coeff, self.pi_power)

    def __neg__(self):
        return PiValue(-self.coeff, self.pi_power)

    def __mul__(self, other):
        if isinstance(other, PiValue):
            return PiValue(self.coeff * other.coeff,
                           self.pi_power + other.pi_power)
        return PiValue(self.coeff * mpq(other), self.pi_power)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, PiValue):
            if other.pi_power > self.pi_power:
                raise GradingError("quotient would have negative pi power")
            return PiValue(self.coeff / other.coeff,
                           self.pi_power - other.pi_power)
        return PiValue(self.coeff / mpq(other), self.pi_power)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers")
        return PiValue(self.coeff ** n, self.pi_power * n)

    def __eq__(self, other):
        if not isinstance(other, PiValue):
            return NotImplemented
        if self.coeff == 0 and other.coeff == 0:
            return True
        return self.coeff == other.coeff and self.pi_power == other.pi_power

    def __hash__(self):
        if self.coeff == 0:
            return hash(0)
        return hash((self.coeff, self.pi_power))

    def __repr__(self):
        return "PiValue(%s, pi_power=%d)" % (self.coeff, self.pi_power)

    def __str__(self):
        if self.pi_power == 0:
            return str(self.coeff)
        return "%s*pi^%d" % (self.coeff, self.pi_power)


class BernoulliTable:
    """Growable table of Bernoulli numbers.

    Even-index values come from the tangent-number triangle, which stays in
    integers until one final exact division per entry:

        T_1, ..., T_n by the two-phase triangle recurrence, then
        B_{2n} = (-1)**(n-1) * 2n * T_n / (4**n * (4**n - 1)).

    Growth is geometric and swaps in a freshly built list under a lock, so
    concurrent readers only ever see a complete table; entries already
    handed out are plain mpq values and never mutate. Repeated queries are
    amortised O(1).
    """

    def __init__(self, initial: int = 64):
        self._lock = threading.Lock()
        self._even = self._build(max(initial, 8))

    @staticmethod
    def _build(n: int):
        # Tangent numbers T_1..T_n, then the even Bernoulli values B_0..B_{2n}.
        T = [mpz(0)] * (n + 1)
        T[1] = mpz(1)
        for k in range(2, n + 1):
            T[k] = (k - 1) * T[k - 1]
        for k in range(2, n + 1):
            for j in range(k, n + 1):
                T[j] = (j - k) * T[j - 1] + (j - k + 2) * T[j]
        even = [mpq(1)] * (n + 1)
        four = mpz(4)
        for i in range(1, n + 1):
            num = 2 * i * T[i]
            if i % 2 == 0:
                num = -num
            even[i] = mpq(num, four * (four - 1))
            four *= 4
        return even

    @property
    def max_index(self) -> int:
        """Largest even index currently tabulated."""
        return 2 * (len(self._even) - 1)

    def ensure(self, max_index: int) -> None:
        """Grow the table so every B_k with k <= max_index is available."""
        need = max_index // 2
        if need < len(self._even):
            return
        with self._lock:
            if need < len(self._even):
                return
            self._even = self._build(max(need, 2 * (len(self._even) - 1)))

    def value(self, k: int):
        """B_k for even k >= 0, as mpq. Grows the table if required."""
        half = k // 2
        tab = self._even
        if half >= len(tab):
            self.ensure(k)
            tab = self._even
        return tab[half]

    def bernoulli(self, k: int):
        """B_k for any k >= 0 (B_1 = -1/2, odd indices >= 3 are zero)."""
        if k < 0:
            raise ValueError("Bernoulli index must be >= 0")
        if k % 2:
            return mpq(-1, 2) if k == 1 else mpq(0)
        return self.value(k)


_TABLE = BernoulliTable()


def bernoulli_table() -> BernoulliTable:
    """The shared process-wide table (evaluators pull from this one)."""
    return _TABLE


def bernoulli(k: int) -> Rational:
    """Exact Bernoulli number B_k (B_1 = -1/2 convention)."""
    return _TABLE.bernoulli(k)


def zeta_even(k: int) -> PiValue:
    """zeta(2k) as an exact rational multiple of pi**(2k).

    zeta_even(0) = -1/2 (the analytic value at 0), zeta_even(1) = pi^2/6,
    zeta_even(2) = pi^4/90, and in general
    zeta(2k) = (-1)**(k+1) * B_{2k} * (2*pi)**(2k) / (2 * (2k)!).
    """
    if k < 0:
        raise ValueError("zeta_even argument must be >= 0")
    return PiValue(zeta_even_coeff(k), 2 * k)


def zeta_even_coeff(k: int) -> Rational:
    """The rational part of zeta(2k), i.e. zeta(2k) / pi**(2k)."""
    if k < 0:
        raise ValueError("zeta_even argument must be >= 0")
    b = _TABLE.value(2 * k)
    c = mpq(mpz(4) ** k * b.numerator, 2 * factorial(2 * k) * b.denominator)
    return c if k % 2 else -c


def beta_coeff(r: int) -> Rational:
    """Coefficient (2**(2r) - 2) * (-1)**(r-1) * B_{2r} / (2r)!.

    These rationals are the z**(2r) coefficients of the reciprocal
    normalised-sine series, i.e. beta_r = zeta*({2}^r) / pi**(2r).
    beta_coeff(0) = 1, beta_coeff(1) = 1/6, beta_coeff(2) = 7/360.
    """
    if r < 0:
        raise ValueError("beta index must be >= 0")
    b = _TABLE.value(2 * r)
    c = mpq((mpz(2) ** (2 * r) - 2) * b.numerator,
            factorial(2 * r) * b.denominator)
    return -c if r % 2 == 0 else c
