"""Exact arithmetic in cyclotomic fields and the root-of-unity evaluators.

The mixed families {{2}^m, 3, {2}^m, 1}^d (and the same with a trailing
{2}^(m+1) block) have closed forms that sum Bernoulli-pair convolutions
weighted by powers of a primitive N-th root of unity, N = 2(m+1). The sum
lives in Q(zeta_N) term by term but its total is rational; this module
does the bookkeeping exactly and *asserts* the rationality at the end
instead of trusting it, raising RationalityViolation if a nonzero
irrational component survives.

Elements of Q(zeta_N) are represented in the power basis modulo the N-th
cyclotomic polynomial, with exact rational coordinates.
"""

from __future__ import annotations

from functools import lru_cache

from gmpy2 import mpq, mpz

from .exact_core import PiValue, bernoulli_table, factorial


class RationalityViolation(ArithmeticError):
    """A value that must be rational came out with nonzero root components."""


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _poly_divmod(num, den):
    """Long division for a monic integer divisor; returns (quot, rem)."""
    num = list(num)
    dd = len(den) - 1
    quot = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            quot[i - dd] = c
            for j in range(dd + 1):
                num[i - dd + j] -= c * den[j]
    return quot, num[:dd]


@lru_cache(maxsize=None)
def cyclotomic_poly(N: int) -> tuple:
    """Coefficients of the N-th cyclotomic polynomial, ascending, exact.

    Computed by dividing x**N - 1 by the product of the cyclotomic
    polynomials of the proper divisors of N; the division is exact over
    the integers and the result is monic.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    if N == 1:
        return (-1, 1)
    num = [-1] + [0] * (N - 1) + [1]
    den = [1]
    for d in range(1, N):
        if N % d == 0:
            den = _poly_mul(den, cyclotomic_poly(d))
    quot, rem = _poly_divmod(num, den)
    if any(rem):
        raise AssertionError("cyclotomic division left a remainder")
    return tuple(quot)


def _degree(N: int) -> int:
    return len(cyclotomic_poly(N)) - 1


class CycloElement:
    """An element of Q(zeta_N) in the power basis 1, x, ..., x**(deg-1)
    modulo the N-th cyclotomic polynomial. Immutable, exact."""

    __slots__ = ("N", "coeffs")

    def __init__(self, N: int, coeffs):
        deg = _degree(N)
        cs = [mpq(c) for c in coeffs]
        if len(cs) > deg:
            cs = _reduce_mod_cyclo(N, cs)
        cs += [mpq(0)] * (deg - len(cs))
        object.__setattr__(self, "N", N)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("CycloElement is immutable")

    @classmethod
    def zero(cls, N: int) -> "CycloElement":
        return cls(N, [])

    @classmethod
    def one(cls, N: int) -> "CycloElement":
        return cls(N, [1])

    @classmethod
    def from_rational(cls, N: int, q) -> "CycloElement":
        return cls(N, [mpq(q)])

    def _check_field(self, other: "CycloElement"):
        if self.N != other.N:
            raise ValueError("mixed cyclotomic fields: N=%d vs N=%d"
                             % (self.N, other.N))

    def __add__(self, other):
        if not isinstance(other, CycloElement):
            return NotImplemented
        self._check_field(other)
        return CycloElement(
            self.N, [a + b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __sub__(self, other):
        if not isinstance(other, CycloElement):
            return NotImplemented
        self._check_field(other)
        return CycloElement(
            self.N, [a - b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __neg__(self):
        return CycloElement(self.N, [-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, CycloElement):
            self._check_field(other)
            prod = _poly_mul(self.coeffs, other.coeffs)
            return CycloElement(self.N, prod)
        q = mpq(other)
        return CycloElement(self.N, [a * q for a in self.coeffs])

    __rmul__ = __mul__

    @property
    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self):
        """The element as an mpq, or RationalityViolation if it is not one."""
        if not self.is_rational:
            raise RationalityViolation(
                "nonzero root-of-unity components survived: %r" % (self,)
            )
        return self.coeffs[0]

    def __eq__(self, other):
        if not isinstance(other, CycloElement):
            return NotImplemented
        return self.N == other.N and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.N, self.coeffs))

    def __repr__(self):
        return "CycloElement(N=%d, %s)" % (self.N, list(self.coeffs))


def _reduce_mod_cyclo(N: int, coeffs):
    phi = cyclotomic_poly(N)
    deg = len(phi) - 1
    cs = list(coeffs)
    for i in range(len(cs) - 1, deg - 1, -1):
        c = cs[i]
        if c:
            cs[i] = mpq(0)
            for j in range(deg):
                cs[i - deg + j] -= c * phi[j]
    return cs[:deg]


def cyclo_root_pow(N: int, e: int) -> CycloElement:
    """zeta_N**e as a CycloElement (e taken modulo N, may be negative)."""
    e = e % N
    return CycloElement(N, [0] * e + [1])


def _root_power_table(N: int):
    return [cyclo_root_pow(N, e) for e in range(N)]


def _t7_sum(d: int, m: int, tail: bool) -> PiValue:
    """Shared kernel for the root-of-unity product evaluators.

    Convolves position-local Bernoulli-pair sums F(n) (each twisted by
    zeta_N**l inside and zeta_N**(2kn) per position k) over m+1 positions,
    keeping only total degree S = (m+1)*(2d) or (m+1)*(2d+1). The grand
    total must be rational; that is asserted only once at the end.
    """
    npos = m + 1
    big_n = 2 * npos
    s_target = npos * (2 * d + 1) if tail else npos * 2 * d
    table = bernoulli_table()
    table.ensure(2 * s_target + 2)
    u = [mpq(table.value(2 * j), factorial(2 * j))
         for j in range(s_target + 2)]
    rp = _root_power_table(big_n)

    f = []
    for n in range(s_target + 1):
        acc = CycloElement.zero(big_n)
        four = mpz(4)
        for l in range(n + 1):
            acc = acc + ((four - 1) * u[l + 1] * u[n - l]) * rp[l % big_n]
            four *= 4
        f.append(acc)

    zero = CycloElement.zero(big_n)
    g = list(f)
    for k in range(1, npos):
        fw = [f[n] * rp[(2 * k * n) % big_n] for n in range(s_target + 1)]
        new_g = []
        for t in range(s_target + 1):
            acc = zero
            for n in range(t + 1):
                acc = acc + g[t - n] * fw[n]
            new_g.append(acc)
        g = new_g

    total = (mpz(4) ** npos) * g[s_target]
    if tail and m % 2:
        total = -total
    coeff = total.rational_value()
    return PiValue(coeff, 2 * s_target)


def t7_plain(d: int, m: int) -> PiValue:
    """zeta*({{2}^m, 3, {2}^m, 1}^d) via the root-of-unity product sum.

    Exact in Q(zeta_{2(m+1)}) throughout; the result is asserted rational.
    d = 0 short-circuits to 1 (empty index).
    """
    if d < 0 or m < 0:
        raise ValueError("need d >= 0 and m >= 0")
    if d == 0:
        return PiValue(1, 0)
    return _t7_sum(d, m, tail=False)


def t7_tail(d: int, m: int) -> PiValue:
    """zeta*({{2}^m, 3, {2}^m, 1}^d, {2}^(m+1)), same machinery.

    At d = 0 the sum degenerates to the plain even-twos value
    zeta*({2}^(m+1)) and is still evaluated literally.
    """
    if d < 0 or m < 0:
        raise ValueError("need d >= 0 and m >= 0")
    return _t7_sum(d, m, tail=True)
