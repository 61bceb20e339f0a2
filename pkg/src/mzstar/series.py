"""Pi-graded formal power series with strict truncation tracking.

A GradedSeries stores rational coefficients q_0..q_T of a series in one
variable z, under the grading convention that the z**n coefficient carries
an implicit factor pi**n. All the trigonometric generating functions used
by the closed-form evaluators are homogeneous in that sense, e.g.

    sin(pi z)/(pi z)  ->  q_{2n} = (-1)**n / (2n+1)!

so their coefficients are plain rationals here.

Truncation is part of the value: asking for a coefficient beyond the
truncation order raises TruncationError instead of pretending the series
has a zero there. Products and sums propagate the minimum truncation of
their inputs.

The half-argument cotangent has a simple pole at z = 0; it is represented
as a LaurentPair (pole coefficient p meaning p / (pi z), plus a regular
GradedSeries). Its only consumer multiplies it by an odd series with zero
constant term, which lands back in ordinary power series territory.
"""

from __future__ import annotations

from typing import NamedTuple

from gmpy2 import mpq

from .exact_core import PiValue, factorial, zeta_even_coeff


class TruncationError(ValueError):
    """A coefficient beyond the known truncation order was requested."""


class GradedSeries:
    """Immutable truncated power series with exact rational coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs):
        object.__setattr__(self, "_coeffs", tuple(mpq(c) for c in coeffs))
        if not self._coeffs:
            raise ValueError("a series needs at least the z^0 coefficient")

    def __setattr__(self, name, value):
        raise AttributeError("GradedSeries is immutable")

    @property
    def truncation(self) -> int:
        """Largest exponent whose coefficient is known."""
        return len(self._coeffs) - 1

    def coeff(self, n: int):
        if n < 0:
            raise TruncationError("coefficient index must be >= 0")
        if n > self.truncation:
            raise TruncationError(
                "coefficient z^%d requested but series is truncated at z^%d"
                % (n, self.truncation)
            )
        return self._coeffs[n]

    def coeffs(self):
        return self._coeffs

    def __eq__(self, other):
        if not isinstance(other, GradedSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __add__(self, other):
        return series_add(self, other)

    def __sub__(self, other):
        return series_add(self, series_scale(other, -1))

    def __mul__(self, other):
        if isinstance(other, GradedSeries):
            return series_mul(self, other)
        return series_scale(self, other)

    def __rmul__(self, other):
        return series_scale(self, other)

    def __repr__(self):
        shown = ", ".join(str(c) for c in self._coeffs[:6])
        if self.truncation >= 6:
            shown += ", ..."
        return "GradedSeries([%s]; T=%d)" % (shown, self.truncation)


class LaurentPair(NamedTuple):
    """pole / (pi z) + regular part."""

    pole: mpq
    regular: GradedSeries


def series_zero(truncation: int) -> GradedSeries:
    return GradedSeries([mpq(0)] * (truncation + 1))


def series_one(truncation: int) -> GradedSeries:
    return GradedSeries([mpq(1)] + [mpq(0)] * truncation)


def series_scale(a: GradedSeries, c) -> GradedSeries:
    q = mpq(c)
    return GradedSeries([x * q for x in a.coeffs()])


def series_add(a: GradedSeries, b: GradedSeries) -> GradedSeries:
    t = min(a.truncation, b.truncation)
    return GradedSeries([a.coeff(n) + b.coeff(n) for n in range(t + 1)])


def series_mul(a: GradedSeries, b: GradedSeries) -> GradedSeries:
    """Cauchy product, truncated at min(truncation(a), truncation(b))."""
    t = min(a.truncation, b.truncation)
    ac, bc = a.coeffs(), b.coeffs()
    out = []
    for n in range(t + 1):
        s = mpq(0)
        for k in range(n + 1):
            if ac[k] and bc[n - k]:
                s += ac[k] * bc[n - k]
        out.append(s)
    return GradedSeries(out)


def series_reciprocal(a: GradedSeries) -> GradedSeries:
    """1 / a, requires a nonzero constant term. Same truncation as a."""
    a0 = a.coeff(0)
    if a0 == 0:
        raise ValueError("series with zero constant term has no reciprocal")
    inv0 = 1 / a0
    ac = a.coeffs()
    out = [inv0]
    for n in range(1, a.truncation + 1):
        s = mpq(0)
        for k in range(1, n + 1):
            if ac[k] and out[n - k]:
                s += ac[k] * out[n - k]
        out.append(-inv0 * s)
    return GradedSeries(out)


def series_exp(u: GradedSeries) -> GradedSeries:
    """exp(u) for a series with zero constant term."""
    if u.coeff(0) != 0:
        raise ValueError("series_exp needs a zero constant term")
    uc = u.coeffs()
    out = [mpq(1)]
    for n in range(1, u.truncation + 1):
        s = mpq(0)
        for k in range(1, n + 1):
            if uc[k] and out[n - k]:
                s += k * uc[k] * out[n - k]
        out.append(s / n)
    return GradedSeries(out)


def series_log(a: GradedSeries) -> GradedSeries:
    """log(a) for a series with constant term exactly 1."""
    if a.coeff(0) != 1:
        raise ValueError("series_log needs constant term 1")
    ac = a.coeffs()
    out = [mpq(0)]
    for n in range(1, a.truncation + 1):
        s = mpq(0)
        for k in range(1, n):
            if out[k] and ac[n - k]:
                s += k * out[k] * ac[n - k]
        out.append(ac[n] - s / n)
    return GradedSeries(out)


def series_sin_norm(truncation: int) -> GradedSeries:
    """sin(pi z) / (pi z): q_{2n} = (-1)**n / (2n+1)!."""
    out = [mpq(0)] * (truncation + 1)
    for n in range(0, truncation // 2 + 1):
        c = mpq(1, factorial(2 * n + 1))
        out[2 * n] = -c if n % 2 else c
    return GradedSeries(out)


def series_sinh_norm(truncation: int) -> GradedSeries:
    """sinh(pi z) / (pi z): q_{2n} = 1 / (2n+1)!."""
    out = [mpq(0)] * (truncation + 1)
    for n in range(0, truncation // 2 + 1):
        out[2 * n] = mpq(1, factorial(2 * n + 1))
    return GradedSeries(out)


def series_tanh_half(truncation: int) -> GradedSeries:
    """tanh(pi z / 2): odd series, q_1 = 1/2, q_3 = -1/24, ...

    q_{2n-1} = 4 * (-1)**(n+1) * (4**n - 1) * zeta(2n)/pi^(2n) / 4**n.
    """
    out = [mpq(0)] * (truncation + 1)
    four = 4
    for n in range(1, (truncation + 1) // 2 + 1):
        q = 4 * (four - 1) * zeta_even_coeff(n) / four
        out[2 * n - 1] = q if n % 2 else -q
        four *= 4
    return GradedSeries(out)


def series_cot_half(truncation: int) -> LaurentPair:
    """cot(pi z / 2) as 2/(pi z) plus a regular odd series.

    Regular part: q_{2n-1} = -4 * zeta(2n)/pi^(2n) / 4**n, so q_1 = -1/6,
    q_3 = -1/360, ...
    """
    out = [mpq(0)] * (truncation + 1)
    four = 4
    for n in range(1, (truncation + 1) // 2 + 1):
        out[2 * n - 1] = mpq(-4) * zeta_even_coeff(n) / four
        four *= 4
    return LaurentPair(mpq(2), GradedSeries(out))


def series_mul_laurent(pair: LaurentPair, s: GradedSeries) -> GradedSeries:
    """(pole/(pi z) + regular) * s for an s with zero constant term.

    The pole against s_{n+1} z^(n+1) contributes pole * s_{n+1} at z^n,
    consistent with the grading (one factor of pi cancels). Result is
    truncated at min(truncation(s) - 1, truncation(regular)).
    """
    if s.coeff(0) != 0:
        raise ValueError("pole times nonzero constant term leaves the grading")
    t = min(s.truncation - 1, pair.regular.truncation)
    pole_part = GradedSeries([pair.pole * s.coeff(n + 1) for n in range(t + 1)])
    return series_add(pole_part, series_mul(pair.regular, s))


def series_tanh_cot(truncation: int) -> GradedSeries:
    """tanh(pi z / 2) * cot(pi z / 2), an even series with constant term 1.

    The z**(4d) coefficient is zeta*({3,1}^d) / pi**(4d) and the
    z**(4d+2) coefficient is -zeta*({3,1}^d, 2) / pi**(4d+2); odd
    coefficients vanish.
    """
    tanh = series_tanh_half(truncation + 1)
    cot = series_cot_half(truncation)
    return series_mul_laurent(cot, tanh)


def zeta_star_4_series(d: int, truncation: int | None = None) -> PiValue:
    """zeta*({4}^d) read off the reciprocal of sin_norm * sinh_norm.

    The product sin(pi z) sinh(pi z) / (pi z)**2 carries the non-star
    values with alternating sign, (-1)**d * zeta({4}^d), at z**(4d); its
    reciprocal carries the star values zeta*({4}^d) unsigned, because
    repetition-allowed chains are what the geometric factors count.
    """
    if d < 0:
        raise ValueError("d must be >= 0")
    t = 4 * d if truncation is None else truncation
    if 4 * d > t:
        raise ValueError("truncation %d too small for z^%d" % (t, 4 * d))
    prod = series_mul(series_sin_norm(t), series_sinh_norm(t))
    return PiValue(series_reciprocal(prod).coeff(4 * d), 4 * d)
