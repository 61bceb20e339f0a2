"""Closed-form evaluators for multiple zeta star values on 3-2-1 indices.

Index families covered, all returned as exact PiValue results:

* ``{2}^d`` blocks, star and non-star;
* ``{3,1}^d`` blocks, non-star, star (two independent routes: a
  linear-term-count alternating Bernoulli-pair sum and a quadratic
  double sum kept as a cross-check), and star with a trailing 2;
* the insertion sums Z(d, n), Z*(d, n) over all ways of distributing n
  twos around d (3,1) pairs, with the star versions split into the
  leading-entry-3 part (zstar0) and leading-entry-2 part (zstar1).

Independent routes for the same quantity are deliberately not merged;
their agreement is what the test suite and the crosscheck CLI lean on.

Internals: every alternating Bernoulli-pair sum is accumulated as exact
rationals whose denominators stay at the size of the two Bernoulli
denominators involved (binomial weights over one common factorial keep
the bookkeeping small); the factorial is divided out once at the end.
"""

from __future__ import annotations

from typing import NamedTuple

from gmpy2 import mpq, mpz

from .exact_core import (
    PiValue,
    bernoulli_table,
    beta_coeff,
    binomial,
    factorial,
)


def zeta_2_pow(d: int) -> PiValue:
    """zeta({2}^d) = pi**(2d) / (2d+1)!."""
    if d < 0:
        raise ValueError("d must be >= 0")
    return PiValue(mpq(1, factorial(2 * d + 1)), 2 * d)


def zeta_star_2_pow(d: int) -> PiValue:
    """zeta*({2}^d) = (-1)**(d+1) * (2**(2d) - 2) * B_{2d}/(2d)! * pi**(2d)."""
    if d < 0:
        raise ValueError("d must be >= 0")
    return PiValue(beta_coeff(d), 2 * d)


def zeta_31_pow(d: int) -> PiValue:
    """zeta({3,1}^d) = 2 * pi**(4d) / (4d+2)!."""
    if d < 0:
        raise ValueError("d must be >= 0")
    return PiValue(mpq(2, factorial(4 * d + 2)), 4 * d)


def _alternating_pair_sum(kmax: int, weight: int) -> mpq:
    """sum_{k=0}^{kmax} (-1)^k (4^(k+1)-1) B_{2k+2} B_{weight-2k-2}
    / ((2k+2)! (weight-2k-2)!), exactly, as a single rational.

    Accumulated over the common denominator weight! via binomial weights;
    per-term denominators stay bounded by the two squarefree Bernoulli
    denominators.
    """
    table = bernoulli_table()
    table.ensure(weight)
    acc = mpq(0)
    four = mpz(4)
    for k in range(kmax + 1):
        a = table.value(2 * k + 2)
        b = table.value(weight - 2 * k - 2)
        num = (four - 1) * binomial(weight, 2 * k + 2) \
            * a.numerator * b.numerator
        t = mpq(num, a.denominator * b.denominator)
        acc = acc - t if k & 1 else acc + t
        four *= 4
    return acc / factorial(weight)


def zeta_star_31_pow(d: int) -> PiValue:
    """zeta*({3,1}^d) by the linear alternating Bernoulli-pair sum.

    4 * pi**(4d) * sum_{k=0}^{2d} (-1)^k (4^(k+1)-1)
      * B_{2k+2}/(2k+2)! * B_{4d-2k}/(4d-2k)!

    Term count is linear in d; this is the production route.
    """
    if d < 0:
        raise ValueError("d must be >= 0")
    return PiValue(4 * _alternating_pair_sum(2 * d, 4 * d + 2), 4 * d)


def zeta_star_31_pow_2(d: int) -> PiValue:
    """zeta*({3,1}^d, 2), same alternating-pair shape one weight up.

    4 * pi**(4d+2) * sum_{k=0}^{2d+1} (-1)^k (4^(k+1)-1)
      * B_{2k+2}/(2k+2)! * B_{4d+2-2k}/(4d+2-2k)!
    """
    if d < 0:
        raise ValueError("d must be >= 0")
    return PiValue(4 * _alternating_pair_sum(2 * d + 1, 4 * d + 4), 4 * d + 2)


def muneta_zeta_star_31(d: int) -> PiValue:
    """zeta*({3,1}^d) by the quadratic double sum over even-twos splits.

    pi**(4d) * sum_{j=0}^{d} 2/(4j+2)! * sum_{n0+n1=2(d-j)} (-1)**n1
      * (2**(2 n0) - 2) B_{2 n0}/(2 n0)!
      * (2**(2 n1) - 2) B_{2 n1}/(2 n1)!

    Quadratic term count; kept as an independent cross-check route for
    the linear evaluator (same value, separate derivation). Do not merge.
    """
    if d < 0:
        raise ValueError("d must be >= 0")
    table = bernoulli_table()
    table.ensure(4 * d + 2)
    pow4 = [mpz(1)]
    for _ in range(2 * d):
        pow4.append(pow4[-1] * 4)
    acc = mpq(0)
    w = factorial(4 * d + 2)
    for j in range(d + 1):
        m = 2 * (d - j)
        outer = 2 * binomial(4 * d + 2, 4 * j + 2)
        inner = mpq(0)
        for n0 in range(m + 1):
            n1 = m - n0
            a = table.value(2 * n0)
            b = table.value(2 * n1)
            num = binomial(2 * m, 2 * n0) * (pow4[n0] - 2) * (pow4[n1] - 2) \
                * a.numerator * b.numerator
            t = mpq(num, a.denominator * b.denominator)
            inner = inner - t if n1 & 1 else inner + t
        acc += mpq(outer * inner.numerator, inner.denominator)
    return PiValue(acc / w, 4 * d)


def bowman_bradley_Z(d: int, n: int) -> PiValue:
    """Z(d, n): the sum of zeta over all insertions of n twos into
    d (3,1)-pairs equals C(n+2d, n) * pi**(2n+4d) / ((2d+1)(2n+4d+1)!).
    """
    if d < 0 or n < 0:
        raise ValueError("d and n must be >= 0")
    coeff = mpq(binomial(n + 2 * d, n),
                (2 * d + 1) * factorial(2 * n + 4 * d + 1))
    return PiValue(coeff, 2 * n + 4 * d)


def yamamoto_Zstar(d: int, n: int) -> PiValue:
    """Z*(d, n) by the five-index beta-weighted sum.

    pi**(4d+2n) * sum over 2m+k+u = 2d and j+l+v = n of
      (-1)**(j+k) C(k+l, k) C(u+v, u) C(2m+j, j)
      * beta_{k+l} * beta_{u+v} / ((2m+1) (4m+2j+1)!)

    Iterated as: m ascending, then k (u determined), then j, then l
    (v determined). Independent of the zstar route; kept separate.
    """
    if d < 0 or n < 0:
        raise ValueError("d and n must be >= 0")
    beta = [beta_coeff(r) for r in range(2 * d + n + 1)]
    acc = mpq(0)
    for m in range(d + 1):
        rest = 2 * (d - m)
        for k in range(rest + 1):
            u = rest - k
            for j in range(n + 1):
                den = (2 * m + 1) * factorial(4 * m + 2 * j + 1)
                cj = binomial(2 * m + j, j)
                for l in range(n - j + 1):
                    v = n - j - l
                    t = cj * binomial(k + l, k) * binomial(u + v, u) \
                        * beta[k + l] * beta[u + v] / den
                    acc = acc - t if (j + k) & 1 else acc + t
    return PiValue(acc, 4 * d + 2 * n)


def _weighted_pair_sum(d: int, n: int, weights, sign_flip: bool) -> PiValue:
    """Common outer kernel for the zstar family.

    sum_{k=0}^{n+2d} sign * weights[k] * (4^(k+1)-1)
      * B_{2k+2}/(2k+2)! * B_{2n+4d-2k}/(2n+4d-2k)!
    times 4 * pi**(2n+4d), where sign = (-1)**(n+k) (xor sign_flip).
    """
    weight = 2 * n + 4 * d + 2
    table = bernoulli_table()
    table.ensure(weight)
    acc = mpq(0)
    four = mpz(4)
    for k in range(n + 2 * d + 1):
        wk = weights[k]
        if wk:
            a = table.value(2 * k + 2)
            b = table.value(weight - 2 * k - 2)
            num = wk * (four - 1) * binomial(weight, 2 * k + 2) \
                * a.numerator * b.numerator
            t = mpq(num, a.denominator * b.denominator)
            neg = ((n + k) & 1) ^ sign_flip
            acc = acc - t if neg else acc + t
        four *= 4
    return PiValue(4 * acc / factorial(weight), weight - 2)


def _check_dn(d: int, n: int):
    if d < 1:
        raise ValueError(
            "these evaluators require d >= 1; the d = 0 row is the plain "
            "twos family, use zeta_star_2_pow(n)"
        )
    if n < 0:
        raise ValueError("n must be >= 0")


def zstar0(d: int, n: int) -> PiValue:
    """Leading-entry-3 part of Z*(d, n) (star insertion sum, d >= 1).

    Inner alternating-binomial weight: sum_r (-1)^r C(k, r) C(n+2d-k, n-r).
    """
    _check_dn(d, n)
    weights = []
    for k in range(n + 2 * d + 1):
        w = 0
        for r in range(max(0, k - 2 * d), min(k, n) + 1):
            c = binomial(k, r) * binomial(n + 2 * d - k, n - r)
            w = w - c if r & 1 else w + c
        weights.append(w)
    return _weighted_pair_sum(d, n, weights, sign_flip=False)


def zstar1(d: int, n: int) -> PiValue:
    """Leading-entry-2 part of Z*(d, n) (d >= 1); zero when n = 0.

    Inner weight: sum_{r<n} (-1)^r C(k, r) C(n+2d-k, n-1-r), with the
    overall sign flipped relative to zstar0.
    """
    _check_dn(d, n)
    if n == 0:
        return PiValue(0, 4 * d + 2 * n)
    weights = []
    for k in range(n + 2 * d + 1):
        w = 0
        for r in range(max(0, k - 2 * d - 1), min(k, n - 1) + 1):
            c = binomial(k, r) * binomial(n + 2 * d - k, n - 1 - r)
            w = w - c if r & 1 else w + c
        weights.append(w)
    return _weighted_pair_sum(d, n, weights, sign_flip=True)


def zstar(d: int, n: int) -> PiValue:
    """Z*(d, n) in one pass (d >= 1): like zstar0 with C(k+1, r) weights.

    Equals zstar0(d, n) + zstar1(d, n); the three are evaluated
    independently so that identity stays a real check.
    """
    _check_dn(d, n)
    weights = []
    for k in range(n + 2 * d + 1):
        w = 0
        for r in range(max(0, k - 2 * d), min(k + 1, n) + 1):
            c = binomial(k + 1, r) * binomial(n + 2 * d - k, n - r)
            w = w - c if r & 1 else w + c
        weights.append(w)
    return _weighted_pair_sum(d, n, weights, sign_flip=False)


class SumFormulaResult(NamedTuple):
    """Z*(d, n) with its two-part split; z_star = z_star_0 + z_star_1."""

    d: int
    n: int
    z_star: PiValue
    z_star_0: PiValue
    z_star_1: PiValue


def sum_formula(d: int, n: int) -> SumFormulaResult:
    """Evaluate Z*(d, n) and its split, enforcing the split identity."""
    z = zstar(d, n)
    z0 = zstar0(d, n)
    z1 = zstar1(d, n)
    if z != z0 + z1:
        raise AssertionError(
            "zstar(%d, %d) != zstar0 + zstar1: %s vs %s + %s"
            % (d, n, z, z0, z1)
        )
    return SumFormulaResult(d, n, z, z0, z1)
