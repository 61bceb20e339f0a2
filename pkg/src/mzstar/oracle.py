"""Numerical oracle: direct truncated summation of multiple zeta values.

Everything exact in this package is cross-checked against plain numerical
summation of the defining series, done here with mpmath at configurable
binary precision. The summation is a prefix-sum dynamic program over the
chain condition, so an r-deep index truncated at K costs O(r*K) flops
rather than O(K^r).

Signed-index convention: a negative entry -s means the factor carries the
alternating sign (-1)**k alongside 1/k**s. An index converges iff its
leading entry is not a bare (non-alternating) 1.

Tail estimates are heuristic upper-bound-shaped, not certified: for a
leading exponent s1 >= 2 the last outer term is scaled by K/(s1-1)
(integral comparison); for an alternating leading 1 the last outer term
itself is used (alternating series bound shape). Tests treat them as the
tolerance they are documented to be.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations
from typing import Any, Sequence

from mpmath import mp, mpf

PREC_ENV_VAR = "MZSTAR_PREC_BITS"


def default_precision_bits() -> int:
    """Precision in bits from MZSTAR_PREC_BITS, default 192."""
    raw = os.environ.get(PREC_ENV_VAR)
    if raw is None:
        return 192
    try:
        bits = int(raw)
    except ValueError:
        raise ValueError(
            "%s must be an integer, got %r" % (PREC_ENV_VAR, raw)
        ) from None
    if bits < 64:
        raise ValueError("%s must be >= 64, got %d" % (PREC_ENV_VAR, bits))
    return bits


class DivergentIndexError(ValueError):
    """The defining series of the requested index diverges."""


@dataclass(frozen=True)
class NumericConfig:
    precision_bits: int = 192
    truncation_K: int = 10000

    def __post_init__(self):
        if self.precision_bits < 64:
            raise ValueError("precision_bits must be >= 64")
        if self.truncation_K < 10:
            raise ValueError("truncation_K must be >= 10")


@dataclass(frozen=True)
class NumericResult:
    value: Any
    tail_estimate: Any


def _default_config() -> NumericConfig:
    return NumericConfig(precision_bits=default_precision_bits())


def mzsv_num(index: Sequence[int], star: bool = True,
             config: NumericConfig | None = None) -> NumericResult:
    """Truncated numerical value of the (star) multiple zeta series.

    index uses the signed convention above. star=True sums over
    non-strictly decreasing chains, star=False over strictly decreasing
    ones. Empty index gives exactly 1.
    """
    cfg = config or _default_config()
    entries = [int(e) for e in index]
    if any(e == 0 for e in entries):
        raise ValueError("index entries must be nonzero")
    if not entries:
        return NumericResult(mpf(1), mpf(0))
    if entries[0] == 1:
        raise DivergentIndexError(
            "leading entry 1 without alternation diverges"
        )
    K = cfg.truncation_K
    with mp.workprec(cfg.precision_bits):
        prev = [mpf(1)] * (K + 1)
        last_term = mpf(0)
        for j in range(len(entries) - 1, -1, -1):
            s = abs(entries[j])
            alt = entries[j] < 0
            cur = [mpf(0)] * (K + 1)
            running = mpf(0)
            outermost = j == 0
            for k in range(1, K + 1):
                base = prev[k] if star else prev[k - 1]
                if base:
                    term = base / k ** s
                    if alt and k & 1:
                        running -= term
                    else:
                        running += term
                    if outermost and k == K:
                        last_term = abs(term)
                cur[k] = running
            prev = cur
        value = prev[K]
        s1 = abs(entries[0])
        if s1 >= 2:
            tail = last_term * K / (s1 - 1)
        else:
            tail = last_term
        return NumericResult(value, abs(tail))


def A_num(m: int, n: int, r: int,
          config: NumericConfig | None = None) -> NumericResult:
    """Composition sum of sign-twisted non-star values.

    Sums, over all compositions (s_1, ..., s_r) of n into r positive
    parts, the strict multiple zeta value with entries m*s_j, each entry
    alternating exactly when s_j is odd. Tail estimates add up.
    """
    if m < 2:
        raise ValueError("m must be >= 2")
    if r < 1 or n < r:
        raise ValueError("need n >= r >= 1")
    cfg = config or _default_config()
    with mp.workprec(cfg.precision_bits):
        total = mpf(0)
        total_tail = mpf(0)
        for cuts in combinations(range(1, n), r - 1):
            bounds = (0,) + cuts + (n,)
            parts = [bounds[i + 1] - bounds[i] for i in range(r)]
            entries = [m * s if s % 2 == 0 else -(m * s) for s in parts]
            res = mzsv_num(entries, star=False, config=cfg)
            total += res.value
            total_tail += res.tail_estimate
        return NumericResult(total, total_tail)


def pi_num(config: NumericConfig | None = None):
    """pi at the configured precision."""
    cfg = config or _default_config()
    with mp.workprec(cfg.precision_bits):
        return +mp.pi


def pi_value_num(pv, config: NumericConfig | None = None):
    """Float value of an exact PiValue at the configured precision."""
    cfg = config or _default_config()
    with mp.workprec(cfg.precision_bits):
        return (mpf(int(pv.numerator)) / int(pv.denominator)
                * mp.pi ** pv.pi_power)


def decimal_str(pv, config: NumericConfig | None = None) -> str:
    """Decimal rendering of a PiValue, with the shown digit count held
    a safe margin below what the working precision guarantees, so a
    recomputation at any precision >= 128 bits reproduces it exactly."""
    cfg = config or _default_config()
    digits = min(24, int(cfg.precision_bits * 0.30103) - 2)
    x = pi_value_num(pv, cfg)
    with mp.workprec(cfg.precision_bits):
        return mp.nstr(x, digits, strip_zeros=False)
