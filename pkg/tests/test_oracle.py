import pytest
from mpmath import mp, mpf

from mzstar.cyclotomic import t7_plain
from mzstar.mzsv_eval import (
    zeta_star_2_pow,
    zeta_star_31_pow,
    zeta_star_31_pow_2,
)
from mzstar.oracle import (
    A_num,
    DivergentIndexError,
    NumericConfig,
    NumericResult,
    decimal_str,
    default_precision_bits,
    mzsv_num,
    pi_num,
    pi_value_num,
)

CFG = NumericConfig(precision_bits=192, truncation_K=2000)


def test_config_validation():
    with pytest.raises(ValueError):
        NumericConfig(precision_bits=32)
    with pytest.raises(ValueError):
        NumericConfig(truncation_K=5)
    assert NumericConfig().precision_bits == 192
    assert NumericConfig().truncation_K == 10000


def test_default_precision_env(monkeypatch):
    monkeypatch.delenv("MZSTAR_PREC_BITS", raising=False)
    assert default_precision_bits() == 192
    monkeypatch.setenv("MZSTAR_PREC_BITS", "256")
    assert default_precision_bits() == 256
    monkeypatch.setenv("MZSTAR_PREC_BITS", "48")
    with pytest.raises(ValueError):
        default_precision_bits()
    monkeypatch.setenv("MZSTAR_PREC_BITS", "many")
    with pytest.raises(ValueError):
        default_precision_bits()


def test_pi_num_digits():
    x = pi_num(CFG)
    with mp.workprec(256):
        assert abs(x - mp.pi) < mpf(2) ** -150


def test_single_zeta_values():
    cfg = NumericConfig(precision_bits=192, truncation_K=10000)
    r = mzsv_num([2], star=False, config=cfg)
    exact = pi_num(cfg) ** 2 / 6
    assert abs(r.value - exact) <= mpf("1e-4")
    assert r.tail_estimate >= 0
    r4 = mzsv_num([4], star=False, config=cfg)
    assert abs(r4.value - pi_num(cfg) ** 4 / 90) < mpf("1e-10")


def test_star_equals_nonstar_for_depth_one():
    a = mzsv_num([3], star=True, config=CFG)
    b = mzsv_num([3], star=False, config=CFG)
    assert a.value == b.value


def test_star_dominates_nonstar():
    for index in ([3, 1], [2, 2], [2, 1, 1]):
        a = mzsv_num(index, star=True, config=CFG)
        b = mzsv_num(index, star=False, config=CFG)
        assert a.value > b.value, index


def test_alternating_single():
    # sum (-1)^k / k^2 = -pi^2/12
    r = mzsv_num([-2], star=False, config=CFG)
    assert abs(r.value + pi_num(CFG) ** 2 / 12) < mpf("1e-6")


def test_alternating_leading_one_converges():
    # leading entry 1 with alternation is allowed
    r = mzsv_num([-1], star=False, config=CFG)
    assert abs(r.value + mp.log(2)) < mpf("1e-3")
    assert r.tail_estimate >= 0


def test_divergent_and_invalid_indices():
    with pytest.raises(DivergentIndexError):
        mzsv_num([1, 2], star=True, config=CFG)
    with pytest.raises(ValueError):
        mzsv_num([2, 0, 1], star=True, config=CFG)


def test_empty_index_is_one():
    r = mzsv_num([], star=True, config=CFG)
    assert r.value == 1 and r.tail_estimate == 0


def test_monotone_truncation():
    # positive-term series: value grows with K, increments shrink
    vals = []
    for K in (100, 200, 400, 800):
        cfg = NumericConfig(precision_bits=128, truncation_K=K)
        vals.append(mzsv_num([3, 1], star=True, config=cfg).value)
    assert vals == sorted(vals)
    gaps = [vals[i + 1] - vals[i] for i in range(len(vals) - 1)]
    assert gaps[0] > gaps[1] > gaps[2] >= 0


def test_oracle_matches_closed_forms():
    cfg = NumericConfig(precision_bits=192, truncation_K=10000)
    # tolerances sized to the series' truncation error at K = 10^4
    # (a leading exponent of 2 converges like 1/K, 3 like log(K)/K^2)
    checks = [
        ([3, 1], True, zeta_star_31_pow(1), mpf("1e-7")),
        ([3, 1, 2], True, zeta_star_31_pow_2(1), mpf("2e-7")),
        ([2, 2, 2], True, zeta_star_2_pow(3), mpf("4e-4")),
    ]
    for index, star, exact, tol in checks:
        r = mzsv_num(index, star=star, config=cfg)
        e = pi_value_num(exact, cfg)
        assert abs(r.value - e) < tol, index


def test_A_num_base_cases():
    # r = 1 compositions: A(2, 1, 1) = zeta(bar 2), A(2, 2, 1) = zeta(4)
    a = A_num(2, 1, 1, CFG)
    assert abs(a.value + pi_num(CFG) ** 2 / 12) < mpf("1e-6")
    b = A_num(2, 2, 1, CFG)
    assert abs(b.value - pi_num(CFG) ** 4 / 90) < mpf("1e-9")


def test_A_num_validation():
    with pytest.raises(ValueError):
        A_num(1, 2, 1, CFG)
    with pytest.raises(ValueError):
        A_num(2, 1, 2, CFG)
    with pytest.raises(ValueError):
        A_num(2, 2, 0, CFG)


def test_doubling_sum_matches_exact_d1():
    # sum_{r=1}^{2} 2^r A(2, 2, r) = zeta*({3,1}^1)
    cfg = NumericConfig(precision_bits=192, truncation_K=2000)
    total, tail = mpf(0), mpf(0)
    for r in (1, 2):
        a = A_num(2, 2, r, cfg)
        total += 2 ** r * a.value
        tail += 2 ** r * a.tail_estimate
    exact = pi_value_num(zeta_star_31_pow(1), cfg)
    assert abs(total - exact) < tail


def test_doubling_sum_matches_mixed_block():
    # sum_{r=1}^{2} 2^r A(4, 2, r) = zeta*(2,3,2,1)
    cfg = NumericConfig(precision_bits=192, truncation_K=2000)
    total, tail = mpf(0), mpf(0)
    for r in (1, 2):
        a = A_num(4, 2, r, cfg)
        total += 2 ** r * a.value
        tail += 2 ** r * a.tail_estimate
    exact = pi_value_num(t7_plain(1, 1), cfg)
    assert abs(total - exact) < tail


def test_result_shape():
    r = mzsv_num([2], config=CFG)
    assert isinstance(r, NumericResult)
    assert r.tail_estimate >= 0


def test_decimal_str_sanity():
    s = decimal_str(zeta_star_31_pow(1))
    assert s.startswith("1.35290404")
    one = decimal_str(zeta_star_31_pow(0))
    assert float(one) == 1.0
