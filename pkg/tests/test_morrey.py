import math
from math import pi, tau

import numpy as np
import pytest

from morreycircle import (
    Arc,
    MorreyParams,
    constant,
    indicator,
    integral_p,
    make_step,
    morrey_norm_exact,
    morrey_norm_grid,
    morrey_ratio,
    sup_over_prefix_arcs,
    validate_params,
    build_f,
    build_g,
)
from morreycircle.errors import LambdaOutOfRange, POutOfRange, TOutOfRange

from conftest import random_step


def test_params_validation():
    MorreyParams(1.0, 0.0)
    MorreyParams(2.5, 0.99)
    with pytest.raises(POutOfRange):
        MorreyParams(0.5, 0.5)
    with pytest.raises(LambdaOutOfRange):
        MorreyParams(1.0, 1.0)
    with pytest.raises(LambdaOutOfRange):
        MorreyParams(1.0, -0.1)


# --- ratio on a single arc ---

def test_ratio_constant_quarter_arc():
    mp = MorreyParams(3.0, 0.5)
    r = morrey_ratio(constant(1.0), Arc(0.0, tau / 4), mp)
    assert r == pytest.approx(0.25 ** 0.5, rel=1e-14)

def test_ratio_lambda_zero_is_plain_integral():
    f = make_step([-1.0, 0.5], [2.0, -3.0])
    mp = MorreyParams(2.0, 0.0)
    full = Arc(0.0, tau)
    assert morrey_ratio(f, full, mp) == pytest.approx(integral_p(f, full, 2.0), rel=1e-14)

def test_ratio_indicator_on_itself():
    a = Arc(0.0, tau / 4)
    r = morrey_ratio(indicator(a), a, MorreyParams(1.0, 0.5))
    assert r == pytest.approx(0.5, rel=1e-14)


# --- exact norm ---

def test_norm_constant_attains_full_circle():
    res = morrey_norm_exact(constant(-4.0), MorreyParams(2.0, 0.5))
    assert res.value == pytest.approx(4.0, rel=1e-12)
    assert res.argmax.length == tau

def test_norm_indicator_attains_its_arc():
    a = Arc(0.1, tau / 4)
    res = morrey_norm_exact(indicator(a), MorreyParams(1.0, 0.5))
    assert res.value == pytest.approx(0.5, rel=1e-12)
    assert res.argmax.start == pytest.approx(a.start, abs=1e-12)
    assert res.argmax.length == pytest.approx(a.length, rel=1e-12)

def test_norm_zero_function():
    res = morrey_norm_exact(constant(0.0), MorreyParams(1.0, 0.5))
    assert res.value == 0.0 and res.ratio_sup == 0.0

def test_norm_result_consistency(rng):
    for _ in range(30):
        f = random_step(rng)
        mp = MorreyParams(float(rng.choice([1.0, 2.0])), float(rng.uniform(0.05, 0.95)))
        res = morrey_norm_exact(f, mp)
        assert res.value == pytest.approx(res.ratio_sup ** (1.0 / mp.p), rel=1e-12)
        if res.ratio_sup > 0:
            r = morrey_ratio(f, res.argmax, mp)
            assert r == pytest.approx(res.ratio_sup, rel=1e-10)

def test_norm_homogeneity(rng):
    for _ in range(25):
        f = random_step(rng)
        c = float(rng.uniform(-5.0, 5.0))
        if c == 0:
            continue
        g = make_step(f.breakpoints, [c * v for v in f.values])
        mp = MorreyParams(2.0, 0.5)
        n_f = morrey_norm_exact(f, mp).value
        n_g = morrey_norm_exact(g, mp).value
        assert n_g == pytest.approx(abs(c) * n_f, rel=1e-10)

def test_norm_rotation_invariance(rng):
    for _ in range(25):
        f = random_step(rng)
        mp = MorreyParams(1.0, 0.3)
        n1 = morrey_norm_exact(f, mp).value
        n2 = morrey_norm_exact(f.rotated(rng.uniform(-6, 6)), mp).value
        assert n2 == pytest.approx(n1, rel=1e-10)

def test_norm_monotone_under_pointwise_domination(rng):
    for _ in range(25):
        f = random_step(rng, value_lo=0.0, value_hi=5.0)
        bigger = make_step(
            f.breakpoints, [v + abs(rng.uniform(0, 2.0)) for v in f.values]
        )
        mp = MorreyParams(1.0, 0.6)
        assert (morrey_norm_exact(f, mp).value
                <= morrey_norm_exact(bigger, mp).value * (1 + 1e-10))

def test_norm_lambda_zero_degenerates_to_lp(rng):
    for _ in range(25):
        f = random_step(rng)
        p = float(rng.choice([1.0, 2.0, 3.0]))
        res = morrey_norm_exact(f, MorreyParams(p, 0.0))
        expect = integral_p(f, Arc(0.0, tau), p) ** (1.0 / p)
        assert res.value == pytest.approx(expect, rel=1e-12)

def test_ratio_dominated_by_sup(rng):
    for _ in range(20):
        f = random_step(rng)
        mp = MorreyParams(1.0, 0.5)
        sup = morrey_norm_exact(f, mp).ratio_sup
        for _ in range(20):
            arc = Arc(rng.uniform(-pi, pi), rng.uniform(1e-6, tau))
            assert morrey_ratio(f, arc, mp) <= sup * (1 + 1e-12) + 1e-15


# --- grid oracle ---

def test_grid_constant():
    assert morrey_norm_grid(constant(1.0), MorreyParams(1.0, 0.5), 16) == pytest.approx(1.0)

def test_grid_indicator_exact_when_breakpoints_included():
    f = indicator(Arc(0.0, tau / 4))
    assert morrey_norm_grid(f, MorreyParams(1.0, 0.5), 8) == 0.5

def test_grid_refinement_rejected():
    with pytest.raises(ValueError):
        morrey_norm_grid(constant(1.0), MorreyParams(1.0, 0.5), 1)

def test_grid_nondecreasing_under_doubling(rng):
    for _ in range(5):
        f = random_step(rng)
        mp = MorreyParams(1.0, 0.5)
        v = [morrey_norm_grid(f, mp, r) for r in (64, 128, 256, 512)]
        assert all(a <= b * (1 + 1e-14) for a, b in zip(v, v[1:]))

def test_oracle_sandwich_random(rng):
    for _ in range(10):
        f = random_step(rng, value_lo=0.0, value_hi=10.0)
        mp = MorreyParams(float(rng.choice([1.0, 2.0])), float(rng.uniform(0.1, 0.9)))
        exact = morrey_norm_exact(f, mp).value
        grid = morrey_norm_grid(f, mp, 4096)
        assert grid <= exact * (1 + 1e-12)
        if exact > 0:
            assert (exact - grid) / exact <= 1e-3

def test_grid_cross_check_counterexample_g():
    prm = validate_params(1.0, 0.5, 0.2)
    g = build_g(prm, 1000)
    mp = MorreyParams(1.0, 0.5)
    exact = morrey_norm_exact(g, mp).value
    grid = morrey_norm_grid(g, mp, 16384)
    assert grid <= exact * (1 + 1e-12)
    assert (exact - grid) / exact <= 1e-3


# --- prefix arcs ---

def test_prefix_arcs_constant():
    rows = sup_over_prefix_arcs(constant(1.0), MorreyParams(1.0, 0.5), [0.1, 0.5, 1.0])
    for t, ratio in rows:
        assert ratio == pytest.approx((t / tau) ** 0.5, rel=1e-12)

def test_prefix_arcs_zero_function():
    rows = sup_over_prefix_arcs(constant(0.0), MorreyParams(1.0, 0.5), [0.1, 1.0])
    assert all(r == 0.0 for _, r in rows)

def test_prefix_arcs_rejects_bad_t():
    with pytest.raises(TOutOfRange):
        sup_over_prefix_arcs(constant(1.0), MorreyParams(1.0, 0.5), [0.0])

def test_prefix_arc_counterexample_f_reaches_divergence_bound():
    prm = validate_params(1.0, 0.5, 0.2)
    f = build_f(prm, 10 ** 5)
    t = 1e-3
    [(_, ratio)] = sup_over_prefix_arcs(f, MorreyParams(1.0, 0.5), [t])
    assert ratio >= 0.8186 * t ** (-0.2)
