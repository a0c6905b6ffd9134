"""Smoke tests for the Python bindings: a few known values through every
major entry point. The exhaustive checks live in the C++ suites."""

import cmath

import pytest

import tncodes as t


def test_tower_spec_derived_quantities():
    spec = t.TowerSpec(2, 1, 2, 4, 4)
    assert (spec.q, spec.e, spec.l) == (2, 2, 1)
    with pytest.raises(t.Error):
        t.TowerSpec(2, 1, 3, 4, 4)  # 3 does not divide 4


def test_field_arithmetic_and_maps():
    f = t.build_field(2, 1, 2, 4, 4)
    assert f.order == 16
    x = f.from_exp(3)
    assert f.mul(x, f.from_exp(5)) == f.from_exp(8)
    assert f.add(x, x).is_zero()
    kernel = sum(1 for e in range(15) if f.trace(f.from_exp(e), 4, 1).is_zero())
    assert kernel == 7
    fibers = {}
    for e in range(15):
        fibers.setdefault(f.norm(f.from_exp(e), 2).exp, 0)
        fibers[f.norm(f.from_exp(e), 2).exp] += 1
    assert sorted(fibers.values()) == [5, 5, 5]


def test_code_construction_matches_prediction():
    f = t.build_field(2, 1, 2, 4, 4)
    wd = t.weight_distribution(t.defining_set(f, 0))
    assert (wd.n, wd.k) == (7, 2)
    assert wd.counts == [(0, 1), (4, 2), (6, 1)]
    assert wd.enumerator() == "1 + 2z^4 + z^6"
    pe = t.predicted_enumerator(f.spec, 0, False)
    assert pe.label == "Theorem 4.2"
    assert pe.weights == [(4, 2), (6, 1)]


def test_shortened_code():
    f = t.build_field(3, 1, 2, 4, 4)
    wd = t.weight_distribution(t.shorten(t.defining_set(f, 0)))
    assert (wd.n, wd.k, wd.counts) == (13, 2, [(0, 1), (9, 6), (12, 2)])


def test_exponential_sums():
    f = t.build_field(2, 1, 2, 4, 4)
    sums = t.ExpSums(f)
    assert sums.omega_distribution().pairs == [(-3, 2), (5, 1)]
    assert sums.omega_distribution() == t.omega_closed_distribution(f.spec)
    assert sums.delta_distribution() == t.delta_closed_distribution(f.spec)


def test_gauss_sums():
    assert t.gauss_quadratic(3, 2) == pytest.approx(3 + 0j)
    assert t.gauss_quadratic(3, 1) == pytest.approx(cmath.sqrt(-3))
    assert t.gauss_sum_semiprimitive(5, 1, 2, 16) == pytest.approx(4 + 0j)
    f = t.build_field(2, 1, 1, 1, 2)
    assert t.Characters(f, 2).gauss_direct(1) == pytest.approx(2 + 0j)
    report = t.check_character_layer(f, 2)
    assert report.all_ok()


def test_analysis_layer():
    g = t.griesmer_bound(7, 2, 4, 2)
    assert g.bound == 6 and g.optimal
    f = t.build_field(2, 1, 4, 2, 4)
    code = t.build_code(t.defining_set(f, 1))
    assert (code.n, code.k) == (10, 4)
    b1, b2 = t.power_moment_B1_B2(10, 4, 2, code.wd)
    assert (b1, b2) == (0, 0)
    w = t.srg_build_and_verify(code)
    assert (w.N, w.K, w.lambda_, w.mu) == (16, 10, 6, 6)
    assert w.verified
    closed = t.srg_params_theorem_5_5(2, 4)
    assert (closed.N, closed.K, closed.lambda_, closed.mu) == (16, 10, 6, 6)
    assert t.minimality_check(code.wd, 2).ratio_exceeds


def test_errors_carry_names():
    f = t.build_field(2, 1, 2, 1, 2)
    with pytest.raises(t.Error, match="EmptyDefiningSet"):
        t.defining_set(f, 0)
    with pytest.raises(t.Error, match="DegenerateCase"):
        t.predicted_enumerator(t.TowerSpec(2, 1, 2, 2, 2), 0, False)
