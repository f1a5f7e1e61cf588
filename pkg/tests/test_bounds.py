import math

import numpy as np
import pytest

from oracles import entropy4, entropy_range_at
from polbounds.bounds import (
    CUSPS,
    D_P2,
    D_P3,
    LOG4_3,
    CurveId,
    boundary_lower,
    boundary_lower_array,
    boundary_upper,
    boundary_upper_array,
    branch_f,
    contains,
    contains_array,
    curve_entropy,
    curve_point,
    cusp_from_spectrum,
    e13,
    fit_gamma,
    region,
    sample_curve,
    spectrum_for_curve,
)
from polbounds.mueller import depolarization_index_from_spectrum, polarization_entropy
from polbounds.sampler import SamplerConfig, generate_cloud

SQRT3 = math.sqrt(3)


def test_six_curves():
    assert {c.label for c in CurveId} == {"C12", "C23", "C34", "C14", "C13", "C24"}
    rules = {c.label: (c.n, c.sign) for c in CurveId}
    assert rules["C12"] == (3, 1)
    assert rules["C23"] == (2, 1)
    assert rules["C14"] == (3, -1)
    assert rules["C24"] == (2, -1)
    assert rules["C34"][0] == 1


@pytest.mark.parametrize("cusp", CUSPS, ids=lambda p: p.id)
def test_cusps_from_their_spectra(cusp):
    d, e = cusp_from_spectrum(cusp.spectrum)
    assert d == pytest.approx(cusp.d, abs=1e-12)
    assert e == pytest.approx(cusp.e, abs=1e-12)


def test_cusp_coordinates():
    coords = {p.id: (p.d, p.e) for p in CUSPS}
    assert coords["p1"] == (0.0, 1.0)
    assert coords["p2"] == (pytest.approx(1 / 3), pytest.approx(0.792481250360578090726869, abs=1e-15))
    assert coords["p3"] == (pytest.approx(0.577350269189625764509, abs=1e-15), 0.5)
    assert coords["p4"] == (1.0, 0.0)


# -- branch_f and E(n, f) ---------------------------------------------------

@pytest.mark.parametrize("sign", [1, -1])
def test_branch_f_at_p1(sign):
    assert branch_f(3, 0.0, sign) == pytest.approx(0.25, abs=1e-15)


def test_branch_f_values():
    assert branch_f(3, 1 / 3, 1) == pytest.approx(1 / 3, abs=1e-15)
    assert branch_f(3, 1.0, -1) == pytest.approx(0.0, abs=1e-15)
    assert branch_f(2, D_P3, 1) == pytest.approx(0.5, abs=1e-15)


def test_branch_f_rejects_outside_range():
    with pytest.raises(ValueError):
        branch_f(1, 0.5, 1)
    with pytest.raises(ValueError):
        branch_f(4, 0.5, 1)


def test_branch_f_clips_roundoff_discriminant():
    # 1/sqrt(3) computed in floating point sits a few ulp from the true root
    assert branch_f(1, D_P3 * (1 - 1e-15), 1) == pytest.approx(0.5, abs=1e-6)


def test_curve_entropy_values():
    assert curve_entropy(3, 0.25) == pytest.approx(1.0, abs=1e-15)
    assert curve_entropy(3, 1 / 3) == pytest.approx(LOG4_3, abs=1e-15)
    assert curve_entropy(1, 0.5) == pytest.approx(0.5, abs=1e-15)
    with pytest.raises(ValueError):
        curve_entropy(3, 0.4)


def test_e13_values():
    assert e13(0.5) == (pytest.approx(0.0, abs=1e-15), pytest.approx(1.0, abs=1e-15))
    assert e13(0.0) == (pytest.approx(1 / SQRT3), pytest.approx(0.5, abs=1e-15))
    d, e = e13(0.25)
    lam = [3 / 8, 3 / 8, 1 / 8, 1 / 8]
    assert d == pytest.approx(depolarization_index_from_spectrum(lam), abs=1e-15)
    # spectrum {3/8, 3/8, 1/8, 1/8} evaluated in mpmath at 30 digits
    assert e == pytest.approx(0.905639062229566431954847896019, abs=1e-14)
    assert d == pytest.approx(1 / (2 * SQRT3), abs=1e-15)
    with pytest.raises(ValueError):
        e13(0.6)


# -- spectra along curves ---------------------------------------------------

def test_spectrum_for_curve_examples():
    np.testing.assert_allclose(spectrum_for_curve(CurveId.C14, 1.0), [1, 0, 0, 0], atol=1e-15)
    np.testing.assert_allclose(spectrum_for_curve("C12", 1 / 3), [1 / 3] * 3 + [0], atol=1e-15)
    np.testing.assert_allclose(spectrum_for_curve("C23", D_P3), [0.5, 0.5, 0, 0], atol=1e-15)


def test_spectrum_for_curve_rejects_out_of_range():
    with pytest.raises(ValueError):
        spectrum_for_curve(CurveId.C12, 0.5)
    with pytest.raises(ValueError):
        spectrum_for_curve(CurveId.C13, 0.9)


@pytest.mark.parametrize("curve", list(CurveId), ids=lambda c: c.label)
def test_table_consistency(curve):
    for d in np.linspace(curve.d_min, curve.d_max, 101):
        lam = spectrum_for_curve(curve, d)
        assert depolarization_index_from_spectrum(lam) == pytest.approx(d, abs=1e-10)
        assert polarization_entropy(lam) == pytest.approx(curve_point(curve, d), abs=1e-10)
        assert entropy4(lam) == pytest.approx(curve_point(curve, d), abs=1e-10)


def test_eigenvalue_patterns():
    d = 0.2
    lam = spectrum_for_curve(CurveId.C14, d)
    assert lam[1] == lam[2] == lam[3] and lam[0] >= lam[1]
    lam = spectrum_for_curve(CurveId.C12, d)
    assert lam[0] == lam[1] == lam[2] and lam[3] <= lam[0]
    lam = spectrum_for_curve(CurveId.C13, d)
    assert lam[0] == lam[1] and lam[2] == lam[3]
    lam = spectrum_for_curve(CurveId.C23, 0.5)
    assert lam[0] == lam[1] and lam[3] == 0
    lam = spectrum_for_curve(CurveId.C24, 0.5)
    assert lam[1] == lam[2] and lam[3] == 0
    lam = spectrum_for_curve(CurveId.C34, 0.8)
    assert lam[2] == lam[3] == 0


def test_curve_endpoints_meet():
    assert curve_point("C12", D_P2) == pytest.approx(curve_point("C23", D_P2), abs=1e-10)
    assert curve_point("C12", D_P2) == pytest.approx(LOG4_3, abs=1e-10)
    assert curve_point("C23", D_P3) == pytest.approx(0.5, abs=1e-10)
    assert curve_point("C34", D_P3) == pytest.approx(0.5, abs=1e-10)
    assert e13(0.5 - 1e-13)[1] == pytest.approx(1.0, abs=1e-10)
    assert curve_point("C24", 1.0) == pytest.approx(0.0, abs=1e-10)
    assert curve_point("C24", D_P2) == pytest.approx(LOG4_3, abs=1e-10)


def test_c34_branch_symmetry():
    for d in np.linspace(D_P3, 1, 200):
        plus = curve_entropy(1, branch_f(1, d, 1))
        minus = curve_entropy(1, branch_f(1, d, -1))
        assert plus == pytest.approx(minus, abs=1e-12)


# -- outer boundary ---------------------------------------------------------

def test_boundary_endpoints():
    assert boundary_upper(0) == pytest.approx(1.0, abs=1e-15)
    assert boundary_upper(1) == pytest.approx(0.0, abs=1e-15)
    assert boundary_lower(0) == pytest.approx(1.0, abs=1e-15)
    assert boundary_lower(1 / 3) == pytest.approx(LOG4_3, abs=1e-12)
    assert boundary_lower(D_P3) == pytest.approx(0.5, abs=1e-12)


@pytest.mark.parametrize("d", [0.2, 0.45, 0.5, 0.7, 0.9])
def test_boundaries_match_simplex_grid_search(d):
    lo, hi = entropy_range_at(d)
    assert boundary_upper(d) == pytest.approx(hi, abs=1e-8)
    assert boundary_lower(d) == pytest.approx(lo, abs=1e-8)


def test_boundary_upper_half():
    # exact-constraint grid search over the simplex, grid 1/1200
    assert boundary_upper(0.5) == pytest.approx(0.7743974703476993, abs=1e-9)


def test_lower_boundary_continuous():
    for knot in (D_P2, D_P3):
        assert boundary_lower(knot - 1e-12) == pytest.approx(boundary_lower(knot + 1e-12), abs=1e-10)


def test_upper_above_lower():
    d = np.linspace(0, 1, 2001)
    up = boundary_upper_array(d)
    lo = boundary_lower_array(d)
    assert np.all(up >= lo - 1e-12)
    gap = up - lo
    assert abs(gap[0]) < 1e-10 and abs(gap[-1]) < 1e-10
    assert np.all(gap[1:-1] > 1e-10)


def test_vectorized_boundaries_agree():
    d = np.linspace(0, 1, 301)
    np.testing.assert_allclose(boundary_upper_array(d), [boundary_upper(x) for x in d], atol=1e-14)
    np.testing.assert_allclose(boundary_lower_array(d), [boundary_lower(x) for x in d], atol=1e-14)


def test_inner_curves_inside():
    for curve in (CurveId.C13, CurveId.C24):
        for d, e in sample_curve(curve, 200):
            assert contains(d, e)


# -- membership -------------------------------------------------------------

def test_contains_examples():
    assert contains(1 / 3, LOG4_3)
    # upper bound at 0.9 is 0.2516 (simplex grid search)
    assert not contains(0.9, 0.9)
    assert contains(0.5, 0.7)
    assert not contains(-0.1, 0.5)
    assert not contains(1.1, 0.0)


def test_half_point_six_is_below_the_domain():
    # the minimum entropy at d = 1/2 is 0.6477 (simplex grid search), so
    # (0.5, 0.6) lies under the lower boundary
    lo, hi = entropy_range_at(0.5)
    assert lo > 0.6
    assert not contains(0.5, 0.6)


def test_contains_array_matches_scalar():
    rng = np.random.default_rng(0)
    d = rng.uniform(-0.05, 1.05, 2000)
    e = rng.uniform(-0.05, 1.05, 2000)
    np.testing.assert_array_equal(contains_array(d, e), [contains(a, b) for a, b in zip(d, e)])


def test_sampled_spectra_never_violate_bounds():
    cloud = generate_cloud(SamplerConfig(100_000, 7))
    assert np.all(contains_array(cloud.d, cloud.e, 1e-9))


def test_region_labels():
    assert region(0.5, 0.6) == "below-C13+below-C24"
    assert region(0.1, 0.99) == "above-C13"
    assert region(0.8, 0.3) == "below-C24"
    assert region(0.0, 1.0) == "on-C13"
    d, e = e13(0.25)
    assert region(d, e) == "on-C13"


# -- gamma fit --------------------------------------------------------------

def test_fit_gamma_residual_and_stability():
    gamma, rel = fit_gamma(1000)
    assert rel < 0.05
    assert abs(fit_gamma(100)[0] - fit_gamma(10000)[0]) < 0.005


def test_fit_gamma_rejects_small_grid():
    with pytest.raises(ValueError):
        fit_gamma(50)
