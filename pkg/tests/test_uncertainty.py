import math

import numpy as np
import pytest

from landaustar.phase_space import PhasePoint, PhysParams, to_mode_coords
from landaustar.star import StarPolynomial, apply_star_polynomial
from landaustar.states import (
    CoherentLabel,
    GeneralizedCoherentLabel,
    WignerLabel,
    coherent_fock,
    wigner_fock,
)
from landaustar.uncertainty import (
    MomentReport,
    StateFunctional,
    angular_momentum_polynomial,
    coherent_moment_predictions,
    coherent_uncertainties,
    coordinate_moment,
    coordinate_polynomials,
    displaced_power_residual,
    expectation,
    hamiltonian_polynomial,
    inner_product,
    robertson_schrodinger_slack,
    uncertainty_product,
    variance,
)

PARAMS = PhysParams()
HBAR = PARAMS.hbar
A = StarPolynomial.generator("a")
ABAR = StarPolynomial.generator("abar")
BBAR = StarPolynomial.generator("bbar")


def wigner_functional(n, l, cutoff=12):
    return StateFunctional(wigner_fock(WignerLabel(n, l), cutoff), PARAMS)


def test_expectation_of_unity_and_energy():
    for n, l in [(0, 0), (2, 1), (4, 3)]:
        s = wigner_functional(n, l)
        assert expectation(StarPolynomial.constant(1.0), s) == pytest.approx(1.0)
        e = expectation(hamiltonian_polynomial(PARAMS), s)
        assert e == pytest.approx(HBAR * PARAMS.omega * (n + 0.5), rel=1e-13)
        j = expectation(angular_momentum_polynomial(PARAMS), s)
        assert j == pytest.approx(HBAR * (l - n), abs=1e-13)


def test_expectation_in_coherent_state():
    label = CoherentLabel(0.7 - 0.3j, -0.2 + 0.4j)
    s = StateFunctional(coherent_fock(label, 24), PARAMS)
    assert expectation(A, s) == pytest.approx(label.alpha1, abs=1e-11)
    assert expectation(StarPolynomial.generator("b"), s) == pytest.approx(
        label.alpha2, abs=1e-11)
    assert expectation(ABAR, s) == pytest.approx(np.conj(label.alpha1), abs=1e-11)


def test_coordinate_dictionary_matches_pointwise_map():
    """The generator expansion of each coordinate evaluates to the coordinate."""
    coords = coordinate_polynomials(PARAMS)
    rng = np.random.default_rng(41)
    for _ in range(20):
        pt = PhasePoint(*rng.uniform(-2, 2, size=4))
        mc = to_mode_coords(pt, PARAMS)
        values = {"a": mc.a, "abar": mc.abar, "b": mc.b, "bbar": mc.bbar}
        for axis, want in (("q1", pt.q1), ("q2", pt.q2), ("p1", pt.p1), ("p2", pt.p2)):
            total = 0j
            for coef, word in coords[axis].terms:
                term = coef
                for gen in word:
                    term *= values[gen]
                total += term
            assert total.real == pytest.approx(want, rel=1e-12, abs=1e-13)
            assert abs(total.imag) <= 1e-13


def test_coordinate_polynomials_are_real_observables():
    for poly in coordinate_polynomials(PARAMS).values():
        assert poly.is_real_observable()


def test_second_moments_closed_form():
    for n, l in [(0, 0), (1, 2), (3, 3), (6, 0)]:
        want_q = 0.5 * PARAMS.gamma ** 2 * (n + l + 1)
        want_p = 0.5 * (HBAR / PARAMS.gamma) ** 2 * (n + l + 1)
        label = WignerLabel(n, l)
        assert coordinate_moment("q1", 2, label, PARAMS) == pytest.approx(
            want_q, rel=1e-12)
        assert coordinate_moment("q2", 2, label, PARAMS) == pytest.approx(
            want_q, rel=1e-12)
        assert coordinate_moment("p1", 2, label, PARAMS) == pytest.approx(
            want_p, rel=1e-12)


def test_odd_moments_vanish_exactly():
    assert coordinate_moment("q1", 1, WignerLabel(2, 1), PARAMS) == 0.0
    assert coordinate_moment("p2", 3, WignerLabel(1, 1), PARAMS) == 0.0


def test_moment_routes_agree():
    coords = coordinate_polynomials(PARAMS)
    for n, l in [(0, 0), (2, 1)]:
        s = wigner_functional(n, l)
        for axis in ("q1", "p1", "q2", "p2"):
            trace_route = inner_product(coords[axis], coords[axis], s).real
            quad_route = coordinate_moment(axis, 2, WignerLabel(n, l), PARAMS)
            assert trace_route == pytest.approx(quad_route, rel=1e-9)


def test_inner_product_identities():
    one = StarPolynomial.constant(1.0)
    for n, l in [(0, 0), (3, 1)]:
        s = wigner_functional(n, l)
        assert inner_product(A, A, s) == pytest.approx(n, abs=1e-13)
        assert inner_product(one, one, s) == pytest.approx(1.0)
    # conjugate symmetry
    s = wigner_functional(2, 2)
    f = (0.5 + 1j) * A * BBAR + ABAR
    g = 2.0 * StarPolynomial.generator("b") - 1j * A
    assert inner_product(f, g, s) == pytest.approx(np.conj(inner_product(g, f, s)))


def test_cbs_inequality_random():
    rng = np.random.default_rng(42)
    gens = ("a", "abar", "b", "bbar")
    for _ in range(100):
        n, l = int(rng.integers(0, 4)), int(rng.integers(0, 4))
        s = wigner_functional(n, l, cutoff=10)
        polys = []
        for _ in range(2):
            terms = []
            for _ in range(2):
                length = int(rng.integers(0, 4))
                word = tuple(gens[i] for i in rng.integers(0, 4, size=length))
                terms.append((complex(rng.normal(), rng.normal()), word))
            polys.append(StarPolynomial.from_terms(terms))
        f, g = polys
        slack = (inner_product(f, f, s).real * inner_product(g, g, s).real
                 - abs(inner_product(f, g, s)) ** 2)
        assert slack >= -1e-10


def test_uncertainty_products():
    assert uncertainty_product(0, 0, 1, PARAMS) == pytest.approx(0.5 * HBAR, rel=1e-12)
    assert uncertainty_product(1, 2, 1, PARAMS) == pytest.approx(2.0 * HBAR, rel=1e-12)
    assert uncertainty_product(1, 2, 2, PARAMS) == pytest.approx(2.0 * HBAR, rel=1e-12)
    assert uncertainty_product(2, 1, 1, PARAMS) == pytest.approx(
        uncertainty_product(1, 2, 1, PARAMS), rel=1e-12)
    with pytest.raises(ValueError):
        uncertainty_product(0, 0, 3, PARAMS)


def test_uncertainty_products_other_units():
    params = PhysParams(hbar=0.5, mass=2.0, omega=3.0)
    for n, l in [(0, 0), (2, 2)]:
        got = uncertainty_product(n, l, 1, params)
        assert got == pytest.approx(0.5 * params.hbar * (n + l + 1), rel=1e-10)


def test_robertson_schrodinger_ground_state_saturates():
    coords = coordinate_polynomials(PARAMS)
    s = wigner_functional(0, 0, cutoff=8)
    slack = robertson_schrodinger_slack(coords["q1"], coords["p1"], s)
    assert abs(slack) <= 1e-10


def test_robertson_schrodinger_known_slack():
    coords = coordinate_polynomials(PARAMS)
    s = wigner_functional(1, 1, cutoff=8)
    slack = robertson_schrodinger_slack(coords["q1"], coords["p1"], s)
    assert slack == pytest.approx(2.0 * HBAR ** 2, rel=1e-10)


def test_robertson_schrodinger_equal_observables():
    coords = coordinate_polynomials(PARAMS)
    s = wigner_functional(2, 1, cutoff=8)
    slack = robertson_schrodinger_slack(coords["q1"], coords["q1"], s)
    assert abs(slack) <= 1e-10


def test_robertson_schrodinger_rejects_complex_observable():
    s = wigner_functional(0, 0, cutoff=6)
    with pytest.raises(ValueError):
        robertson_schrodinger_slack(A, A, s)


def test_semidefiniteness_and_kernel():
    s = wigner_functional(2, 1, cutoff=8)
    rng = np.random.default_rng(43)
    gens = ("a", "abar", "b", "bbar")
    for _ in range(50):
        length = int(rng.integers(0, 4))
        word = tuple(gens[i] for i in rng.integers(0, 4, size=length))
        f = StarPolynomial.from_terms([(complex(rng.normal(), rng.normal()), word)])
        assert inner_product(f, f, s).real >= -1e-12
    # the kernel is nontrivial: a^(n+1) annihilates the state
    f = StarPolynomial(((1.0 + 0j, ("a", "a", "a")),))
    assert abs(inner_product(f, f, s)) == 0.0
    assert abs(expectation(f, s)) == 0.0


def test_coherent_uncertainty_reports():
    label = CoherentLabel(1j, 0j)
    reports = coherent_uncertainties(label, PARAMS, cutoff=24)
    pred = coherent_moment_predictions(label, PARAMS)
    assert isinstance(reports["q1"], MomentReport)
    assert reports["q1"].mean.real == pytest.approx(-math.sqrt(2.0), abs=1e-10)
    assert reports["q1"].mean.real == pytest.approx(pred["q1_mean"], abs=1e-10)
    for j in (1, 2):
        prod = math.sqrt(reports[f"q{j}"].variance * reports[f"p{j}"].variance)
        assert prod == pytest.approx(0.5 * HBAR, abs=1e-9)


def test_coherent_variance_independent_of_displacement():
    values = []
    for a1 in (0j, 1.0 + 0j, 1 + 1j, -2j):
        reports = coherent_uncertainties(CoherentLabel(a1, 0j), PARAMS, cutoff=30)
        values.append(reports["q1"].variance)
        assert reports["q1"].variance == pytest.approx(0.5 * PARAMS.gamma ** 2,
                                                       abs=1e-9)
    assert max(abs(v - values[0]) for v in values) <= 1e-10


def test_coherent_ground_case():
    reports = coherent_uncertainties(CoherentLabel(0j, 0j), PARAMS, cutoff=16)
    for axis in ("q1", "q2"):
        assert abs(reports[axis].mean) <= 1e-13
        assert reports[axis].variance == pytest.approx(0.5 * PARAMS.gamma ** 2,
                                                       rel=1e-12)


def test_generalized_power_theorem_examples():
    label = GeneralizedCoherentLabel(0.5 + 0j, -0.3j, WignerLabel(1, 1))
    assert displaced_power_residual(A, 1, label, PARAMS, cutoff=16) <= 1e-10
    label2 = GeneralizedCoherentLabel(0.5 + 0j, -0.3j, WignerLabel(2, 1))
    f = ABAR * A
    assert displaced_power_residual(f, 1, label2, PARAMS, cutoff=16) <= 1e-9
    const = StarPolynomial.constant(2.5)
    assert displaced_power_residual(const, 2, label, PARAMS, cutoff=16) <= 1e-12


def test_generalized_variance_matches_base():
    coords = coordinate_polynomials(PARAMS)
    base = wigner_functional(2, 1, cutoff=24)
    want = variance(coords["q1"], base)
    from landaustar.states import generalized_coherent_fock

    label = GeneralizedCoherentLabel(0.8 - 0.2j, 0.5j, WignerLabel(2, 1))
    s = StateFunctional(generalized_coherent_fock(label, 24), PARAMS)
    assert variance(coords["q1"], s) == pytest.approx(want, abs=1e-9)


def test_functional_is_callable():
    s = wigner_functional(1, 0, cutoff=8)
    assert s(StarPolynomial.constant(2.0)) == pytest.approx(2.0)


def test_overflow_propagates_through_expectation():
    s = StateFunctional(wigner_fock(WignerLabel(2, 0), 4), PARAMS)
    poly = ABAR * ABAR  # raises past the cutoff
    rep = apply_star_polynomial(poly, s.state)
    assert rep.overflow
