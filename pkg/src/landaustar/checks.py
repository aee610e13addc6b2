"""Quadrature- and oracle-backed verification suite.

Every identity the package relies on is re-derived here through an
independent route (tensor-product quadrature, the bidifferential series, a
numeric integral form of the star product, or contour-quadrature parameter
derivatives) and reported as a named residual with its tolerance.  The CLI
``verify`` subcommand and the acceptance tests both run these checks; all
sampling is internally seeded so reports are reproducible bit for bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .marginals import (
    AXES,
    axis_generating,
    axis_norm,
    axis_scale,
    integral_equality_residuals,
    marginal_1d,
    marginal_1d_quadrature,
    marginal_2d,
    marginal_2d_quadrature,
    position_plane_generating,
)
from .phase_space import PhasePoint, PhysParams, mode_coords_arrays
from .quadrature import gauss_hermite, integrate_nd
from .star import (
    CanonicalPoly,
    FockRep,
    GENERATORS,
    StarPolynomial,
    apply_star_polynomial,
    canonical_star,
    displacement_matrix,
    displacement_matrix_closed,
    integrate,
    ladder_matrices,
    left_star_generator,
    matrix_unit,
    moyal_bracket,
    right_star_generator,
    star,
)
from .states import (
    CoherentLabel,
    GeneralizedCoherentLabel,
    WignerLabel,
    coherent_fock,
    coherent_values,
    displaced_polynomial,
    displacement_fock,
    fock_values,
    generalized_coherent_fock,
    generating_function,
    matrix_unit_values,
    wigner_fock,
    wigner_symbol,
    wigner_values,
)
from .uncertainty import (
    StateFunctional,
    coherent_moment_predictions,
    coordinate_moment,
    coordinate_polynomials,
    expectation,
    inner_product,
    robertson_schrodinger_slack,
    uncertainty_product,
    variance,
)

SUITES = ("star", "marginals", "uncertainty", "coherent")


@dataclass(frozen=True)
class CheckResult:
    name: str
    residual: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.residual <= self.tolerance


# ---------------------------------------------------------------------------
# Independent numeric oracles
# ---------------------------------------------------------------------------

def moyal_integral_star_single_mode(f, g, x1: float, x2: float, order: int = 56) -> complex:
    """Single-mode star product evaluated through its integral form.

    The mode-variable star is the canonical Moyal product on the real and
    imaginary parts of the mode coordinate with effective hbar = 1/2, so
    (f*g)(x) = (4/pi^2) iint f(x+u) g(x+v) exp(4i(u1 v2 - u2 v1)) d2u d2v.
    f and g take (re, im) arrays.  Completely independent of both the
    matrix-unit composition rule and the bidifferential series.
    """
    rule = gauss_hermite(order)
    t = rule.nodes
    s = 1.0 / math.sqrt(2.0)
    u = s * t
    cw = rule.weights * np.exp(t * t) * s
    U1, U2 = np.meshgrid(u, u, indexing="ij")
    wf = np.outer(cw, cw) * np.asarray(f(x1 + U1, x2 + U2), dtype=complex)
    wg = np.outer(cw, cw) * np.asarray(g(x1 + U1, x2 + U2), dtype=complex)
    phase = np.exp(4j * np.outer(u, u))
    acc = wf @ np.conj(phase)          # contracted over u2 against v1
    acc = phase.T @ acc                # contracted over u1 against v2
    return complex((4.0 / math.pi ** 2) * np.sum(acc * wg.T))


def mixed_param_derivative(fn, orders, radius: float = 0.5, points: int = 10) -> complex:
    """Mixed derivative of an entire function at zero via contour quadrature.

    ``fn`` maps a tuple of complex parameters to a complex value; ``orders``
    gives the derivative order per parameter.  Trapezoidal samples on circles
    of the given radius converge spectrally for entire integrands.
    """
    nvars = len(orders)
    theta = 2.0 * math.pi * np.arange(points) / points
    ring = radius * np.exp(1j * theta)
    grids = np.meshgrid(*([ring] * nvars), indexing="ij")
    vals = np.empty(grids[0].shape, dtype=complex)
    for idx in np.ndindex(*vals.shape):
        vals[idx] = fn(tuple(g[idx] for g in grids))
    out = vals
    for axis, n in enumerate(orders):
        phase = np.exp(-1j * n * theta)
        out = np.tensordot(out, phase, axes=(0, 0)) / points
        out = out * math.factorial(n) / radius ** n
    return complex(out)


def _rel_residual(got, want, floor: float = 1.0) -> float:
    got = np.asarray(got)
    want = np.asarray(want)
    denom = np.maximum(np.abs(want), floor)
    return float(np.max(np.abs(got - want) / denom))


def _random_star_polynomial(rng, n_terms: int = 3, max_len: int = 3) -> StarPolynomial:
    terms = []
    for _ in range(n_terms):
        length = int(rng.integers(0, max_len + 1))
        word = tuple(GENERATORS[i] for i in rng.integers(0, 4, size=length))
        coef = complex(rng.normal(), rng.normal())
        terms.append((coef, word))
    return StarPolynomial.from_terms(terms)


def _random_real_observable(rng, n_terms: int = 2, max_len: int = 3) -> StarPolynomial:
    p = _random_star_polynomial(rng, n_terms, max_len)
    return p + p.conjugate()


def _random_fock(rng, cutoff: int) -> FockRep:
    shape = (cutoff,) * 4
    coeffs = rng.normal(size=shape) + 1j * rng.normal(size=shape)
    return FockRep(cutoff, coeffs)


def _random_points(rng, count: int, params: PhysParams):
    g = params.gamma
    qs = rng.uniform(-1.2 * g, 1.2 * g, size=(count, 2))
    ps = rng.uniform(-1.2 * params.hbar / g, 1.2 * params.hbar / g, size=(count, 2))
    a, b = mode_coords_arrays(qs[:, 0], qs[:, 1], ps[:, 0], ps[:, 1], params)
    return a, b


# ---------------------------------------------------------------------------
# star suite
# ---------------------------------------------------------------------------

def check_projection(params: PhysParams, nmax: int = 6) -> CheckResult:
    cutoff = nmax + 2
    worst = 0.0
    for n in range(nmax + 1):
        for l in range(nmax + 1):
            w = wigner_fock(WignerLabel(n, l), cutoff)
            worst = max(worst, float(np.max(np.abs(star(w, w).coeffs - w.coeffs))))
    return CheckResult("projection W*W=W", worst, 1e-12)


def check_orthogonality(params: PhysParams, nmax: int = 6) -> CheckResult:
    cutoff = nmax + 2
    labels = [(n, l) for n in range(nmax + 1) for l in range(nmax + 1)]
    worst = 0.0
    for n, l in labels:
        w1 = wigner_fock(WignerLabel(n, l), cutoff)
        for n2, l2 in labels:
            if (n, l) == (n2, l2):
                continue
            w2 = wigner_fock(WignerLabel(n2, l2), cutoff)
            worst = max(worst, float(np.max(np.abs(star(w1, w2).coeffs))))
    return CheckResult("orthogonality W*W'=0", worst, 1e-12)


def check_associativity(params: PhysParams, triples: int = 200, cutoff: int = 12) -> CheckResult:
    rng = np.random.default_rng(1001)
    worst = 0.0
    for _ in range(triples):
        f, g, h = (_random_fock(rng, cutoff) for _ in range(3))
        left = star(star(f, g), h)
        right = star(f, star(g, h))
        scale = max(1.0, float(np.max(np.abs(left.coeffs))))
        worst = max(worst, float(np.max(np.abs(left.coeffs - right.coeffs))) / scale)
    return CheckResult("associativity", worst, 1e-13)


def check_oracle_equivalence(params: PhysParams, nmax: int = 3, max_len: int = 4,
                             n_points: int = 25) -> CheckResult:
    """Ladder route versus bidifferential route, pointwise, for all short words.

    Words are swept as a prefix tree: extending a word on the left means one
    more generator application on each route, so every word of length <= 4 is
    covered with one ladder step and one series step per tree node.
    """
    from .star import bidifferential_star, generator_symbol

    rng = np.random.default_rng(1002)
    a, b = _random_points(rng, n_points, params)
    cutoff = nmax + max_len + 1
    wa = matrix_unit_values(cutoff, a)
    wb = matrix_unit_values(cutoff, b)
    gen_symbols = {g: generator_symbol(g) for g in GENERATORS}
    worst = 0.0
    for n in range(nmax + 1):
        for l in range(nmax + 1):
            root = (wigner_fock(WignerLabel(n, l), cutoff), wigner_symbol(n, l))
            stack = [(0, root)]
            while stack:
                depth, (rep, symbol) = stack.pop()
                vals_ladder = np.einsum("mnkl,mnp,klp->p", rep.coeffs, wa, wb)
                vals_oracle = symbol.eval(a, b)
                worst = max(worst, _rel_residual(vals_ladder, vals_oracle))
                if depth < max_len:
                    for g in GENERATORS:
                        child = (left_star_generator(g, rep),
                                 bidifferential_star(gen_symbols[g], symbol))
                        stack.append((depth + 1, child))
    return CheckResult("oracle-equivalence", worst, 1e-10)


def check_trace_property(params: PhysParams, pairs: int = 3, cutoff: int = 3) -> CheckResult:
    """integral(f*g) equals integral of the pointwise product, by 4D quadrature."""
    rng = np.random.default_rng(1003)
    rule = gauss_hermite(24)
    g_ = params.gamma
    # the pointwise product of two states decays twice as fast as one state
    root2 = math.sqrt(2.0)
    scales = (g_ / root2, g_ / root2, params.hbar / g_ / root2, params.hbar / g_ / root2)
    worst = 0.0
    for _ in range(pairs):
        f = _random_fock(rng, cutoff)
        g = _random_fock(rng, cutoff)
        lhs = integrate(star(f, g), params)

        def pointwise(q1, q2, p1, p2):
            am, bm = mode_coords_arrays(q1, q2, p1, p2, params)
            return fock_values(f, am, bm) * fock_values(g, am, bm)

        rhs = integrate_nd(pointwise, scales, rule)
        worst = max(worst, abs(lhs - rhs) / max(1.0, abs(rhs)))
    return CheckResult("trace-property", worst, 1e-9)


def check_hermitian_involution(params: PhysParams, pairs: int = 20, cutoff: int = 6) -> CheckResult:
    rng = np.random.default_rng(1004)
    worst = 0.0
    for _ in range(pairs):
        f = _random_fock(rng, cutoff)
        g = _random_fock(rng, cutoff)
        lhs = star(f, g).conjugate()
        rhs = star(g.conjugate(), f.conjugate())
        worst = max(worst, float(np.max(np.abs(lhs.coeffs - rhs.coeffs))))
    return CheckResult("hermitian-involution", worst, 1e-12)


def check_ladder_consistency(params: PhysParams, nmax: int = 6) -> CheckResult:
    cutoff = nmax + 2
    worst = 0.0
    for n in range(1, nmax + 1):
        for l in range(nmax + 1):
            w = wigner_fock(WignerLabel(n, l), cutoff)
            wm = wigner_fock(WignerLabel(n - 1, l), cutoff)
            lhs = left_star_generator("a", w)
            rhs = right_star_generator("a", wm)
            worst = max(worst, float(np.max(np.abs(lhs.coeffs - rhs.coeffs))))
            lhs = left_star_generator("b", wigner_fock(WignerLabel(l, n), cutoff))
            rhs = right_star_generator("b", wigner_fock(WignerLabel(l, n - 1), cutoff))
            worst = max(worst, float(np.max(np.abs(lhs.coeffs - rhs.coeffs))))
    return CheckResult("ladder-consistency", worst, 1e-13)


def _eigen_residual(params: PhysParams, poly: StarPolynomial, eigval, nmax: int) -> float:
    cutoff = nmax + 3
    worst = 0.0
    for n in range(nmax + 1):
        for l in range(nmax + 1):
            w = wigner_fock(WignerLabel(n, l), cutoff)
            lam = eigval(n, l)
            for side in ("left", "right"):
                res = apply_star_polynomial(poly, w, side)
                worst = max(worst, float(np.max(np.abs(res.coeffs - lam * w.coeffs))))
    return worst


def check_energy_eigenvalues(params: PhysParams, nmax: int = 6) -> CheckResult:
    from .uncertainty import hamiltonian_polynomial

    h = hamiltonian_polynomial(params)
    worst = _eigen_residual(params, h, lambda n, l: params.hbar * params.omega * (n + 0.5), nmax)
    return CheckResult("eigenvalue-energy", worst, 1e-12)


def check_angular_momentum_eigenvalues(params: PhysParams, nmax: int = 6) -> CheckResult:
    from .uncertainty import angular_momentum_polynomial

    j = angular_momentum_polynomial(params)
    worst = _eigen_residual(params, j, lambda n, l: params.hbar * (l - n), nmax)
    return CheckResult("eigenvalue-angular-momentum", worst, 1e-12)


def check_matrix_unit_trace_rule(params: PhysParams) -> CheckResult:
    """Quadrature validation of integral(unit_{m n k l}) = h^2 delta_mn delta_kl."""
    rule = gauss_hermite(20)
    g_ = params.gamma
    scales = (g_, g_, params.hbar / g_, params.hbar / g_)
    h2 = params.planck_h ** 2
    worst = 0.0
    for m, n, k, l in [(0, 0, 0, 0), (1, 1, 0, 0), (0, 1, 0, 0), (2, 1, 1, 1),
                       (1, 1, 2, 2), (0, 0, 1, 2)]:
        rep = matrix_unit(m, n, k, l, 4)

        def pointwise(q1, q2, p1, p2):
            am, bm = mode_coords_arrays(q1, q2, p1, p2, params)
            return fock_values(rep, am, bm)

        got = integrate_nd(pointwise, scales, rule)
        want = h2 if (m == n and k == l) else 0.0
        worst = max(worst, abs(got - want) / h2)
    return CheckResult("matrix-unit-trace-rule", worst, 1e-9)


def check_gaussian_composition(params: PhysParams) -> CheckResult:
    """Matrix-unit composition versus the numeric integral form of the star.

    Covers the Gaussian*Gaussian case the bidifferential oracle cannot reach
    (the ground Gaussian composing to half itself), plus a sample of basis
    compositions.
    """
    def unit_fn(m, n):
        return lambda x1, x2: matrix_unit_values(max(m, n) + 1, x1 + 1j * x2)[m, n]

    pts = [(0.0, 0.0), (0.3, -0.2)]
    worst = 0.0
    for (m, n, k, l) in [(0, 0, 0, 0), (0, 1, 1, 0), (1, 1, 1, 1), (2, 1, 1, 2), (0, 1, 0, 1)]:
        for x1, x2 in pts:
            got = moyal_integral_star_single_mode(unit_fn(m, n), unit_fn(k, l), x1, x2)
            if n == k:
                hi = max(m, l) + 1
                want = complex(matrix_unit_values(hi, np.array(x1 + 1j * x2))[m, l])
            else:
                want = 0.0
            worst = max(worst, abs(got - want))
    omega_fn = lambda x1, x2: np.exp(-2.0 * (x1 ** 2 + x2 ** 2))
    for x1, x2 in pts:
        got = moyal_integral_star_single_mode(omega_fn, omega_fn, x1, x2)
        worst = max(worst, abs(got - 0.5 * omega_fn(x1, x2)))
    return CheckResult("gaussian-composition-integral", worst, 1e-8)


def check_canonical_classical_limit(params: PhysParams) -> CheckResult:
    q1 = CanonicalPoly.coordinate("q1")
    p1 = CanonicalPoly.coordinate("p1")
    hb = params.hbar
    worst = 0.0
    br = moyal_bracket(q1, p1, params)
    want = CanonicalPoly.constant(1j * hb)
    worst = max(worst, _poly_distance(br, want))
    # (x_star)^k = x^k for linear x
    rng = np.random.default_rng(1005)
    for _ in range(5):
        coefs = rng.normal(size=4)
        x = sum((c * CanonicalPoly.coordinate(nm) for c, nm in zip(coefs, ("q1", "q2", "p1", "p2"))),
                CanonicalPoly({}))
        sq = canonical_star(x, x, params)
        worst = max(worst, _poly_distance(sq, x.pointwise_mul(x)))
        cube = canonical_star(sq, x, params)
        worst = max(worst, _poly_distance(cube, x.pointwise_mul(x).pointwise_mul(x)))
    # cyclotron-center functions: bracket is -i m hbar omega
    mw = params.mass * params.omega
    x1 = CanonicalPoly.coordinate("p2") + 0.5 * mw * CanonicalPoly.coordinate("q1")
    x2 = -1.0 * CanonicalPoly.coordinate("p1") + 0.5 * mw * CanonicalPoly.coordinate("q2")
    br = moyal_bracket(x1, x2, params)
    want = CanonicalPoly.constant(-1j * params.mass * hb * params.omega)
    worst = max(worst, _poly_distance(br, want))
    return CheckResult("canonical-classical-limit", worst, 1e-13)


def _poly_distance(f: CanonicalPoly, g: CanonicalPoly) -> float:
    keys = set(f.coeffs) | set(g.coeffs)
    return max((abs(f.coeffs.get(k, 0j) - g.coeffs.get(k, 0j)) for k in keys), default=0.0)


def check_generator_brackets(params: PhysParams) -> CheckResult:
    """{a, abar} = 1 and {b, bbar} = 1 as exact normal-form identities."""
    worst = 0.0
    for lo, hi in (("a", "abar"), ("b", "bbar")):
        br = moyal_bracket(StarPolynomial.generator(lo), StarPolynomial.generator(hi))
        nf = br.normal_form()
        nf[(0, 0, 0, 0)] = nf.get((0, 0, 0, 0), 0j) - 1.0
        worst = max(worst, max((abs(v) for v in nf.values()), default=0.0))
    return CheckResult("generator-brackets", worst, 0.0)


def check_displacement_closed_form(params: PhysParams) -> CheckResult:
    rng = np.random.default_rng(1006)
    worst = 0.0
    for _ in range(4):
        alpha = complex(rng.uniform(-1.4, 1.4), rng.uniform(-1.4, 1.4))
        d = displacement_matrix(alpha, 32)
        closed = displacement_matrix_closed(alpha, 32)
        worst = max(worst, float(np.max(np.abs(d[:9, :9] - closed[:9, :9]))))
    return CheckResult("displacement-closed-form", worst, 1e-9)


# ---------------------------------------------------------------------------
# marginals suite
# ---------------------------------------------------------------------------

def check_wigner_normalization(params: PhysParams, nmax: int = 6) -> CheckResult:
    g_ = params.gamma
    scales = (g_, g_, params.hbar / g_, params.hbar / g_)
    h2 = params.planck_h ** 2
    worst = 0.0
    for n in range(nmax + 1):
        for l in range(nmax + 1):
            rule = gauss_hermite(max(16, n + l + 8))

            def wfun(q1, q2, p1, p2):
                am, bm = mode_coords_arrays(q1, q2, p1, p2, params)
                return wigner_values(n, l, am, bm)

            got = integrate_nd(wfun, scales, rule)
            worst = max(worst, abs(got - h2) / h2)
    return CheckResult("normalization-wigner", worst, 1e-10)


def check_marginal_normalization(params: PhysParams, nmax: int = 6) -> CheckResult:
    h2 = params.planck_h ** 2
    worst = 0.0
    for axis in AXES:
        scale = axis_scale(axis, params)
        for n in range(nmax + 1):
            for l in range(nmax + 1):
                rule = gauss_hermite(max(16, n + l + 8))
                got = integrate_nd(lambda x: marginal_1d(n, l, axis, x, params),
                                   (scale,), rule)
                worst = max(worst, abs(got - h2) / h2)
    return CheckResult("normalization-marginal-1d", worst, 1e-10)


def check_marginal_wigner_consistency(params: PhysParams, nmax: int = 4) -> CheckResult:
    """Closed-form 1D densities versus 3D quadrature of the Wigner function."""
    worst = 0.0
    for axis, norm in (("q1", axis_norm("q1", params)), ("p1", axis_norm("p1", params))):
        grid = np.linspace(-2.0, 2.0, 11) * axis_scale(axis, params)
        for n in range(nmax + 1):
            for l in range(nmax + 1):
                closed = marginal_1d(n, l, axis, grid, params)
                quad = marginal_1d_quadrature(n, l, axis, grid, params)
                worst = max(worst, float(np.max(np.abs(closed - quad))) / norm)
    return CheckResult("marginal-wigner-consistency", worst, 1e-8)


def check_plane_consistency(params: PhysParams) -> CheckResult:
    """1D densities equal the integral of the closed-form 2D densities."""
    rule = gauss_hermite(24)
    worst = 0.0
    cases = [(0, 0), (1, 0), (2, 1), (2, 2), (3, 1)]
    for n, l in cases:
        xs = np.linspace(-1.5, 1.5, 7) * params.gamma
        for plane, other_axis in ((("q1", "q2"), "q2"), (("q1", "p2"), "p2")):
            scale = axis_scale(other_axis, params)
            t = rule.nodes
            cw = rule.weights * np.exp(t * t) * scale
            ys = scale * t
            for x in xs:
                vals = marginal_2d(n, l, plane, np.full_like(ys, x), ys, params)
                got = float(np.sum(cw * vals))
                want = marginal_1d(n, l, "q1", x, params)
                worst = max(worst, abs(got - want) / axis_norm("q1", params))
    return CheckResult("plane-consistency", worst, 1e-9)


def check_plane_quadrature_consistency(params: PhysParams) -> CheckResult:
    """Closed-form 2D densities versus direct 2D quumdrature of the Wigner function."""
    rng = np.random.default_rng(1007)
    worst = 0.0
    for n, l in [(2, 1), (1, 2), (0, 3), (2, 2)]:
        for plane in (("q1", "q2"), ("q1", "p2")):
            sx = axis_scale(plane[0], params)
            sy = axis_scale(plane[1], params)
            xs = rng.uniform(-1.5 * sx, 1.5 * sx, size=25)
            ys = rng.uniform(-1.5 * sy, 1.5 * sy, size=25)
            closed = marginal_2d(n, l, plane, xs, ys, params)
            quad = marginal_2d_quadrature(n, l, plane, xs, ys, params)
            worst = max(worst, float(np.max(np.abs(closed - quad))))
    return CheckResult("plane-closed-vs-quadrature", worst, 1e-9)


def check_marginal_evenness(params: PhysParams, nmax: int = 6) -> CheckResult:
    xs = np.linspace(0.1, 5.9, 30)
    worst = 0.0
    for axis in AXES:
        grid = xs * axis_scale(axis, params)
        for n in range(nmax + 1):
            for l in range(nmax + 1):
                worst = max(worst, float(np.max(np.abs(
                    marginal_1d(n, l, axis, grid, params)
                    - marginal_1d(n, l, axis, -grid, params)))))
    return CheckResult("marginal-evenness", worst, 1e-12)


def check_marginal_positivity(params: PhysParams, nmax: int = 6) -> CheckResult:
    xs = np.linspace(-6.0, 6.0, 121)
    min_val = math.inf
    for axis in AXES:
        grid = xs * axis_scale(axis, params)
        for n in range(nmax + 1):
            for l in range(nmax + 1):
                min_val = min(min_val, float(np.min(marginal_1d(n, l, axis, grid, params))))
    residual = max(0.0, -min_val) if min_val <= 0 else 0.0
    return CheckResult("marginal-positivity-1d", residual, 0.0)


def check_plane_positivity(params: PhysParams, nmax: int = 4) -> CheckResult:
    # offset grids dodge the exact zero lines (rho = 0, tau = 0, Hermite roots)
    min_val = math.inf
    for plane in (("q1", "q2"), ("q1", "p2")):
        gx = np.linspace(-3.9, 4.1, 41) * axis_scale(plane[0], params)
        gy = np.linspace(-3.8, 4.2, 41) * axis_scale(plane[1], params)
        X, Y = np.meshgrid(gx, gy, indexing="ij")
        for n in range(nmax + 1):
            for l in range(nmax + 1):
                min_val = min(min_val, float(np.min(marginal_2d(n, l, plane, X, Y, params))))
    residual = max(0.0, -min_val) if min_val <= 0 else 0.0
    return CheckResult("marginal-positivity-2d", residual, 0.0)


def check_marginal_symmetry(params: PhysParams) -> CheckResult:
    xs = np.linspace(-3.0, 3.0, 21) * params.gamma
    worst = 0.0
    for n, l in [(2, 1), (3, 0), (4, 2)]:
        worst = max(worst, float(np.max(np.abs(
            marginal_1d(n, l, "q1", xs, params) - marginal_1d(l, n, "q1", xs, params)))))
    return CheckResult("marginal-symmetry", worst, 1e-12)


def integral_equality_checks(params: PhysParams) -> list[CheckResult]:
    out = []
    samples = params.gamma * np.array([0.0, 0.7, 1.4])
    for n, l in [(1, 0), (2, 1), (3, 3), (2, 2)]:
        for q1, res_lag, res_herm in integral_equality_residuals(n, l, samples, params):
            y = q1 / params.gamma
            out.append(CheckResult(
                f"integral-equality n={n} l={l} q1={y:g}*gamma",
                max(res_lag, res_herm), 1e-8))
    return out


def check_generating_plane(params: PhysParams) -> CheckResult:
    """Momentum-integrated generating function reproduces its plane closed form."""
    rule = gauss_hermite(32)
    sp = params.hbar / params.gamma
    samples = [
        ((0j, 0j), (0j, 0j)),
        ((0.4 + 0.2j, -0.3j), (0.1 - 0.2j, 0.25 + 0.1j)),
        ((0.2 - 0.5j, 0.3 + 0.1j), (-0.2 + 0.4j, 0.15j)),
    ]
    pts = [(0.0, 0.0), (0.6, -0.4)]
    worst = 0.0
    for alpha, beta in samples:
        for q1, q2 in pts:
            def gfun(p1, p2):
                out = np.empty(p1.shape, dtype=complex)
                for idx in np.ndindex(*p1.shape):
                    pt = PhasePoint(q1, q2, float(p1[idx]), float(p2[idx]))
                    out[idx] = generating_function(alpha[0], beta[0], alpha[1], beta[1],
                                                   pt, params)
                return out

            got = integrate_nd(gfun, (sp, sp), rule)
            want = position_plane_generating(alpha, beta, q1, q2, params)
            worst = max(worst, abs(got - want) / max(1.0, abs(want)))
    return CheckResult("generating-plane-consistency", worst, 1e-9)


def check_generating_axis(params: PhysParams) -> CheckResult:
    """q2-integrated plane generating function reproduces the q1-axis form."""
    rule = gauss_hermite(32)
    g_ = params.gamma
    t = rule.nodes
    cw = rule.weights * np.exp(t * t) * g_
    q2s = g_ * t
    samples = [
        ((0j, 0j), (0j, 0j)),
        ((0.4 + 0.2j, -0.3j), (0.1 - 0.2j, 0.25 + 0.1j)),
        ((-0.3 + 0.1j, 0.2 + 0.3j), (0.35j, -0.1 - 0.2j)),
    ]
    worst = 0.0
    for alpha, beta in samples:
        for q1 in (0.0, 0.5 * g_, 1.3 * g_):
            vals = np.array([position_plane_generating(alpha, beta, q1, q2, params)
                             for q2 in q2s])
            got = np.sum(cw * vals)
            want = axis_generating("q1", alpha, beta, q1, params)
            worst = max(worst, abs(got - want) / max(1.0, abs(want)))
    # momentum-axis spot check at zero parameters
    want = axis_norm("p2", params)
    got = axis_generating("p2", (0j, 0j), (0j, 0j), 0.0, params)
    worst = max(worst, abs(got - want) / want)
    return CheckResult("generating-axis-consistency", worst, 1e-9)


def check_generating_derivatives(params: PhysParams, nlmax: int = 2) -> CheckResult:
    """Parameter-derivative extraction of 1D densities from the axis generating function."""
    worst = 0.0
    for n in range(nlmax + 1):
        for l in range(nlmax + 1):
            pref = 4.0 / (math.factorial(n) * math.factorial(l))
            for x in (0.0, 0.45 * params.gamma, 1.1 * params.gamma):
                def fn(ps):
                    a1, b1, a2, b2 = ps
                    return axis_generating("q1", (a1, a2), (b1, b2), x, params)

                got = pref * mixed_param_derivative(fn, (n, n, l, l), radius=0.5, points=10)
                want = marginal_1d(n, l, "q1", x, params)
                worst = max(worst, abs(got - want) / axis_norm("q1", params))
    return CheckResult("generating-derivative-extraction", worst, 1e-6)


# ---------------------------------------------------------------------------
# uncertainty suite
# ---------------------------------------------------------------------------

def uncertainty_table_checks(params: PhysParams, nmax: int = 6) -> list[CheckResult]:
    out = []
    hb = params.hbar
    for n in range(nmax + 1):
        for l in range(nmax + 1):
            want = 0.5 * hb * (n + l + 1)
            worst = max(abs(uncertainty_product(n, l, j, params) - want) / want
                        for j in (1, 2))
            out.append(CheckResult(f"uncertainty-product n={n} l={l}", worst, 1e-10))
    return out


def check_uncertainty_lower_bound(params: PhysParams, nmax: int = 6) -> CheckResult:
    hb = params.hbar
    worst = 0.0
    for n in range(nmax + 1):
        for l in range(nmax + 1):
            for j in (1, 2):
                gap = uncertainty_product(n, l, j, params) - 0.5 * hb
                worst = max(worst, max(0.0, -gap))
    return CheckResult("uncertainty-lower-bound", worst, 1e-12)


def check_moment_route_agreement(params: PhysParams) -> CheckResult:
    """Marginal-quadrature moments versus Fock-trace moments."""
    coords = coordinate_polynomials(params)
    worst = 0.0
    for n, l in [(0, 0), (1, 0), (2, 1), (3, 3)]:
        s = StateFunctional(wigner_fock(WignerLabel(n, l), n + l + 6), params)
        for axis in AXES:
            poly = coords[axis]
            trace_route = expectation(poly * poly, s).real
            quad_route = coordinate_moment(axis, 2, WignerLabel(n, l), params)
            worst = max(worst, abs(trace_route - quad_route) / max(1.0, abs(quad_route)))
    return CheckResult("moment-route-agreement", worst, 1e-9)


def check_robertson_schrodinger(params: PhysParams, n_pairs: int = 100) -> CheckResult:
    rng = np.random.default_rng(1008)
    states = [
        StateFunctional(wigner_fock(WignerLabel(0, 0), 10), params),
        StateFunctional(wigner_fock(WignerLabel(2, 1), 10), params),
        StateFunctional(coherent_fock(CoherentLabel(1 + 1j, -0.5), 20), params),
    ]
    worst = 0.0
    for _ in range(n_pairs):
        f = _random_real_observable(rng)
        g = _random_real_observable(rng)
        for s in states:
            slack = robertson_schrodinger_slack(f, g, s)
            worst = max(worst, max(0.0, -slack))
    return CheckResult("robertson-schrodinger", worst, 1e-10)


def check_rs_known_slack(params: PhysParams) -> CheckResult:
    coords = coordinate_polynomials(params)
    q1, p1 = coords["q1"], coords["p1"]
    hb = params.hbar
    s0 = StateFunctional(wigner_fock(WignerLabel(0, 0), 8), params)
    s11 = StateFunctional(wigner_fock(WignerLabel(1, 1), 8), params)
    worst = abs(robertson_schrodinger_slack(q1, p1, s0))
    worst = max(worst, abs(robertson_schrodinger_slack(q1, p1, s11) - 2.0 * hb ** 2))
    return CheckResult("rs-known-slack", worst, 1e-10)


def check_cbs(params: PhysParams, n_pairs: int = 100) -> CheckResult:
    rng = np.random.default_rng(1009)
    worst = 0.0
    for k in range(n_pairs):
        n, l = int(rng.integers(0, 4)), int(rng.integers(0, 4))
        s = StateFunctional(wigner_fock(WignerLabel(n, l), 10), params)
        f = _random_star_polynomial(rng)
        g = _random_star_polynomial(rng)
        slack = (inner_product(f, f, s).real * inner_product(g, g, s).real
                 - abs(inner_product(f, g, s)) ** 2)
        worst = max(worst, max(0.0, -slack))
    return CheckResult("cauchy-schwarz", worst, 1e-10)


def check_semidefiniteness(params: PhysParams, count: int = 200) -> CheckResult:
    rng = np.random.default_rng(1010)
    worst = 0.0
    for k in range(count):
        n, l = int(rng.integers(0, 5)), int(rng.integers(0, 5))
        s = StateFunctional(wigner_fock(WignerLabel(n, l), 11), params)
        f = _random_star_polynomial(rng)
        val = inner_product(f, f, s).real
        worst = max(worst, max(0.0, -val))
    return CheckResult("state-semidefiniteness", worst, 1e-12)


def check_degenerate_kernel(params: PhysParams) -> CheckResult:
    """Nonzero f with s(conj(f)*f) = 0: the inner product is semidefinite only."""
    worst = 0.0
    for n, l in [(0, 0), (2, 1), (3, 3)]:
        s = StateFunctional(wigner_fock(WignerLabel(n, l), n + 4), params)
        f = StarPolynomial(((1.0 + 0j, ("a",) * (n + 1)),))
        worst = max(worst, abs(inner_product(f, f, s)))
    return CheckResult("degenerate-kernel", worst, 1e-12)


def check_expectation_identities(params: PhysParams) -> CheckResult:
    worst = 0.0
    one = StarPolynomial.constant(1.0)
    a = StarPolynomial.generator("a")
    for n, l in [(0, 0), (1, 2), (4, 3)]:
        s = StateFunctional(wigner_fock(WignerLabel(n, l), 8), params)
        worst = max(worst, abs(expectation(one, s) - 1.0))
        worst = max(worst, abs(inner_product(a, a, s) - n))
        worst = max(worst, abs(inner_product(one, one, s) - 1.0))
    return CheckResult("expectation-identities", worst, 1e-12)


# ---------------------------------------------------------------------------
# coherent suite
# ---------------------------------------------------------------------------

_ALPHA_SAMPLES = (
    (0j, 0j),
    (1.0 + 0j, 0j),
    (1j, 0j),
    (0.7 - 0.6j, 0.4 + 0.3j),
    (-1.2 + 0.5j, 0.9j),
    (0.3 + 0.4j, -1.1 - 0.2j),
    (1.4 - 1.4j, 0.2 - 0.1j),
    (-0.8 - 0.7j, -1.0 + 0.9j),
)

_COHERENT_CUTOFF = 24


def check_coherent_projection(params: PhysParams) -> CheckResult:
    worst = 0.0
    for a1, a2 in _ALPHA_SAMPLES:
        g = coherent_fock(CoherentLabel(a1, a2), _COHERENT_CUTOFF)
        worst = max(worst, float(np.max(np.abs(star(g, g).coeffs - g.coeffs))))
    return CheckResult("coherent-projection", worst, 1e-10)


def check_coherent_normalization(params: PhysParams) -> CheckResult:
    h2 = params.planck_h ** 2
    worst = 0.0
    for a1, a2 in _ALPHA_SAMPLES:
        g = coherent_fock(CoherentLabel(a1, a2), _COHERENT_CUTOFF)
        worst = max(worst, abs(integrate(g, params) - h2) / h2)
    # one independent quadrature of the closed form
    g_ = params.gamma
    scales = (g_, g_, params.hbar / g_, params.hbar / g_)
    rule = gauss_hermite(32)
    label = CoherentLabel(1 + 1j, -0.5)

    def gs(q1, q2, p1, p2):
        am, bm = mode_coords_arrays(q1, q2, p1, p2, params)
        return coherent_values(label, am, bm)

    worst = max(worst, abs(integrate_nd(gs, scales, rule) - h2) / h2)
    return CheckResult("coherent-normalization", worst, 1e-9)


def check_coherent_moments(params: PhysParams) -> CheckResult:
    coords = coordinate_polynomials(params)
    worst = 0.0
    for a1, a2 in _ALPHA_SAMPLES:
        label = CoherentLabel(a1, a2)
        s = StateFunctional(coherent_fock(label, _COHERENT_CUTOFF), params)
        pred = coherent_moment_predictions(label, params)
        for axis in AXES:
            got = expectation(coords[axis], s)
            worst = max(worst, abs(got - pred[f"{axis}_mean"]))
        got_q1sq = inner_product(coords["q1"], coords["q1"], s).real
        worst = max(worst, abs(got_q1sq - pred["q1_sq"]))
    return CheckResult("coherent-moments", worst, 1e-9)


def check_coherent_min_uncertainty(params: PhysParams) -> CheckResult:
    coords = coordinate_polynomials(params)
    hb = params.hbar
    worst = 0.0
    for a1, a2 in _ALPHA_SAMPLES:
        s = StateFunctional(coherent_fock(CoherentLabel(a1, a2), _COHERENT_CUTOFF), params)
        for j in (1, 2):
            prod = math.sqrt(variance(coords[f"q{j}"], s) * variance(coords[f"p{j}"], s))
            worst = max(worst, abs(prod - 0.5 * hb))
    return CheckResult("coherent-min-uncertainty", worst, 1e-9)


def check_coherent_variance_independence(params: PhysParams) -> CheckResult:
    coords = coordinate_polynomials(params)
    alphas = (0j, 1.0 + 0j, 1.0 + 1.0j, -2.0j)
    vals = []
    for a1 in alphas:
        s = StateFunctional(coherent_fock(CoherentLabel(a1, 0j), _COHERENT_CUTOFF + 2), params)
        vals.append(variance(coords["q1"], s))
    worst = max(abs(v - vals[0]) for v in vals)
    return CheckResult("coherent-variance-independence", worst, 1e-10)


def check_displacement_unitarity(params: PhysParams) -> CheckResult:
    cutoff, block = 32, 16
    worst = 0.0
    for a1, a2 in _ALPHA_SAMPLES[3:6]:
        for alpha in (a1, a2):
            d = displacement_matrix(alpha, cutoff)
            prod = d @ d.conj().T
            worst = max(worst, float(np.max(np.abs(
                prod[:block, :block] - np.eye(block)))))
            prod = d.conj().T @ d
            worst = max(worst, float(np.max(np.abs(
                prod[:block, :block] - np.eye(block)))))
    return CheckResult("displacement-unitarity", worst, 1e-10)


def check_displacement_conjugation(params: PhysParams) -> CheckResult:
    """Conjugating the annihilation matrix by a displacement shifts it by alpha.

    The identity is exact only away from the truncation edge; with |alpha| up
    to 2, indices below 16 are clean once the cutoff sits at 64.
    """
    cutoff, block = 64, 16
    lower, _ = ladder_matrices(cutoff)
    worst = 0.0
    for alpha in (0.9 - 0.4j, -1.3 + 0.8j, 2.0j):
        d = displacement_matrix(alpha, cutoff)
        got = d.conj().T @ lower @ d
        want = lower + alpha * np.eye(cutoff)
        worst = max(worst, float(np.max(np.abs(got[:block, :block] - want[:block, :block]))))
    return CheckResult("displacement-conjugation", worst, 1e-10)


def _word_mode_matrices(word, cutoff: int):
    """Per-mode coefficient matrices of a generator word (modes commute)."""
    lower, raise_ = ladder_matrices(cutoff)
    mats = {"a": lower, "abar": raise_, "b": lower, "bbar": raise_}
    ma = np.eye(cutoff, dtype=complex)
    mb = np.eye(cutoff, dtype=complex)
    for gen in word:
        if gen in ("a", "abar"):
            ma = ma @ mats[gen]
        else:
            mb = mb @ mats[gen]
    return ma, mb


def check_displaced_polynomial(params: PhysParams) -> CheckResult:
    """Argument-shift route versus matrix-conjugation route for displaced observables.

    The conjugation route works in per-mode matrix algebra at a larger cutoff;
    the comparison is restricted to the sub-block that truncation cannot reach.
    """
    big, small, block = 40, 16, 12
    rng = np.random.default_rng(1011)
    polys = [
        StarPolynomial.generator("a"),
        StarPolynomial.generator("abar") * StarPolynomial.generator("a"),
        _random_star_polynomial(rng, n_terms=3, max_len=3),
    ]
    e11 = np.zeros((big, big), dtype=complex)
    e11[1, 1] = 1.0
    worst = 0.0
    for a1, a2 in ((0.6 - 0.3j, 0.2 + 0.4j), (1.0j, -0.5 + 0.1j)):
        d1, d2 = displacement_fock(a1, a2, big)
        x_small = wigner_fock(WignerLabel(1, 1), small)
        for poly in polys:
            shifted = displaced_polynomial(poly, a1, a2)
            route1 = apply_star_polynomial(shifted, x_small)
            route2 = np.zeros((block,) * 4, dtype=complex)
            for coef, word in poly.terms:
                ma, mb = _word_mode_matrices(word, big)
                m1 = (d1.conj().T @ ma @ d1 @ e11)[:block, :block]
                m2 = (d2.conj().T @ mb @ d2 @ e11)[:block, :block]
                route2 += coef * np.einsum("ij,kl->ijkl", m1, m2)
            diff = route1.coeffs[:block, :block, :block, :block] - route2
            worst = max(worst, float(np.max(np.abs(diff))))
    return CheckResult("displaced-polynomial-conjugation", worst, 1e-10)


def check_coherent_pointwise(params: PhysParams) -> CheckResult:
    rng = np.random.default_rng(1012)
    a, b = _random_points(rng, 25, params)
    worst = 0.0
    for a1, a2 in _ALPHA_SAMPLES[:6]:
        label = CoherentLabel(a1, a2)
        rep = coherent_fock(label, _COHERENT_CUTOFF)
        got = fock_values(rep, a, b)
        want = coherent_values(label, a, b)
        worst = max(worst, float(np.max(np.abs(got - want))))
    return CheckResult("coherent-pointwise", worst, 1e-9)


def check_coherent_eigenvalue(params: PhysParams) -> CheckResult:
    """Left annihilation action multiplies a coherent state by its eigenvalue."""
    worst = 0.0
    for a1, a2 in _ALPHA_SAMPLES[1:5]:
        rep = coherent_fock(CoherentLabel(a1, a2), _COHERENT_CUTOFF)
        for gen, lam in (("a", a1), ("b", a2)):
            res = left_star_generator(gen, rep)
            worst = max(worst, float(np.max(np.abs(res.coeffs - lam * rep.coeffs))))
    return CheckResult("coherent-eigenvalue", worst, 1e-9)


def check_coherent_positivity(params: PhysParams) -> CheckResult:
    label = CoherentLabel(1 + 1j, -0.5)
    g_ = params.gamma
    q = np.linspace(-3 * g_, 3 * g_, 10)
    p = np.linspace(-3 * params.hbar / g_, 3 * params.hbar / g_, 10)
    Q1, Q2, P1, P2 = np.meshgrid(q, q, p, p, indexing="ij")
    a, b = mode_coords_arrays(Q1, Q2, P1, P2, params)
    vals = coherent_values(label, a, b)
    min_val = float(np.min(vals))
    return CheckResult("coherent-positivity", max(0.0, -min_val) if min_val <= 0 else 0.0, 0.0)


def check_only_ground_coherent(params: PhysParams, nmax: int = 3) -> CheckResult:
    """Excited Wigner functions are not one-sided eigenfunctions of both annihilators."""
    cutoff = nmax + 3
    failures = 0.0
    for n in range(nmax + 1):
        for l in range(nmax + 1):
            if (n, l) == (0, 0):
                continue
            w = wigner_fock(WignerLabel(n, l), cutoff)
            proportional = True
            for gen in ("a", "b"):
                res = left_star_generator(gen, w)
                # residual after projecting res onto w
                overlap = np.vdot(w.coeffs, res.coeffs) / np.vdot(w.coeffs, w.coeffs)
                rem = float(np.max(np.abs(res.coeffs - overlap * w.coeffs)))
                if rem > 1e-9:
                    proportional = False
            if proportional:
                failures += 1.0
    return CheckResult("only-ground-state-coherent", failures, 0.0)


def check_state_reality(params: PhysParams) -> CheckResult:
    worst = 0.0
    reps = [
        wigner_fock(WignerLabel(2, 1), 12),
        coherent_fock(CoherentLabel(0.7 + 0.2j, -0.4j), 12),
        generalized_coherent_fock(
            GeneralizedCoherentLabel(0.5 - 0.3j, 0.2j, WignerLabel(1, 2)), 12),
    ]
    for rep in reps:
        worst = max(worst, rep.reality_residual())
    return CheckResult("state-reality", worst, 0.0)


def check_generalized_power_theorem(params: PhysParams) -> list[CheckResult]:
    from .uncertainty import displaced_power_residual

    a = StarPolynomial.generator("a")
    abar = StarPolynomial.generator("abar")
    bbar = StarPolynomial.generator("bbar")
    observables = {"a": a, "abar*a": abar * a, "bbar*a": bbar * a}
    out = []
    for name, f in observables.items():
        worst = 0.0
        for n in range(3):
            for l in range(3):
                for a1, a2 in ((0.5 + 0j, -0.3j), (0.4 - 0.2j, 0.3 + 0.5j)):
                    label = GeneralizedCoherentLabel(a1, a2, WignerLabel(n, l))
                    for k in (1, 2, 3):
                        worst = max(worst, displaced_power_residual(
                            f, k, label, params, cutoff=16))
        out.append(CheckResult(f"generalized-power-theorem f={name}", worst, 1e-9))
    return out


def check_generalized_variance_invariance(params: PhysParams) -> CheckResult:
    coords = coordinate_polynomials(params)
    q1 = coords["q1"]
    worst = 0.0
    for n, l in [(0, 1), (2, 1), (2, 2)]:
        base = StateFunctional(wigner_fock(WignerLabel(n, l), 20), params)
        want = variance(q1, base)
        for a1, a2 in ((0.8 - 0.2j, 0.5j), (-0.4 + 0.9j, 0.3 - 0.6j)):
            label = GeneralizedCoherentLabel(a1, a2, WignerLabel(n, l))
            s = StateFunctional(generalized_coherent_fock(label, 20), params)
            worst = max(worst, abs(variance(q1, s) - want))
    return CheckResult("generalized-variance-invariance", worst, 1e-9)


def check_generalized_normalization(params: PhysParams) -> CheckResult:
    worst = 0.0
    for n, l in [(1, 0), (2, 2)]:
        for a1, a2 in ((0.8 - 0.2j, 0.5j), (-0.4 + 0.9j, 0.3 - 0.6j)):
            label = GeneralizedCoherentLabel(a1, a2, WignerLabel(n, l))
            rep = generalized_coherent_fock(label, 24)
            worst = max(worst, abs(rep.trace() - 1.0))
            prod = star(rep, rep)
            worst = max(worst, float(np.max(np.abs(prod.coeffs - rep.coeffs))))
    return CheckResult("generalized-projection-normalization", worst, 1e-10)


# ---------------------------------------------------------------------------
# suite runners
# ---------------------------------------------------------------------------

def run_star_suite(params: PhysParams) -> list[CheckResult]:
    return [
        check_projection(params),
        check_orthogonality(params),
        check_associativity(params),
        check_oracle_equivalence(params),
        check_trace_property(params),
        check_hermitian_involution(params),
        check_ladder_consistency(params),
        check_energy_eigenvalues(params),
        check_angular_momentum_eigenvalues(params),
        check_matrix_unit_trace_rule(params),
        check_gaussian_composition(params),
        check_canonical_classical_limit(params),
        check_generator_brackets(params),
        check_displacement_closed_form(params),
    ]


def run_marginals_suite(params: PhysParams) -> list[CheckResult]:
    out = [
        check_wigner_normalization(params),
        check_marginal_normalization(params),
        check_marginal_wigner_consistency(params),
        check_plane_consistency(params),
        check_plane_quadrature_consistency(params),
        check_marginal_evenness(params),
        check_marginal_positivity(params),
        check_plane_positivity(params),
        check_marginal_symmetry(params),
        check_generating_plane(params),
        check_generating_axis(params),
        check_generating_derivatives(params),
    ]
    out.extend(integral_equality_checks(params))
    return out


def run_uncertainty_suite(params: PhysParams) -> list[CheckResult]:
    out = uncertainty_table_checks(params)
    out.extend([
        check_uncertainty_lower_bound(params),
        check_moment_route_agreement(params),
        check_robertson_schrodinger(params),
        check_rs_known_slack(params),
        check_cbs(params),
        check_semidefiniteness(params),
        check_degenerate_kernel(params),
        check_expectation_identities(params),
    ])
    return out


def run_coherent_suite(params: PhysParams) -> list[CheckResult]:
    out = [
        check_coherent_projection(params),
        check_coherent_normalization(params),
        check_coherent_moments(params),
        check_coherent_min_uncertainty(params),
        check_coherent_variance_independence(params),
        check_displacement_unitarity(params),
        check_displacement_conjugation(params),
        check_displaced_polynomial(params),
        check_coherent_pointwise(params),
        check_coherent_eigenvalue(params),
        check_coherent_positivity(params),
        check_only_ground_coherent(params),
        check_state_reality(params),
        check_generalized_variance_invariance(params),
        check_generalized_normalization(params),
    ]
    out.extend(check_generalized_power_theorem(params))
    return out


def run_suite(name: str, params: PhysParams) -> list[CheckResult]:
    runners = {
        "star": run_star_suite,
        "marginals": run_marginals_suite,
        "uncertainty": run_uncertainty_suite,
        "coherent": run_coherent_suite,
    }
    if name == "all":
        out = []
        for suite in SUITES:
            out.extend(runners[suite](params))
        return out
    if name not in runners:
        raise ValueError(f"unknown suite {name!r}; choose from {('all',) + SUITES}")
    return runners[name](params)
