"""Marginal probability densities along coordinate axes and planes.

The 1D densities come out of a single Hermite expansion whose coefficients
are combinatorial; two of the coordinate planes also have closed forms
(Laguerre on the position plane, Hermite on the mixed q1-p2 plane).  Every
closed form here is cross-checked against direct quadrature of the Wigner
function in the test suite, and equating the two evaluation routes yields
nontrivial integral identities between the classical orthogonal polynomials.
"""

from __future__ import annotations

import math

import numpy as np

from .phase_space import PhysParams, mode_coords_arrays
from .quadrature import QuadratureRule, default_order, gauss_hermite
from .specfun import hermite, laguerre, log_factorial, marginal_hermite_coeff
from .states import wigner_values

AXES = ("q1", "q2", "p1", "p2")
CLOSED_FORM_PLANES = (("q1", "q2"), ("q1", "p2"))


def axis_scale(axis: str, params: PhysParams) -> float:
    """Natural Gaussian width of the axis: gamma for positions, hbar/gamma for momenta."""
    if axis in ("q1", "q2"):
        return params.gamma
    if axis in ("p1", "p2"):
        return params.hbar / params.gamma
    raise ValueError(f"unknown axis {axis!r}")


def axis_norm(axis: str, params: PhysParams) -> float:
    """Prefactor of the axis generating function and 1D densities."""
    if axis in ("q1", "q2"):
        return math.pi ** 1.5 * params.hbar ** 2 / params.gamma
    if axis in ("p1", "p2"):
        return math.pi ** 1.5 * params.hbar * params.gamma
    raise ValueError(f"unknown axis {axis!r}")


def position_plane_generating(alpha, beta, q1, q2, params: PhysParams) -> complex:
    """Generating function of the densities on the position plane.

    alpha and beta are complex pairs; at zero parameters this is the ground
    density up to the factor 4.
    """
    a1, a2 = (complex(c) for c in alpha)
    b1, b2 = (complex(c) for c in beta)
    z = complex(q1, q2) / params.gamma
    zb = z.conjugate()
    pref = math.pi * params.hbar ** 2 / params.gamma ** 2
    expo = -a1 * a2 - b1 * b2 + 1j * (a1 * zb - a2 * z) - 1j * (b1 * z - b2 * zb) - z * zb
    return pref * np.exp(expo)


def axis_generating(axis: str, alpha, beta, x, params: PhysParams) -> complex:
    """Generating function of the 1D densities along one coordinate axis."""
    a1, a2 = (complex(c) for c in alpha)
    b1, b2 = (complex(c) for c in beta)
    u = float(x) / axis_scale(axis, params)
    if axis == "q1":
        shift = -0.5j * (a1 - a2 - b1 + b2)
    elif axis == "p1":
        shift = -0.5 * (a1 - a2 + b1 - b2)
    elif axis == "q2":
        shift = -0.5 * (a1 + a2 + b1 + b2)
    elif axis == "p2":
        shift = +0.5j * (a1 + a2 - b1 - b2)
    else:
        raise ValueError(f"unknown axis {axis!r}")
    dot = a1 * b1 + a2 * b2
    return axis_norm(axis, params) * np.exp(dot - (u + shift) ** 2)


def marginal_1d(n: int, l: int, axis: str, x, params: PhysParams):
    """Closed-form 1D marginal density of the (n, l) state along an axis.

    N_axis * exp(-u^2) * sum_{j<=n} sum_{k<=l} A_{nljk} H_{2(n+l-j-k)}(u) with
    u = x/scale.  Terms alternate in sign; they are accumulated in descending
    degree order so results are reproducible and cancellation stays benign.
    """
    if n < 0 or l < 0 or n > 150 or l > 150:
        raise ValueError(f"quantum numbers out of range: ({n}, {l})")
    u = np.asarray(x, dtype=float) / axis_scale(axis, params)
    pairs = sorted(
        ((j, k) for j in range(n + 1) for k in range(l + 1)),
        key=lambda jk: (-(n + l - jk[0] - jk[1]), jk),
    )
    acc = np.zeros_like(u)
    for j, k in pairs:
        acc = acc + marginal_hermite_coeff(n, l, j, k) * hermite(2 * (n + l - j - k), u)
    out = axis_norm(axis, params) * np.exp(-u * u) * acc
    return out if out.ndim else float(out)


def _position_plane_closed(n: int, l: int, q1, q2, params: PhysParams):
    """Laguerre closed form on the (q1, q2) plane; needs n >= l as written."""
    rho2 = (np.asarray(q1, dtype=float) ** 2 + np.asarray(q2, dtype=float) ** 2) / params.gamma ** 2
    norm = 4.0 * math.pi * math.exp(log_factorial(l) - log_factorial(n))
    amp = norm * (params.hbar / params.gamma) ** 2
    return amp * rho2 ** (n - l) * np.exp(-rho2) * laguerre(l, n - l, rho2) ** 2


def _mixed_plane_closed(n: int, l: int, q1, p2, params: PhysParams):
    """Hermite closed form on the (q1, p2) plane."""
    y = np.asarray(q1, dtype=float) / params.gamma
    w = params.gamma * np.asarray(p2, dtype=float) / params.hbar
    tau_m = y - w
    tau_p = y + w
    norm = 4.0 * math.pi * math.exp(
        -log_factorial(n) - log_factorial(l) - (n + l) * math.log(2.0)
    )
    gauss = np.exp(-0.5 * (tau_p ** 2 + tau_m ** 2))
    return (norm * params.hbar * gauss
            * hermite(n, tau_m / math.sqrt(2.0)) ** 2
            * hermite(l, tau_p / math.sqrt(2.0)) ** 2)


def marginal_2d(n: int, l: int, plane, x, y, params: PhysParams,
                rule: QuadratureRule | None = None):
    """2D marginal density on a coordinate plane, vectorized over (x, y).

    The (q1, q2) and (q1, p2) planes use closed forms (the position plane is
    symmetric in the quantum numbers, so n < l is folded to the printed n >= l
    branch); any other plane integrates the Wigner function over the two
    complementary axes by Gauss-Hermite quadrature.
    """
    plane = tuple(plane)
    if plane == ("q1", "q2"):
        if n >= l:
            return _position_plane_closed(n, l, x, y, params)
        return _position_plane_closed(l, n, x, y, params)
    if plane == ("q1", "p2"):
        return _mixed_plane_closed(n, l, x, y, params)
    return marginal_2d_quadrature(n, l, plane, x, y, params, rule)


def marginal_2d_quadrature(n: int, l: int, plane, x, y, params: PhysParams,
                           rule: QuadratureRule | None = None):
    """Any-plane 2D marginal via quadrature over the complementary axes."""
    plane = tuple(plane)
    if len(plane) != 2 or plane[0] == plane[1] or any(ax not in AXES for ax in plane):
        raise ValueError(f"invalid plane {plane!r}")
    if rule is None:
        rule = gauss_hermite(default_order(n, l))
    others = [ax for ax in AXES if ax not in plane]
    scales = [axis_scale(ax, params) for ax in others]
    t = rule.nodes
    cw = rule.weights * np.exp(t * t)
    u = scales[0] * t
    v = scales[1] * t
    U, V = np.meshgrid(u, v, indexing="ij")
    W2 = np.multiply.outer(cw, cw) * scales[0] * scales[1]

    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    out = np.empty(np.broadcast(x, y).shape)
    xb, yb = np.broadcast_arrays(x, y)
    flat_out = out.reshape(-1)
    for i, (xi, yi) in enumerate(zip(xb.reshape(-1), yb.reshape(-1))):
        coords = {plane[0]: xi, plane[1]: yi, others[0]: U, others[1]: V}
        a, b = mode_coords_arrays(coords["q1"], coords["q2"], coords["p1"],
                                  coords["p2"], params)
        flat_out[i] = np.sum(W2 * np.real(wigner_values(n, l, a, b)))
    return out if out.ndim else float(out)


def integral_equality_residuals(n: int, l: int, q1_samples, params: PhysParams,
                                rule: QuadratureRule | None = None):
    """Residuals of the two quadrature identities behind the 1D/2D consistency.

    For each sample the Hermite sum of the 1D density (Gaussian stripped) is
    compared against the integral of each closed-form 2D density over its
    second coordinate, likewise stripped of the shared Gaussian.  Returns a
    list of (q1, |lhs - laguerre branch|, |lhs - hermite branch|).
    """
    if n < l:
        raise ValueError("the position-plane branch requires n >= l")
    if rule is None:
        rule = gauss_hermite(default_order(n, l))
    g = params.gamma
    nq = axis_norm("q1", params)
    t = rule.nodes
    cw = rule.weights * np.exp(t * t)

    out = []
    for q1 in q1_samples:
        y = q1 / g
        lhs = 0.0
        for j in range(n + 1):
            for k in range(l + 1):
                lhs += marginal_hermite_coeff(n, l, j, k) * hermite(2 * (n + l - j - k), y)

        # position-plane branch, integrated over q2 with the Gaussian in q1 cancelled
        q2 = g * t
        rho2 = (q1 ** 2 + q2 ** 2) / g ** 2
        n_lag = 4.0 * math.pi * math.exp(log_factorial(l) - log_factorial(n))
        integrand = rho2 ** (n - l) * np.exp(-(q2 / g) ** 2) * laguerre(l, n - l, rho2) ** 2
        rhs_lag = (n_lag / nq) * (params.hbar / g) ** 2 * g * np.sum(cw * integrand)

        # mixed-plane branch, integrated over p2
        p2 = (params.hbar / g) * t
        w = g * p2 / params.hbar
        n_herm = 4.0 * math.pi * math.exp(
            -log_factorial(n) - log_factorial(l) - (n + l) * math.log(2.0)
        )
        integrand = (np.exp(-w ** 2)
                     * hermite(n, (y - w) / math.sqrt(2.0)) ** 2
                     * hermite(l, (y + w) / math.sqrt(2.0)) ** 2)
        rhs_herm = (n_herm / nq) * params.hbar * (params.hbar / g) * np.sum(cw * integrand)

        out.append((float(q1), abs(lhs - rhs_lag), abs(lhs - rhs_herm)))
    return out


def marginal_1d_quadrature(n: int, l: int, axis: str, x, params: PhysParams,
                           rule: QuadratureRule | None = None):
    """1D marginal by direct 3D quadrature of the Wigner function (oracle route)."""
    if rule is None:
        rule = gauss_hermite(default_order(n, l))
    others = [ax for ax in AXES if ax != axis]
    scales = [axis_scale(ax, params) for ax in others]
    t = rule.nodes
    cw = rule.weights * np.exp(t * t)
    grids = np.meshgrid(*(s * t for s in scales), indexing="ij")
    W3 = cw[:, None, None] * cw[None, :, None] * cw[None, None, :] * math.prod(scales)

    x = np.asarray(x, dtype=float)
    out = np.empty(x.shape if x.ndim else (1,))
    for i, xi in enumerate(np.atleast_1d(x)):
        coords = {axis: xi}
        coords.update(zip(others, grids))
        a, b = mode_coords_arrays(coords["q1"], coords["q2"], coords["p1"],
                                  coords["p2"], params)
        out[i] = np.sum(W3 * np.real(wigner_values(n, l, a, b)))
    return out.reshape(x.shape) if x.ndim else float(out[0])
