"""Gauss-Hermite rules and tensor-product integration over R^1..R^4.

Every integrand in this package is a polynomial times an axis-aligned Gaussian
whose widths are known (gamma on position axes, hbar/gamma on momentum axes),
so a rescaled Gauss-Hermite rule integrates it exactly up to rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import roots_hermite

MAX_ORDER = 200


@dataclass(frozen=True)
class QuadratureRule:
    order: int
    nodes: np.ndarray
    weights: np.ndarray


def gauss_hermite(order: int) -> QuadratureRule:
    """Nodes and weights for the weight exp(-x^2) on the real line."""
    if not 1 <= order <= MAX_ORDER:
        raise ValueError(f"order must be in [1, {MAX_ORDER}], got {order}")
    nodes, weights = roots_hermite(order)
    return QuadratureRule(order=order, nodes=nodes, weights=weights)


def default_order(n: int, l: int, minimum: int = 16) -> int:
    """Per-axis order used for states with quantum numbers (n, l)."""
    return max(minimum, n + l + 8)


def integrate_nd(f, scales, rule: QuadratureRule):
    """Tensor-product Gauss-Hermite estimate of the integral of f over R^dims.

    ``scales`` holds one positive width per axis (dims = len(scales), 1..4);
    the rule is rescaled per axis as x = scale*t with weight compensation
    exp(+t^2).  ``f`` is called with ``dims`` broadcastable coordinate arrays
    and must evaluate elementwise.  Exactness is the caller's contract: f has
    to decay like the matching Gaussian times a polynomial of degree below
    2*order per axis.  Summation order is fixed, so results are reproducible.
    """
    scales = [float(s) for s in np.atleast_1d(scales)]
    dims = len(scales)
    if not 1 <= dims <= 4:
        raise ValueError("integrate_nd supports 1 to 4 dimensions")
    if any(s <= 0 for s in scales):
        raise ValueError("scales must be positive")
    t = rule.nodes
    cw = rule.weights * np.exp(t * t)
    axes = [s * t for s in scales]
    vol = math.prod(scales)

    if dims == 1:
        return vol * np.sum(cw * np.asarray(f(axes[0])))

    # Slab over the first axis to bound memory at order^(dims-1).
    inner = np.meshgrid(*axes[1:], indexing="ij")
    w_inner = cw
    for _ in range(dims - 2):
        w_inner = np.multiply.outer(w_inner, cw)
    slab_sums = np.empty(rule.order, dtype=complex)
    for i, x0 in enumerate(axes[0]):
        vals = np.asarray(f(np.full_like(inner[0], x0), *inner))
        slab_sums[i] = cw[i] * np.sum(w_inner * vals)
    total = vol * np.sum(slab_sums)
    if abs(total.imag) == 0.0:
        return total.real
    return total
