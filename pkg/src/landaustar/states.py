"""Closed-form state evaluators and their Fock-coefficient constructors.

Wigner functions, the four-parameter generating function, displacement
functions and standard/generalized coherent states, each available both as a
pointwise closed form and as a FockRep built from ladder/displacement
matrices.  The two routes are independent and are cross-checked in the test
suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .phase_space import PhasePoint, PhysParams, mode_coords_arrays, to_mode_coords
from .specfun import laguerre, log_factorial
from .star import (
    FockRep,
    StarPolynomial,
    displacement_matrix,
    matrix_unit,
)

TAIL_TOLERANCE = 1e-12


@dataclass(frozen=True)
class WignerLabel:
    n: int
    l: int

    def __post_init__(self):
        if self.n < 0 or self.l < 0:
            raise ValueError("quantum numbers must be non-negative")


@dataclass(frozen=True)
class CoherentLabel:
    alpha1: complex
    alpha2: complex


@dataclass(frozen=True)
class GeneralizedCoherentLabel:
    alpha1: complex
    alpha2: complex
    base: WignerLabel


# ---------------------------------------------------------------------------
# Pointwise closed forms
# ---------------------------------------------------------------------------

def matrix_unit_values(cutoff: int, z):
    """Values of all single-mode matrix-unit basis functions at mode coordinate z.

    Returns an array of shape (cutoff, cutoff, *z.shape); entry (m, n) is the
    basis function with m creation and n annihilation factors around the mode
    Gaussian, normalized to compose like matrix units under the star product.
    """
    z = np.asarray(z, dtype=complex)
    x = 4.0 * np.abs(z) ** 2
    gauss = np.exp(-0.5 * x)
    out = np.empty((cutoff, cutoff) + z.shape, dtype=complex)
    for m in range(cutoff):
        for n in range(cutoff):
            lo, hi = min(m, n), max(m, n)
            amp = 2.0 * (-1.0) ** lo * math.exp(0.5 * (log_factorial(lo) - log_factorial(hi)))
            w = np.conj(z) if m > n else z
            out[m, n] = amp * (2.0 * w) ** (hi - lo) * laguerre(lo, hi - lo, x) * gauss
    return out


def fock_values(rep: FockRep, a, b):
    """Pointwise values of a FockRep at mode coordinates (a, b), vectorized."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    wa = matrix_unit_values(rep.cutoff, a.ravel())
    wb = matrix_unit_values(rep.cutoff, b.ravel())
    vals = np.einsum("mnkl,mnp,klp->p", rep.coeffs, wa, wb)
    return vals.reshape(a.shape) if a.shape else complex(vals[0])


def fock_eval(rep: FockRep, pt: PhasePoint, params: PhysParams) -> complex:
    mc = to_mode_coords(pt, params)
    return complex(fock_values(rep, mc.a, mc.b))


def wigner_values(n: int, l: int, a, b):
    """Diagonal Wigner function at mode coordinates, vectorized.

    (-1)^(n+l) L_n(4|a|^2) L_l(4|b|^2) * 4 exp(-2(|a|^2 + |b|^2)).
    """
    xa = 4.0 * np.abs(np.asarray(a, dtype=complex)) ** 2
    xb = 4.0 * np.abs(np.asarray(b, dtype=complex)) ** 2
    sign = (-1.0) ** (n + l)
    return sign * laguerre(n, 0, xa) * laguerre(l, 0, xb) * 4.0 * np.exp(-0.5 * (xa + xb))


def wigner_eval(label: WignerLabel, pt: PhasePoint, params: PhysParams) -> float:
    mc = to_mode_coords(pt, params)
    return float(wigner_values(label.n, label.l, mc.a, mc.b))


def wigner_eval_grid(label: WignerLabel, q1, q2, p1, p2, params: PhysParams):
    a, b = mode_coords_arrays(q1, q2, p1, p2, params)
    return np.real(wigner_values(label.n, label.l, a, b))


def wigner_symbol(n: int, l: int) -> "PolyGauss":
    """Diagonal Wigner function as a polynomial-times-Gaussian symbol.

    Input form for the bidifferential star-product oracle; kept independent of
    the Fock-coefficient machinery.
    """
    from math import comb, factorial

    from .star import PolyGauss

    poly: dict = {}
    sign = 4.0 * (-1.0) ** (n + l)
    for i in range(n + 1):
        ci = (-1.0) ** i * comb(n, i) / factorial(i) * 4.0 ** i
        for j in range(l + 1):
            cj = (-1.0) ** j * comb(l, j) / factorial(j) * 4.0 ** j
            poly[(i, i, j, j)] = sign * ci * cj
    return PolyGauss(poly, gaussian=True)


def generating_function(alpha1, beta1, alpha2, beta2, pt: PhasePoint,
                        params: PhysParams) -> complex:
    """Four-parameter generating function of all Wigner functions.

    exp(-a.b) exp(2(alpha1*abar + beta1*a + alpha2*bbar + beta2*b)) times the
    two-mode ground Gaussian; parameter derivatives at zero produce the
    matrix-unit basis functions.
    """
    mc = to_mode_coords(pt, params)
    a, b = mc.a, mc.b
    dot = alpha1 * beta1 + alpha2 * beta2
    lin = alpha1 * np.conj(a) + beta1 * a + alpha2 * np.conj(b) + beta2 * b
    return complex(np.exp(-dot + 2.0 * lin - 2.0 * (abs(a) ** 2 + abs(b) ** 2)))


def coherent_values(label: CoherentLabel, a, b):
    """Normalized coherent projector: the ground Gaussian displaced in mode space."""
    da = np.abs(np.asarray(a, dtype=complex) - label.alpha1) ** 2
    db = np.abs(np.asarray(b, dtype=complex) - label.alpha2) ** 2
    return 4.0 * np.exp(-2.0 * (da + db))


def coherent_eval(label: CoherentLabel, pt: PhasePoint, params: PhysParams) -> float:
    mc = to_mode_coords(pt, params)
    return float(coherent_values(label, mc.a, mc.b))


# ---------------------------------------------------------------------------
# Fock-coefficient constructors
# ---------------------------------------------------------------------------

def wigner_fock(label: WignerLabel, cutoff: int) -> FockRep:
    if label.n >= cutoff or label.l >= cutoff:
        raise ValueError(f"label {label} exceeds cutoff {cutoff}")
    return matrix_unit(label.n, label.n, label.l, label.l, cutoff)


def displacement_fock(alpha1: complex, alpha2: complex, cutoff: int):
    """Per-mode displacement matrices in the matrix-unit basis."""
    return displacement_matrix(alpha1, cutoff), displacement_matrix(alpha2, cutoff)


def _displaced_projector(alpha1: complex, alpha2: complex, n: int, l: int,
                         cutoff: int) -> FockRep:
    d1, d2 = displacement_fock(alpha1, alpha2, cutoff)
    c1 = d1[:, n]
    c2 = d2[:, l]
    m1 = np.outer(c1, np.conj(c1))
    m2 = np.outer(c2, np.conj(c2))
    coeffs = np.einsum("ij,kl->ijkl", m1, m2)
    # symmetrize so the reality condition holds exactly, not just to rounding
    coeffs = 0.5 * (coeffs + np.conj(coeffs).transpose(1, 0, 3, 2))
    # the truncated exponential stays unitary, so missing weight has to be
    # measured against the closed-form (untruncated) displacement column
    tail = (_column_tail_weight(alpha1, n, cutoff)
            + _column_tail_weight(alpha2, l, cutoff))
    return FockRep(cutoff, coeffs, overflow=bool(tail > TAIL_TOLERANCE))


def _column_tail_weight(alpha: complex, n: int, cutoff: int) -> float:
    x = abs(alpha) ** 2
    inside = 0.0
    for m in range(cutoff):
        lo, hi = min(m, n), max(m, n)
        amp = math.exp(0.5 * (log_factorial(lo) - log_factorial(hi)) - 0.5 * x)
        inside += (amp * x ** ((hi - lo) / 2.0) * abs(laguerre(lo, hi - lo, x))) ** 2
    return abs(1.0 - inside)


def coherent_fock(label: CoherentLabel, cutoff: int) -> FockRep:
    """Displaced ground projector; overflow flags truncated tail weight."""
    return _displaced_projector(label.alpha1, label.alpha2, 0, 0, cutoff)


def generalized_coherent_fock(label: GeneralizedCoherentLabel, cutoff: int) -> FockRep:
    if label.base.n >= cutoff or label.base.l >= cutoff:
        raise ValueError(f"base label {label.base} exceeds cutoff {cutoff}")
    return _displaced_projector(label.alpha1, label.alpha2, label.base.n, label.base.l, cutoff)


def displaced_polynomial(poly: StarPolynomial, alpha1: complex,
                         alpha2: complex) -> StarPolynomial:
    """Substitute a -> a + alpha1 (etc.) in every word, preserving order."""
    shift = {
        "a": complex(alpha1),
        "abar": complex(alpha1).conjugate(),
        "b": complex(alpha2),
        "bbar": complex(alpha2).conjugate(),
    }
    out_terms = []
    for c, word in poly.terms:
        partial = [(c, ())]
        for gen in word:
            nxt = []
            for coef, w in partial:
                nxt.append((coef, w + (gen,)))
                if shift[gen] != 0:
                    nxt.append((coef * shift[gen], w))
            partial = nxt
        out_terms.extend(partial)
    return StarPolynomial.from_terms(out_terms)


def state_fock(label, cutoff: int) -> FockRep:
    """Build the FockRep of any supported state label."""
    if isinstance(label, WignerLabel):
        return wigner_fock(label, cutoff)
    if isinstance(label, CoherentLabel):
        return coherent_fock(label, cutoff)
    if isinstance(label, GeneralizedCoherentLabel):
        return generalized_coherent_fock(label, cutoff)
    raise TypeError(f"unsupported state label: {label!r}")


def parse_state_label(text: str):
    """Parse 'wigner:n,l', 'coherent:re1,im1,re2,im2' or
    'gencoherent:n,l:re1,im1,re2,im2'."""
    kind, _, rest = text.partition(":")
    try:
        if kind == "wigner":
            n, l = (int(x) for x in rest.split(","))
            return WignerLabel(n, l)
        if kind == "coherent":
            r1, i1, r2, i2 = (float(x) for x in rest.split(","))
            return CoherentLabel(complex(r1, i1), complex(r2, i2))
        if kind == "gencoherent":
            nl, _, alphas = rest.partition(":")
            n, l = (int(x) for x in nl.split(","))
            r1, i1, r2, i2 = (float(x) for x in alphas.split(","))
            return GeneralizedCoherentLabel(complex(r1, i1), complex(r2, i2), WignerLabel(n, l))
    except (ValueError, TypeError) as exc:
        raise ValueError(f"malformed state label {text!r}: {exc}") from exc
    raise ValueError(f"unknown state kind {kind!r} in label {text!r}")
