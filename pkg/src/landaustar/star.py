"""The Moyal star product in two exact representations.

Representation A (FockRep): phase-space functions expanded over the two-mode
matrix-unit basis.  The basis elements compose under the star product exactly
like matrix units, u_{mn} * u_{m'n'} = delta_{n m'} u_{m n'}, so star products,
ladder actions and phase-space integrals reduce to finite linear algebra.
The basis is normalized so that this composition rule carries no extra
factors; the pointwise evaluator (states module) owns the conversion back to
function values.

Representation B: a truncating bidifferential series acting on polynomial and
polynomial-times-Gaussian symbols in the mode variables, plus the analogous
exact series for polynomials in the canonical coordinates.  Representation B
is deliberately independent of A and serves as its oracle in the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping

import numpy as np
from scipy.linalg import expm

from .phase_space import PhysParams
from .specfun import laguerre, log_factorial

GENERATORS = ("a", "abar", "b", "bbar")

_CONJ_GEN = {"a": "abar", "abar": "a", "b": "bbar", "bbar": "b"}


# ---------------------------------------------------------------------------
# Fock-coefficient (matrix-unit) representation
# ---------------------------------------------------------------------------

def ladder_matrices(cutoff: int):
    """Annihilation/creation matrices: lower[m, m+1] = sqrt(m+1), raise = lower^T."""
    lower = np.zeros((cutoff, cutoff))
    idx = np.arange(cutoff - 1)
    lower[idx, idx + 1] = np.sqrt(idx + 1.0)
    return lower, lower.T.copy()


@dataclass(frozen=True)
class FockRep:
    """Two-mode coefficient tensor over the matrix-unit basis.

    ``coeffs[m1, n1, m2, n2]`` multiplies the basis element with row/column
    indices (m1, n1) in the first mode and (m2, n2) in the second.  Instances
    are treated as immutable values; ``overflow`` is a sticky flag recording
    that some construction step truncated weight at the cutoff.
    """

    cutoff: int
    coeffs: np.ndarray
    overflow: bool = False

    @staticmethod
    def zero(cutoff: int) -> "FockRep":
        return FockRep(cutoff, np.zeros((cutoff,) * 4, dtype=complex))

    def conjugate(self) -> "FockRep":
        return FockRep(self.cutoff, np.conj(self.coeffs).transpose(1, 0, 3, 2), self.overflow)

    def trace(self) -> complex:
        return complex(np.einsum("iijj->", self.coeffs))

    def reality_residual(self) -> float:
        """Max deviation from the condition that the function is real-valued."""
        return float(np.max(np.abs(self.coeffs - np.conj(self.coeffs).transpose(1, 0, 3, 2))))

    def __add__(self, other: "FockRep") -> "FockRep":
        _check_cutoffs(self, other)
        return FockRep(self.cutoff, self.coeffs + other.coeffs, self.overflow or other.overflow)

    def __sub__(self, other: "FockRep") -> "FockRep":
        _check_cutoffs(self, other)
        return FockRep(self.cutoff, self.coeffs - other.coeffs, self.overflow or other.overflow)

    def __rmul__(self, c) -> "FockRep":
        return FockRep(self.cutoff, c * self.coeffs, self.overflow)


def _check_cutoffs(f: FockRep, g: FockRep):
    if f.cutoff != g.cutoff:
        raise ValueError(f"cutoff mismatch: {f.cutoff} != {g.cutoff}")


def matrix_unit(m1: int, n1: int, m2: int, n2: int, cutoff: int) -> FockRep:
    """Single matrix-unit basis element as a FockRep."""
    if not all(0 <= i < cutoff for i in (m1, n1, m2, n2)):
        raise ValueError(f"index out of range for cutoff {cutoff}: {(m1, n1, m2, n2)}")
    rep = FockRep.zero(cutoff)
    rep.coeffs[m1, n1, m2, n2] = 1.0
    return rep


def star(f: FockRep, g: FockRep) -> FockRep:
    """Star product: matrix composition independently in each mode.

    Composition cannot raise indices, so the result stays within the cutoff.
    """
    _check_cutoffs(f, g)
    out = np.tensordot(f.coeffs, g.coeffs, axes=([1, 3], [0, 2]))
    # tensordot leaves axes ordered (m1, m2, n1, n2)
    return FockRep(f.cutoff, np.ascontiguousarray(out.transpose(0, 2, 1, 3)),
                   f.overflow or g.overflow)


def _mode_axis(gen: str, side: str) -> int:
    mode_first = gen in ("a", "abar")
    left = side == "left"
    if mode_first:
        return 0 if left else 1
    return 2 if left else 3


def _apply_generator(gen: str, side: str, rep: FockRep) -> FockRep:
    """Ladder action of one generator from the given side.

    Left action of the annihilation function lowers the row index; left action
    of the creation function raises it (weight in the top slice is dropped and
    flagged).  Right actions mirror on the column index.
    """
    if gen not in GENERATORS:
        raise ValueError(f"unknown generator {gen!r}")
    n = rep.cutoff
    lower, raise_ = ladder_matrices(n)
    axis = _mode_axis(gen, side)
    creation = gen in ("abar", "bbar")
    raising_index = creation == (side == "left")  # raises the acted-on index
    mat = raise_ if creation else lower
    # Left action is M @ C on the row axis, right action C @ M on the column
    # axis; each case is a single (batched) matmul on a reshaped view.
    c = np.ascontiguousarray(rep.coeffs)
    shape = c.shape
    if side == "left":
        if axis == 0:
            out = (mat @ c.reshape(n, -1)).reshape(shape)
        else:  # axis == 2
            out = np.matmul(mat, c.reshape(n * n, n, n)).reshape(shape)
    else:
        if axis == 3:
            out = (c.reshape(-1, n) @ mat).reshape(shape)
        else:  # axis == 1
            out = np.matmul(mat.T, c.reshape(n, n, n * n)).reshape(shape)
    overflow = rep.overflow
    if raising_index:
        top = np.take(rep.coeffs, n - 1, axis=axis)
        if np.any(top != 0):
            overflow = True
    return FockRep(n, out, overflow)


def left_star_generator(gen: str, f: FockRep) -> FockRep:
    return _apply_generator(gen, "left", f)


def right_star_generator(gen: str, f: FockRep) -> FockRep:
    return _apply_generator(gen, "right", f)


def integrate(f: FockRep, params: PhysParams) -> complex:
    """Phase-space integral of f: h^2 times the coefficient trace."""
    return params.planck_h ** 2 * f.trace()


def fock_to_entries(f: FockRep):
    """Nonzero coefficients as sorted [m1, n1, m2, n2, re, im] rows."""
    idx = np.argwhere(f.coeffs != 0)
    entries = []
    for m1, n1, m2, n2 in idx:
        c = f.coeffs[m1, n1, m2, n2]
        entries.append([int(m1), int(n1), int(m2), int(n2), float(c.real), float(c.imag)])
    entries.sort(key=lambda e: e[:4])
    return entries


def fock_to_json_dict(f: FockRep) -> dict:
    return {"cutoff": f.cutoff, "entries": fock_to_entries(f)}


def fock_from_json_dict(d: Mapping) -> FockRep:
    try:
        cutoff = int(d["cutoff"])
        entries = d["entries"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed state document: {exc}") from exc
    rep = FockRep.zero(cutoff)
    for pos, e in enumerate(entries):
        if len(e) != 6:
            raise ValueError(f"malformed entry at position {pos}: {e!r}")
        m1, n1, m2, n2 = (int(x) for x in e[:4])
        if not all(0 <= i < cutoff for i in (m1, n1, m2, n2)):
            raise ValueError(f"entry index out of range at position {pos}: {e[:4]}")
        rep.coeffs[m1, n1, m2, n2] = complex(float(e[4]), float(e[5]))
    return rep


# ---------------------------------------------------------------------------
# Star polynomials: formal linear combinations of ordered generator words
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StarPolynomial:
    """Linear combination of ordered star-words over {a, abar, b, bbar}.

    Juxtaposition inside a word means star multiplication in the written
    order; the empty word is the constant 1.
    """

    terms: tuple = ()

    @staticmethod
    def constant(c) -> "StarPolynomial":
        return StarPolynomial(((complex(c), ()),))

    @staticmethod
    def generator(name: str) -> "StarPolynomial":
        if name not in GENERATORS:
            raise ValueError(f"unknown generator {name!r}")
        return StarPolynomial(((1.0 + 0j, (name,)),))

    @staticmethod
    def from_terms(terms) -> "StarPolynomial":
        merged: dict = {}
        for c, w in terms:
            w = tuple(w)
            merged[w] = merged.get(w, 0j) + complex(c)
        items = tuple((c, w) for w, c in sorted(merged.items()) if c != 0)
        return StarPolynomial(items)

    def __add__(self, other):
        other = _as_star_poly(other)
        return StarPolynomial.from_terms(list(self.terms) + list(other.terms))

    def __radd__(self, other):
        return self.__add__(other)

    def __sub__(self, other):
        other = _as_star_poly(other)
        return self + (-1.0) * other

    def __rsub__(self, other):
        return _as_star_poly(other) - self

    def __mul__(self, other):
        """Star product: pairwise word concatenation."""
        other = _as_star_poly(other)
        return StarPolynomial.from_terms(
            (c1 * c2, w1 + w2) for c1, w1 in self.terms for c2, w2 in other.terms
        )

    def __rmul__(self, c):
        return StarPolynomial.from_terms((complex(c) * coef, w) for coef, w in self.terms)

    def conjugate(self) -> "StarPolynomial":
        """Complex conjugate: conjugate coefficients, reverse and bar each word."""
        return StarPolynomial.from_terms(
            (c.conjugate(), tuple(_CONJ_GEN[g] for g in reversed(w))) for c, w in self.terms
        )

    def star_power(self, k: int) -> "StarPolynomial":
        out = StarPolynomial.constant(1.0)
        for _ in range(k):
            out = out * self
        return out

    def is_real_observable(self) -> bool:
        """Word-level reality: the polynomial equals its formal conjugate."""
        return self.terms == self.conjugate().terms

    def max_word_length(self) -> int:
        return max((len(w) for _, w in self.terms), default=0)

    def normal_form(self) -> dict:
        """Reduce modulo the star commutators to normally ordered monomials.

        Returns {(i, j, k, l): coeff} for abar^i a^j bbar^k b^l.  The two modes
        commute; within a mode, a*abar = abar*a + 1.
        """
        out: dict = {}
        for c, w in self.terms:
            wa = tuple(g for g in w if g in ("a", "abar"))
            wb = tuple(g for g in w if g in ("b", "bbar"))
            for (i, j), ca in _normal_order_single(wa, "a", "abar").items():
                for (k, l), cb in _normal_order_single(wb, "b", "bbar").items():
                    key = (i, j, k, l)
                    out[key] = out.get(key, 0j) + c * ca * cb
        return {k: v for k, v in out.items() if v != 0}


def _as_star_poly(x) -> StarPolynomial:
    if isinstance(x, StarPolynomial):
        return x
    return StarPolynomial.constant(x)


def _normal_order_single(word, low: str, high: str) -> dict:
    """Normal order a single-mode word; returns {(creators, annihilators): coeff}."""
    results: dict = {}
    stack = [(1.0 + 0j, tuple(word))]
    while stack:
        c, w = stack.pop()
        for i in range(len(w) - 1):
            if w[i] == low and w[i + 1] == high:
                stack.append((c, w[:i] + (high, low) + w[i + 2:]))
                stack.append((c, w[:i] + w[i + 2:]))
                break
        else:
            key = (w.count(high), w.count(low))
            results[key] = results.get(key, 0j) + c
    return results


def apply_star_polynomial(poly: StarPolynomial, f: FockRep, side: str = "left") -> FockRep:
    """Fold the ladder actions of each word over f, linearly in the polynomial."""
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    total = np.zeros_like(f.coeffs)
    overflow = f.overflow
    for c, word in poly.terms:
        cur = f
        letters = reversed(word) if side == "left" else word
        for gen in letters:
            cur = _apply_generator(gen, side, cur)
        total = total + c * cur.coeffs
        overflow = overflow or cur.overflow
    return FockRep(f.cutoff, total, overflow)


# ---------------------------------------------------------------------------
# Moyal bracket (dispatching on representation)
# ---------------------------------------------------------------------------

def moyal_bracket(f, g, params: PhysParams | None = None):
    """f * g - g * f for FockRep, StarPolynomial or CanonicalPoly pairs."""
    if isinstance(f, FockRep) and isinstance(g, FockRep):
        return star(f, g) - star(g, f)
    if isinstance(f, StarPolynomial) and isinstance(g, StarPolynomial):
        return f * g - g * f
    if isinstance(f, CanonicalPoly) and isinstance(g, CanonicalPoly):
        if params is None:
            raise ValueError("canonical-coordinate bracket needs params")
        return canonical_star(f, g, params) - canonical_star(g, f, params)
    raise TypeError(f"unsupported bracket operands: {type(f).__name__}, {type(g).__name__}")


def anti_moyal_bracket(f, g, params: PhysParams | None = None):
    """f * g + g * f on the same supported pairs as moyal_bracket."""
    if isinstance(f, FockRep) and isinstance(g, FockRep):
        return star(f, g) + star(g, f)
    if isinstance(f, StarPolynomial) and isinstance(g, StarPolynomial):
        return f * g + g * f
    if isinstance(f, CanonicalPoly) and isinstance(g, CanonicalPoly):
        if params is None:
            raise ValueError("canonical-coordinate bracket needs params")
        return canonical_star(f, g, params) + canonical_star(g, f, params)
    raise TypeError(f"unsupported bracket operands: {type(f).__name__}, {type(g).__name__}")


# ---------------------------------------------------------------------------
# Canonical-coordinate polynomials and their exact star product
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CanonicalPoly:
    """Polynomial in (q1, q2, p1, p2): {(e_q1, e_q2, e_p1, e_p2): coeff}."""

    coeffs: Mapping = field(default_factory=dict)

    @staticmethod
    def coordinate(name: str) -> "CanonicalPoly":
        order = ("q1", "q2", "p1", "p2")
        if name not in order:
            raise ValueError(f"unknown coordinate {name!r}")
        key = tuple(1 if c == name else 0 for c in order)
        return CanonicalPoly({key: 1.0 + 0j})

    @staticmethod
    def constant(c) -> "CanonicalPoly":
        return CanonicalPoly({(0, 0, 0, 0): complex(c)})

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0j) + v
        return CanonicalPoly({k: v for k, v in out.items() if v != 0})

    def __sub__(self, other):
        return self + (-1.0) * other

    def __rmul__(self, c):
        return CanonicalPoly({k: complex(c) * v for k, v in self.coeffs.items()})

    def pointwise_mul(self, other: "CanonicalPoly") -> "CanonicalPoly":
        out: dict = {}
        for k1, v1 in self.coeffs.items():
            for k2, v2 in other.coeffs.items():
                key = tuple(a + b for a, b in zip(k1, k2))
                out[key] = out.get(key, 0j) + v1 * v2
        return CanonicalPoly({k: v for k, v in out.items() if v != 0})

    def diff(self, axis: int) -> "CanonicalPoly":
        out: dict = {}
        for k, v in self.coeffs.items():
            if k[axis] > 0:
                key = k[:axis] + (k[axis] - 1,) + k[axis + 1:]
                out[key] = out.get(key, 0j) + v * k[axis]
        return CanonicalPoly(out)

    def total_degree(self) -> int:
        return max((sum(k) for k in self.coeffs), default=0)

    def eval(self, q1, q2, p1, p2) -> complex:
        tot = 0j
        for (e1, e2, e3, e4), v in self.coeffs.items():
            tot += v * q1 ** e1 * q2 ** e2 * p1 ** e3 * p2 ** e4
        return tot


def canonical_star(f: CanonicalPoly, g: CanonicalPoly, params: PhysParams) -> CanonicalPoly:
    """Exact bidifferential star product on canonical-coordinate polynomials.

    The series terminates at the smaller total degree, so the output is an
    exact polynomial.  Axes: q1, q2 differentiate against p1, p2.
    """
    hb = params.hbar
    bound = min(f.total_degree(), g.total_degree())
    Q = (0, 1)  # axis ids of q1, q2
    P = (2, 3)
    out = CanonicalPoly({})
    # multi-indices r (q on f, p on g) and s (p on f, q on g), per plane
    for r1 in range(bound + 1):
        for r2 in range(bound + 1 - r1):
            for s1 in range(bound + 1 - r1 - r2):
                for s2 in range(bound + 1 - r1 - r2 - s1):
                    order = r1 + r2 + s1 + s2
                    coef = (0.5j * hb) ** order * (-1.0) ** (s1 + s2)
                    coef /= (
                        math.factorial(r1) * math.factorial(r2)
                        * math.factorial(s1) * math.factorial(s2)
                    )
                    df = _iter_diff(f, ((Q[0], r1), (Q[1], r2), (P[0], s1), (P[1], s2)))
                    if not df.coeffs:
                        continue
                    dg = _iter_diff(g, ((P[0], r1), (P[1], r2), (Q[0], s1), (Q[1], s2)))
                    if not dg.coeffs:
                        continue
                    out = out + coef * df.pointwise_mul(dg)
    return out


def _iter_diff(poly: CanonicalPoly, spec) -> CanonicalPoly:
    out = poly
    for axis, count in spec:
        for _ in range(count):
            out = out.diff(axis)
            if not out.coeffs:
                return out
    return out


# ---------------------------------------------------------------------------
# Polynomial-times-Gaussian symbols: the independent star-product oracle
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PolyGauss:
    """Symbol P(a, abar, b, bbar) * exp(linear . vars) * exp(-2(a abar + b bbar))?

    ``poly`` maps exponent quadruples (over a, abar, b, bbar) to coefficients;
    ``gaussian`` switches the standard Gaussian factor on; ``linear`` holds the
    four exponent-linear coefficients.  Closed under differentiation, which is
    all the bidifferential series needs.
    """

    poly: Mapping
    gaussian: bool = False
    linear: tuple = (0j, 0j, 0j, 0j)

    @staticmethod
    def monomial(exponents, coeff=1.0) -> "PolyGauss":
        return PolyGauss({tuple(exponents): complex(coeff)})

    @staticmethod
    def standard_gaussian(coeff=1.0) -> "PolyGauss":
        return PolyGauss({(0, 0, 0, 0): complex(coeff)}, gaussian=True)

    @property
    def is_polynomial(self) -> bool:
        return not self.gaussian and all(c == 0 for c in self.linear)

    def total_degree(self) -> int:
        return max((sum(k) for k in self.poly), default=0)

    def scaled(self, c) -> "PolyGauss":
        return PolyGauss({k: complex(c) * v for k, v in self.poly.items()},
                         self.gaussian, self.linear)

    def add_poly(self, other: "PolyGauss") -> "PolyGauss":
        if (self.gaussian, self.linear) != (other.gaussian, other.linear):
            raise ValueError("cannot add symbols with different exponents")
        out = dict(self.poly)
        for k, v in other.poly.items():
            out[k] = out.get(k, 0j) + v
        return PolyGauss({k: v for k, v in out.items() if v != 0}, self.gaussian, self.linear)

    def diff(self, var: int) -> "PolyGauss":
        """Derivative with respect to vars[var], vars = (a, abar, b, bbar)."""
        out: dict = {}
        for k, v in self.poly.items():
            if k[var] > 0:
                key = k[:var] + (k[var] - 1,) + k[var + 1:]
                out[key] = out.get(key, 0j) + v * k[var]
            # chain rule on the exponent: d/dvar exp(E) = (linear_var - 2*partner) exp(E)
            if self.linear[var] != 0:
                out[k] = out.get(k, 0j) + v * self.linear[var]
            if self.gaussian:
                partner = var + 1 if var % 2 == 0 else var - 1
                key = k[:partner] + (k[partner] + 1,) + k[partner + 1:]
                out[key] = out.get(key, 0j) - 2.0 * v
        return PolyGauss({k: v for k, v in out.items() if v != 0}, self.gaussian, self.linear)

    def eval(self, a, b):
        """Pointwise value with abar = conj(a), bbar = conj(b); vectorized."""
        a = np.asarray(a, dtype=complex)
        b = np.asarray(b, dtype=complex)
        a, b = np.broadcast_arrays(a, b)
        shape = a.shape
        vals = np.stack([a.ravel(), np.conj(a).ravel(), b.ravel(), np.conj(b).ravel()])
        if self.poly:
            expo_mat = np.array(list(self.poly.keys()))            # (n_mono, 4)
            coefs = np.array(list(self.poly.values()))             # (n_mono,)
            mono = np.prod(vals[None, :, :] ** expo_mat[:, :, None], axis=1)
            tot = coefs @ mono
        else:
            tot = np.zeros(vals.shape[1], dtype=complex)
        expo = np.asarray(self.linear, dtype=complex) @ vals
        if self.gaussian:
            expo = expo - 2.0 * (np.abs(vals[0]) ** 2 + np.abs(vals[2]) ** 2)
        out = (tot * np.exp(expo)).reshape(shape)
        return out if out.ndim else complex(out)


def generator_symbol(name: str) -> PolyGauss:
    """Degree-one polynomial symbol of a single generator."""
    if name not in GENERATORS:
        raise ValueError(f"unknown generator {name!r}")
    key = tuple(1 if g == name else 0 for g in GENERATORS)
    return PolyGauss.monomial(key)


def oracle_apply_word(word, symbol: PolyGauss, side: str = "left") -> PolyGauss:
    """Star-multiply a generator word onto a symbol, letter by letter.

    Each letter is a degree-one polynomial, so every bidifferential series in
    the fold terminates after two terms; the result is the exact star product
    of the ordered word with the symbol.
    """
    out = symbol
    if side == "left":
        for gen in reversed(tuple(word)):
            out = bidifferential_star(generator_symbol(gen), out)
    elif side == "right":
        for gen in word:
            out = bidifferential_star(out, generator_symbol(gen))
    else:
        raise ValueError("side must be 'left' or 'right'")
    return out


def bidifferential_star(f: PolyGauss, g: PolyGauss, max_order: int | None = None) -> PolyGauss:
    """Star product via the bidifferential series on mode-variable symbols.

    At least one operand must be a pure polynomial; the series then terminates
    at its total degree (two Gaussians would give a non-terminating series and
    are rejected).  This routine is the independent oracle for the matrix-unit
    composition rule and the ladder actions.
    """
    if not f.is_polynomial and not g.is_polynomial:
        raise ValueError("bidifferential series terminates only if one side is polynomial")
    if f.is_polynomial and g.is_polynomial:
        bound = min(f.total_degree(), g.total_degree())
    elif f.is_polynomial:
        bound = f.total_degree()
    else:
        bound = g.total_degree()
    if max_order is not None:
        if max_order < bound:
            raise ValueError(f"max_order {max_order} below required depth {bound}")
        bound = min(bound, max_order)
    # derivative caches keyed by (r, s, t, u)
    df_cache = {(0, 0, 0, 0): f}
    dg_cache = {(0, 0, 0, 0): g}

    def deriv(cache, base_orders, sym_axes):
        def get(orders):
            if orders in cache:
                return cache[orders]
            for i in range(4):
                if orders[i] > 0:
                    prev = orders[:i] + (orders[i] - 1,) + orders[i + 1:]
                    cache[orders] = get(prev).diff(sym_axes[i])
                    return cache[orders]
            raise AssertionError
        return get(base_orders)

    # series index (r, s, t, u): r pairs d/da on f with d/dabar on g, s the
    # reverse (sign flip), t and u the same for the b mode.
    f_axes = (0, 1, 2, 3)   # a, abar, b, bbar derivatives on f for (r, s, t, u)
    g_axes = (1, 0, 3, 2)   # mirrored derivatives on g
    result: PolyGauss | None = None
    for r in range(bound + 1):
        for s in range(bound + 1 - r):
            for t in range(bound + 1 - r - s):
                for u in range(bound + 1 - r - s - t):
                    coef = (0.5) ** (r + t) * (-0.5) ** (s + u)
                    coef /= (math.factorial(r) * math.factorial(s)
                             * math.factorial(t) * math.factorial(u))
                    df = deriv(df_cache, (r, s, t, u), f_axes)
                    if not df.poly:
                        continue
                    dg = deriv(dg_cache, (r, s, t, u), g_axes)
                    if not dg.poly:
                        continue
                    term = _polygauss_mul(df, dg).scaled(coef)
                    result = term if result is None else result.add_poly(term)
    if result is None:
        gauss = f.gaussian or g.gaussian
        linear = tuple(cf + cg for cf, cg in zip(f.linear, g.linear))
        result = PolyGauss({}, gauss, linear)
    return result


def _polygauss_mul(x: PolyGauss, y: PolyGauss) -> PolyGauss:
    if x.gaussian and y.gaussian:
        raise ValueError("product of two Gaussian symbols is outside this class")
    out: dict = {}
    for k1, v1 in x.poly.items():
        for k2, v2 in y.poly.items():
            key = tuple(a + b for a, b in zip(k1, k2))
            out[key] = out.get(key, 0j) + v1 * v2
    linear = tuple(cx + cy for cx, cy in zip(x.linear, y.linear))
    return PolyGauss({k: v for k, v in out.items() if v != 0},
                     x.gaussian or y.gaussian, linear)


# ---------------------------------------------------------------------------
# Displacement matrices
# ---------------------------------------------------------------------------

def displacement_matrix(alpha: complex, cutoff: int) -> np.ndarray:
    """Single-mode displacement matrix exp(alpha*raise - conj(alpha)*lower).

    Computed by scaling-and-squaring matrix exponential at the working cutoff;
    the closed Laguerre form below pins down the convention independently.
    """
    lower, raise_ = ladder_matrices(cutoff)
    return expm(alpha * raise_ - np.conj(alpha) * lower)


def displacement_matrix_closed(alpha: complex, cutoff: int) -> np.ndarray:
    """Closed-form matrix elements sqrt(n!/m!) alpha^{m-n} e^{-|alpha|^2/2} L_n^{m-n}(|alpha|^2)."""
    x = abs(alpha) ** 2
    out = np.zeros((cutoff, cutoff), dtype=complex)
    for m in range(cutoff):
        for n in range(cutoff):
            lo, hi = min(m, n), max(m, n)
            amp = math.exp(0.5 * (log_factorial(lo) - log_factorial(hi)) - 0.5 * x)
            z = alpha if m >= n else -np.conj(alpha)
            out[m, n] = amp * z ** (hi - lo) * laguerre(lo, hi - lo, x)
    return out
