"""Laguerre polynomial families, their coefficient matrices and production
matrices.

Includes the monic unsigned univariate family, the first multivariate
family (edge weights v_-, v_0, v_+ on the digraph model), the second
multivariate family (vertex weights y_p, y_v, y_da, y_dd, y_fp, with an
optional separate path-side z block) together with its 'flat' form in which
the guaranteed peak factor per path is removed, the closed-form production
matrices for all of them, and the bidiagonal factorization identities.

The univariate coefficient matrix is an exponential Riordan array for
F(t) = (1-t)^(-lam), G(t) = t/(1-t) (lam = 1 + alpha); the second
multivariate matrix is an exponential Riordan array for the cycle and
path generating functions.  Both series are produced by ODE recurrences
(see the series module), never from closed forms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from . import digraphs
from .matrices import (HessMatrix, Truncation, binomial_truncation,
                       riordan_matrix, unit_lower_inverse)
from .polyring import Poly, rising
from .series import Series, solve_logderiv, solve_riccati

PolyLike = Union[Poly, int, Fraction]

ALPHA_NAME = "a"
X_NAME = "x"


def _p(x: PolyLike) -> Poly:
    return x if isinstance(x, Poly) else Poly.const(x)


class RouteMismatchError(AssertionError):
    """Riordan route and digraph oracle disagreed; a series or oracle bug."""


@dataclass(frozen=True)
class LaguerreParams:
    """The family parameter alpha (symbolic or an exact rational); lam = 1+alpha."""

    alpha: Poly

    @staticmethod
    def symbolic(name: str = ALPHA_NAME) -> "LaguerreParams":
        return LaguerreParams(Poly.var(name))

    @staticmethod
    def of(value) -> "LaguerreParams":
        return LaguerreParams(_p(value if isinstance(value, (int, Fraction, Poly)) else Fraction(value)))

    @property
    def lam(self) -> Poly:
        return self.alpha + 1


@dataclass(frozen=True)
class EdgeWeights:
    """Weights for decreasing edges, loops and increasing edges."""

    v_minus: Poly
    v_zero: Poly
    v_plus: Poly

    @staticmethod
    def symbolic() -> "EdgeWeights":
        return EdgeWeights(Poly.var("vm"), Poly.var("v0"), Poly.var("vp"))

    def uniform(v: PolyLike) -> "EdgeWeights":
        v = _p(v)
        return EdgeWeights(v, v, v)


@dataclass(frozen=True)
class VertexWeights:
    """Peak/valley/double-ascent/double-descent/loop weights.

    When the z block is absent, path vertices get the same weights as cycle
    vertices (z := y componentwise).
    """

    y_p: Poly
    y_v: Poly
    y_da: Poly
    y_dd: Poly
    y_fp: Poly
    z_p: Optional[Poly] = None
    z_v: Optional[Poly] = None
    z_da: Optional[Poly] = None
    z_dd: Optional[Poly] = None

    @staticmethod
    def symbolic(with_z: bool = False) -> "VertexWeights":
        y = [Poly.var(n) for n in ("yp", "yv", "yda", "ydd", "yfp")]
        if not with_z:
            return VertexWeights(*y)
        z = [Poly.var(n) for n in ("zp", "zv", "zda", "zdd")]
        return VertexWeights(*y, *z)

    @property
    def zp(self) -> Poly:
        return self.y_p if self.z_p is None else self.z_p

    @property
    def zv(self) -> Poly:
        return self.y_v if self.z_v is None else self.z_v

    @property
    def zda(self) -> Poly:
        return self.y_da if self.z_da is None else self.z_da

    @property
    def zdd(self) -> Poly:
        return self.y_dd if self.z_dd is None else self.z_dd


# -- univariate family -------------------------------------------------------


def monic_laguerre(n: int, params: LaguerreParams, x: PolyLike) -> Poly:
    """Monic unsigned Laguerre polynomial: sum_k C(n,k) (1+alpha+k)^{rising n-k} x^k."""
    x = _p(x)
    acc = Poly.zero()
    for k in range(n + 1):
        acc = acc + rising(params.alpha + (k + 1), n - k) * math.comb(n, k) * x ** k
    return acc


def monic_laguerre_reversed(n: int, params: LaguerreParams, x: PolyLike) -> Poly:
    """Coefficient reversal x^n L(1/x): sum_k C(n,k) (1+alpha+k)^{rising n-k} x^{n-k}."""
    x = _p(x)
    acc = Poly.zero()
    for k in range(n + 1):
        acc = acc + rising(params.alpha + (k + 1), n - k) * math.comb(n, k) * x ** (n - k)
    return acc


def coeff_matrix_uni(params: LaguerreParams, n: int) -> Truncation:
    """Unit-lower-triangular coefficient matrix with entries C(n,k)(1+alpha+k)^{rising n-k}."""
    return Truncation.from_fn(
        n, n,
        lambda i, k: rising(params.alpha + (k + 1), i - k) * math.comb(i, k) if k <= i else 0,
    )


def laguerre_path_series(order: int) -> Series:
    """G(t) = t/(1-t) from its Riccati form G' = (1+G)^2."""
    one = Poly.one()
    return solve_riccati(one, Poly.const(2), one, order)


def laguerre_cycle_series(params: LaguerreParams, order: int) -> Series:
    """F(t) = (1-t)^(-(1+alpha)) from F'/F = (1+alpha)(1+G)."""
    return solve_logderiv([1, 1], laguerre_path_series(order), params.lam, order)


def laguerre_rowgen_egf(params: LaguerreParams, x: PolyLike, order: int) -> Series:
    """EGF of the monic unsigned Laguerre polynomials: (1-t)^(-(1+alpha)) e^{xt/(1-t)}."""
    g = laguerre_path_series(order)
    return laguerre_cycle_series(params, order) * (g * _p(x)).exp()


# -- multivariate families ---------------------------------------------------

FIRST_MV_ORACLE_LIMIT = 9
SECOND_MV_ORACLE_LIMIT = 7


def coeff_matrix_first_mv(params: LaguerreParams, w: EdgeWeights, n: int) -> Truncation:
    """First multivariate coefficient matrix, built by digraph-oracle summation.

    Entry (n,k) sums v_-^{e_-} v_0^{e_0} v_+^{e_+} (1+alpha)^{cyc} over the
    Laguerre digraphs with k paths; each entry is checked homogeneous of
    degree n-k in the edge weights.
    """
    weights = {"v_minus": w.v_minus, "v_zero": w.v_zero, "v_plus": w.v_plus,
               "lam": params.lam}
    rows = []
    for i in range(n):
        row = [digraphs.oracle_entry(i, k, weights, "first_mv") for k in range(i + 1)]
        row += [Poly.zero()] * (n - i - 1)
        rows.append(row)
    t = Truncation(rows)
    sym_edge_vars = {v for wpoly in (w.v_minus, w.v_zero, w.v_plus) for v in wpoly.vars}
    if sym_edge_vars:
        for i in range(n):
            for k in range(i + 1):
                if not _is_homogeneous(t[i, k], sym_edge_vars, i - k):
                    raise AssertionError(f"entry ({i},{k}) not homogeneous of degree {i-k}")
    return t


def second_mv_path_series(w: VertexWeights, order: int, flat: bool) -> Series:
    """Path EGF G (or G-flat = G/z_p) from its Riccati equation."""
    if flat:
        return solve_riccati(Poly.one(), w.zda + w.zdd, w.zp * w.zv, order)
    return solve_riccati(w.zp, w.zda + w.zdd, w.zv, order)


def second_mv_cycle_series(params: LaguerreParams, w: VertexWeights, order: int) -> Series:
    """Cycle-statistics EGF F = F(t; y, 1)^(1+alpha), from its logarithmic derivative."""
    g_y = solve_riccati(w.y_p, w.y_da + w.y_dd, w.y_v, order)
    return solve_logderiv([w.y_fp, w.y_v], g_y, params.lam, order)


def coeff_matrix_second_mv(params: LaguerreParams, w: VertexWeights, n: int,
                           flat: bool = False, oracle_rows: int | None = None) -> Truncation:
    """Second multivariate coefficient matrix (generalized z block supported).

    Primary route: exponential Riordan array R[F, G] with the cycle
    EGF F and the path EGF G (G-flat for the flat form).  The digraph
    oracle recomputes the leading rows as a cross-check; a mismatch raises
    RouteMismatchError since it signals a series or oracle bug.
    """
    f = second_mv_cycle_series(params, w, n - 1)
    g = second_mv_path_series(w, n - 1, flat)
    t = riordan_matrix(f, g, n)
    if oracle_rows is None:
        oracle_rows = min(n, SECOND_MV_ORACLE_LIMIT)
    if oracle_rows:
        weights = {"y_p": w.y_p, "y_v": w.y_v, "y_da": w.y_da, "y_dd": w.y_dd,
                   "y_fp": w.y_fp, "z_p": w.zp, "z_v": w.zv, "z_da": w.zda,
                   "z_dd": w.zdd, "lam": params.lam}
        for i in range(min(oracle_rows, n)):
            for k in range(i + 1):
                expected = digraphs.oracle_entry(i, k, weights, "second_mv_general")
                if flat and k:
                    expected = expected.exact_div(w.zp ** k)
                if t[i, k] != expected:
                    raise RouteMismatchError(
                        f"Riordan route and digraph oracle disagree at ({i},{k}): "
                        f"{t[i, k]} vs {expected}")
    return t


def _is_homogeneous(p: Poly, names: set, deg: int) -> bool:
    if p.is_zero():
        return True
    idx = [i for i, v in enumerate(p.vars) if v in names]
    return all(sum(e[i] for i in idx) == deg for e in p.terms)


# -- closed-form production matrices ------------------------------------------


def prodmat(params: LaguerreParams, which: str, weights: VertexWeights | None = None,
            x: PolyLike | None = None) -> HessMatrix:
    """Closed-form production matrices for the Laguerre families.

    which = 'Pcirc'      tridiagonal, univariate coefficient matrix;
            'P'          quadridiagonal, univariate binomial row-generating matrix;
            'PcircFlat'  tridiagonal, flat second multivariate matrix;
            'PFlat'      quadridiagonal, its binomial row-generating matrix;
            'PcircY'     tridiagonal, non-flat second multivariate matrix;
            'PY'         quadridiagonal, its binomial row-generating matrix.
    """
    al = params.alpha
    lam = params.lam
    if which in ("P", "PFlat", "PY"):
        if x is None:
            x = Poly.var(X_NAME)
        x = _p(x)
    if which in ("PcircFlat", "PFlat", "PcircY", "PY") and weights is None:
        raise ValueError(f"{which} needs vertex weights")
    w = weights

    if which == "Pcirc":
        def fn(n, k):
            if k == n + 1:
                return 1
            if k == n:
                return al + (2 * n + 1)
            if k == n - 1:
                return (al + n) * n
            return 0
        return HessMatrix(fn, lower_band=1)

    if which == "P":
        def fn(n, k):
            if k == n + 1:
                return 1
            if k == n:
                return al + (2 * n + 1) + x
            if k == n - 1:
                return (al + n) * n + x * (2 * n)
            if k == n - 2:
                return x * (n * (n - 1))
            return 0
        return HessMatrix(fn, lower_band=2)

    if which == "PcircFlat":
        def fn(n, k):
            if k == n + 1:
                return 1
            if k == n:
                return lam * w.y_fp + (w.y_da + w.y_dd) * n
            if k == n - 1:
                return w.y_p * w.y_v * ((al + n) * n)
            return 0
        return HessMatrix(fn, lower_band=1)

    if which == "PFlat":
        def fn(n, k):
            if k == n + 1:
                return 1
            if k == n:
                return lam * w.y_fp + (w.y_da + w.y_dd) * n + x
            if k == n - 1:
                return w.y_p * w.y_v * ((al + n) * n) + x * (w.y_da + w.y_dd) * n
            if k == n - 2:
                return w.y_p * w.y_v * x * (n * (n - 1))
            return 0
        return HessMatrix(fn, lower_band=2)

    if which == "PcircY":
        def fn(n, k):
            if k == n + 1:
                return w.y_p
            if k == n:
                return lam * w.y_fp + (w.y_da + w.y_dd) * n
            if k == n - 1:
                return w.y_v * ((al + n) * n)
            return 0
        return HessMatrix(fn, lower_band=1)

    if which == "PY":
        def fn(n, k):
            if k == n + 1:
                return w.y_p
            if k == n:
                return lam * w.y_fp + (w.y_da + w.y_dd) * n + w.y_p * x
            if k == n - 1:
                return w.y_v * ((al + n) * n) + x * (w.y_da + w.y_dd) * n
            if k == n - 2:
                return w.y_v * x * (n * (n - 1))
            return 0
        return HessMatrix(fn, lower_band=2)

    raise ValueError(f"unknown production-matrix variant {which!r}")


# -- factorizations and structural identities ---------------------------------


def lower_bidiagonal(diag, sub, n: int) -> Truncation:
    """Lower-bidiagonal truncation with diag(i) on the diagonal, sub(i) on row i."""
    return Truncation.from_fn(
        n, n, lambda i, j: diag(i) if j == i else (sub(i) if j == i - 1 else 0))


def upper_bidiagonal(diag, sup, n: int) -> Truncation:
    return Truncation.from_fn(
        n, n, lambda i, j: diag(i) if j == i else (sup(i) if j == i + 1 else 0))


def sfraction_production(alpha_fn, n: int) -> Truncation:
    """Tridiagonal S-fraction production matrix: LU of the two bidiagonal
    factors with alpha_2,alpha_4,... subdiagonal and alpha_1,alpha_3,... diagonal."""
    w = n + 2
    lo = lower_bidiagonal(lambda i: Poly.one(), lambda i: _p(alpha_fn(2 * i)), w)
    up = upper_bidiagonal(lambda i: _p(alpha_fn(2 * i + 1)), lambda i: Poly.one(), w)
    return (lo * up).top_left(n, n)


def factorization_check(which: str, params: LaguerreParams, n: int,
                        weights: VertexWeights | None = None) -> bool:
    """Entrywise verification of the bidiagonal factorization identities.

    'tridiagonal_lu':        P-circ = L U with subdiagonal 1,2,3,... and
                             diagonal lam, lam+1, ...;
    'quadridiagonal_nested': P = L (L U_x + lam I) with U_x = Delta + x I;
    'flat_split':            flat tridiagonal = S-fraction matrix with
                             alpha_{2k-1} = (k+alpha) y_p, alpha_{2k} = k y_v,
                             plus the nonnegative diagonal
                             (1+alpha)(y_fp - y_p) + n(y_da + y_dd - y_p - y_v).
    """
    w = n + 2
    lam = params.lam
    ell = lower_bidiagonal(lambda i: Poly.one(), lambda i: Poly.const(i), w)
    if which == "tridiagonal_lu":
        up = upper_bidiagonal(lambda i: lam + i, lambda i: Poly.one(), w)
        lhs = prodmat(params, "Pcirc").truncate(n)
        return (ell * up).top_left(n, n) == lhs
    if which == "quadridiagonal_nested":
        x = Poly.var(X_NAME)
        ux = upper_bidiagonal(lambda i: x, lambda i: Poly.one(), w)
        lam_eye = Truncation.from_fn(w, w, lambda i, j: lam if i == j else 0)
        rhs = (ell * ((ell * ux) + lam_eye)).top_left(n, n)
        return rhs == prodmat(params, "P", x=x).truncate(n)
    if which == "flat_split":
        if weights is None:
            weights = VertexWeights.symbolic()
        yw = weights

        def alpha_fn(i):
            if i <= 0:
                return Poly.zero()
            k = (i + 1) // 2
            if i % 2 == 1:
                return (params.alpha + k) * yw.y_p
            return yw.y_v * k

        q = sfraction_production(alpha_fn, n)
        d = Truncation.from_fn(
            n, n,
            lambda i, j: lam * (yw.y_fp - yw.y_p) + (yw.y_da + yw.y_dd - yw.y_p - yw.y_v) * i
            if i == j else 0)
        return q + d == prodmat(params, "PcircFlat", weights=yw).truncate(n)
    raise ValueError(f"unknown factorization {which!r}")


def unsigned_self_inverse_check(params: LaguerreParams, n: int) -> bool:
    """The coefficient matrix equals its own unsigned inverse:
    L = Q L^{-1} Q with Q = diag((-1)^i)."""
    t = coeff_matrix_uni(params, n)
    inv = unit_lower_inverse(t)
    signed = Truncation.from_fn(
        n, n, lambda i, j: inv[i, j] if (i + j) % 2 == 0 else -inv[i, j])
    return signed == t


def rowgen_polys(m: Truncation, x: PolyLike, reversed_form: bool = False) -> list:
    """Row-generating polynomials sum_k M[n,k] x^k (or x^(n-k) when reversed)."""
    x = _p(x)
    out = []
    for i in range(m.rows):
        acc = Poly.zero()
        for k in range(min(i, m.cols - 1) + 1):
            acc = acc + m[i, k] * (x ** (i - k) if reversed_form else x ** k)
        out.append(acc)
    return out


def binomial_rowgen_matrix(m: Truncation, x: PolyLike) -> Truncation:
    """The binomial row-generating matrix M B_x (zeroth column = row-generating polys)."""
    return m * binomial_truncation(_p(x), m.rows)


def rowgen_shifted_family_check(params: LaguerreParams, n: int, x: PolyLike | None = None) -> bool:
    """(L^(alpha) B_x)_{n,k} = C(n,k) L_{n-k}^{(alpha+k)}(x), entrywise."""
    x = Poly.var(X_NAME) if x is None else _p(x)
    lhs = binomial_rowgen_matrix(coeff_matrix_uni(params, n), x)
    for i in range(n):
        for k in range(n):
            if k > i:
                expected = Poly.zero()
            else:
                shifted = LaguerreParams(params.alpha + k)
                expected = monic_laguerre(i - k, shifted, x) * math.comb(i, k)
            if lhs[i, k] != expected:
                return False
    return True


def first_mv_specialization_check(params: LaguerreParams, n: int, variant: int) -> bool:
    """The two reductions of the second multivariate matrix to the first:

    variant 1: y_p=y_dd=v-, y_v=y_da=v+, y_fp=v0  gives  first_mv * v-^k;
    variant 2: y_v=y_dd=v-, y_p=y_da=v+, y_fp=v0  gives  first_mv * v+^k.
    """
    vm, v0, vp = Poly.var("vm"), Poly.var("v0"), Poly.var("vp")
    if variant == 1:
        w = VertexWeights(y_p=vm, y_v=vp, y_da=vp, y_dd=vm, y_fp=v0)
        factor = vm
    elif variant == 2:
        w = VertexWeights(y_p=vp, y_v=vm, y_da=vp, y_dd=vm, y_fp=v0)
        factor = vp
    else:
        raise ValueError("variant must be 1 or 2")
    hat = coeff_matrix_second_mv(params, w, n, flat=False)
    first = coeff_matrix_first_mv(params, EdgeWeights(vm, v0, vp), n)
    for i in range(n):
        for k in range(i + 1):
            if hat[i, k] != first[i, k] * factor ** k:
                return False
    return True
