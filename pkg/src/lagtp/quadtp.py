"""The two general quadridiagonal production-matrix families.

Family one:  P = L1 U L2 + L1 D1 + D2 L2, where L1, L2 are lower-bidiagonal
(diagonals a, e; subdiagonals b, f), U is upper-bidiagonal (superdiagonal
c, diagonal d) and D1, D2 are diagonal (g, h).  Setting h = 0 gives
Q = L1 (U L2 + D1) and P = Q + D2 L2 row by row.

Family two (the variant):  P = L1 L2 U + L1 D1 + L2 D2 with L1 = alpha I + x L
and L2 = beta I + y L built from one shared bidiagonal L, so L1 and L2
commute; setting f = 0 gives Q = L1 (L2 U + D1).

Both are totally positive coefficientwise in all the indeterminate
sequences; the Laguerre quadridiagonal production matrices arise by
specialization of family one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .matrices import HessMatrix, Truncation
from .polyring import Poly

PolyLike = Union[Poly, int, Fraction]


def _p(x: PolyLike) -> Poly:
    return x if isinstance(x, Poly) else Poly.const(x)


def _seq(values, start: int):
    """Sequence accessor: zero below ``start`` and for negative indices."""
    if callable(values):
        return lambda i: _p(values(i)) if i >= start else Poly.zero()
    vals = [_p(v) for v in values]

    def fn(i):
        if i < start or i - start >= len(vals):
            return Poly.zero()
        return vals[i - start]

    return fn


def symbolic_seq(prefix: str, start: int = 0):
    return lambda i: Poly.var(f"{prefix}{i}") if i >= start else Poly.zero()


@dataclass(frozen=True)
class QuadFactorParams:
    """Sequences for P = L1 U L2 + L1 D1 + D2 L2.

    a, d, e, g, h are indexed from 0; b, c, f from 1 (b_0 = c_0 = f_0 = 0).
    Entries may be lists or index functions; all unset values are zero.
    """

    a: object
    b: object
    c: object
    d: object
    e: object
    f: object
    g: object
    h: object

    @staticmethod
    def symbolic() -> "QuadFactorParams":
        return QuadFactorParams(
            a=symbolic_seq("a"), b=symbolic_seq("b", 1), c=symbolic_seq("c", 1),
            d=symbolic_seq("d"), e=symbolic_seq("e"), f=symbolic_seq("f", 1),
            g=symbolic_seq("g"), h=symbolic_seq("h"))

    def fns(self):
        return (_seq(self.a, 0), _seq(self.b, 1), _seq(self.c, 1), _seq(self.d, 0),
                _seq(self.e, 0), _seq(self.f, 1), _seq(self.g, 0), _seq(self.h, 0))


def build_general_quad(p: QuadFactorParams, with_h: bool = True) -> HessMatrix:
    """Quadridiagonal P (or Q = P with h = 0) by the closed row formulas."""
    a, b, c, d, e, f, g, h = p.fns()
    if not with_h:
        h = lambda i: Poly.zero()

    def fn(n, k):
        if k == n + 1:
            return a(n) * c(n + 1) * e(n + 1)
        if k == n:
            return (a(n) * d(n) * e(n) + b(n) * c(n) * e(n)
                    + a(n) * c(n + 1) * f(n + 1) + a(n) * g(n) + h(n) * e(n))
        if k == n - 1:
            return (a(n) * d(n) * f(n) + b(n) * c(n) * f(n)
                    + b(n) * d(n - 1) * e(n - 1) + b(n) * g(n - 1) + h(n) * f(n))
        if k == n - 2:
            return b(n) * d(n - 1) * f(n - 1)
        return 0

    return HessMatrix(fn, lower_band=2)


def general_quad_factors(p: QuadFactorParams, n: int) -> dict:
    """The factor truncations L1, U, L2, D1, D2 on an n x n block."""
    a, b, c, d, e, f, g, h = p.fns()
    return {
        "L1": Truncation.from_fn(n, n, lambda i, j: a(i) if j == i else (b(i) if j == i - 1 else 0)),
        "U": Truncation.from_fn(n, n, lambda i, j: d(i) if j == i else (c(i + 1) if j == i + 1 else 0)),
        "L2": Truncation.from_fn(n, n, lambda i, j: e(i) if j == i else (f(i) if j == i - 1 else 0)),
        "D1": Truncation.from_fn(n, n, lambda i, j: g(i) if i == j else 0),
        "D2": Truncation.from_fn(n, n, lambda i, j: h(i) if i == j else 0),
    }


def general_quad_from_factors(p: QuadFactorParams, n: int) -> Truncation:
    """P = L1 U L2 + L1 D1 + D2 L2 assembled from factor products (working
    block one larger, then cut, so band boundary terms are exact)."""
    w = n + 2
    m = general_quad_factors(p, w)
    full = m["L1"] * m["U"] * m["L2"] + m["L1"] * m["D1"] + m["D2"] * m["L2"]
    return full.top_left(n, n)


def general_quad_row_correction(p: QuadFactorParams, n_row: int, cols: int) -> list:
    """The row vector h_n * ell_n with ell_n = (.., f_n at n-1, e_n at n, ..);
    P and Q differ exactly by these rows."""
    a, b, c, d, e, f, g, h = p.fns()
    row = [Poly.zero()] * cols
    if n_row < cols:
        row[n_row] = h(n_row) * e(n_row)
    if 0 <= n_row - 1 < cols:
        row[n_row - 1] = h(n_row) * f(n_row)
    return row


def laguerre_flat_params(y_p: Poly, y_v: Poly, y_da: Poly, y_dd: Poly,
                         lam: Poly, x: Poly) -> QuadFactorParams:
    """The specialization that reproduces the flat second-multivariate
    Laguerre production matrix (with the loop weight tied to the peak
    weight): a = c = e = 1, b_n = n y_v, d_n = n y_p, f_n = x, g_n = lam y_p,
    h_n = n (y_da + y_dd - y_p - y_v)."""
    one = Poly.one()
    return QuadFactorParams(
        a=lambda i: one, b=lambda i: y_v * i, c=lambda i: one,
        d=lambda i: y_p * i, e=lambda i: one, f=lambda i: x,
        g=lambda i: lam * y_p, h=lambda i: (y_da + y_dd - y_p - y_v) * i)


# -- the variant family (commuting bidiagonal factors) -----------------------


@dataclass(frozen=True)
class QuadVariantParams:
    """Data for P = L1 L2 U + L1 D1 + L2 D2 with L1 = alpha I + x L,
    L2 = beta I + y L.

    a, d, e, f are indexed from 0; b, c from 1.  L has diagonal a and
    subdiagonal b; U has diagonal d and superdiagonal c; D1 = diag(e),
    D2 = diag(f).
    """

    alpha: Poly
    beta: Poly
    x: Poly
    y: Poly
    a: object
    b: object
    c: object
    d: object
    e: object
    f: object

    @staticmethod
    def symbolic() -> "QuadVariantParams":
        return QuadVariantParams(
            alpha=Poly.var("alpha"), beta=Poly.var("beta"),
            x=Poly.var("x"), y=Poly.var("y"),
            a=symbolic_seq("a"), b=symbolic_seq("b", 1), c=symbolic_seq("c", 1),
            d=symbolic_seq("d"), e=symbolic_seq("e"), f=symbolic_seq("f"))

    def fns(self):
        return (_seq(self.a, 0), _seq(self.b, 1), _seq(self.c, 1),
                _seq(self.d, 0), _seq(self.e, 0), _seq(self.f, 0))


def build_variant_quad(p: QuadVariantParams, with_f: bool = True) -> HessMatrix:
    """Quadridiagonal variant P (or Q = P with f = 0) via the column formulas."""
    a, b, c, d, e, f = p.fns()
    al, be, x, y = p.alpha, p.beta, p.x, p.y
    if not with_f:
        f = lambda i: Poly.zero()

    def l1(i):  # diagonal of L1
        return al + x * a(i)

    def l2(i):
        return be + y * a(i)

    def fn(n, k):
        if n == k - 1:
            return l1(k - 1) * l2(k - 1) * c(k)
        if n == k:
            return (l1(k) * l2(k) * d(k) + l1(k) * (y * b(k) * c(k))
                    + x * b(k) * l2(k - 1) * c(k) + l1(k) * e(k) + l2(k) * f(k))
        if n == k + 1:
            return (l1(k + 1) * (y * b(k + 1)) * d(k) + x * b(k + 1) * l2(k) * d(k)
                    + x * y * b(k + 1) * b(k) * c(k) + x * b(k + 1) * e(k)
                    + y * b(k + 1) * f(k))
        if n == k + 2:
            return x * y * b(k + 2) * b(k + 1) * d(k)
        return 0

    return HessMatrix(fn, lower_band=2)


def variant_quad_factors(p: QuadVariantParams, n: int) -> dict:
    a, b, c, d, e, f = p.fns()
    ell = Truncation.from_fn(n, n, lambda i, j: a(i) if j == i else (b(i) if j == i - 1 else 0))
    eye = Truncation.identity(n)
    return {
        "L1": eye.scale(p.alpha) + ell.scale(p.x),
        "L2": eye.scale(p.beta) + ell.scale(p.y),
        "U": Truncation.from_fn(n, n, lambda i, j: d(i) if j == i else (c(i + 1) if j == i + 1 else 0)),
        "D1": Truncation.from_fn(n, n, lambda i, j: e(i) if i == j else 0),
        "D2": Truncation.from_fn(n, n, lambda i, j: f(i) if i == j else 0),
    }


def variant_quad_from_factors(p: QuadVariantParams, n: int) -> Truncation:
    w = n + 2
    m = variant_quad_factors(p, w)
    full = m["L1"] * m["L2"] * m["U"] + m["L1"] * m["D1"] + m["L2"] * m["D2"]
    return full.top_left(n, n)
