"""Band-bounded lower-Hessenberg matrices of polynomials and their toolkit.

Covers the production-matrix machinery (output-matrix iteration and its
inverse), binomial conjugation, exact determinants and minors, total
positivity certification (symbolic and sampled), the exponential AZ matrix,
and exponential Riordan array construction.

All matrices here are finite truncations with exact ``Poly`` entries; the
iteration and conjugation routines are arranged so that every returned
entry is independent of anything outside the working block (truncation is
exact, never approximate).
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence, Union

from .polyring import Poly

PolyLike = Union[Poly, int, Fraction]


def _p(x: PolyLike) -> Poly:
    return x if isinstance(x, Poly) else Poly.const(x)


class NonUnitDiagonalError(ValueError):
    """Raised when a production matrix is requested for a non-unit-triangular matrix."""


class RiordanIntegralityError(ValueError):
    """Raised when an exponential Riordan array entry fails to be integral."""


class Truncation:
    """Finite rows x cols grid of Poly entries."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Sequence[Sequence[PolyLike]]):
        data = tuple(tuple(_p(x) for x in row) for row in data)
        rows = len(data)
        cols = len(data[0]) if rows else 0
        if any(len(r) != cols for r in data):
            raise ValueError("ragged matrix data")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "data", data)

    def __setattr__(self, *a):
        raise AttributeError("Truncation is immutable")

    @staticmethod
    def from_fn(rows: int, cols: int, fn: Callable[[int, int], PolyLike]) -> "Truncation":
        return Truncation([[fn(n, k) for k in range(cols)] for n in range(rows)])

    @staticmethod
    def identity(n: int) -> "Truncation":
        return Truncation.from_fn(n, n, lambda i, j: 1 if i == j else 0)

    @staticmethod
    def zero(rows: int, cols: int) -> "Truncation":
        return Truncation.from_fn(rows, cols, lambda i, j: 0)

    def __getitem__(self, ij) -> Poly:
        i, j = ij
        return self.data[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Truncation):
            return NotImplemented
        return self.rows == other.rows and self.cols == other.cols and self.data == other.data

    __hash__ = None

    def __add__(self, other: "Truncation") -> "Truncation":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Truncation([
            [self.data[i][j] + other.data[i][j] for j in range(self.cols)]
            for i in range(self.rows)
        ])

    def __sub__(self, other: "Truncation") -> "Truncation":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Truncation([
            [self.data[i][j] - other.data[i][j] for j in range(self.cols)]
            for i in range(self.rows)
        ])

    def __mul__(self, other: "Truncation") -> "Truncation":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = Poly.zero()
                for k in range(self.cols):
                    a = self.data[i][k]
                    if a.is_zero():
                        continue
                    b = other.data[k][j]
                    if not b.is_zero():
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return Truncation(out)

    def scale(self, c: PolyLike) -> "Truncation":
        c = _p(c)
        return Truncation([[e * c for e in row] for row in self.data])

    def transpose(self) -> "Truncation":
        return Truncation([[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Truncation":
        return Truncation([[self.data[i][j] for j in cols] for i in rows])

    def top_left(self, rows: int, cols: int | None = None) -> "Truncation":
        cols = rows if cols is None else cols
        if rows > self.rows or cols > self.cols:
            raise ValueError(f"requested {rows}x{cols} block of a {self.rows}x{self.cols} matrix")
        return Truncation([row[:cols] for row in self.data[:rows]])

    def map(self, fn: Callable[[Poly], Poly]) -> "Truncation":
        return Truncation([[fn(e) for e in row] for row in self.data])

    def substitute(self, env) -> "Truncation":
        return self.map(lambda e: e.substitute(env))

    def is_unit_lower_triangular(self) -> bool:
        for i in range(self.rows):
            for j in range(self.cols):
                e = self.data[i][j]
                if j == i and e != Poly.one():
                    return False
                if j > i and not e.is_zero():
                    return False
        return True

    def lower_bandwidth(self) -> int:
        """Largest t >= 0 with a nonzero entry (k+t, k); 0 for upper-triangular."""
        band = 0
        for i in range(self.rows):
            for j in range(min(i, self.cols - 1) + 1):
                if not self.data[i][j].is_zero() and i - j > band:
                    band = i - j
        return band

    def variables(self) -> tuple:
        names: set = set()
        for row in self.data:
            for e in row:
                names.update(e.vars)
        return tuple(sorted(names))

    def to_json_obj(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[e.to_json_obj() for e in row] for row in self.data],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"), sort_keys=True)

    @staticmethod
    def from_json_obj(obj: dict) -> "Truncation":
        data = [[Poly.from_json_obj(e) for e in row] for row in obj["entries"]]
        t = Truncation(data)
        if t.rows != obj["rows"] or t.cols != obj["cols"]:
            raise ValueError("matrix JSON shape mismatch")
        return t

    def __repr__(self) -> str:
        rows = "\n".join("  [" + ", ".join(str(e) for e in row) + "]" for row in self.data)
        return f"Truncation {self.rows}x{self.cols}\n{rows}"


class HessMatrix:
    """Lazily generated lower-Hessenberg matrix: entry(n, k) -> Poly.

    ``lower_band`` is the bandwidth r of an (r,1)-banded matrix, or None
    when unbounded below.  Entries above the first superdiagonal are zero
    by construction.
    """

    __slots__ = ("entry_fn", "lower_band")

    def __init__(self, entry_fn: Callable[[int, int], PolyLike], lower_band: Optional[int] = None):
        object.__setattr__(self, "entry_fn", entry_fn)
        object.__setattr__(self, "lower_band", lower_band)

    def __setattr__(self, *a):
        raise AttributeError("HessMatrix is immutable")

    def __call__(self, n: int, k: int) -> Poly:
        if k > n + 1 or k < 0 or n < 0:
            return Poly.zero()
        if self.lower_band is not None and k < n - self.lower_band:
            return Poly.zero()
        return _p(self.entry_fn(n, k))

    def truncate(self, rows: int, cols: int | None = None) -> Truncation:
        cols = rows if cols is None else cols
        return Truncation.from_fn(rows, cols, self)

    @staticmethod
    def from_truncation(t: Truncation) -> "HessMatrix":
        def fn(n, k):
            if n < t.rows and k < t.cols:
                return t[n, k]
            raise IndexError(f"entry ({n},{k}) outside stored {t.rows}x{t.cols} block")
        return HessMatrix(fn)


# -- special matrices ------------------------------------------------------


def delta_matrix() -> HessMatrix:
    """The shift matrix with 1 on the superdiagonal."""
    return HessMatrix(lambda n, k: 1 if k == n + 1 else 0, lower_band=0)


def binomial_truncation(x: PolyLike, n: int, y: PolyLike = 1) -> Truncation:
    """Weighted binomial matrix B_{x,y} with entries C(n,k) x^(n-k) y^k."""
    x = _p(x)
    y = _p(y)
    return Truncation.from_fn(
        n, n, lambda i, j: (x ** (i - j)) * (y ** j) * math.comb(i, j) if j <= i else Poly.zero()
    )


def hankel_truncation(seq: Sequence[PolyLike], n: int) -> Truncation:
    """n x n Hankel matrix (a_{i+j}) of the given sequence (needs len >= 2n-1)."""
    if len(seq) < 2 * n - 1:
        raise ValueError("sequence too short for requested Hankel truncation")
    return Truncation.from_fn(n, n, lambda i, j: seq[i + j])


def unit_lower_inverse(t: Truncation) -> Truncation:
    """Inverse of a unit-lower-triangular truncation (forward substitution)."""
    if t.rows != t.cols or not t.is_unit_lower_triangular():
        raise NonUnitDiagonalError("inverse requires a unit-lower-triangular matrix")
    n = t.rows
    inv = [[Poly.zero()] * n for _ in range(n)]
    for i in range(n):
        inv[i][i] = Poly.one()
        for j in range(i - 1, -1, -1):
            acc = Poly.zero()
            for k in range(j, i):
                acc = acc + t[i, k] * inv[k][j]
            inv[i][j] = -acc
    return Truncation(inv)


# -- production-matrix machinery -------------------------------------------


def output_matrix(p: Union[HessMatrix, Callable[[int, int], PolyLike]], rows: int,
                  cols: int | None = None) -> Truncation:
    """Output matrix O(P) truncated to rows x cols via a_{nk} = sum_i a_{n-1,i} p_{ik}.

    Row n only consults rows 0..n-1 of P, so the truncation is exact.  P may
    be any callable (n,k) -> Poly that is row-finite on the working block;
    the internal working width is rows+cols so that column-finite inputs
    (e.g. transposes of Hessenberg matrices) also come out exact.
    """
    entry = HessMatrix.from_truncation(p) if isinstance(p, Truncation) else p
    cols = rows if cols is None else cols
    width = rows + cols
    prev = [Poly.one()] + [Poly.zero()] * (width - 1)
    out = [prev[:cols]]
    for n in range(1, rows):
        cur = []
        for k in range(width):
            acc = Poly.zero()
            for i in range(width):
                a = prev[i]
                if a.is_zero():
                    continue
                pi = _p(entry(i, k))
                if not pi.is_zero():
                    acc = acc + a * pi
            cur.append(acc)
        out.append(cur[:cols])
        prev = cur
    return Truncation(out)


def production_of(t: Truncation) -> Truncation:
    """The unique unit-lower-Hessenberg P with O(P) = t on the truncation.

    Returns the (rows-1) x cols block of P; computed by forward substitution
    from L P = (Delta L).  Raises on a non-unit diagonal.
    """
    if not t.is_unit_lower_triangular():
        raise NonUnitDiagonalError("production matrix requires a unit-lower-triangular input")
    n, m = t.rows, t.cols
    prows: list[list[Poly]] = []
    for i in range(n - 1):
        row = []
        for k in range(m):
            acc = t[i + 1, k]
            for j in range(max(0, k - 1), i):
                acc = acc - t[i, j] * prows[j][k]
            row.append(acc)
        prows.append(row)
    return Truncation(prows) if prows else Truncation.zero(0, m)


def conjugate_by_binomial(p: Union[HessMatrix, Truncation], xi: PolyLike, n: int) -> Truncation:
    """n x n truncation of B_xi^{-1} P B_xi, computed exactly.

    Entry (i,k) of the conjugate depends only on the leading (i+2)-block of
    P, so everything is evaluated on an (n+2) working block and cut back:
    no silent truncation error.  Uses B_xi^{-1} = B_{-xi}.
    """
    xi = _p(xi)
    w = n + 2
    block = p.top_left(w, w) if isinstance(p, Truncation) else p.truncate(w, w)
    left = binomial_truncation(-xi, w)
    right = binomial_truncation(xi, w)
    return (left * block * right).top_left(n, n)


# -- exact determinants and total positivity --------------------------------


def det_exact(m: Truncation) -> Poly:
    """Exact determinant: Laplace expansion up to 4x4, Bareiss fraction-free above."""
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    grid = [list(row) for row in m.data]
    return _det_grid(grid)


def _det_grid(g: list) -> Poly:
    n = len(g)
    if n == 0:
        return Poly.one()
    if n <= 4:
        return _det_laplace(g)
    return _det_bareiss(g)


def _det_laplace(g: list) -> Poly:
    n = len(g)
    if n == 1:
        return g[0][0]
    if n == 2:
        return g[0][0] * g[1][1] - g[0][1] * g[1][0]
    acc = Poly.zero()
    for i in range(n):
        c = g[i][0]
        if c.is_zero():
            continue
        minor = [row[1:] for j, row in enumerate(g) if j != i]
        term = c * _det_laplace(minor)
        acc = acc + term if i % 2 == 0 else acc - term
    return acc


def _det_bareiss(g: list) -> Poly:
    n = len(g)
    g = [row[:] for row in g]
    sign = 1
    prev = Poly.one()
    for k in range(n - 1):
        if g[k][k].is_zero():
            for i in range(k + 1, n):
                if not g[i][k].is_zero():
                    g[k], g[i] = g[i], g[k]
                    sign = -sign
                    break
            else:
                return Poly.zero()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = g[i][j] * g[k][k] - g[i][k] * g[k][j]
                g[i][j] = num.exact_div(prev)
            g[i][k] = Poly.zero()
        prev = g[k][k]
    d = g[n - 1][n - 1]
    return d if sign == 1 else -d


def _int_det(g: list) -> int:
    """Determinant of a small integer matrix (same Laplace/Bareiss split)."""
    n = len(g)
    if n == 1:
        return g[0][0]
    if n == 2:
        return g[0][0] * g[1][1] - g[0][1] * g[1][0]
    if n <= 4:
        acc = 0
        for i in range(n):
            c = g[i][0]
            if not c:
                continue
            minor = [row[1:] for j, row in enumerate(g) if j != i]
            acc += c * _int_det(minor) * (1 if i % 2 == 0 else -1)
        return acc
    g = [row[:] for row in g]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not g[k][k]:
            for i in range(k + 1, n):
                if g[i][k]:
                    g[k], g[i] = g[i], g[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                g[i][j] = (g[i][j] * g[k][k] - g[i][k] * g[k][j]) // prev
            g[i][k] = 0
        prev = g[k][k]
    return sign * g[n - 1][n - 1]


@dataclass(frozen=True)
class TPWitness:
    rows: tuple
    cols: tuple
    minor: object  # Poly for symbolic checks, int for sampled ones
    assignment: Optional[dict] = None
    sample_index: Optional[int] = None

    def to_json_obj(self) -> dict:
        minor = self.minor.to_json_obj() if isinstance(self.minor, Poly) else self.minor
        out = {"rows": list(self.rows), "cols": list(self.cols), "minor": minor}
        if self.assignment is not None:
            out["assignment"] = dict(sorted(self.assignment.items()))
        if self.sample_index is not None:
            out["sample_index"] = self.sample_index
        return out


@dataclass(frozen=True)
class TPReport:
    ok: bool
    order: int
    mode: str
    checked: int
    witness: Optional[TPWitness] = None
    meta: dict = field(default_factory=dict)

    def to_json_obj(self) -> dict:
        out = {
            "ok": self.ok,
            "order": self.order,
            "mode": self.mode,
            "checked": self.checked,
            "witness": self.witness.to_json_obj() if self.witness else None,
        }
        out.update(self.meta)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"), sort_keys=True)


def _index_sets_colex(n: int, size: int):
    """Size-subsets of range(n) in colexicographic order."""
    return sorted(itertools.combinations(range(n), size), key=lambda c: tuple(reversed(c)))


def tp_check_symbolic(m: Truncation, order: int) -> TPReport:
    """Check every minor of size <= order for coefficientwise nonnegativity.

    Index sets are enumerated in colex order and the scan short-circuits on
    the first offending minor, which is returned in the report.
    """
    checked = 0
    size_meta = {"rows": m.rows, "cols": m.cols}
    for size in range(1, order + 1):
        if size > min(m.rows, m.cols):
            break
        rowsets = _index_sets_colex(m.rows, size)
        colsets = _index_sets_colex(m.cols, size)
        for rows in rowsets:
            for cols in colsets:
                minor = det_exact(m.submatrix(rows, cols))
                checked += 1
                if not minor.is_coeffwise_nonneg():
                    return TPReport(False, order, "symbolic", checked,
                                    TPWitness(rows, cols, minor), meta=size_meta)
    return TPReport(True, order, "symbolic", checked, meta=size_meta)


class XorShift64:
    """Deterministic xorshift64 generator used for sampled TP checks.

    Update rule (64-bit wrapping): x ^= x << 13; x ^= x >> 7; x ^= x << 17.
    A zero seed is replaced by the constant 0x9E3779B97F4A7C15.  Values in
    {0,1,2,3} are read from the top two bits of the state.
    """

    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = (seed & self.MASK) or 0x9E3779B97F4A7C15

    def next_u64(self) -> int:
        x = self.state
        x ^= (x << 13) & self.MASK
        x ^= x >> 7
        x ^= (x << 17) & self.MASK
        self.state = x
        return x

    def next_small(self) -> int:
        return self.next_u64() >> 62


SAMPLE_VALUES = (0, 1, 2, 3)


def tp_check_sampled(m: Truncation, order: int, seed: int = 1, samples: int = 50) -> TPReport:
    """Sampled TP check: substitute seeded pseudo-random values from {0,1,2,3}
    for every variable, then verify all integer minors of size <= order.

    Any failure reports the witness substitution along with the minor.
    """
    names = m.variables()
    rng = XorShift64(seed)
    meta = {"seed": seed, "samples": samples, "rows": m.rows, "cols": m.cols}
    sets = {}
    for size in range(1, order + 1):
        if size > min(m.rows, m.cols):
            break
        sets[size] = (_index_sets_colex(m.rows, size), _index_sets_colex(m.cols, size))
    checked = 0
    for s_index in range(samples):
        env = {v: SAMPLE_VALUES[rng.next_small()] for v in names}
        grid = []
        for row in m.data:
            vals = []
            for e in row:
                v = e.eval_numeric(env)
                if not isinstance(v, int):
                    raise ValueError("sampled TP check needs integer-valued entries")
                vals.append(v)
            grid.append(vals)
        for size, (rowsets, colsets) in sets.items():
            for rows in rowsets:
                for cols in colsets:
                    sub = [[grid[i][j] for j in cols] for i in rows]
                    val = _int_det(sub)
                    checked += 1
                    if val < 0:
                        return TPReport(False, order, "sampled", checked,
                                        TPWitness(rows, cols, val, env, s_index),
                                        meta=meta)
    return TPReport(True, order, "sampled", checked, meta=meta)


def tp_check_tridiagonal(m: Truncation, order: int) -> bool:
    """Tridiagonal TP criterion: nonnegative off-diagonals plus nonnegative
    contiguous principal minors of size <= order."""
    n = min(m.rows, m.cols)
    for i in range(m.rows):
        for j in range(m.cols):
            if abs(i - j) == 1 and not m[i, j].is_coeffwise_nonneg():
                return False
            if abs(i - j) > 1 and not m[i, j].is_zero():
                raise ValueError("matrix is not tridiagonal")
    for size in range(1, order + 1):
        for start in range(n - size + 1):
            idx = range(start, start + size)
            if not det_exact(m.submatrix(idx, idx)).is_coeffwise_nonneg():
                return False
    return True


# -- exponential AZ matrices and Riordan arrays ------------------------------


def _seq_fn(seq) -> Callable[[int], Poly]:
    if callable(seq):
        return lambda i: _p(seq(i))
    vals = [_p(x) for x in seq]
    return lambda i: vals[i] if 0 <= i < len(vals) else Poly.zero()


def eaz_matrix(a, z, lower_band: Optional[int] = None) -> HessMatrix:
    """Exponential AZ matrix: entry (n,k) = (n!/k!) (z_{n-k} + k a_{n-k+1}).

    ``a`` and ``z`` are sequences (or callables) of Poly; z_{-1} = 0 by
    convention, which makes the superdiagonal equal a_0.
    """
    av = _seq_fn(a)
    zv = _seq_fn(z)

    def fn(n, k):
        if k == n + 1:
            return av(0)
        ratio = math.perm(n, n - k)  # n!/k!
        return (zv(n - k) + av(n - k + 1) * k) * ratio

    return HessMatrix(fn, lower_band=lower_band)


def bx_conjugate_eaz_identity_check(a, z, n: int, var: str = "x") -> bool:
    """Check B_x^{-1} EAZ(a,z) B_x = EAZ(a, z + x*a) on the n-truncation."""
    x = Poly.var(var)
    av = _seq_fn(a)
    zv = _seq_fn(z)
    lhs = conjugate_by_binomial(eaz_matrix(a, z), x, n)
    rhs = eaz_matrix(av, lambda i: zv(i) + x * av(i)).truncate(n)
    return lhs == rhs


def riordan_matrix(f, g, n: int) -> Truncation:
    """Exponential Riordan array R[F,G]: entry (n,k) = (n!/k!) [t^n] F G^k.

    Requires G(0)=0 and F(0)=1; every entry must come out integral (the
    incoming EGFs are exponential), otherwise RiordanIntegralityError is
    raised to flag a wrong F or G.
    """
    if not g[0].is_zero():
        raise ValueError("riordan_matrix needs G(0) = 0")
    if not (f[0].is_constant() and f[0].as_constant() == 1):
        raise ValueError("riordan_matrix needs F(0) = 1")
    if f.order < n - 1 or g.order < n - 1:
        raise ValueError("series truncated below the requested matrix size")
    col = f
    out = [[Poly.zero()] * n for _ in range(n)]
    factorial = [math.factorial(i) for i in range(n)]
    for k in range(n):
        if k > 0:
            col = col * g
        for i in range(n):
            entry = col[i].scale(Fraction(factorial[i], factorial[k]))
            if not entry.is_integral():
                raise RiordanIntegralityError(
                    f"entry ({i},{k}) = {entry} is not integral; F or G is wrong")
            out[i][k] = entry
    return Truncation(out)
