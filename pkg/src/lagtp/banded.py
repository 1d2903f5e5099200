"""When does binomial conjugation preserve an (r,1) band?

For a lower-Hessenberg matrix whose diagonals are polynomial in the row
index -- superdiagonal p_{n,n+1} = f_{-1}(n) and m-th subdiagonal
p_{n,n-m} = n(n-1)...(n-m+1) f_m(n) -- the conjugate B_xi^{-1} P B_xi is
again (r,1)-banded exactly when deg f_{-1} <= r and deg f_m <= r-m for
0 <= m <= r.  The degree test is the cheap criterion; the conjugation
itself is computed exactly over integer polynomials (B_xi^{-1} = B_{-xi})
as the expensive cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .matrices import HessMatrix, XorShift64, conjugate_by_binomial
from .polyring import Poly, falling

PolyLike = Union[Poly, int, Fraction]


def _p(x: PolyLike) -> Poly:
    return x if isinstance(x, Poly) else Poly.const(x)


@dataclass(frozen=True)
class DiagonalPolySpec:
    """An (r,1)-banded matrix whose diagonals are polynomial in the row index.

    ``fs`` lists the polynomials f_{-1}, f_0, ..., f_r, each given by its
    coefficient list in the row index n (constant coefficient first, Poly
    coefficients allowed).
    """

    r: int
    fs: tuple

    def __post_init__(self):
        fs = tuple(tuple(_p(c) for c in f) for f in self.fs)
        if len(fs) != self.r + 2:
            raise ValueError(f"need {self.r + 2} polynomials f_-1..f_{self.r}")
        object.__setattr__(self, "fs", fs)

    def poly_degree(self, m: int) -> int:
        """Degree in n of f_m (m from -1 to r); -1 for the zero polynomial."""
        coeffs = self.fs[m + 1]
        for d in range(len(coeffs) - 1, -1, -1):
            if not coeffs[d].is_zero():
                return d
        return -1

    def eval_f(self, m: int, n: int) -> Poly:
        acc = Poly.zero()
        for d, c in enumerate(self.fs[m + 1]):
            acc = acc + c * (n ** d)
        return acc

    def to_hess(self) -> HessMatrix:
        def fn(n, k):
            if k == n + 1:
                return self.eval_f(-1, n)
            m = n - k
            if 0 <= m <= self.r:
                return self.eval_f(m, n) * falling(Poly.const(n), m).as_constant()
            return 0
        return HessMatrix(fn, lower_band=self.r)


def check_banded_criterion(spec: DiagonalPolySpec) -> bool:
    """Degree test: deg f_{-1} <= r and deg f_m <= r - m for 0 <= m <= r."""
    if spec.poly_degree(-1) > spec.r:
        return False
    return all(spec.poly_degree(m) <= spec.r - m for m in range(spec.r + 1))


def conjugate_and_measure_band(spec: DiagonalPolySpec, n: int, xi: PolyLike | None = None) -> int:
    """Observed lower bandwidth of B_xi^{-1} P B_xi on the exact n x n block."""
    xi = Poly.var("xi") if xi is None else _p(xi)
    conj = conjugate_by_binomial(spec.to_hess(), xi, n)
    return conj.lower_bandwidth()


def check_condition_b(spec: DiagonalPolySpec, n: int, xi: PolyLike | None = None) -> bool:
    """Condition (b): the (r+1)-st subdiagonal of the conjugate vanishes."""
    xi = Poly.var("xi") if xi is None else _p(xi)
    conj = conjugate_by_binomial(spec.to_hess(), xi, n)
    t = spec.r + 1
    return all(conj[k + t, k].is_zero() for k in range(n - t))


def random_spec(rng: XorShift64, max_r: int = 3, max_deg: int = 4) -> DiagonalPolySpec:
    """Seeded random spec with r <= max_r and degrees <= max_deg.

    Half the draws are built to satisfy the degree criterion and half are
    unconstrained (so usually violating it); leading coefficients are
    forced nonzero so the intended degree is the actual degree.
    """
    r = int(rng.next_u64() % max_r) + 1
    compliant = rng.next_u64() % 2 == 0
    fs = []
    for m in range(-1, r + 1):
        bound = max(0, r - max(m, 0)) if compliant else max_deg
        deg = int(rng.next_u64() % (bound + 1))
        coeffs = [int(rng.next_u64() % 4) for _ in range(deg + 1)]
        coeffs[-1] = int(rng.next_u64() % 3) + 1
        fs.append(coeffs)
    return DiagonalPolySpec(r, tuple(tuple(Poly.const(c) for c in f) for f in fs))
