"""Exact sparse multivariate polynomial arithmetic.

Polynomials are stored as a sparse map from exponent vectors to nonzero
coefficients.  Coefficients are arbitrary-precision integers, or exact
rationals (``fractions.Fraction``) where truncated power series need them;
a Fraction that collapses to an integer is always normalized back to ``int``.

Conventions, fixed for the process lifetime:

* the global variable order is lexicographic on the variable name;
* the canonical term order is graded lex: ascending total degree, then
  descending lexicographic comparison of exponent vectors (so within one
  degree, powers of the alphabetically-first variable come first);
* no zero coefficients and no unused variables are ever stored, hence
  structural equality coincides with mathematical equality.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

Coeff = Union[int, Fraction]
Scalar = Union[int, Fraction]


class ExactDivisionError(ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""


def _norm_coeff(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class Poly:
    """Immutable sparse multivariate polynomial.

    ``vars`` is the sorted tuple of variable names actually occurring;
    ``terms`` maps exponent tuples (parallel to ``vars``) to coefficients.
    The zero polynomial has ``vars == ()`` and ``terms == {}``.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars: tuple = (), terms: Mapping | None = None, *, _trusted: bool = False):
        terms = dict(terms or {})
        if not _trusted:
            terms = {e: _norm_coeff(c) for e, c in terms.items() if c != 0}
            vars, terms = _prune(tuple(vars), terms)
        object.__setattr__(self, "vars", vars)
        object.__setattr__(self, "terms", terms)

    def __setattr__(self, *a):
        raise AttributeError("Poly is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def const(c: Scalar) -> "Poly":
        c = _norm_coeff(Fraction(c) if not isinstance(c, (int, Fraction)) else c)
        if c == 0:
            return Poly()
        return Poly((), {(): c}, _trusted=True)

    @staticmethod
    def var(name: str) -> "Poly":
        return Poly((name,), {(1,): 1}, _trusted=True)

    @staticmethod
    def zero() -> "Poly":
        return Poly()

    @staticmethod
    def one() -> "Poly":
        return Poly.const(1)

    # -- basic queries -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.vars

    def constant_term(self) -> Coeff:
        key = (0,) * len(self.vars)
        return self.terms.get(key, 0)

    def as_constant(self) -> Coeff:
        if self.vars:
            raise ValueError(f"not a constant: {self}")
        return self.terms.get((), 0)

    def total_degree(self) -> int:
        """Total degree; the zero polynomial gets -1."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, name: str) -> int:
        if name not in self.vars:
            return 0 if self.terms else -1
        i = self.vars.index(name)
        return max((e[i] for e in self.terms), default=-1)

    def is_coeffwise_nonneg(self) -> bool:
        """True iff every stored coefficient is >= 0 (the coefficientwise order)."""
        return all(c >= 0 for c in self.terms.values())

    def coeff_of_var(self, name: str, power: int) -> "Poly":
        """The coefficient of name**power, a polynomial in the other variables."""
        if name not in self.vars:
            return self if power == 0 else Poly.zero()
        i = self.vars.index(name)
        rest = self.vars[:i] + self.vars[i + 1:]
        picked = {e[:i] + e[i + 1:]: c for e, c in self.terms.items() if e[i] == power}
        return Poly(rest, picked)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.terms.values())

    def coefficients(self) -> Iterable[Coeff]:
        return self.terms.values()

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    __hash__ = None  # mutable-dict backed; not hashable

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other) -> "Poly":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.terms:
            return other
        if not other.terms:
            return self
        vars, ta, tb = _align(self, other)
        out = dict(ta)
        for e, c in tb.items():
            s = out.get(e, 0) + c
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = _norm_coeff(s)
        vars, out = _prune(vars, out)
        return Poly(vars, out, _trusted=True)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(self.vars, {e: -c for e, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other) -> "Poly":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return _as_poly(other) + (-self)

    def __mul__(self, other) -> "Poly":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.terms or not other.terms:
            return Poly()
        if not self.vars:
            return other._scale(self.terms[()])
        if not other.vars:
            return self._scale(other.terms[()])
        vars, ta, tb = _align(self, other)
        out = _mul_terms(vars, ta, tb)
        vars, out = _prune(vars, out)
        return Poly(vars, out, _trusted=True)

    __rmul__ = __mul__

    def _scale(self, c: Coeff) -> "Poly":
        if c == 0:
            return Poly()
        if c == 1:
            return self
        return Poly(self.vars, {e: _norm_coeff(v * c) for e, v in self.terms.items()}, _trusted=True)

    def scale(self, c: Scalar) -> "Poly":
        """Multiply by an exact scalar (used by series code for 1/n factors)."""
        if not isinstance(c, (int, Fraction)):
            c = Fraction(c)
        return self._scale(_norm_coeff(c))

    def __pow__(self, n: int) -> "Poly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Poly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- substitution and evaluation ------------------------------------

    def substitute(self, env: Mapping[str, Union["Poly", Scalar]]) -> "Poly":
        """Substitute variables by polynomials; unmapped variables pass through."""
        if not self.terms:
            return Poly()
        hit = [i for i, v in enumerate(self.vars) if v in env]
        if not hit:
            return self
        values = {i: _as_poly(env[self.vars[i]]) for i in hit}
        keep = [i for i in range(len(self.vars)) if i not in values]
        keep_vars = tuple(self.vars[i] for i in keep)
        powers: dict[int, list[Poly]] = {i: [Poly.one()] for i in values}
        out = Poly()
        for e, c in self.terms.items():
            factor = Poly(keep_vars, {tuple(e[i] for i in keep): c})
            for i, val in values.items():
                cache = powers[i]
                while len(cache) <= e[i]:
                    cache.append(cache[-1] * val)
                factor = factor * cache[e[i]]
            out = out + factor
        return out

    def eval_numeric(self, env: Mapping[str, Scalar]) -> Coeff:
        """Evaluate with every variable bound to an exact number."""
        missing = [v for v in self.vars if v not in env]
        if missing:
            raise ValueError(f"unbound variables: {missing}")
        vals = [env[v] for v in self.vars]
        total: Coeff = 0
        for e, c in self.terms.items():
            t = c
            for x, k in zip(vals, e):
                if k:
                    t *= x ** k
            total += t
        return _norm_coeff(total)

    # -- exact division --------------------------------------------------

    def divides(self, other: "Poly") -> bool:
        try:
            other.exact_div(self)
            return True
        except ExactDivisionError:
            return False

    def exact_div(self, divisor: "Poly") -> "Poly":
        """Exact polynomial division; raises ExactDivisionError on remainder.

        Standard leading-term reduction under the graded-lex order; exactness
        is exactly what fraction-free elimination and the peak-factor removal
        guarantee, so failure signals a bug upstream.
        """
        divisor = _as_poly(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero():
            return Poly()
        if divisor.is_constant():
            d = divisor.terms[()]
            out = {}
            for e, c in self.terms.items():
                q = Fraction(c, d) if (isinstance(c, int) and isinstance(d, int) and c % d) else (
                    c // d if isinstance(c, int) and isinstance(d, int) else Fraction(c) / d)
                out[e] = _norm_coeff(q)
            if any(isinstance(c, Fraction) for c in out.values()) and self.is_integral() and divisor.is_integral():
                raise ExactDivisionError(f"{divisor} does not divide {self} over the integers")
            return Poly(self.vars, out)
        vars, tr, td = _align(self, divisor)
        rem = dict(tr)
        lead_d = _leading(td)
        ld_exp, ld_coeff = lead_d
        quot: dict = {}
        while rem:
            le, lc = _leading(rem)
            qe = tuple(a - b for a, b in zip(le, ld_exp))
            if any(x < 0 for x in qe):
                raise ExactDivisionError("leading monomial not divisible")
            if isinstance(lc, int) and isinstance(ld_coeff, int):
                if lc % ld_coeff:
                    raise ExactDivisionError("leading coefficient not divisible")
                qc = lc // ld_coeff
            else:
                qc = _norm_coeff(Fraction(lc) / Fraction(ld_coeff))
            quot[qe] = qc
            for e, c in td.items():
                key = tuple(a + b for a, b in zip(qe, e))
                s = rem.get(key, 0) - qc * c
                if s == 0:
                    rem.pop(key, None)
                else:
                    rem[key] = _norm_coeff(s)
        vars2, quot = _prune(vars, quot)
        return Poly(vars2, quot, _trusted=True)

    # -- canonical order, printing, JSON ---------------------------------

    def sorted_terms(self) -> list:
        """Terms in the canonical graded-lex order (degree asc, then lex desc)."""
        return sorted(self.terms.items(), key=lambda ec: (sum(ec[0]), tuple(-x for x in ec[0])))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                v if k == 1 else f"{v}^{k}"
                for v, k in zip(self.vars, e) if k
            )
            if not mono:
                parts.append(_coeff_str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{_coeff_str(c)}*{mono}")
        s = "+".join(parts).replace("+-", "-")
        return s

    def __repr__(self) -> str:
        return f"Poly({self})"

    def to_json_obj(self) -> dict:
        return {
            "vars": list(self.vars),
            "terms": [
                {"exp": list(e), "coef": _coeff_str(c)} for e, c in self.sorted_terms()
            ],
        }

    @staticmethod
    def from_json_obj(obj: dict) -> "Poly":
        vars = tuple(obj["vars"])
        terms = {}
        for t in obj["terms"]:
            e = tuple(int(x) for x in t["exp"])
            terms[e] = _parse_coeff(t["coef"])
        return Poly(vars, terms)


# -- module-level helpers matching the operation contracts ---------------

def poly_mul(a: Poly, b: Poly) -> Poly:
    return a * b


def poly_substitute(p: Poly, env: Mapping[str, Union[Poly, Scalar]]) -> Poly:
    return p.substitute(env)


def poly_is_coeffwise_nonneg(p: Poly) -> bool:
    return p.is_coeffwise_nonneg()


def rising(base: Poly, n: int) -> Poly:
    """base * (base+1) * ... * (base+n-1); empty product is 1."""
    out = Poly.one()
    for i in range(n):
        out = out * (base + i)
    return out


def falling(base: Poly, n: int) -> Poly:
    out = Poly.one()
    for i in range(n):
        out = out * (base - i)
    return out


def _as_poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, Fraction)):
        return Poly.const(x)
    return NotImplemented


def _coeff_str(c: Coeff) -> str:
    return str(c)


def _parse_coeff(s: str) -> Coeff:
    if "/" in s:
        return _norm_coeff(Fraction(s))
    return int(s)


def _prune(vars: tuple, terms: dict) -> tuple:
    """Drop variables whose exponent is zero in every term."""
    if not terms:
        return (), {}
    n = len(vars)
    used = [False] * n
    for e in terms:
        for i in range(n):
            if e[i]:
                used[i] = True
    if all(used):
        return vars, terms
    idx = [i for i in range(n) if used[i]]
    new_vars = tuple(vars[i] for i in idx)
    new_terms = {}
    for e, c in terms.items():
        new_terms[tuple(e[i] for i in idx)] = c
    return new_vars, new_terms


def _align(a: Poly, b: Poly):
    """Common variable tuple plus both term maps reindexed onto it."""
    if a.vars == b.vars:
        return a.vars, a.terms, b.terms
    vars = tuple(sorted(set(a.vars) | set(b.vars)))
    return vars, _reindex(a, vars), _reindex(b, vars)


def _reindex(p: Poly, vars: tuple) -> dict:
    pos = {v: i for i, v in enumerate(vars)}
    n = len(vars)
    out = {}
    for e, c in p.terms.items():
        ne = [0] * n
        for v, k in zip(p.vars, e):
            ne[pos[v]] = k
        out[tuple(ne)] = c
    return out


def _leading(terms: dict):
    """Leading term under graded lex (degree, then lex on exponents)."""
    e = max(terms, key=lambda e: (sum(e), e))
    return e, terms[e]


def _mul_terms(vars: tuple, ta: dict, tb: dict) -> dict:
    """Multiply two term maps over the same variable tuple.

    Hot path packs each exponent vector into one integer so a monomial
    product becomes a single integer addition; widths are sized from the
    per-variable maxima so no field can overflow.
    """
    n = len(vars)
    if n and len(ta) * len(tb) >= 64:
        maxa = [0] * n
        maxb = [0] * n
        for e in ta:
            for i in range(n):
                if e[i] > maxa[i]:
                    maxa[i] = e[i]
        for e in tb:
            for i in range(n):
                if e[i] > maxb[i]:
                    maxb[i] = e[i]
        widths = [max(1, (maxa[i] + maxb[i]).bit_length()) for i in range(n)]
        shifts = [0] * n
        acc = 0
        for i in range(n):
            shifts[i] = acc
            acc += widths[i]
        if acc <= 960:
            def pack(e):
                k = 0
                for i in range(n):
                    k |= e[i] << shifts[i]
                return k

            pa = [(pack(e), c) for e, c in ta.items()]
            pb = [(pack(e), c) for e, c in tb.items()]
            out: dict = {}
            get = out.get
            for ka, ca in pa:
                for kb, cb in pb:
                    k = ka + kb
                    s = get(k, 0) + ca * cb
                    if s:
                        out[k] = s
                    elif k in out:
                        del out[k]
            masks = [(1 << widths[i]) - 1 for i in range(n)]
            unpacked = {}
            for k, c in out.items():
                unpacked[tuple((k >> shifts[i]) & masks[i] for i in range(n))] = _norm_coeff(c)
            return unpacked
    out = {}
    get = out.get
    for ea, ca in ta.items():
        for eb, cb in tb.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            s = get(key, 0) + ca * cb
            if s:
                out[key] = _norm_coeff(s)
            elif key in out:
                del out[key]
    return out
