"""Brute-force Laguerre-digraph oracle and permutation-statistics oracles.

A Laguerre digraph on the vertex set {1..n} is a digraph in which every
vertex has out-degree <= 1 and in-degree <= 1; equivalently, a partial
injection given by its successor map.  Its components are directed paths
(isolated vertex = path of length 0) and directed cycles (loop = cycle of
length 1).

Vertex classification uses 0-0 boundary conditions: a missing predecessor
or successor counts as the virtual vertex 0, so an isolated vertex is a
peak, a path start is a peak or double ascent, and a path end is a peak or
double descent.
"""

from __future__ import annotations

import itertools
import os
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Mapping

from .polyring import Poly

DEFAULT_DIGRAPH_LIMIT = 9
SYMBOLIC_ORACLE_LIMIT = 7
PATH_ORACLE_STEP_LIMIT = 24

DEFAULT_VAR_NAMES = {
    "y_p": "yp", "y_v": "yv", "y_da": "yda", "y_dd": "ydd", "y_fp": "yfp",
    "z_p": "zp", "z_v": "zv", "z_da": "zda", "z_dd": "zdd",
    "v_minus": "vm", "v_zero": "v0", "v_plus": "vp", "lam": "lam",
}


class LimitExceeded(ValueError):
    """Raised when a brute-force enumeration is asked to go beyond its cap."""


def _limit(default: int) -> int:
    env = os.environ.get("LAGTP_LIMIT")
    return int(env) if env else default


@dataclass(frozen=True)
class LaguerreDigraph:
    """Partial-injection successor map on {1..n}."""

    n: int
    succ: Mapping[int, int]

    def __post_init__(self):
        succ = dict(self.succ)
        if len(set(succ.values())) != len(succ):
            raise ValueError("successor map must be injective")
        for i, j in succ.items():
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ValueError("vertices out of range")
        object.__setattr__(self, "succ", succ)

    def predecessors(self) -> dict:
        return {j: i for i, j in self.succ.items()}


@dataclass(frozen=True)
class DigraphStats:
    pa: int
    cyc: int
    e: int
    e_minus: int
    e_zero: int
    e_plus: int
    p: int
    v: int
    da: int
    dd: int
    fp: int
    pcyc: int
    vcyc: int
    dacyc: int
    ddcyc: int
    ppa: int
    vpa: int
    dapa: int
    ddpa: int


def enumerate_digraphs(n: int, k: int | None = None) -> Iterator[LaguerreDigraph]:
    """All Laguerre digraphs on {1..n}, optionally only those with k paths.

    Every partial injection is a valid Laguerre digraph, so enumeration is
    by domain subset, image subset and bijection, in lexicographic order.
    A digraph with e edges has n - e paths.
    """
    cap = _limit(DEFAULT_DIGRAPH_LIMIT)
    if n > cap:
        raise LimitExceeded(f"digraph enumeration capped at n <= {cap} (got {n})")
    if n == 0:
        if k is None or k == 0:
            yield LaguerreDigraph(0, {})
        return
    edge_counts = range(n + 1) if k is None else [n - k] if 0 <= n - k <= n else []
    verts = range(1, n + 1)
    for e in edge_counts:
        for domain in itertools.combinations(verts, e):
            for image in itertools.combinations(verts, e):
                for perm in itertools.permutations(image):
                    yield LaguerreDigraph(n, dict(zip(domain, perm)))


def classify(g: LaguerreDigraph) -> DigraphStats:
    succ = g.succ
    pred = g.predecessors()
    n = g.n
    on_cycle = _cycle_vertices(n, succ, pred)
    e_minus = e_zero = e_plus = 0
    for i, j in succ.items():
        if j < i:
            e_minus += 1
        elif j == i:
            e_zero += 1
        else:
            e_plus += 1
    e = len(succ)
    pa = n - e
    cyc = _count_cycles(succ, on_cycle)
    counts = Counter()
    for i in range(1, n + 1):
        kind = _vertex_kind(i, pred.get(i, 0), succ.get(i, 0))
        counts[(kind, i in on_cycle)] += 1
    return DigraphStats(
        pa=pa, cyc=cyc, e=e, e_minus=e_minus, e_zero=e_zero, e_plus=e_plus,
        p=counts[("p", True)] + counts[("p", False)],
        v=counts[("v", True)] + counts[("v", False)],
        da=counts[("da", True)] + counts[("da", False)],
        dd=counts[("dd", True)] + counts[("dd", False)],
        fp=counts[("fp", True)],
        pcyc=counts[("p", True)], vcyc=counts[("v", True)],
        dacyc=counts[("da", True)], ddcyc=counts[("dd", True)],
        ppa=counts[("p", False)], vpa=counts[("v", False)],
        dapa=counts[("da", False)], ddpa=counts[("dd", False)],
    )


def _vertex_kind(i: int, p: int, s: int) -> str:
    if p == i == s:
        return "fp"
    if p < i > s:
        return "p"
    if p > i < s:
        return "v"
    if p < i < s:
        return "da"
    return "dd"


def _cycle_vertices(n: int, succ: dict, pred: dict) -> set:
    visited = set()
    for start in range(1, n + 1):
        if start in pred:
            continue
        v = start
        while True:
            visited.add(v)
            if v not in succ:
                break
            v = succ[v]
    return {v for v in range(1, n + 1) if v not in visited}


def _count_cycles(succ: dict, on_cycle: set) -> int:
    seen = set()
    cycles = 0
    for v in on_cycle:
        if v in seen:
            continue
        cycles += 1
        w = v
        while w not in seen:
            seen.add(w)
            w = succ[w]
    return cycles


# -- weighted oracle sums ----------------------------------------------------


def _check_oracle_limit(n: int, weights) -> None:
    symbolic = any(isinstance(w, Poly) and w.vars for w in weights)
    cap = _limit(SYMBOLIC_ORACLE_LIMIT if symbolic else DEFAULT_DIGRAPH_LIMIT)
    if n > cap:
        raise LimitExceeded(f"digraph oracle capped at n <= {cap} (got {n})")


def oracle_entry(n: int, k: int, weights: Mapping[str, Poly], mode: str) -> Poly:
    """Weighted sum over the Laguerre digraphs on {1..n} with k paths.

    mode 'first_mv' expects weights {v_minus, v_zero, v_plus, lam};
    mode 'second_mv' expects {y_p, y_v, y_da, y_dd, y_fp, lam};
    mode 'second_mv_general' adds the path-side {z_p, z_v, z_da, z_dd}.
    Here lam plays the role of the cycle weight (lam = 1 + alpha).
    """
    if mode == "first_mv":
        keys = ("v_minus", "v_zero", "v_plus", "lam")
        stat = lambda s: (s.e_minus, s.e_zero, s.e_plus, s.cyc)
    elif mode == "second_mv":
        keys = ("y_p", "y_v", "y_da", "y_dd", "y_fp", "lam")
        stat = lambda s: (s.p, s.v, s.da, s.dd, s.fp, s.cyc)
    elif mode == "second_mv_general":
        keys = ("y_p", "y_v", "y_da", "y_dd", "y_fp",
                "z_p", "z_v", "z_da", "z_dd", "lam")
        stat = lambda s: (s.pcyc, s.vcyc, s.dacyc, s.ddcyc, s.fp,
                          s.ppa, s.vpa, s.dapa, s.ddpa, s.cyc)
    else:
        raise ValueError(f"unknown oracle mode {mode!r}")
    values = [weights[key] for key in keys]
    _check_oracle_limit(n, values)
    counter: Counter = Counter()
    for g in enumerate_digraphs(n, k):
        counter[stat(classify(g))] += 1
    return _weighted_sum(counter, values)


def _weighted_sum(counter: Counter, values) -> Poly:
    values = [v if isinstance(v, Poly) else Poly.const(v) for v in values]
    total = Poly.zero()
    powers = [dict() for _ in values]

    def power(i, e):
        cache = powers[i]
        if e not in cache:
            cache[e] = values[i] ** e
        return cache[e]

    for exps, count in sorted(counter.items()):
        term = Poly.const(count)
        for i, e in enumerate(exps):
            if e:
                term = term * power(i, e)
        total = total + term
    return total


def permutation_oracles(n: int, kind: str, weights: Mapping[str, Poly] | None = None) -> Poly:
    """Enumerate S_n and weight indices by the cycle or the linear (word,
    0-0 boundary) classification.

    kind 'cyclic' uses weights {y_p, y_v, y_da, y_dd, y_fp, lam} where the
    classification of index i compares it against sigma^{-1}(i) and
    sigma(i); kind 'linear00' uses {z_p, z_v, z_da, z_dd} on the word form
    with sigma_0 = sigma_{n+1} = 0.
    """
    if kind == "cyclic":
        keys = ("y_p", "y_v", "y_da", "y_dd", "y_fp", "lam")
    elif kind == "linear00":
        keys = ("z_p", "z_v", "z_da", "z_dd")
    else:
        raise ValueError(f"unknown permutation oracle kind {kind!r}")
    if weights is None:
        weights = {k: Poly.var(DEFAULT_VAR_NAMES[k]) for k in keys}
    values = [weights[k] for k in keys]
    _check_oracle_limit(n, values)
    counter: Counter = Counter()
    if kind == "cyclic":
        for sigma in itertools.permutations(range(1, n + 1)):
            succ = {i + 1: sigma[i] for i in range(n)}
            pred = {sigma[i]: i + 1 for i in range(n)}
            c = Counter()
            for i in range(1, n + 1):
                c[_vertex_kind(i, pred[i], succ[i])] += 1
            counter[(c["p"], c["v"], c["da"], c["dd"], c["fp"],
                     _count_cycles(succ, set(succ)))] += 1
    else:
        for sigma in itertools.permutations(range(1, n + 1)):
            word = (0,) + sigma + (0,)
            c = Counter()
            for i in range(1, n + 1):
                c[_vertex_kind(word[i], word[i - 1], word[i + 1])] += 1
            counter[(c["p"], c["v"], c["da"], c["dd"])] += 1
    return _weighted_sum(counter, values)
