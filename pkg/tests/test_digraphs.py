import math

import pytest

from lagtp.digraphs import (DEFAULT_VAR_NAMES, LaguerreDigraph, LimitExceeded,
                            classify, enumerate_digraphs, oracle_entry,
                            permutation_oracles)
from lagtp.polyring import Poly

lam = Poly.var("lam")


def test_counts_match_reversed_rook_row_sums():
    # |LD_n| = reversed monic Laguerre at alpha=0, x=1: 1, 2, 7, 34, 209
    counts = [sum(1 for _ in enumerate_digraphs(n)) for n in range(5)]
    assert counts == [1, 2, 7, 34, 209]


def test_counts_by_path_number():
    # k paths means 3-k edges; C(3,e)^2 e! digraphs have e edges, matching
    # the coefficients 1, 9, 18, 6 of the reversed rook polynomial row n=3.
    by_k = [sum(1 for _ in enumerate_digraphs(3, k)) for k in range(4)]
    assert by_k == [6, 18, 9, 1]


def test_enumeration_is_deterministic_and_injective():
    seen = [tuple(sorted(g.succ.items())) for g in enumerate_digraphs(3)]
    assert len(seen) == len(set(seen)) == 34
    assert seen == [tuple(sorted(g.succ.items())) for g in enumerate_digraphs(3)]


def test_injectivity_enforced():
    with pytest.raises(ValueError):
        LaguerreDigraph(3, {1: 2, 3: 2})


def test_classify_loop():
    st = classify(LaguerreDigraph(1, {1: 1}))
    assert (st.fp, st.cyc, st.pa, st.e_zero) == (1, 1, 0, 1)


def test_classify_isolated_vertex_is_peak():
    st = classify(LaguerreDigraph(1, {}))
    assert (st.p, st.pa, st.cyc, st.e) == (1, 1, 0, 0)
    assert st.ppa == 1


def test_classify_single_edge():
    st = classify(LaguerreDigraph(2, {1: 2}))
    assert (st.da, st.p, st.e_plus) == (1, 1, 1)
    assert (st.dapa, st.ppa, st.pa) == (1, 1, 1)


def test_classify_mixed_digraph():
    # cycle (1 3) plus path 2 -> 4
    g = LaguerreDigraph(4, {1: 3, 3: 1, 2: 4})
    st = classify(g)
    assert (st.cyc, st.pa, st.e) == (1, 1, 3)
    assert (st.e_plus, st.e_minus) == (2, 1)
    assert (st.vcyc, st.pcyc) == (1, 1)   # 1 is a cycle valley, 3 a cycle peak
    assert (st.dapa, st.ppa) == (1, 1)    # 2 ascends into the peak 4


@pytest.mark.parametrize("n", range(6))
def test_stat_invariants(n):
    for g in enumerate_digraphs(n):
        st = classify(g)
        assert st.e == n - st.pa
        assert st.p + st.v + st.da + st.dd + st.fp == n
        assert st.e_minus + st.e_zero + st.e_plus == st.e
        assert st.p == st.pcyc + st.ppa and st.v == st.vcyc + st.vpa
        assert st.da == st.dacyc + st.dapa and st.dd == st.ddcyc + st.ddpa


def _components(g):
    pred = g.predecessors()
    starts = [v for v in range(1, g.n + 1) if v not in pred]
    comps = []
    seen = set()
    for s in starts:
        comp = []
        v = s
        while True:
            comp.append(v)
            seen.add(v)
            if v not in g.succ:
                break
            v = g.succ[v]
        comps.append(("path", comp))
    for v in range(1, g.n + 1):
        if v in seen:
            continue
        comp = []
        w = v
        while w not in seen:
            comp.append(w)
            seen.add(w)
            w = g.succ[w]
        comps.append(("cycle", comp))
    return comps


@pytest.mark.parametrize("n", range(1, 6))
def test_every_path_contains_a_peak(n):
    for g in enumerate_digraphs(n):
        pred = g.predecessors()
        for kind, comp in _components(g):
            if kind != "path":
                continue
            peaks = [v for v in comp
                     if pred.get(v, 0) < v > g.succ.get(v, 0)]
            assert peaks, (g.succ, comp)


def test_components_partition():
    for g in enumerate_digraphs(4):
        comps = _components(g)
        st = classify(g)
        assert sum(1 for kind, _ in comps if kind == "path") == st.pa
        assert sum(1 for kind, _ in comps if kind == "cycle") == st.cyc
        assert sorted(v for _, comp in comps for v in comp) == list(range(1, 5))


def test_first_mv_oracle_entry():
    weights = {"v_minus": 1, "v_zero": 1, "v_plus": 1, "lam": 1 + Poly.var("a")}
    got = oracle_entry(2, 0, weights, "first_mv")
    a = Poly.var("a")
    assert got == (1 + a) * (2 + a)


def test_second_mv_oracle_single_vertex():
    weights = {k: Poly.var(v) for k, v in DEFAULT_VAR_NAMES.items()}
    assert oracle_entry(1, 1, weights, "second_mv") == Poly.var("yp")
    assert oracle_entry(1, 0, weights, "second_mv") == Poly.var("lam") * Poly.var("yfp")


def test_second_mv_oracle_all_isolated():
    weights = {k: Poly.var(v) for k, v in DEFAULT_VAR_NAMES.items()}
    for n in range(1, 5):
        assert oracle_entry(n, n, weights, "second_mv") == Poly.var("yp") ** n
        assert oracle_entry(n, n, weights, "second_mv_general") == Poly.var("zp") ** n


def test_permutation_oracle_cyclic_small():
    assert permutation_oracles(1, "cyclic") == lam * Poly.var("yfp")
    got = permutation_oracles(2, "cyclic")
    assert got == lam ** 2 * Poly.var("yfp") ** 2 + lam * Poly.var("yp") * Poly.var("yv")


def test_permutation_oracle_linear_small():
    zp = Poly.var("zp")
    got = permutation_oracles(2, "linear00")
    assert got == zp * Poly.var("zda") + zp * Poly.var("zdd")


def test_permutation_oracle_counts():
    # setting all weights to 1 counts the permutations
    ones = {k: Poly.one() for k in ("z_p", "z_v", "z_da", "z_dd")}
    for n in range(1, 6):
        assert permutation_oracles(n, "linear00", ones) == Poly.const(math.factorial(n))


def test_oracle_matches_matrix_definition():
    # definitional round trip between the per-entry oracle and the
    # oracle-built first multivariate matrix, plus a spot check on the
    # n = 8 row (cheap values of k only; the full row is in the slow cap)
    from lagtp.laguerre import EdgeWeights, LaguerreParams, coeff_matrix_first_mv
    params = LaguerreParams.symbolic()
    w = EdgeWeights.symbolic()
    weights = {"v_minus": w.v_minus, "v_zero": w.v_zero, "v_plus": w.v_plus,
               "lam": params.lam}
    m = coeff_matrix_first_mv(params, w, 6)
    for n in range(6):
        for k in range(n + 1):
            assert oracle_entry(n, k, weights, "first_mv") == m[n, k]
    # n = 8 exceeds the symbolic cap but not the integer-specialized one
    ints = {"v_minus": 2, "v_zero": 3, "v_plus": 1, "lam": 5}
    assert oracle_entry(8, 8, ints, "first_mv") == Poly.one()
    # 8 vertices, one edge: 28 decreasing, 28 increasing, 8 weighted loops
    assert oracle_entry(8, 7, ints, "first_mv") == Poly.const(28 * 2 + 28 * 1 + 8 * 5 * 3)


def test_limit_exceeded():
    with pytest.raises(LimitExceeded):
        list(enumerate_digraphs(10))
    # symbolic oracles cap earlier than integer-specialized ones
    sym = {"v_minus": Poly.var("vm"), "v_zero": 1, "v_plus": 1, "lam": 1}
    with pytest.raises(LimitExceeded):
        oracle_entry(8, 7, sym, "first_mv")


def test_limit_override(monkeypatch):
    monkeypatch.setenv("LAGTP_LIMIT", "2")
    with pytest.raises(LimitExceeded):
        list(enumerate_digraphs(3))
    monkeypatch.delenv("LAGTP_LIMIT")
    assert sum(1 for _ in enumerate_digraphs(3)) == 34
