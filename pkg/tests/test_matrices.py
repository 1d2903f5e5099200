import json

import pytest

from lagtp.checks import (Ctx, binomial_matrix_example, tridiagonal_diagonal_comparison,
                          hankel_factorization_identity, binomial_shift_of_production,
                          production_output_roundtrip, riordan_production_is_eaz,
                          tridiagonal_minor_criterion, truncation_exactness)
from lagtp.laguerre import LaguerreParams, VertexWeights, coeff_matrix_uni, prodmat
from lagtp.matrices import (HessMatrix, NonUnitDiagonalError, RiordanIntegralityError,
                            Truncation, XorShift64, binomial_truncation,
                            bx_conjugate_eaz_identity_check, conjugate_by_binomial,
                            delta_matrix, det_exact, eaz_matrix, hankel_truncation,
                            output_matrix, production_of, riordan_matrix,
                            tp_check_sampled, tp_check_symbolic, unit_lower_inverse)
from lagtp.polyring import Poly
from lagtp.series import Series

x = Poly.var("x")
a = Poly.var("a")


def test_output_of_bidiagonal_toeplitz_is_binomial():
    p = HessMatrix(lambda n, k: x if k == n else (1 if k == n + 1 else 0), lower_band=0)
    assert output_matrix(p, 6) == binomial_truncation(x, 6)


def test_output_of_zero():
    o = output_matrix(HessMatrix(lambda n, k: 0), 4)
    assert o[0, 0] == Poly.one()
    assert all(o[i, j].is_zero() for i in range(1, 4) for j in range(4))


def test_output_pcirc_column_zero():
    o = output_matrix(prodmat(LaguerreParams.symbolic(), "Pcirc"), 4)
    assert o[3, 0] == (1 + a) * (2 + a) * (3 + a)


def test_production_of_identity_is_delta():
    assert production_of(Truncation.identity(5)) == delta_matrix().truncate(4, 5)


def test_production_of_binomial():
    got = production_of(binomial_truncation(x, 6))
    want = HessMatrix(lambda n, k: x if k == n else (1 if k == n + 1 else 0))
    assert got == want.truncate(5, 6)


def test_production_of_laguerre_coeff_matrix():
    params = LaguerreParams.symbolic()
    got = production_of(coeff_matrix_uni(params, 6))
    assert got == prodmat(params, "Pcirc").truncate(5, 6)


def test_production_of_rejects_non_unit_diagonal():
    with pytest.raises(NonUnitDiagonalError):
        production_of(Truncation([[1, 0], [0, 2]]))


def test_conjugate_delta():
    xi = Poly.var("xi")
    got = conjugate_by_binomial(delta_matrix(), xi, 5)
    want = HessMatrix(lambda n, k: xi if k == n else (1 if k == n + 1 else 0))
    assert got == want.truncate(5)


def test_conjugate_pcirc_gives_quadridiagonal():
    params = LaguerreParams.symbolic()
    xi = Poly.var("xi")
    got = conjugate_by_binomial(prodmat(params, "Pcirc"), xi, 6)
    assert got == prodmat(params, "P", x=xi).truncate(6)


def test_conjugate_identity_matrix():
    eye = HessMatrix(lambda n, k: 1 if n == k else 0, lower_band=0)
    assert conjugate_by_binomial(eye, Poly.var("xi"), 4) == Truncation.identity(4)


def test_det_unit_triangular_product():
    assert det_exact(Truncation([[1, 1], [x, 1 + x]])) == Poly.one()


def test_det_lah_hankel():
    assert det_exact(Truncation([[1, x], [x, 2 * x + x ** 2]])) == 2 * x


def test_det_diagonal():
    b, c = Poly.var("b"), Poly.var("c")
    m = Truncation([[a, 0, 0], [0, b, 0], [0, 0, c]])
    assert det_exact(m) == a * b * c


@pytest.mark.parametrize("size,seed", [(5, 5), (6, 9), (7, 13)])
def test_det_bareiss_path_matches_laplace(size, seed):
    # sizes above 4 go through fraction-free elimination; compare against
    # expansion along the first column into Laplace-sized minors
    rng = XorShift64(seed)
    vars_pool = [Poly.one(), 1 + x, a, x]
    m = Truncation([[vars_pool[rng.next_small()] * (int(rng.next_u64() % 5) - 2)
                     for _ in range(size)] for _ in range(size)])

    def cofactor_det(t):
        if t.rows <= 4:
            return det_exact(t)
        acc = Poly.zero()
        for i in range(t.rows):
            c = t[i, 0]
            if c.is_zero():
                continue
            sub = t.submatrix([r for r in range(t.rows) if r != i], range(1, t.cols))
            term = c * cofactor_det(sub)
            acc = acc + term if i % 2 == 0 else acc - term
        return acc

    assert det_exact(m) == cofactor_det(m)


def test_det_singular_with_zero_pivot():
    m = Truncation([[0, 0, 0, 0, 1],
                    [0, 0, 0, 1, 0],
                    [0, 0, 0, 0, 0],
                    [1, 0, 0, 0, 0],
                    [0, 1, 0, 0, 0]])
    assert det_exact(m).is_zero()


def test_tp_binomial_matrix_passes():
    assert tp_check_symbolic(binomial_truncation(x, 5), 3).ok


def test_tp_fails_with_witness():
    report = tp_check_symbolic(Truncation([[1, 2], [3, 1]]), 2)
    assert not report.ok
    assert report.witness.minor == Poly.const(-5)
    assert report.witness.rows == (0, 1) and report.witness.cols == (0, 1)


def test_tp_sfraction_production_factorization():
    from lagtp.laguerre import sfraction_production
    m = sfraction_production(lambda i: Poly.var(f"al{i}") if i >= 1 else Poly.zero(), 5)
    assert tp_check_symbolic(m, 4).ok


def test_tp_sampled_flat_quadridiagonal_passes():
    yp, yv, yda, ydd = (Poly.var(v) for v in ("yp", "yv", "yda", "ydd"))
    w = VertexWeights(y_p=yp, y_v=yv, y_da=yda, y_dd=ydd, y_fp=yp)
    # substitute y_da -> y_p + s, y_dd -> y_v + t to satisfy the constraint
    m = prodmat(LaguerreParams.symbolic(), "PFlat", weights=w, x=x).truncate(7)
    m = m.substitute({"yda": yp + Poly.var("s"), "ydd": yv + Poly.var("t"),
                      "a": Poly.var("lam") - 1})
    assert tp_check_sampled(m, 4, seed=11, samples=50).ok


def test_tp_sampled_detects_violated_constraint():
    one, zero = Poly.one(), Poly.zero()
    w = VertexWeights(y_p=one, y_v=one, y_da=zero, y_dd=zero, y_fp=one)
    m = prodmat(LaguerreParams.of(0), "PFlat", weights=w, x=x).truncate(7)
    report = tp_check_sampled(m, 4, seed=7, samples=50)
    assert not report.ok
    assert report.witness.assignment is not None
    # the witness substitution really does produce a negative minor
    grid = m.substitute({k: Poly.const(v) for k, v in report.witness.assignment.items()})
    sub = grid.submatrix(report.witness.rows, report.witness.cols)
    assert det_exact(sub).as_constant() == report.witness.minor < 0


def test_tp_sampled_zero_matrix():
    assert tp_check_sampled(Truncation.zero(3, 3), 2, seed=1, samples=5).ok


def test_tp_check_colex_short_circuit_order():
    # first failing minor in colex order is reported
    m = Truncation([[0, 5, 1], [1, 0, 2], [0, 1, 0]])
    report = tp_check_symbolic(m, 2)
    assert not report.ok
    assert report.witness.rows == (0, 1) and report.witness.cols == (0, 1)


def test_eaz_entries():
    a_seq = [Poly.var(f"a{i}") for i in range(4)]
    z_seq = [Poly.var(f"z{i}") for i in range(4)]
    m = eaz_matrix(a_seq, z_seq)
    assert m(2, 1) == 2 * (Poly.var("z1") + Poly.var("a2"))
    assert m(3, 4) == Poly.var("a0")
    assert eaz_matrix([0], [0]).truncate(4) == Truncation.zero(4, 4)


def test_eaz_reproduces_pcirc():
    params = LaguerreParams.symbolic()
    lam = params.lam
    m = eaz_matrix([1, 2, 1], [lam, lam])
    assert m.truncate(7) == prodmat(params, "Pcirc").truncate(7)


def test_bx_conjugate_eaz_identity():
    a_seq = [Poly.var(f"a{i}") for i in range(6)]
    z_seq = [Poly.var(f"z{i}") for i in range(6)]
    assert bx_conjugate_eaz_identity_check(a_seq, z_seq, 6)


def test_riordan_laguerre_pair():
    from lagtp.laguerre import laguerre_cycle_series, laguerre_path_series
    params = LaguerreParams.symbolic()
    f = laguerre_cycle_series(params, 5)
    g = laguerre_path_series(5)
    assert riordan_matrix(f, g, 5) == coeff_matrix_uni(params, 5)


def test_riordan_binomial_and_identity():
    xi = Poly.var("xi")
    ex = (Series.t(5) * xi).exp()
    assert riordan_matrix(ex, Series.t(5), 5) == binomial_truncation(xi, 5)
    assert riordan_matrix(Series.one(5), Series.t(5), 5) == Truncation.identity(5)


def test_riordan_rejects_non_integer_entries():
    from fractions import Fraction
    f = Series([1, Fraction(1, 2)], 4)
    with pytest.raises(RiordanIntegralityError):
        riordan_matrix(f, Series.t(4), 4)


def test_unit_lower_inverse():
    params = LaguerreParams.symbolic()
    m = coeff_matrix_uni(params, 5)
    assert m * unit_lower_inverse(m) == Truncation.identity(5)


def test_hankel_truncation_shape():
    seq = [Poly.const(i) for i in range(9)]
    h = hankel_truncation(seq, 5)
    assert h[2, 2] == Poly.const(4)
    with pytest.raises(ValueError):
        hankel_truncation(seq[:3], 5)


def test_matrix_json_round_trip():
    m = binomial_truncation(x, 3)
    obj = json.loads(m.to_json())
    assert Truncation.from_json_obj(obj) == m


def test_tp_report_json_fields():
    report = tp_check_symbolic(Truncation([[1, 2], [3, 1]]), 2)
    obj = report.to_json_obj()
    assert obj["ok"] is False and obj["order"] == 2
    assert obj["witness"]["rows"] == [0, 1] and obj["witness"]["cols"] == [0, 1]
    assert Poly.from_json_obj(obj["witness"]["minor"]) == Poly.const(-5)


def test_xorshift_is_deterministic():
    rng1, rng2 = XorShift64(9), XorShift64(9)
    assert [rng1.next_small() for _ in range(20)] == [rng2.next_small() for _ in range(20)]
    rng = XorShift64(3)
    assert {rng.next_small() for _ in range(200)} == {0, 1, 2, 3}


# structural invariants shared with the verify suites
@pytest.mark.parametrize("check", [
    truncation_exactness, production_output_roundtrip, hankel_factorization_identity,
    binomial_shift_of_production, riordan_production_is_eaz, tridiagonal_minor_criterion,
    tridiagonal_diagonal_comparison, binomial_matrix_example,
])
def test_structural_invariants(check):
    assert check(Ctx())
