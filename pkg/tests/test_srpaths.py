from fractions import Fraction

import pytest

from lagtp.checks import (Ctx, classical_recurrences, hankel_tp2_failure_beyond_type_m,
                          modified_hankel_tp, smj_production_tp, smj_shift_identities,
                          type_drop_specializations, sr_poly_matches_path_oracle,
                          factorization_table_all_cells, tail_series_match)
from lagtp.digraphs import LimitExceeded
from lagtp.matrices import output_matrix
from lagtp.polyring import Poly, rising
from lagtp.series import Series
from lagtp.srpaths import (ADMISSIBLE_CELLS, KAPPA_CELLS, InadmissibleCellError,
                           KappaFamily, SRCoeffs, SRTriangles,
                           find_hankel_tp2_failure, kappa_family_coeffs,
                           prodmat_smj, sfrac_tail_series, sr_path_oracle,
                           sr_path_oracle_row, sr_poly, verify_factorization_cell)

CO1 = SRCoeffs.symbolic(1)
CO2 = SRCoeffs.symbolic(2)


def al(i):
    return Poly.var(f"al{i}")


def test_subdiagonal_sum():
    for n in (1, 2, 3):
        want = Poly.zero()
        for i in range(1, 2 * n):
            want = want + al(i)
        assert sr_poly(CO1, 0, n, n - 1) == want


def test_diagonal_is_one():
    for m, co in ((1, CO1), (2, CO2)):
        for j in range(m + 1):
            for n in range(5):
                assert sr_poly(co, j, n, n) == Poly.one()


def test_m2_first_value():
    assert sr_poly(CO2, 0, 1, 0) == al(2)


def test_oracle_two_dyck_paths():
    assert sr_path_oracle(CO1, 0, 2, 0) == al(1) ** 2 + al(1) * al(2)


def test_oracle_empty_path():
    assert sr_path_oracle(CO2, 0, 0, 0) == Poly.one()


def test_oracle_row_consistent_with_single_entries():
    row = sr_path_oracle_row(CO2, 1, 3)
    for k in range(4):
        assert row[k] == sr_path_oracle(CO2, 1, 3, k)


def test_oracle_limit():
    with pytest.raises(LimitExceeded):
        sr_path_oracle(CO1, 0, 13, 0)


def test_sfraction_production_m1():
    p = prodmat_smj(CO1, 0, 4)
    assert p(0, 0) == al(1)
    assert p(1, 0) == al(1) * al(2)
    assert p(1, 1) == al(2) + al(3)
    assert p(0, 1) == Poly.one()


def test_m2_explicit_subsubdiagonal():
    p = prodmat_smj(CO2, 0, 5)
    assert p(2, 0) == al(2) * al(4) * al(6)


def test_smj_output_is_triangle():
    for j in range(3):
        o = output_matrix(prodmat_smj(CO2, j, 6), 6)
        tri = SRTriangles(CO2, max_j=2).triangle(j, 6)
        assert o == tri


def test_j_shift_identity():
    lhs = prodmat_smj(CO2, 0, 5).truncate(5)
    rhs = prodmat_smj(CO2.shifted_up(), 1, 5).truncate(5)
    assert lhs == rhs


def test_tail_series_euler():
    lam = Poly.var("lam")
    euler = SRCoeffs.from_fn(
        1, lambda i: lam + (i + 1) // 2 - 1 if i % 2 == 1 else Poly.const(i // 2))
    f0 = sfrac_tail_series(euler, 0, 6)
    assert all(f0[n] == rising(lam, n) for n in range(7))


def test_tail_series_zero_coefficients():
    zero = SRCoeffs.from_fn(2, lambda i: 0)
    assert sfrac_tail_series(zero, 1, 5) == Series.one(5)


def test_tail_series_alternate_form():
    # (f0 - 1)/(alpha_m t), then alpha_m..alpha_{2m-j-1} -> 0 and
    # alpha_i -> alpha_{i-(m-j)}, equals the type-j generating function
    m = 2
    f0 = sfrac_tail_series(CO2, 0, 5)
    for j in range(m + 1):
        ell = m - j
        direct = sfrac_tail_series(CO2, j, 4)
        for n in range(5):
            q = f0[n + 1].exact_div(al(m))
            env = {f"al{i}": Poly.zero() for i in range(m, m + ell)}
            env.update({f"al{i}": al(i - ell) for i in range(m + ell, 3 * (n + 3))})
            assert q.substitute(env) == direct[n]


def test_kappa_family_alphas():
    fam = KappaFamily(0, -1, Fraction(1))
    co = kappa_family_coeffs(fam)
    x = Poly.var("x")
    assert [co.alpha(i) for i in range(2, 11)] == [
        x, Poly.one(), Poly.one(), x, Poly.const(2), Poly.const(2),
        x, Poly.const(3), Poly.const(3)]
    fam0 = KappaFamily(0, -1, Fraction(0))
    co0 = kappa_family_coeffs(fam0)
    assert [co0.alpha(i) for i in range(2, 8)] == [
        x, Poly.zero(), Poly.const(2), x, Poly.one(), Poly.const(3)]


def test_j1a0_family_and_spot_entry():
    fam = KappaFamily(1, 0)
    co = kappa_family_coeffs(fam)
    x = Poly.var("x")
    assert [co.alpha(i) for i in (2, 3, 4, 5, 6, 7)] == [
        x, Poly.one(), Poly.one(), x, Poly.const(2), Poly.const(2)]
    p = prodmat_smj(co, 1, 4)
    assert p(1, 1) == 3 + x  # alpha_4 + alpha_5 + alpha_6


@pytest.mark.parametrize("cell", sorted(ADMISSIBLE_CELLS))
def test_factorization_table_cells(cell):
    j, a = cell
    kappas = [None]
    if cell in KAPPA_CELLS:
        kappas = [Fraction(1), Fraction(1, 2), Poly.var("kappa")]
    for kappa in kappas:
        assert verify_factorization_cell(KappaFamily(j, a, kappa), 6)


def test_rook_cell_at_larger_truncation():
    assert verify_factorization_cell(KappaFamily(1, 0), 7)


@pytest.mark.parametrize("cell", [(0, 0), (0, 1), (1, 1)])
def test_inadmissible_cells(cell):
    with pytest.raises(InadmissibleCellError):
        KappaFamily(*cell)


def test_hankel_tp2_failure_witness():
    w = find_hankel_tp2_failure(1)
    assert w is not None
    assert any(c < 0 for c in w["minor"].coefficients())
    # first offending minor for m=1 also involves only the leading entries
    assert w["rows"] == (0, 1) and w["cols"] == (0, 1)


@pytest.mark.parametrize("check", [
    smj_shift_identities, classical_recurrences, type_drop_specializations,
    tail_series_match, smj_production_tp, modified_hankel_tp,
    hankel_tp2_failure_beyond_type_m, factorization_table_all_cells,
])
def test_srpath_invariants(check):
    assert check(Ctx(max_n=5))


def test_oracle_equality_suite_small():
    assert sr_poly_matches_path_oracle(Ctx(max_n=10))
