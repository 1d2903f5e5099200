import pytest

from lagtp.checks import (Ctx, direct_tp_scaling_route, coeff_matrix_is_sfraction_triangle,
                          first_mv_egf_bivariate, first_mv_eulerian_column,
                          first_mv_rooks_decreasing, first_mv_stirling_identities,
                          first_mv_uniform_scaling, flat_tridiagonal_split,
                          laguerre_egf_check, second_mv_homogeneity,
                          second_mv_peak_divisibility, cycle_statistics_egf,
                          word_statistics_egf)
from lagtp.laguerre import (EdgeWeights, LaguerreParams, VertexWeights,
                            binomial_rowgen_matrix, coeff_matrix_first_mv,
                            coeff_matrix_second_mv, coeff_matrix_uni,
                            factorization_check, monic_laguerre,
                            monic_laguerre_reversed, prodmat, rowgen_shifted_family_check,
                            rowgen_polys, unsigned_self_inverse_check)
from lagtp.matrices import conjugate_by_binomial, output_matrix
from lagtp.polyring import Poly

x = Poly.var("x")
a = Poly.var("a")
SYM = LaguerreParams.symbolic()
ROOK = LaguerreParams.of(0)
LAH = LaguerreParams.of(-1)


def test_monic_laguerre_small():
    assert monic_laguerre(0, SYM, x) == Poly.one()
    assert monic_laguerre(1, SYM, x) == (1 + a) + x
    assert monic_laguerre(2, SYM, x) == (1 + a) * (2 + a) + 2 * (2 + a) * x + x ** 2
    assert monic_laguerre(3, SYM, x) == ((1 + a) * (2 + a) * (3 + a)
                                         + 3 * (2 + a) * (3 + a) * x
                                         + 3 * (3 + a) * x ** 2 + x ** 3)


def test_reversed_rook_polynomials():
    want = [Poly.one(), 1 + x, 1 + 4 * x + 2 * x ** 2,
            1 + 9 * x + 18 * x ** 2 + 6 * x ** 3,
            1 + 16 * x + 72 * x ** 2 + 96 * x ** 3 + 24 * x ** 4]
    for n in range(5):
        assert monic_laguerre_reversed(n, ROOK, x) == want[n]


def test_lah_polynomials():
    want = [Poly.one(), x, 2 * x + x ** 2, 6 * x + 6 * x ** 2 + x ** 3,
            24 * x + 36 * x ** 2 + 12 * x ** 3 + x ** 4]
    for n in range(5):
        assert monic_laguerre(n, LAH, x) == want[n]


def test_coeff_matrix_entries():
    m = coeff_matrix_uni(SYM, 5)
    assert m[3, 1] == 3 * (2 + a) * (3 + a)
    assert all(m[n, n] == Poly.one() for n in range(5))
    lah = coeff_matrix_uni(LAH, 5)
    assert all(lah[n, 0].is_zero() for n in range(1, 5))


def test_prodmat_rows():
    pcirc = prodmat(SYM, "Pcirc")
    assert [pcirc(2, k) for k in (1, 2, 3)] == [2 * (2 + a), 5 + a, Poly.one()]
    p = prodmat(SYM, "P", x=x)
    assert p(2, 0) == 2 * x
    w = VertexWeights.symbolic()
    pflat = prodmat(SYM, "PFlat", weights=w, x=x)
    assert pflat(1, 0) == (1 + a) * w.y_p * w.y_v + (w.y_da + w.y_dd) * x


def test_prodmat_unknown_variant():
    with pytest.raises(ValueError):
        prodmat(SYM, "Pbogus")


def test_tridiagonal_output_is_coeff_matrix():
    n = 9
    assert output_matrix(prodmat(SYM, "Pcirc"), n) == coeff_matrix_uni(SYM, n)


def test_quadridiagonal_output_and_shifted_families():
    n = 8
    got = output_matrix(prodmat(SYM, "P", x=x), n)
    assert got == binomial_rowgen_matrix(coeff_matrix_uni(SYM, n), x)
    assert rowgen_shifted_family_check(SYM, n, x)
    # zeroth column of the row-generating output = the monic polynomials
    col = output_matrix(prodmat(SYM, "P", x=x), 9, 1)
    for i in range(9):
        assert col[i, 0] == monic_laguerre(i, SYM, x)


def test_rowgen_shifted_family_spot_entry():
    lb = binomial_rowgen_matrix(coeff_matrix_uni(SYM, 4), x)
    shifted = LaguerreParams(a + 1)
    assert lb[3, 1] == 3 * monic_laguerre(2, shifted, x)


def test_rowgen_polys():
    assert rowgen_polys(coeff_matrix_uni(LAH, 4), x)[3] == 6 * x + 6 * x ** 2 + x ** 3
    rev = rowgen_polys(coeff_matrix_uni(ROOK, 3), x, reversed_form=True)
    assert rev[2] == 1 + 4 * x + 2 * x ** 2


def test_unsigned_self_inverse():
    assert unsigned_self_inverse_check(SYM, 6)
    assert unsigned_self_inverse_check(SYM, 1)
    assert unsigned_self_inverse_check(ROOK, 8)


@pytest.mark.parametrize("which", ["tridiagonal_lu", "quadridiagonal_nested"])
def test_factorizations(which):
    assert factorization_check(which, SYM, 7)


def test_flat_split_and_equality_case():
    assert flat_tridiagonal_split(Ctx())


def test_first_mv_stirling_examples():
    m = coeff_matrix_first_mv(ROOK, EdgeWeights(Poly.one(), Poly.zero(), Poly.zero()), 5)
    assert m[4, 2] == Poly.const(7)  # S(4,2)
    m2 = coeff_matrix_first_mv(ROOK, EdgeWeights(Poly.one(), Poly.one(), Poly.zero()), 4)
    assert m2[3, 1] == Poly.const(7)  # S(4,2) again via the shifted triangle


def test_first_mv_uniform_scaling_entry():
    v = Poly.var("v")
    m = coeff_matrix_first_mv(SYM, EdgeWeights(v, v, v), 4)
    uni = coeff_matrix_uni(SYM, 4)
    assert m[3, 1] == uni[3, 1] * v ** 2


def test_second_mv_small_entries():
    w = VertexWeights.symbolic()
    full = coeff_matrix_second_mv(SYM, w, 3, flat=False)
    assert full[1, 0] == (1 + a) * w.y_fp
    assert full[1, 1] == w.y_p
    flat = coeff_matrix_second_mv(SYM, w, 3, flat=True)
    assert flat[1, 1] == Poly.one()


def test_flat_tridiagonal_output():
    n = 7
    w = VertexWeights.symbolic()
    got = output_matrix(prodmat(SYM, "PcircFlat", weights=w), n)
    assert got == coeff_matrix_second_mv(SYM, w, n, flat=True, oracle_rows=0)


def test_flat_conjugation():
    w = VertexWeights.symbolic()
    conj = conjugate_by_binomial(prodmat(SYM, "PcircFlat", weights=w), x, 6)
    assert conj == prodmat(SYM, "PFlat", weights=w, x=x).truncate(6)


def test_first_specializations():
    from lagtp.laguerre import first_mv_specialization_check
    assert first_mv_specialization_check(SYM, 5, 1)
    assert first_mv_specialization_check(SYM, 5, 2)


def test_route_mismatch_raises(monkeypatch):
    # sabotage the oracle: the constructor must notice the disagreement
    from lagtp import digraphs, laguerre
    from lagtp.laguerre import RouteMismatchError
    real = digraphs.oracle_entry

    def lying(n, k, weights, mode):
        value = real(n, k, weights, mode)
        return value + weights["z_p"] if (n, k) == (2, 1) else value

    monkeypatch.setattr(laguerre.digraphs, "oracle_entry", lying)
    with pytest.raises(RouteMismatchError):
        coeff_matrix_second_mv(SYM, VertexWeights.symbolic(), 4, flat=True)


@pytest.mark.parametrize("check", [
    first_mv_stirling_identities, first_mv_uniform_scaling,
    first_mv_rooks_decreasing, first_mv_eulerian_column,
    second_mv_homogeneity, second_mv_peak_divisibility,
    coeff_matrix_is_sfraction_triangle, direct_tp_scaling_route,
    cycle_statistics_egf, word_statistics_egf, laguerre_egf_check, first_mv_egf_bivariate,
])
def test_family_invariants(check):
    assert check(Ctx(max_n=6))
