"""Univariate tour: coefficient matrix, production matrices, Hankel TP.

Run:  python demos/01_univariate_total_positivity.py
"""

from lagtp import (LaguerreParams, Poly, coeff_matrix_uni, hankel_truncation,
                   monic_laguerre, output_matrix, prodmat, production_of,
                   tp_check_sampled, tp_check_symbolic)

params = LaguerreParams.symbolic()   # alpha as the symbol 'a'
x = Poly.var("x")

print("The monic unsigned Laguerre polynomials, exactly:")
for n in range(4):
    print(f"  L_{n}(x) =", monic_laguerre(n, params, x))

print("\nTheir coefficient matrix is generated by a tridiagonal production")
print("matrix: iterate rows with a_{n,k} = sum_i a_{n-1,i} p_{i,k}.")
pcirc = prodmat(params, "Pcirc")
print("Production matrix rows 0..3:")
for n in range(4):
    print("  ", [str(pcirc(n, k)) for k in range(5)])

out = output_matrix(pcirc, 6)
assert out == coeff_matrix_uni(params, 6)
print("output matrix == coefficient matrix on the 6x6 block:", True)

print("\nThe inverse direction recovers the production matrix from the")
print("triangle by forward substitution:")
rec = production_of(coeff_matrix_uni(params, 6))
assert rec == pcirc.truncate(5, 6)
print("production_of(coefficient matrix) == closed form:", True)

print("\nConjugating by the x-binomial matrix gives the quadridiagonal")
print("production matrix of the binomial row-generating matrix; its output")
print("has the Laguerre polynomials themselves in column zero.")
p = prodmat(params, "P", x=x)
rowgen = output_matrix(p, 5)
for n in range(4):
    assert rowgen[n, 0] == monic_laguerre(n, params, x)
print("column zero of O(P) = monic Laguerre polynomials:", True)

print("\nHankel total positivity, certified at finite truncation order:")
lam = Poly.var("lam")
seq = [monic_laguerre(n, LaguerreParams(lam - 1), x) for n in range(9)]
h = hankel_truncation(seq, 5)
sym = tp_check_symbolic(h, 3)
print(f"  all {sym.checked} minors of size <= 3 coefficientwise nonnegative:", sym.ok)
sam = tp_check_sampled(h, 4, seed=42, samples=100)
print(f"  {sam.checked} sampled integer minors of size <= 4 nonnegative:", sam.ok)
