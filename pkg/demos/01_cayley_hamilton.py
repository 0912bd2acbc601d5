# Cayley-Hamilton, executed rather than assumed.
#
# det(xE - A) is computed over Z[x] with a division-free determinant, then the
# matrix xE - A is re-read as a polynomial whose coefficients are matrices.

from cayley_birkhoff import (
    SquareMatrix, ZZ, adjugate, char_poly, evaluate_right, reinterpret,
)
from cayley_birkhoff.matrix_alg import char_matrix, lift_scalar_poly

A = SquareMatrix([[1, 2], [3, 4]], ZZ)
f = char_poly(A)
print("f(x) =", f)                      # x^2 - 5x - 2

# xE - A lives in M_2(Z[x]); the same object as a polynomial over M_2(Z):
M = char_matrix(A)
print("xE - A as a matrix polynomial:", reinterpret(M))

# adj(xE - A) (xE - A) = f(x) E, entry by entry
print("adj(xE - A) =", adjugate(M))
print("product      =", adjugate(M) * M)

# Lift each scalar coefficient c to c*E; those are central, so substituting A
# respects the factorisation above and f(A) must vanish.
fA = evaluate_right(lift_scalar_poly(f.poly, 2), A)
print("f(A) =", fA)

B = SquareMatrix([[2, -1, 0, 3], [1, 0, 4, -2], [5, 5, -1, 0], [0, 2, 2, 7]], ZZ)
print("\n4x4 example:", char_poly(B))
print("f(B) =", evaluate_right(lift_scalar_poly(char_poly(B).poly, 4), B))
