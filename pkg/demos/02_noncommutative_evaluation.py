# Substitution into polynomials with matrix coefficients.
#
# With N = [[0,1],[0,0]] and M = [[0,0],[1,0]], the polynomial x*N equals N*x
# in M_2(Z)[x], but "plug in M" gives N M on one side and M N on the other.

from cayley_birkhoff import (
    Polynomial, SquareMatrix, ZZ, commutes_with_coeffs, divide_left_linear,
    divide_right_linear, evaluate_left, evaluate_right, linear_factor, matrix_ring,
)

M2 = matrix_ring(2, ZZ)
N = SquareMatrix([[0, 1], [0, 0]], ZZ)
M = SquareMatrix([[0, 0], [1, 0]], ZZ)

g = Polynomial.x(M2)
h = Polynomial.constant(N, M2)
print("g*h =", g * h)
print("(g*h)(M)     =", evaluate_right(g * h, M))
print("g(M) * h(M)  =", evaluate_right(g, M) * evaluate_right(h, M))
print("M commutes with h's coefficients?", commutes_with_coeffs(M, h))

# Right and left substitution disagree too.
f = Polynomial.monomial(N, 1, M2)
print("\nright:", evaluate_right(f, M), " left:", evaluate_left(f, M))

# Remainder theorem, both sides: f = q (x - r) + f(r) and f = (x - r) q' + f_left(r).
f = Polynomial([N, M, M2.one], M2)
r = SquareMatrix([[1, 2], [0, 3]], ZZ)
q, rem = divide_right_linear(f, r)
print("\nright quotient:", q, " remainder:", rem)
print("round trip ok:", q * linear_factor(r, M2) + Polynomial.constant(rem, M2) == f)
q, rem = divide_left_linear(f, r)
print("left quotient: ", q, " remainder:", rem)
print("round trip ok:", linear_factor(r, M2) * q + Polynomial.constant(rem, M2) == f)
