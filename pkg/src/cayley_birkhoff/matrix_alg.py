"""Square matrices over a ring, determinants, and Cayley-Hamilton checks.

The same :class:`SquareMatrix` type holds matrices over the integers, the
rationals, the polynomial ring ``S[x]`` and, as coefficients, over ``M_n(S)``.
Determinants and adjugates are computed without division so they are valid
over ``S[x]``.

The Cayley-Hamilton check is executable rather than circular: the
characteristic polynomial ``f`` is computed as ``det(xE - A)`` over ``S[x]``,
each scalar coefficient ``c`` is lifted to ``c*E`` in ``M_n(S)``, and the
lifted polynomial is evaluated at ``A``.  Scalar matrices are central, so
``A`` commutes with every lifted coefficient, which is exactly the condition
under which evaluation respects the factorisation ``adj(xE - A)(xE - A) = f(x)E``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Sequence

from .exact_arith import QQ, ZZ, Ring
from .polyring import Polynomial, evaluate_right, poly_ring

MAX_DET_ORDER = 10


class DimensionError(ValueError):
    """Shapes or orders do not match."""


class UnsupportedRingError(TypeError):
    """Operation needs a commutative entry ring."""


class SquareMatrix:
    """Immutable ``n x n`` matrix with entries in ``ring``."""

    __slots__ = ("rows", "ring")

    def __init__(self, rows: Sequence[Sequence[Any]], ring: Ring | None = None):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        if n == 0:
            raise DimensionError("matrix order must be at least 1")
        for i, r in enumerate(rows):
            if len(r) != n:
                raise DimensionError(
                    f"expected {n}x{n} entries, row {i + 1} has length {len(r)}"
                )
        self.rows = rows
        self.ring = ring if ring is not None else ring_of(rows[0][0])

    @property
    def order(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def _check(self, other):
        if not isinstance(other, SquareMatrix):
            return False
        if other.order != self.order:
            raise DimensionError(f"order mismatch: {self.order} vs {other.order}")
        return True

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        return mat_add(self, other)

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        return mat_add(self, -other)

    def __neg__(self):
        return SquareMatrix([[-a for a in r] for r in self.rows], self.ring)

    def __mul__(self, other):
        if not self._check(other):
            return NotImplemented
        return mat_mul(self, other)

    def __pow__(self, k: int):
        result = mat_identity(self.order, self.ring)
        for _ in range(k):
            result = result * self
        return result

    def scale(self, c) -> SquareMatrix:
        """Left scalar multiple ``c * A``."""
        return SquareMatrix([[c * a for a in r] for r in self.rows], self.ring)

    def map(self, fn, ring: Ring) -> SquareMatrix:
        return SquareMatrix([[fn(a) for a in r] for r in self.rows], ring)

    def transpose(self) -> SquareMatrix:
        return SquareMatrix(list(zip(*self.rows)), self.ring)

    def trace(self):
        acc = self.ring.zero
        for i in range(self.order):
            acc = acc + self.rows[i][i]
        return acc

    def is_zero(self) -> bool:
        return all(a == self.ring.zero for r in self.rows for a in r)

    def tolist(self) -> list[list[Any]]:
        return [list(r) for r in self.rows]

    def __eq__(self, other):
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"SquareMatrix({self.tolist()!r})"

    def __str__(self):
        return "[" + ",".join("[" + ",".join(str(a) for a in r) + "]" for r in self.rows) + "]"


def ring_of(element) -> Ring:
    """Best-effort ring descriptor for a sample entry."""
    if isinstance(element, Polynomial):
        return poly_ring(element.ring)
    if isinstance(element, SquareMatrix):
        return matrix_ring(element.order, element.ring)
    if isinstance(element, int):
        return ZZ
    return QQ


@lru_cache(maxsize=None)
def matrix_ring(n: int, base: Ring) -> Ring:
    """The ring ``M_n(base)``; commutative only when ``n == 1``."""
    zero = SquareMatrix([[base.zero] * n for _ in range(n)], base)
    return Ring(
        f"M_{n}({base.name})",
        zero,
        mat_identity(n, base),
        base.commutative and n == 1,
    )


def mat_identity(n: int, ring: Ring = QQ) -> SquareMatrix:
    if n < 1:
        raise DimensionError("matrix order must be at least 1")
    return SquareMatrix(
        [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)], ring
    )


def mat_zero(n: int, ring: Ring = QQ) -> SquareMatrix:
    return SquareMatrix([[ring.zero] * n for _ in range(n)], ring)


def mat_add(A: SquareMatrix, B: SquareMatrix) -> SquareMatrix:
    if A.order != B.order:
        raise DimensionError(f"order mismatch: {A.order} vs {B.order}")
    return SquareMatrix(
        [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A.rows, B.rows)], A.ring
    )


def mat_mul(A: SquareMatrix, B: SquareMatrix) -> SquareMatrix:
    """Matrix product; entries multiply as ``a_ik * b_kj`` in that order."""
    n = A.order
    if B.order != n:
        raise DimensionError(f"order mismatch: {n} vs {B.order}")
    zero = A.ring.zero
    cols = list(zip(*B.rows))
    out = []
    for ra in A.rows:
        row = []
        for cb in cols:
            acc = zero
            for a, b in zip(ra, cb):
                acc = acc + a * b
            row.append(acc)
        out.append(row)
    return SquareMatrix(out, A.ring)


def _require_commutative(A: SquareMatrix, what: str):
    if not A.ring.commutative:
        raise UnsupportedRingError(f"{what} needs a commutative entry ring, got {A.ring}")


def _minor_det(rows, row_idx: Sequence[int], col_idx: Sequence[int], ring: Ring):
    """Laplace expansion along the selected rows, memoised on the column subset.

    Row ``row_idx[k]`` is expanded against whichever ``m - k`` columns are
    still free, so a bitmask of free columns determines the subproblem.
    """
    m = len(row_idx)
    if m == 0:
        return ring.one
    memo: dict[int, Any] = {}

    def rec(mask: int):
        if mask in memo:
            return memo[mask]
        k = m - bin(mask).count("1")
        if k == m - 1:
            pos = mask.bit_length() - 1
            val = rows[row_idx[k]][col_idx[pos]]
            memo[mask] = val
            return val
        acc = ring.zero
        sign = 1
        r = rows[row_idx[k]]
        for pos in range(m):
            bit = 1 << pos
            if not mask & bit:
                continue
            a = r[col_idx[pos]]
            if a != ring.zero:
                term = a * rec(mask & ~bit)
                acc = acc + term if sign > 0 else acc - term
            sign = -sign
        memo[mask] = acc
        return acc

    return rec((1 << m) - 1)


def determinant(A: SquareMatrix):
    """Division-free determinant by memoised cofactor expansion, O(n 2^n)."""
    _require_commutative(A, "determinant")
    n = A.order
    if n > MAX_DET_ORDER:
        raise DimensionError(f"determinant limited to order {MAX_DET_ORDER}, got {n}")
    idx = list(range(n))
    return _minor_det(A.rows, idx, idx, A.ring)


def adjugate(A: SquareMatrix) -> SquareMatrix:
    """Transposed matrix of signed cofactors."""
    _require_commutative(A, "adjugate")
    n = A.order
    if n > MAX_DET_ORDER:
        raise DimensionError(f"adjugate limited to order {MAX_DET_ORDER}, got {n}")
    ring = A.ring
    out = [[ring.zero] * n for _ in range(n)]
    for i in range(n):
        rest_rows = [k for k in range(n) if k != i]
        for j in range(n):
            rest_cols = [k for k in range(n) if k != j]
            c = _minor_det(A.rows, rest_rows, rest_cols, ring)
            out[j][i] = c if (i + j) % 2 == 0 else -c
    return SquareMatrix(out, ring)


@dataclass(frozen=True)
class CharPoly:
    """Characteristic polynomial ``det(xE - A)``: monic of degree ``n``."""

    poly: Polynomial
    order: int

    def __post_init__(self):
        if self.poly.degree != self.order:
            raise ValueError(f"expected degree {self.order}, got {self.poly.degree}")
        if self.poly.leading_coefficient() != self.poly.ring.one:
            raise ValueError("characteristic polynomial must be monic")

    @property
    def coefficients(self) -> list:
        """Coefficients from the leading one down to the constant term."""
        return list(reversed(self.poly.coeffs)) if self.order else [self.poly.ring.one]

    def __str__(self):
        return str(self.poly)


def char_matrix(A: SquareMatrix) -> SquareMatrix:
    """``xE - A`` as a matrix over ``S[x]``."""
    S = A.ring
    n = A.order
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(Polynomial((-A.rows[i][j], S.one), S))
            else:
                row.append(Polynomial((-A.rows[i][j],), S))
        rows.append(row)
    return SquareMatrix(rows, poly_ring(S))


def char_poly(A: SquareMatrix) -> CharPoly:
    _require_commutative(A, "char_poly")
    return CharPoly(determinant(char_matrix(A)), A.order)


def reinterpret(M: SquareMatrix) -> Polynomial:
    """View a matrix over ``S[x]`` as a polynomial with coefficients in ``M_n(S)``.

    The degree-``k`` coefficient is the matrix of degree-``k`` entry coefficients.
    """
    base = M.rows[0][0].ring
    n = M.order
    deg = max((e.degree for r in M.rows for e in r if not e.is_zero()), default=-1)
    coeffs = [
        SquareMatrix([[e.coeff(k) for e in r] for r in M.rows], base)
        for k in range(deg + 1)
    ]
    return Polynomial(coeffs, matrix_ring(n, base))


def reinterpret_inverse(f: Polynomial, n: int | None = None) -> SquareMatrix:
    """Inverse of :func:`reinterpret`: a polynomial over ``M_n(S)`` back to ``M_n(S[x])``."""
    Mn = f.ring
    zero_mat = Mn.zero
    n = zero_mat.order if n is None else n
    base = zero_mat.ring
    rows = [
        [Polynomial([c.rows[i][j] for c in f.coeffs], base) for j in range(n)]
        for i in range(n)
    ]
    return SquareMatrix(rows, poly_ring(base))


def lift_scalar_poly(f: Polynomial, n: int) -> Polynomial:
    """Embed ``S[x]`` into ``M_n(S)[x]`` by ``c -> c*E``; the lifted coefficients are central."""
    Mn = matrix_ring(n, f.ring)
    E = Mn.one
    return f.map_coeffs(E.scale, Mn)


def cayley_hamilton_residual(A: SquareMatrix) -> SquareMatrix:
    """``f(A)`` for the characteristic polynomial ``f`` of ``A``; always the zero matrix."""
    f = char_poly(A).poly
    return evaluate_right(lift_scalar_poly(f, A.order), A)


def cayley_hamilton_check(A: SquareMatrix) -> bool:
    return cayley_hamilton_residual(A).is_zero()


def adjugate_identity_residual(A: SquareMatrix) -> SquareMatrix:
    """``adj(xE - A)(xE - A) - f(x)E`` over ``S[x]``."""
    M = char_matrix(A)
    f = determinant(M)
    lhs = adjugate(M) * M
    rhs = mat_identity(A.order, M.ring).scale(f)
    return lhs - rhs


def adjugate_identity_check(A: SquareMatrix) -> bool:
    return adjugate_identity_residual(A).is_zero()
