"""Exact Birkhoff-von Neumann decomposition by alternating-cycle reduction.

A permutation inside the support of a bistochastic matrix is found without
any matching algorithm.  Whenever no entry equals 1, a walk that alternates
between "another nonzero in this row" and "another nonzero in this column"
must close into a cycle ``(i_1, j_1), (i_1, j_2), (i_2, j_2), ..., (i_r, j_1)``.
Adding ``+c`` on the ``(i_t, j_t)`` positions and ``-c`` on the
``(i_t, j_{t+1})`` positions keeps all line sums, and with ``c`` equal to
the smallest cycle entry one of the two signs zeroes an entry while creating
no new nonzero.  Repeating shrinks the support until some entry is 1; that
row and column are then fixed and the procedure continues on the rest.

"Fewer zero entries" in the classical write-up of this argument has to be
read as fewer *nonzero* entries: the chosen sign is the one that gains a zero.

Indices are 0-based in Python; the JSON documents produced by the CLI are
1-based.  A permutation maps rows to columns, ``A[k][perm[k]] != 0``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exact_arith import QQ, format_rational
from .matrix_alg import DimensionError, SquareMatrix


class InvalidInputError(ValueError):
    """A precondition of a cycle or reduction step does not hold."""


class DecompositionError(ValueError):
    """A decomposition violates its weight or permutation invariants."""


@dataclass(frozen=True)
class Violation:
    """First failed bistochasticity constraint; indices are 0-based."""

    kind: str  # "negative", "column", "row"
    index: tuple[int, ...]
    value: Fraction

    def __str__(self):
        if self.kind == "negative":
            i, j = self.index
            return f"negative entry at ({i + 1},{j + 1}): {format_rational(self.value)}"
        return f"{self.kind} {self.index[0] + 1} sums to {format_rational(self.value)}"


class NotBistochasticError(ValueError):
    def __init__(self, violation: Violation):
        super().__init__(str(violation))
        self.violation = violation


def _as_rows(M) -> tuple[tuple[Fraction, ...], ...]:
    if isinstance(M, (SquareMatrix, BistochasticMatrix)):
        M = M.rows
    rows = tuple(tuple(Fraction(a) for a in r) for r in M)
    n = len(rows)
    if n == 0:
        raise DimensionError("matrix order must be at least 1")
    for i, r in enumerate(rows):
        if len(r) != n:
            raise DimensionError(f"expected {n}x{n} entries, row {i + 1} has length {len(r)}")
    return rows


def find_violation(M) -> Violation | None:
    """Scan negatives (row-major), then column sums, then row sums."""
    rows = _as_rows(M)
    n = len(rows)
    for i in range(n):
        for j in range(n):
            if rows[i][j] < 0:
                return Violation("negative", (i, j), rows[i][j])
    for j in range(n):
        s = sum((rows[i][j] for i in range(n)), Fraction(0))
        if s != 1:
            return Violation("column", (j,), s)
    for i in range(n):
        s = sum(rows[i], Fraction(0))
        if s != 1:
            return Violation("row", (i,), s)
    return None


class BistochasticMatrix:
    """Nonnegative rational square matrix with all line sums exactly 1.

    Construction validates; use :func:`check_bistochastic` for the same thing
    under the operation's name.
    """

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = _as_rows(rows)
        v = find_violation(rows)
        if v is not None:
            raise NotBistochasticError(v)
        self.rows = rows

    @classmethod
    def _trusted(cls, rows) -> BistochasticMatrix:
        obj = cls.__new__(cls)
        obj.rows = rows
        return obj

    @property
    def order(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def support(self) -> frozenset[tuple[int, int]]:
        n = self.order
        return frozenset((i, j) for i in range(n) for j in range(n) if self.rows[i][j] != 0)

    def nnz(self) -> int:
        return sum(1 for r in self.rows for a in r if a != 0)

    def is_permutation(self) -> bool:
        return all(a in (0, 1) for r in self.rows for a in r)

    def to_matrix(self) -> SquareMatrix:
        return SquareMatrix(self.rows, QQ)

    def tolist(self):
        return [list(r) for r in self.rows]

    def __eq__(self, other):
        if isinstance(other, (BistochasticMatrix, SquareMatrix)):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = ", ".join("[" + ", ".join(format_rational(a) for a in r) + "]" for r in self.rows)
        return f"BistochasticMatrix([{body}])"


def check_bistochastic(M) -> BistochasticMatrix:
    """Validate ``M``; raises :class:`NotBistochasticError` naming the first violation."""
    return M if isinstance(M, BistochasticMatrix) else BistochasticMatrix(M)


@dataclass(frozen=True)
class Permutation:
    """Bijection of ``range(n)``; ``images[k]`` is the column matched to row ``k``."""

    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(int(k) for k in self.images))
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a permutation of 0..{len(self.images) - 1}: {self.images}")

    @classmethod
    def from_one_based(cls, images: Sequence[int]) -> Permutation:
        return cls(tuple(k - 1 for k in images))

    @classmethod
    def from_matrix(cls, M) -> Permutation:
        rows = M.rows if hasattr(M, "rows") else M
        return cls(tuple(r.index(1) for r in rows))

    @property
    def order(self) -> int:
        return len(self.images)

    def one_based(self) -> list[int]:
        return [k + 1 for k in self.images]

    def matrix(self) -> SquareMatrix:
        n = self.order
        one, zero = Fraction(1), Fraction(0)
        return SquareMatrix(
            [[one if self.images[i] == j else zero for j in range(n)] for i in range(n)], QQ
        )

    def __len__(self):
        return len(self.images)

    def __getitem__(self, k):
        return self.images[k]


@dataclass(frozen=True)
class AlternatingCycle:
    """Rows ``i_1..i_r`` and columns ``j_1..j_r`` of a closed alternating walk.

    Row ``i_t`` meets the cycle at columns ``j_t`` and ``j_{t+1}`` (indices mod r).
    """

    rows: tuple[int, ...]
    cols: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != len(self.cols) or len(self.rows) < 2:
            raise ValueError("cycle needs r >= 2 rows and as many columns")
        if len(set(self.rows)) != len(self.rows) or len(set(self.cols)) != len(self.cols):
            raise ValueError("cycle rows and columns must be pairwise distinct")

    @property
    def length(self) -> int:
        return len(self.rows)

    def plus_positions(self) -> list[tuple[int, int]]:
        return list(zip(self.rows, self.cols))

    def minus_positions(self) -> list[tuple[int, int]]:
        r = self.length
        return [(self.rows[t], self.cols[(t + 1) % r]) for t in range(r)]

    def is_valid_for(self, A) -> bool:
        rows = A.rows if hasattr(A, "rows") else A
        return all(rows[i][j] != 0 for i, j in self.plus_positions() + self.minus_positions())


@dataclass(frozen=True)
class PerturbationMatrix:
    """Sparse ``+1/-1`` matrix ``B`` attached to a cycle; every line sums to 0."""

    order: int
    entries: dict = field(hash=False)

    def rows(self) -> list[list[int]]:
        n = self.order
        out = [[0] * n for _ in range(n)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out


def _active_rows_cols(n, rows, cols):
    return (list(range(n)) if rows is None else list(rows),
            list(range(n)) if cols is None else list(cols))


def _walk_cycle(a, rows: list[int], cols: list[int]) -> AlternatingCycle:
    """Alternating walk restricted to the active rows/columns, smallest index first."""
    start = next(((i, j) for i in rows for j in cols if a[i][j] != 0), None)
    if start is None:
        raise InvalidInputError("matrix has no nonzero entry")
    i, j = start
    walk_rows = [i]
    walk_cols = [j]
    while True:
        nxt_col = next((c for c in cols if c != j and a[i][c] != 0), None)
        if nxt_col is None:
            raise InvalidInputError(f"row {i + 1} has a single nonzero; not reducible")
        if nxt_col in walk_cols:
            s = walk_cols.index(nxt_col)
            return AlternatingCycle(tuple(walk_rows[s:]), tuple(walk_cols[s:]))
        j = nxt_col
        nxt_row = next((r for r in rows if r != i and a[r][j] != 0), None)
        if nxt_row is None:
            raise InvalidInputError(f"column {j + 1} has a single nonzero; not reducible")
        if nxt_row in walk_rows:
            # Row closes first: rows i_{s+1}..i_t then i_s, columns j_{s+1}..j_{t+1}.
            s = walk_rows.index(nxt_row)
            return AlternatingCycle(
                tuple(walk_rows[s + 1:]) + (nxt_row,),
                tuple(walk_cols[s + 1:]) + (j,),
            )
        i = nxt_row
        walk_rows.append(i)
        walk_cols.append(j)


def _has_unit_entry(a, rows, cols) -> bool:
    return any(a[i][j] == 1 for i in rows for j in cols)


def find_alternating_cycle(A: BistochasticMatrix) -> AlternatingCycle:
    """Closed alternating walk through nonzeros of a matrix with no entry equal to 1.

    Starts at the first nonzero in row-major order and always takes the
    smallest admissible index; stops at the first repeated column (or row).
    """
    A = check_bistochastic(A)
    n = A.order
    rows, cols = _active_rows_cols(n, None, None)
    if _has_unit_entry(A.rows, rows, cols):
        raise InvalidInputError("cycle search needs a matrix with no entry equal to 1")
    return _walk_cycle(A.rows, rows, cols)


def perturbation_matrix(cycle: AlternatingCycle, n: int) -> PerturbationMatrix:
    if any(not 0 <= k < n for k in cycle.rows + cycle.cols):
        raise DimensionError(f"cycle index outside 0..{n - 1}")
    entries = {}
    for pos in cycle.plus_positions():
        entries[pos] = 1
    for pos in cycle.minus_positions():
        entries[pos] = -1
    return PerturbationMatrix(n, entries)


def _perturb(a, B: PerturbationMatrix, c: Fraction):
    out = [list(r) for r in a]
    for (i, j), v in B.entries.items():
        out[i][j] += v * c
    return tuple(tuple(r) for r in out)


def _nnz(a) -> int:
    return sum(1 for r in a for x in r if x != 0)


@dataclass(frozen=True)
class Reduction:
    """Both candidates of one support-reduction step and which one was kept."""

    cycle: AlternatingCycle
    perturbation: PerturbationMatrix
    step: Fraction
    plus: tuple
    minus: tuple
    chosen: tuple


def _reduce(a, rows, cols) -> Reduction:
    cycle = _walk_cycle(a, rows, cols)
    B = perturbation_matrix(cycle, len(a))
    c = min(a[i][j] for i, j in B.entries)
    plus = _perturb(a, B, c)
    minus = _perturb(a, B, -c)
    chosen = plus if _nnz(plus) < _nnz(minus) else minus
    return Reduction(cycle, B, c, plus, minus, chosen)


def reduction_candidates(A: BistochasticMatrix) -> Reduction:
    """One reduction step with both ``A + cB`` and ``A - cB`` exposed."""
    A = check_bistochastic(A)
    n = A.order
    rows, cols = _active_rows_cols(n, None, None)
    if _has_unit_entry(A.rows, rows, cols):
        raise InvalidInputError("reduction needs a matrix with no entry equal to 1")
    return _reduce(A.rows, rows, cols)


def reduce_support(A: BistochasticMatrix) -> BistochasticMatrix:
    """``A + cB`` or ``A - cB``, whichever has fewer nonzeros (``A - cB`` on ties)."""
    red = reduction_candidates(A)
    return BistochasticMatrix._trusted(red.chosen)


def support_permutation(A: BistochasticMatrix, trace: list | None = None) -> Permutation:
    """A permutation ``perm`` with ``A[k][perm[k]] != 0`` for every row ``k``.

    Entries equal to 1 fix their row and column, which are then masked out;
    otherwise the active block is reduced along an alternating cycle.  Each
    reduction's :class:`AlternatingCycle` is appended to ``trace`` if given.
    """
    A = check_bistochastic(A)
    n = A.order
    a = A.rows
    rows, cols = list(range(n)), list(range(n))
    images = [None] * n
    while rows:
        unit = next(((i, j) for i in rows for j in cols if a[i][j] == 1), None)
        if unit is not None:
            i, j = unit
            images[i] = j
            rows.remove(i)
            cols.remove(j)
            continue
        red = _reduce(a, rows, cols)
        if trace is not None:
            trace.append(red.cycle)
        a = red.chosen
    return Permutation(tuple(images))


@dataclass(frozen=True)
class Step:
    """One extraction: ``A = weight * P + (1 - weight) * residual``."""

    weight: Fraction
    perm: Permutation
    residual: BistochasticMatrix | None
    cycles: tuple[AlternatingCycle, ...] = ()

    @property
    def done(self) -> bool:
        return self.residual is None


def extract_step(A: BistochasticMatrix) -> Step:
    """Peel off the largest multiple of one support permutation.

    ``residual`` is ``None`` once ``A`` is itself a permutation matrix.
    """
    A = check_bistochastic(A)
    trace: list[AlternatingCycle] = []
    perm = support_permutation(A, trace)
    theta = min(A.rows[k][perm[k]] for k in range(A.order))
    if theta == 1:
        return Step(Fraction(1), perm, None, tuple(trace))
    scale = 1 - theta
    residual = tuple(
        tuple((x - theta if perm[i] == j else x) / scale for j, x in enumerate(r))
        for i, r in enumerate(A.rows)
    )
    return Step(theta, perm, BistochasticMatrix._trusted(residual), tuple(trace))


@dataclass(frozen=True)
class BirkhoffDecomposition:
    """``A = sum w_k P_k`` with positive weights summing to 1 and distinct permutations."""

    terms: tuple[tuple[Fraction, Permutation], ...]

    def __post_init__(self):
        terms = tuple((Fraction(w), p) for w, p in self.terms)
        object.__setattr__(self, "terms", terms)
        if not terms:
            raise DecompositionError("decomposition has no terms")
        n = terms[0][1].order
        for w, p in terms:
            if p.order != n:
                raise DecompositionError("permutations of different orders")
            if not 0 < w <= 1:
                raise DecompositionError(f"weight {format_rational(w)} outside (0, 1]")
        if len({p for _, p in terms}) != len(terms):
            raise DecompositionError("permutations must be pairwise distinct")
        total = sum((w for w, _ in terms), Fraction(0))
        if total != 1:
            raise DecompositionError(f"weights sum to {format_rational(total)}, not 1")

    @property
    def order(self) -> int:
        return self.terms[0][1].order

    @property
    def weights(self) -> list[Fraction]:
        return [w for w, _ in self.terms]

    @property
    def permutations(self) -> list[Permutation]:
        return [p for _, p in self.terms]

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)


def decompose_with_steps(A: BistochasticMatrix) -> tuple[BirkhoffDecomposition, list[Step]]:
    """Run :func:`birkhoff_decompose` and also return every extraction step."""
    A = check_bistochastic(A)
    steps: list[Step] = []
    terms = []
    mass = Fraction(1)
    current = A
    while True:
        step = extract_step(current)
        steps.append(step)
        terms.append((mass * step.weight, step.perm))
        if step.done:
            break
        mass *= 1 - step.weight
        current = step.residual
    return BirkhoffDecomposition(tuple(terms)), steps


def birkhoff_decompose(A: BistochasticMatrix) -> BirkhoffDecomposition:
    """Exact convex combination of permutation matrices equal to ``A``.

    Weights are absolute: the k-th term carries ``theta_k * prod_{l<k} (1 - theta_l)``.
    Every step zeroes at least one entry, so there are at most ``n^2 - 2n + 2`` terms.
    """
    return decompose_with_steps(A)[0]


def reconstruct(d: BirkhoffDecomposition, n: int | None = None) -> SquareMatrix:
    """``sum w_k P_k`` as a rational matrix."""
    n = d.order if n is None else n
    if n != d.order:
        raise DimensionError(f"decomposition has order {d.order}, asked for {n}")
    out = [[Fraction(0)] * n for _ in range(n)]
    for w, p in d.terms:
        for i in range(n):
            out[i][p[i]] += w
    return SquareMatrix(out, QQ)


def max_terms(n: int) -> int:
    return n * n - 2 * n + 2
