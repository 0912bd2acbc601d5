# Exact Birkhoff decomposition of a doubly stochastic matrix.
#
# Each extraction first finds a permutation inside the support by shrinking the
# support along alternating cycles; no bipartite matching is used.

from fractions import Fraction as F

from cayley_birkhoff import (
    birkhoff_decompose, find_alternating_cycle, perturbation_matrix, reconstruct,
    reduce_support,
)
from cayley_birkhoff.birkhoff import decompose_with_steps, reduction_candidates


def show(rows):
    for r in rows:
        print("   ", "  ".join(f"{str(x):>5}" for x in r))


A = [[F(1, 3)] * 3 for _ in range(3)]
cycle = find_alternating_cycle(A)
print("cycle rows", cycle.rows, "cols", cycle.cols)
print("B =", perturbation_matrix(cycle, 3).rows())

red = reduction_candidates(A)
print("c =", red.step)
print("A + cB:"); show(red.plus)
print("A - cB:"); show(red.minus)
print("kept:"); show(reduce_support(A).rows)

A = [
    [F(1, 2), F(1, 4), F(1, 4), F(0)],
    [F(1, 6), F(1, 2), F(0), F(1, 3)],
    [F(1, 3), F(0), F(1, 2), F(1, 6)],
    [F(0), F(1, 4), F(1, 4), F(1, 2)],
]
d, steps = decompose_with_steps(A)
print(f"\n{len(d)} terms:")
for (w, p), s in zip(d, steps):
    print(f"  weight {str(w):>6}  perm {p.one_based()}  cycles used: {len(s.cycles)}")
print("sum of weights:", sum(d.weights))
print("reconstruction matches:", reconstruct(d).tolist() == A)
