from itertools import product
from math import comb

import numpy as np
import pytest

from twistcalc import combin
from twistcalc.budget import Budget
from twistcalc.errors import BudgetError
from twistcalc.schur_oracle import linalg
from twistcalc.schur_oracle.algebra import SchurAlgebra, build_schur_algebra, place_permutation
from twistcalc.schur_oracle.gf import field


def dense_commutant_dim(n, D, p):
    """Dimension of the endomorphisms of the tensor space commuting with adjacent swaps."""
    T = n**D
    F = field(p)
    rows = []
    for t in range(D - 1):
        perm = list(range(D))
        perm[t], perm[t + 1] = perm[t + 1], perm[t]
        P = np.zeros((T, T), dtype=np.int64)
        P[place_permutation(n, D, tuple(perm)), np.arange(T)] = 1
        # vec(P X - X P) with row-major vec: (P kron I - I kron P^T)
        rows.append((np.kron(P, np.eye(T, dtype=np.int64)) - np.kron(np.eye(T, dtype=np.int64), P.T)) % p)
    if not rows:
        return T * T
    return linalg.nullspace(F, np.vstack(rows), T * T).shape[0]


@pytest.mark.parametrize("n,D", [(2, 2), (1, 3), (2, 1), (2, 3), (3, 2), (3, 3), (2, 4)])
def test_dimension_closed_form(n, D):
    A = build_schur_algebra(n, D, 2)
    assert A.dim == comb(n * n + D - 1, D)


@pytest.mark.parametrize("n,D,p", [(2, 2, 2), (2, 3, 3), (3, 2, 2)])
def test_commutant_matches_dense_solve(n, D, p):
    assert build_schur_algebra(n, D, p).dim == dense_commutant_dim(n, D, p)


@pytest.mark.parametrize("n,D,p", [(2, 2, 2), (3, 3, 3), (2, 3, 2)])
def test_multiplication_matches_operators(n, D, p):
    A = build_schur_algebra(n, D, p)
    rng = np.random.default_rng(n * 100 + D)
    F = A.F
    for _ in range(4):
        x = rng.integers(0, p, A.dim)
        y = rng.integers(0, p, A.dim)
        assert np.array_equal(A.operator(A.mul(x, y)), F.matmul(A.operator(x), A.operator(y)))
    assert np.array_equal(A.operator(A.one), np.eye(A.T, dtype=np.int64))


def test_basis_counts_are_weighted_matrices():
    A = build_schur_algebra(2, 3, 2)
    mats = A.count_matrices
    assert len(set(mats)) == A.dim
    assert all(sum(map(sum, m)) == 3 for m in mats)
    assert len(A.weight_idempotents) == len(combin.compositions(3, 2))


@pytest.mark.parametrize("n,D,p", [(2, 2, 2), (3, 3, 2), (3, 3, 3)])
def test_generators_generate(n, D, p):
    A = build_schur_algebra(n, D, p)
    F = A.F
    basis = np.eye(A.dim, dtype=np.int64)
    gens = basis[A.generator_ids]
    span = linalg.row_basis(F, np.vstack([gens, A.one[None, :]]), A.dim)
    while True:
        prods = np.vstack([F.matmul(span, A.right_matrix(g).T) for g in gens])
        grown = linalg.row_basis(F, np.vstack([span, prods]), A.dim)
        if grown.shape[0] == span.shape[0]:
            break
        span = grown
    assert span.shape[0] == A.dim


@pytest.mark.parametrize("n,D,p", [(2, 2, 2), (3, 3, 2), (3, 3, 3), (2, 2, 3)])
def test_radical_and_simples(n, D, p):
    A = build_schur_algebra(n, D, p)
    F = A.F
    J = A.radical
    # J is a two-sided ideal
    for g in A.generator_ids:
        e = np.zeros(A.dim, dtype=np.int64)
        e[g] = 1
        for side in (A.left_matrix(e), A.right_matrix(e)):
            assert linalg.rank(F, np.vstack([J, F.matmul(J, side.T)])) == J.shape[0]
    # J is nilpotent: J^k = span of x * j shrinks to zero
    N = A.dim
    C = A.structure_constants.reshape(N, N * N)
    power = J
    for _ in range(N):
        if power.shape[0] == 0:
            break
        left = F.matmul(power, C).reshape(-1, N, N)  # left[i, b, c]: (power_i * e_b) in e_c
        prods = np.einsum("bj,ibc->ijc", J.T, left).reshape(-1, N) % p
        power = linalg.row_basis(F, prods, N)
    assert power.shape[0] == 0
    # simple modules of S(n, D) with n >= D are labelled by partitions of D
    assert len(A.basic_idempotents) == len(combin.partitions(D))
    assert A.semisimple_dim + J.shape[0] == A.dim


def test_semisimple_cases():
    assert build_schur_algebra(2, 2, 3).radical.shape[0] == 0
    assert build_schur_algebra(2, 2, 2).radical.shape[0] > 0
    assert build_schur_algebra(1, 3, 2).dim == 1


def test_budget_refusal():
    tight = Budget(max_tensor_dim=8)
    with pytest.raises(BudgetError):
        SchurAlgebra(2, 4, 2, budget=tight)


def test_explicit_field_size():
    A = build_schur_algebra(2, 2, 2, q=8)
    assert A.q == 8 and A.dim == 10
    with pytest.raises(ValueError):
        build_schur_algebra(2, 2, 2, q=9)


def test_place_permutation_is_bijective():
    for perm in product(range(3), repeat=3):
        if len(set(perm)) == 3:
            assert sorted(place_permutation(2, 3, perm)) == list(range(8))
