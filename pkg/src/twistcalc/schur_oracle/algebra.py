"""Schur algebras as commutants of place permutations.

The basis is the set of connected components of the equation graph
``X[sI, sJ] = X[I, J]`` (``s`` running over adjacent transpositions), i.e.
the solution space of the commutant system, each component giving a 0/1
operator on the tensor space.
"""

from __future__ import annotations

from functools import cached_property, lru_cache
from math import comb

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from ..budget import Budget, load_budget
from ..errors import DimensionMismatchError
from . import linalg
from .gf import GF, default_field_size, field


def multi_indices(n: int, D: int) -> np.ndarray:
    """Row ``I`` lists the digits of ``I`` in base ``n``, most significant first."""
    T = n**D
    idx = np.arange(T)
    return np.stack([(idx // n ** (D - 1 - t)) % n for t in range(D)], axis=1) if D else np.zeros((1, 0), dtype=np.int64)


def place_permutation(n: int, D: int, perm: tuple[int, ...]) -> np.ndarray:
    """Index map of the tensor-factor permutation sending slot t to slot perm[t]."""
    digits = multi_indices(n, D)
    moved = np.empty_like(digits)
    for t, s in enumerate(perm):
        moved[:, s] = digits[:, t]
    weights = n ** np.arange(D - 1, -1, -1)
    return moved @ weights


class SchurAlgebra:
    def __init__(self, n: int, D: int, p: int, q: int | None = None, budget: Budget | None = None):
        if n < 1 or D < 1:
            raise ValueError("need n >= 1 and D >= 1")
        self.budget = budget or load_budget()
        self.n, self.D, self.p = n, D, p
        self.q = q or default_field_size(p, D)
        self.F: GF = field(self.q)
        if self.F.p != p:
            raise ValueError(f"field size {self.q} is not a power of {p}")
        self.T = n**D
        self.budget.require("max_tensor_dim", self.T, f"tensor space dimension {n}^{D}")
        self.orbit_of, self.reps = self._solve_commutant()
        self.dim = len(self.reps)
        expected = comb(n * n + D - 1, D)
        if self.dim != expected:
            raise DimensionMismatchError(f"commutant has dimension {self.dim}, expected C({n * n + D - 1},{D}) = {expected}")

    def __repr__(self) -> str:
        return f"SchurAlgebra(n={self.n}, D={self.D}, p={self.p}, q={self.q})"

    # construction
    def _solve_commutant(self) -> tuple[np.ndarray, list[tuple[int, int]]]:
        T, D = self.T, self.D
        nodes = np.arange(T * T)
        I, J = nodes // T, nodes % T
        src, dst = [], []
        for t in range(D - 1):
            perm = list(range(D))
            perm[t], perm[t + 1] = perm[t + 1], perm[t]
            s = place_permutation(self.n, D, tuple(perm))
            src.append(nodes)
            dst.append(s[I] * T + s[J])
        if src:
            rows, cols = np.concatenate(src), np.concatenate(dst)
        else:
            rows = cols = np.zeros(0, dtype=np.int64)
        graph = coo_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(T * T, T * T))
        _, labels = connected_components(graph, directed=False)
        _, first = np.unique(labels, return_index=True)
        order = np.argsort(first)
        relabel = np.empty(len(order), dtype=np.int64)
        relabel[order] = np.arange(len(order))
        orbit_of = relabel[labels].reshape(T, T)
        reps = [(int(u // T), int(u % T)) for u in np.sort(first)]
        return orbit_of, reps

    @cached_property
    def digits(self) -> np.ndarray:
        return multi_indices(self.n, self.D)

    def count_matrix(self, b: int) -> tuple[tuple[int, ...], ...]:
        """n x n matrix counting slots with (row index, column index) in the orbit's representative."""
        I, J = self.reps[b]
        A = np.zeros((self.n, self.n), dtype=np.int64)
        for i, j in zip(self.digits[I], self.digits[J]):
            A[i, j] += 1
        return tuple(tuple(int(x) for x in row) for row in A)

    @cached_property
    def count_matrices(self) -> list[tuple[tuple[int, ...], ...]]:
        return [self.count_matrix(b) for b in range(self.dim)]

    @cached_property
    def weight_idempotents(self) -> list[int]:
        """Basis indices of the diagonal orbits (one per weight)."""
        return [b for b, A in enumerate(self.count_matrices) if all(A[i][j] == 0 for i in range(self.n) for j in range(self.n) if i != j)]

    @cached_property
    def one(self) -> np.ndarray:
        out = np.zeros(self.dim, dtype=np.int64)
        out[self.weight_idempotents] = 1
        return out

    @cached_property
    def generator_ids(self) -> list[int]:
        """Weight idempotents and the divided-power raising/lowering operators between adjacent indices."""
        out = []
        for b, A in enumerate(self.count_matrices):
            off = [(i, j) for i in range(self.n) for j in range(self.n) if i != j and A[i][j]]
            if not off or (len(off) == 1 and abs(off[0][0] - off[0][1]) == 1):
                out.append(b)
        return out

    def operator(self, x: np.ndarray) -> np.ndarray:
        """Matrix on the tensor space of the algebra element with coordinates ``x``."""
        return np.asarray(x, dtype=np.int64)[self.orbit_of]

    # multiplication
    @cached_property
    def structure_constants(self) -> np.ndarray:
        """C[a, b, c] = coefficient of basis element c in (a * b)."""
        N, T = self.dim, self.T
        self.budget.require("max_algebra_dim", N, f"dim S({self.n},{self.D})")
        Ireps = np.array([r[0] for r in self.reps])
        Jreps = np.array([r[1] for r in self.reps])
        a = self.orbit_of[Ireps, :]  # (N, T): orbit of (I_c, K)
        b = self.orbit_of[:, Jreps].T  # (N, T): orbit of (K, J_c)
        c = np.repeat(np.arange(N), T)
        C = np.zeros((N, N, N), dtype=np.int64)
        np.add.at(C, (a.ravel(), b.ravel(), c), 1)
        return C % self.p

    def left_matrix(self, x: np.ndarray) -> np.ndarray:
        """L with L @ y = x * y."""
        N = self.dim
        M = self.F.matmul_prime(np.asarray(x)[None, :], self.structure_constants.reshape(N, N * N)).reshape(N, N)
        return M.T

    def right_matrix(self, y: np.ndarray) -> np.ndarray:
        """R with R @ x = x * y."""
        N = self.dim
        Ct = self._transposed_constants
        M = self.F.matmul_prime(np.asarray(y)[None, :], Ct).reshape(N, N)
        return M.T

    @cached_property
    def _transposed_constants(self) -> np.ndarray:
        N = self.dim
        return np.ascontiguousarray(self.structure_constants.transpose(1, 0, 2)).reshape(N, N * N)

    def mul(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return self.F.matmul(self.left_matrix(x), np.asarray(y)[:, None])[:, 0]

    def left_actions(self) -> np.ndarray:
        """(N, N, N): left multiplication by each basis element, column convention."""
        return self.structure_constants.transpose(0, 2, 1)

    # radical
    @cached_property
    def radical(self) -> np.ndarray:
        """Row basis of the Jacobson radical (entries in the prime field).

        Uses the trace criterion over the integers: starting from the whole
        algebra, keep the x with (Tr((x y)^(p^i)) / p^i) = 0 mod p for all y,
        for i = 0 .. floor(log_p T), in the faithful tensor-space representation.
        """
        p, T, N = self.p, self.T, self.dim
        Fp = field(p)
        ell = 0
        while p ** (ell + 1) <= T:
            ell += 1
        X = np.eye(N, dtype=np.int64)
        stack = np.stack([(self.orbit_of == b) for b in range(N)]).astype(np.float64)
        for i in range(ell + 1):
            if X.shape[0] == 0:
                break
            mod = p ** (i + 1)
            if T * (mod - 1) ** 2 >= 2**53:
                raise OverflowError("trace criterion out of exact float range")
            G = np.zeros((X.shape[0], N), dtype=np.int64)
            for row, x in enumerate(X):
                Mx = x[self.orbit_of].astype(np.float64)
                Z = np.fmod(np.matmul(Mx[None], stack), mod)
                P = _matrix_power_mod(Z, p**i, mod)
                tr = np.round(np.einsum("bii->b", P)).astype(np.int64) % mod
                if np.any(tr % p**i):
                    raise ArithmeticError("trace not divisible; criterion precondition violated")
                G[row] = (tr // p**i) % p
            combos = linalg.left_kernel(Fp, G)
            X = linalg.row_basis(Fp, Fp.matmul(combos, X), N) if combos.shape[0] else np.zeros((0, N), dtype=np.int64)
        return X

    @cached_property
    def semisimple_dim(self) -> int:
        return self.dim - self.radical.shape[0]

    # idempotents
    @cached_property
    def primitive_idempotents(self) -> list[np.ndarray]:
        rng = np.random.default_rng(20240611)
        out: list[np.ndarray] = []
        work = []
        for b in self.weight_idempotents:
            e = np.zeros(self.dim, dtype=np.int64)
            e[b] = 1
            work.append(e)
        while work:
            e = work.pop()
            parts = self._split_idempotent(e, rng)
            if parts is None:
                out.append(e)
            else:
                work.extend(parts)
        out.sort(key=lambda v: tuple(-v))
        return out

    def _corner(self, e: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        F = self.F
        LR = F.matmul(self.left_matrix(e), self.right_matrix(e))
        corner = linalg.column_space(F, LR)
        J = self.radical
        rad = linalg.row_basis(F, F.matmul(J, LR.T), self.dim) if J.shape[0] else J
        return corner, rad

    def _split_idempotent(self, e: np.ndarray, rng: np.random.Generator):
        F = self.F
        corner, rad = self._corner(e)
        if corner.shape[0] - rad.shape[0] <= 1:
            return None
        base = linalg.row_basis(F, np.vstack([e[None, :], rad]), self.dim)
        base_rank = base.shape[0]
        candidates = list(corner)
        for _ in range(400):
            coeffs = F.random(rng, corner.shape[0])
            candidates.append(F.matmul(coeffs[None, :], corner)[0])
        for x in candidates:
            if linalg.rank(F, np.vstack([base, x[None, :]])) == base_rank:
                continue
            parts = self._split_by(e, x)
            if parts is not None:
                return parts
        raise RuntimeError("could not split a non-primitive idempotent")

    def _split_by(self, e: np.ndarray, x: np.ndarray):
        F = self.F
        powers = [e, x]
        Lx = self.left_matrix(x)
        while True:
            M = np.vstack(powers)
            if linalg.rank(F, M) < len(powers):
                break
            powers.append(F.matmul(Lx, powers[-1][:, None])[:, 0])
        rel = linalg.left_kernel(F, np.vstack(powers))
        rel = rel[np.nonzero(rel[:, -1])[0][0]]
        minpoly = [int(c) for c in F.mul(rel, F.inv(rel[-1]))]
        k = len(minpoly) - 1
        for lam in range(self.F.q):
            if F.poly_eval(minpoly, lam) != 0:
                continue
            lin = [int(F.neg(lam)), 1]
            f, g = [1], minpoly
            while True:
                quo, rem = F.poly_divmod(g, lin)
                if rem:
                    break
                f, g = F.poly_mul(f, lin), quo
            if len(g) <= 1:
                continue
            _, s, t = F.poly_xgcd(f, g)
            _, h = F.poly_divmod(F.poly_mul(t, g), minpoly)
            e1 = np.zeros(self.dim, dtype=np.int64)
            for i, c in enumerate(h):
                if c:
                    e1 = F.add(e1, F.mul(c, powers[i]))
            e2 = F.sub(e, e1)
            assert k >= 2
            if np.array_equal(self.mul(e1, e1), e1) and e1.any() and e2.any():
                return [e1, e2]
        return None

    @cached_property
    def block_classes(self) -> list[list[int]]:
        """Primitive idempotents grouped by isomorphism type of A e (indices into primitive_idempotents)."""
        F = self.F
        idem = self.primitive_idempotents
        J = self.radical
        jrank = J.shape[0]
        classes: list[list[int]] = []
        for i, e in enumerate(idem):
            for cls in classes:
                f = idem[cls[0]]
                span = F.matmul(self.left_matrix(e), self.right_matrix(f)).T  # rows: e b f
                if linalg.rank(F, np.vstack([J, span])) > jrank:
                    cls.append(i)
                    break
            else:
                classes.append([i])
        total = sum(len(c) ** 2 for c in classes)
        if total != self.semisimple_dim:
            raise ArithmeticError(f"semisimple quotient has dimension {self.semisimple_dim} but blocks give {total}")
        return classes

    @cached_property
    def basic_idempotents(self) -> list[np.ndarray]:
        return [self.primitive_idempotents[c[0]] for c in self.block_classes]


def _matrix_power_mod(Z: np.ndarray, k: int, mod: int) -> np.ndarray:
    result = None
    base = Z
    while k:
        if k & 1:
            result = base if result is None else np.fmod(np.matmul(result, base), mod)
        k >>= 1
        if k:
            base = np.fmod(np.matmul(base, base), mod)
    return result


@lru_cache(maxsize=32)
def _cached(n: int, D: int, p: int, q: int | None, budget: Budget) -> SchurAlgebra:
    return SchurAlgebra(n, D, p, q, budget)


def build_schur_algebra(n: int, D: int, p: int, q: int | None = None, budget: Budget | None = None) -> SchurAlgebra:
    """S(n, D) over GF(q); cached per parameter set."""
    return _cached(n, D, p, q or default_field_size(p, D), budget or load_budget())
