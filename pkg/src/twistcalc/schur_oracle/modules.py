"""Modules over a Schur algebra given by action matrices."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import csr_matrix

from ..budget import Budget, load_budget
from . import linalg
from .algebra import SchurAlgebra, build_schur_algebra
from .functors import FunctorExpr, Subquotient, parse, realize


@dataclass
class ModuleRep:
    """Action of algebra basis elements ``ids[k]`` is ``actions[k]`` (acting on column vectors)."""

    algebra: SchurAlgebra
    dim: int
    actions: np.ndarray
    ids: tuple[int, ...]
    label: str = ""
    _pos: dict = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        self._pos = {b: k for k, b in enumerate(self.ids)}

    @property
    def is_full(self) -> bool:
        return len(self.ids) == self.algebra.dim

    def action(self, b: int) -> np.ndarray:
        return self.actions[self._pos[b]]

    def restricted(self, ids: list[int]) -> np.ndarray:
        return self.actions[[self._pos[b] for b in ids]]

    def act(self, x: np.ndarray) -> np.ndarray:
        """Matrix of a general algebra element."""
        return self.act_many(np.asarray(x)[None, :])[0]

    def act_many(self, X: np.ndarray) -> np.ndarray:
        if not self.is_full:
            raise ValueError("module carries actions for generators only")
        m = self.dim
        X = np.asarray(X, dtype=np.int64)
        if m == 0:
            return np.zeros((X.shape[0], 0, 0), dtype=np.int64)
        return self.algebra.F.matmul(X, self.actions.reshape(len(self.ids), m * m)).reshape(-1, m, m)

    def spot_check(self, rng: np.random.Generator, trials: int = 5) -> bool:
        """rho(a) rho(b) == rho(a*b) on random basis pairs."""
        A, F = self.algebra, self.algebra.F
        for _ in range(trials):
            a, b = (int(x) for x in rng.integers(0, A.dim, size=2))
            ea = np.zeros(A.dim, dtype=np.int64)
            eb = np.zeros(A.dim, dtype=np.int64)
            ea[a] = 1
            eb[b] = 1
            if not np.array_equal(F.matmul(self.action(a), self.action(b)), self.act(A.mul(ea, eb))):
                return False
        return True


def apply_basis(A: SchurAlgebra, ids: list[int], R: np.ndarray, chunk_entries: int = 4_000_000) -> np.ndarray:
    """(len(ids), rows of R, T): basis operators applied to each row of R."""
    T, F = A.T, A.F
    R = np.asarray(R, dtype=np.int64)
    rows = R.shape[0]
    out = np.zeros((len(ids), rows, T), dtype=np.int64)
    if rows == 0 or not ids:
        return out
    step = max(1, chunk_entries // max(T * rows, 1))
    digits = F.digits(R).astype(np.float64)
    for start in range(0, len(ids), step):
        part = list(ids[start : start + step])
        pos = np.full(A.dim, -1, dtype=np.int64)
        pos[part] = np.arange(len(part))
        oo = pos[A.orbit_of.ravel()]
        keep = np.nonzero(oo >= 0)[0]
        big = csr_matrix((np.ones(len(keep)), (oo[keep] * T + keep // T, keep % T)), shape=(len(part) * T, T))
        outs = [np.fmod(np.asarray(big @ d.T), F.p).astype(np.int64) for d in digits]
        block = F.from_digits(np.stack(outs))  # (len(part)*T, rows)
        out[start : start + len(part)] = block.reshape(len(part), T, rows).transpose(0, 2, 1)
    return out


def module_from_subquotient(
    A: SchurAlgebra, sq: Subquotient, ids: list[int] | None = None, label: str = "", verify: bool = True
) -> ModuleRep:
    F = A.F
    ids = list(range(A.dim)) if ids is None else list(ids)
    ker = linalg.row_basis(F, sq.ker, sq.ambient)
    reps = linalg.complement(F, ker, sq.sub, sq.ambient)
    m, k = reps.shape[0], ker.shape[0]
    A.budget.require("max_module_dim", m, f"module {label or '?'} dimension")
    basis = np.vstack([ker, reps])
    coords = linalg.Coordinates.of(F, basis)
    images = apply_basis(A, ids, reps).reshape(len(ids) * m, A.T)
    c = coords(images, check=verify)
    rho = c[:, k:].reshape(len(ids), m, m).transpose(0, 2, 1)
    if verify and k:
        # generators preserving the kernel suffice
        gens = A.generator_ids
        kimg = apply_basis(A, gens, ker).reshape(len(gens) * k, A.T)
        if np.any(coords(kimg)[:, k:]):
            raise ArithmeticError(f"kernel of {label} is not a submodule")
    return ModuleRep(A, m, np.ascontiguousarray(rho), tuple(ids), label)


def evaluate_functor(
    expr: FunctorExpr | str,
    n: int,
    p: int,
    q: int | None = None,
    algebra: SchurAlgebra | None = None,
    generators_only: bool = False,
    allow_unstable: bool = False,
    budget: Budget | None = None,
) -> ModuleRep:
    """The value of a functor expression on GF(q)^n with its Schur algebra action."""
    e = parse(expr) if isinstance(expr, str) else expr
    D = e.degree(p)
    if n < D and not allow_unstable:
        raise ValueError(f"n = {n} is below the degree {D} of {e}")
    if algebra is None:
        algebra = build_schur_algebra(n, D, p, q, budget or load_budget())
    elif (algebra.n, algebra.D, algebra.p) != (n, D, p):
        raise ValueError(f"{e} has degree {D}, algebra is {algebra}")
    sq = realize(e, n, algebra.F)
    if algebra.dim > algebra.budget.max_algebra_dim:
        generators_only = True
    ids = algebra.generator_ids if generators_only else None
    return module_from_subquotient(algebra, sq, ids, label=str(e))


def hom_dim_dense(M: ModuleRep, N: ModuleRep) -> int:
    """Hom dimension from the full commutation system on every generator."""
    if M.algebra is not N.algebra:
        raise ValueError("modules over different algebras")
    A, F = M.algebra, M.algebra.F
    m, n = M.dim, N.dim
    if m == 0 or n == 0:
        return 0
    unknowns = m * n
    rows = np.zeros((0, unknowns), dtype=np.int64)
    eye_m, eye_n = np.eye(m, dtype=np.int64), np.eye(n, dtype=np.int64)
    for b in A.generator_ids:
        # X (n x m) row-major: rho_N X - X rho_M
        eq = F.sub(F.kron(N.action(b), eye_m), F.kron(eye_n, M.action(b).T))
        rows = linalg.row_basis(F, np.vstack([rows, eq]), unknowns)
        if rows.shape[0] == unknowns:
            break
    return unknowns - rows.shape[0]


@dataclass
class WeightFrame:
    """Basis adapted to the weight decomposition: ``to_frame @ v`` gives weight-ordered coordinates."""

    sizes: list[int]
    offsets: list[int]
    basis: np.ndarray  # columns
    to_frame: np.ndarray

    def conjugate(self, F, X: np.ndarray) -> np.ndarray:
        return F.matmul(F.matmul(self.to_frame, X), self.basis)


def weight_frame(M: ModuleRep) -> WeightFrame:
    A, F = M.algebra, M.algebra.F
    cols, sizes, offsets, total = [], [], [], 0
    for b in A.weight_idempotents:
        space = linalg.column_space(F, M.action(b))
        cols.append(space)
        sizes.append(space.shape[0])
        offsets.append(total)
        total += space.shape[0]
    if total != M.dim:
        raise ArithmeticError("weight spaces do not add up to the module")
    basis = np.vstack(cols).T if M.dim else np.zeros((0, 0), dtype=np.int64)
    return WeightFrame(sizes, offsets, basis, linalg.inverse(F, basis) if M.dim else basis)


def raising_lowering_sums(A: SchurAlgebra) -> list[list[int]]:
    """Non-idempotent generators grouped by their off-diagonal entry."""
    groups: dict[tuple, list[int]] = {}
    for b in A.generator_ids:
        cm = A.count_matrices[b]
        off = tuple((i, j, cm[i][j]) for i in range(A.n) for j in range(A.n) if i != j and cm[i][j])
        if off:
            groups.setdefault(off, []).append(b)
    return [groups[k] for k in sorted(groups)]


def hom_dim(M: ModuleRep, N: ModuleRep, chunk_rows: int | None = None) -> int:
    """Dimension of the space of module maps M -> N.

    Maps are block-diagonal in weight-adapted bases, and commuting with the
    weight idempotents and the sum of each generator family is equivalent to
    commuting with every generator.
    """
    if M.algebra is not N.algebra:
        raise ValueError("modules over different algebras")
    A, F = M.algebra, M.algebra.F
    if M.dim == 0 or N.dim == 0:
        return 0
    fm, fn = weight_frame(M), weight_frame(N)
    nw = len(fm.sizes)
    # unknown block for weight w is X_w of shape (fn.sizes[w], fm.sizes[w]), row-major
    ublock, U = [], 0
    for w in range(nw):
        ublock.append(U)
        U += fn.sizes[w] * fm.sizes[w]
    if U == 0:
        return 0
    chunk_rows = chunk_rows or max(2 * U, 256)
    basis = np.zeros((0, U), dtype=np.int64)
    pending: list[np.ndarray] = []
    pending_rows = 0

    def flush() -> None:
        nonlocal basis, pending, pending_rows
        if pending:
            basis = linalg.row_basis(F, np.vstack([basis] + pending), U)
            pending, pending_rows = [], 0

    for family in raising_lowering_sums(A):
        Mg = fm.conjugate(F, F.sum(np.stack([M.action(b) for b in family]), axis=0))
        Ng = fn.conjugate(F, F.sum(np.stack([N.action(b) for b in family]), axis=0))
        for wt in range(nw):  # target weight
            for ws in range(nw):  # source weight
                nt, ns = fn.sizes[wt], fn.sizes[ws]
                mt, ms = fm.sizes[wt], fm.sizes[ws]
                Nblk = Ng[fn.offsets[wt] : fn.offsets[wt] + nt, fn.offsets[ws] : fn.offsets[ws] + ns]
                Mblk = Mg[fm.offsets[wt] : fm.offsets[wt] + mt, fm.offsets[ws] : fm.offsets[ws] + ms]
                if nt * ms == 0 or (not Nblk.any() and not Mblk.any()):
                    continue
                # (N_g X - X M_g) block (wt, ws) = Nblk X_ws - X_wt Mblk, shape nt x ms
                eq = np.zeros((nt * ms, U), dtype=np.int64)
                if ns * ms:
                    eq[:, ublock[ws] : ublock[ws] + ns * ms] = F.kron(Nblk, np.eye(ms, dtype=np.int64))
                if nt * mt:
                    part = F.kron(np.eye(nt, dtype=np.int64), Mblk.T)
                    cur = eq[:, ublock[wt] : ublock[wt] + nt * mt]
                    eq[:, ublock[wt] : ublock[wt] + nt * mt] = F.sub(cur, part)
                eq = eq[np.any(eq, axis=1)]
                if eq.shape[0]:
                    pending.append(eq)
                    pending_rows += eq.shape[0]
                if pending_rows >= chunk_rows:
                    flush()
                    if basis.shape[0] == U:
                        return 0
    flush()
    return U - basis.shape[0]


def hom_space(M: ModuleRep, N: ModuleRep) -> np.ndarray:
    """Basis of Hom(M, N) as flattened n x m matrices (rows)."""
    A, F = M.algebra, M.algebra.F
    m, n = M.dim, N.dim
    eqs = [F.sub(F.kron(N.action(b), np.eye(m, dtype=np.int64)), F.kron(np.eye(n, dtype=np.int64), M.action(b).T)) for b in A.generator_ids]
    return linalg.nullspace(F, np.vstack(eqs), m * n)
