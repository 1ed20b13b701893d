"""Minimal projective resolutions and Ext dimensions.

Indecomposable projectives are the left ideals ``A e`` for the basic
primitive idempotents ``e``.  A projective cover of ``M`` takes one copy of
``A e`` for each basis vector of ``e (M / rad M)``, and its kernel (the next
syzygy) is covered again.

Ext is computed by dimension shifting along ``0 -> Ω^k -> P_{k-1} -> Ω^{k-1} -> 0``::

    ext^k(M, N) = hom(Ω^k, N) - hom(P_{k-1}, N) + hom(Ω^{k-1}, N)

with ``hom(A e, N) = dim e N``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..graded import GradedDims
from . import linalg
from .algebra import SchurAlgebra
from .modules import ModuleRep, hom_dim


@dataclass
class Indecomposable:
    idempotent: np.ndarray
    basis: np.ndarray  # rows, algebra coordinates
    actions: np.ndarray  # (N, r, r), acting on column vectors

    @property
    def dim(self) -> int:
        return self.basis.shape[0]


def indecomposables(A: SchurAlgebra) -> list[Indecomposable]:
    """One indecomposable projective ``A e`` per isomorphism class."""
    cached = getattr(A, "_indecomposables", None)
    if cached is not None:
        return cached
    F, N = A.F, A.dim
    L = A.left_actions()  # L[a] @ x = a * x
    out = []
    for e in A.basic_idempotents:
        basis = linalg.column_space(F, A.right_matrix(e))
        coords = linalg.Coordinates.of(F, basis)
        r = basis.shape[0]
        images = np.stack([F.matmul_prime(basis, L[a].T) for a in range(N)])
        actions = coords(images.reshape(N * r, N)).reshape(N, r, r).transpose(0, 2, 1)
        out.append(Indecomposable(e, basis, np.ascontiguousarray(actions)))
    A._indecomposables = out
    return out


@dataclass
class CoverStep:
    """``P = ⊕_l A e_{classes[l]}``, summand ``l`` sent onto the submodule generated by ``generators[l]``."""

    classes: list[int]
    generators: np.ndarray
    offsets: list[int]
    dim: int


@dataclass
class Resolution:
    module: ModuleRep
    steps: list[CoverStep] = field(default_factory=list)
    syzygies: list[ModuleRep] = field(default_factory=list)  # syzygies[k] = Ω^k, syzygies[0] = M
    complete: bool = False

    @property
    def algebra(self) -> SchurAlgebra:
        return self.module.algebra

    def multiplicities(self) -> list[dict[int, int]]:
        out = []
        for s in self.steps:
            counts: dict[int, int] = {}
            for c in s.classes:
                counts[c] = counts.get(c, 0) + 1
            out.append(counts)
        return out

    def dims(self) -> list[int]:
        return [s.dim for s in self.steps]


def radical_of_module(M: ModuleRep) -> np.ndarray:
    """Basis (rows) of ``rad(A) M``."""
    A, F = M.algebra, M.algebra.F
    J = A.radical
    if J.shape[0] == 0 or M.dim == 0:
        return np.zeros((0, M.dim), dtype=np.int64)
    mats = M.act_many(J)
    cols = mats.transpose(1, 0, 2).reshape(M.dim, -1)
    return linalg.column_space(F, cols)


def _apply_each(F, mats: np.ndarray, vec: np.ndarray) -> np.ndarray:
    """Rows ``mats[i] @ vec``."""
    r, m, _ = mats.shape
    flat = mats.reshape(r * m, m)
    return F.matmul(flat, vec[:, None]).reshape(r, m)


def projective_cover(M: ModuleRep) -> tuple[CoverStep, np.ndarray]:
    """Minimal cover of ``M`` and the basis (rows) of its kernel in cover coordinates."""
    A, F = M.algebra, M.algebra.F
    pieces = indecomposables(A)
    current = radical_of_module(M)
    classes, gens = [], []
    everything = M.actions  # full module: one matrix per basis element
    for ci, piece in enumerate(pieces):
        for v in linalg.column_space(F, M.act(piece.idempotent)):
            trial = np.vstack([current, v[None, :]])
            if linalg.rank(F, trial) > current.shape[0]:
                generated = _apply_each(F, everything, v)
                current = linalg.row_basis(F, np.vstack([current, generated]), M.dim)
                classes.append(ci)
                gens.append(v)
    if current.shape[0] != M.dim:
        raise ArithmeticError("idempotents do not cover the module top")
    offsets, total = [], 0
    for ci in classes:
        offsets.append(total)
        total += pieces[ci].dim
    A.budget.require("max_module_dim", total, "projective cover dimension")
    image = np.zeros((total, M.dim), dtype=np.int64)
    for l, ci in enumerate(classes):
        image[offsets[l] : offsets[l] + pieces[ci].dim] = _apply_each(F, M.act_many(pieces[ci].basis), gens[l])
    if linalg.rank(F, image) != M.dim:
        raise ArithmeticError("cover map is not surjective")
    kernel = linalg.left_kernel(F, image)
    step = CoverStep(classes, np.array(gens, dtype=np.int64).reshape(len(gens), M.dim), offsets, total)
    return step, kernel


def kernel_module(A: SchurAlgebra, step: CoverStep, kernel: np.ndarray) -> ModuleRep:
    F, N = A.F, A.dim
    pieces = indecomposables(A)
    k = kernel.shape[0]
    if k == 0:
        return ModuleRep(A, 0, np.zeros((N, 0, 0), dtype=np.int64), tuple(range(N)), "0")
    A.budget.require("max_module_dim", k, "syzygy dimension")
    images = np.zeros((N, k, step.dim), dtype=np.int64)
    for l, ci in enumerate(step.classes):
        lo, hi = step.offsets[l], step.offsets[l] + pieces[ci].dim
        blk = kernel[:, lo:hi]
        for a in range(N):
            images[a, :, lo:hi] = F.matmul(blk, pieces[ci].actions[a].T)
    coords = linalg.Coordinates.of(F, kernel)
    rho = coords(images.reshape(N * k, step.dim)).reshape(N, k, k).transpose(0, 2, 1)
    return ModuleRep(A, k, np.ascontiguousarray(rho), tuple(range(N)), "syzygy")


def minimal_resolution(M: ModuleRep, length: int) -> Resolution:
    """Terms ``P_0 .. P_length`` of a minimal projective resolution."""
    A = M.algebra
    A.budget.require("max_resolution_length", length, "resolution length")
    if not M.is_full:
        raise ValueError("resolution needs the action of every basis element")
    res = Resolution(M, syzygies=[M])
    current = M
    for _ in range(length + 1):
        if current.dim == 0:
            res.complete = True
            break
        step, kernel = projective_cover(current)
        res.steps.append(step)
        current = kernel_module(A, step, kernel)
        res.syzygies.append(current)
    else:
        res.complete = current.dim == 0
    return res


def idempotent_rank(N: ModuleRep, e: np.ndarray) -> int:
    return linalg.rank(N.algebra.F, N.act(e))


def ext_dims(M: ModuleRep, N: ModuleRep, maxdeg: int) -> GradedDims:
    """Dimensions of Ext^k(M, N) for ``0 <= k <= maxdeg``."""
    if M.algebra is not N.algebra:
        raise ValueError("modules over different algebras")
    if not N.is_full:
        raise ValueError("target module needs the action of every basis element")
    res = minimal_resolution(M, max(maxdeg - 1, 0))
    pieces = indecomposables(M.algebra)
    proj_hom = [idempotent_rank(N, x.idempotent) for x in pieces]
    homs = [hom_dim(S, N) for S in res.syzygies]
    out = {0: homs[0]}
    for k in range(1, maxdeg + 1):
        if k >= len(homs):
            break  # the resolution stopped: higher Ext vanishes
        p_hom = sum(proj_hom[c] for c in res.steps[k - 1].classes)
        out[k] = homs[k] - p_hom + homs[k - 1]
    return GradedDims(out)


def ext_from_multiplicities(M: ModuleRep, simple_class: int, maxdeg: int) -> GradedDims:
    """Ext^k(M, L) for the simple top ``L`` of a basic projective: its multiplicity in ``P_k``."""
    res = minimal_resolution(M, maxdeg)
    mult = res.multiplicities()
    return GradedDims({k: mult[k].get(simple_class, 0) for k in range(min(maxdeg + 1, len(mult)))})
