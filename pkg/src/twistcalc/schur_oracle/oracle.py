"""Ext tables for the untwisting engine, and the engine/oracle cross-check."""

from __future__ import annotations

from dataclasses import dataclass

from .. import combin
from ..budget import Budget, load_budget
from ..errors import CrosscheckError
from ..graded import GradedDims
from ..twist_engine import ExtTable, untwist
from .algebra import build_schur_algebra
from .functors import Compose, Div, Ext, Fr, FunctorExpr, Id, Sym, Ten, parse
from .modules import evaluate_functor, hom_dim
from .resolution import ext_dims

FAMILIES = {"Sym": Sym, "Div": Div, "Ext": Ext}


def piece(family: str, lam: tuple[int, ...]) -> FunctorExpr:
    """The ``lam``-multihomogeneous piece of an exponential functor, on the diagonal."""
    if family == "Id":
        if tuple(lam) != (1,):
            raise ValueError("Id only has the piece (1)")
        return Id()
    try:
        make = FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}; use Id, Sym, Div or Ext") from None
    parts = [make(a) for a in lam]
    return parts[0] if len(parts) == 1 else Ten(tuple(parts))


def twisted(e: FunctorExpr, r: int) -> FunctorExpr:
    if r == 0:
        return e
    return Fr(r) if isinstance(e, Id) else Compose(e, Fr(r))


def oracle_ext(
    left: FunctorExpr | str,
    right: FunctorExpr | str,
    p: int,
    maxdeg: int,
    n: int | None = None,
    q: int | None = None,
    budget: Budget | None = None,
) -> GradedDims:
    left = parse(left) if isinstance(left, str) else left
    right = parse(right) if isinstance(right, str) else right
    D = left.degree(p)
    if right.degree(p) != D:
        raise ValueError(f"degrees differ: {left} has {D}, {right} has {right.degree(p)}")
    n = D if n is None else n
    A = build_schur_algebra(n, D, p, q, budget or load_budget())
    if maxdeg == 0 and A.dim > A.budget.max_algebra_dim:
        # degree zero is Hom, which only needs the generator actions
        M = evaluate_functor(left, n, p, algebra=A, generators_only=True)
        N = evaluate_functor(right, n, p, algebra=A, generators_only=True)
        return GradedDims({0: hom_dim(M, N)})
    A.budget.require("max_algebra_dim", A.dim, f"Schur algebra S({n},{D}) dimension")
    M = evaluate_functor(left, n, p, algebra=A)
    N = evaluate_functor(right, n, p, algebra=A)
    return ext_dims(M, N, maxdeg)


def oracle_table(
    left: FunctorExpr | str,
    family: str,
    p: int,
    maxdeg: int,
    n: int | None = None,
    budget: Budget | None = None,
) -> ExtTable:
    """``lam -> Ext^{<=maxdeg}(left, G_lam)`` for every partition of ``deg(left)``."""
    left = parse(left) if isinstance(left, str) else left
    d = left.degree(p)
    entries = {lam: oracle_ext(left, piece(family, lam), p, maxdeg, n, budget=budget) for lam in combin.partitions(d)}
    return ExtTable(d, entries)


def truncate(g: GradedDims, maxdeg: int) -> GradedDims:
    return GradedDims({k: v for k, v in g.items() if k <= maxdeg})


@dataclass(frozen=True)
class CrosscheckReport:
    left: str
    family: str
    p: int
    r: int
    maxdeg: int
    table: ExtTable
    engine: GradedDims
    oracle: GradedDims

    @property
    def agree(self) -> bool:
        return self.engine == self.oracle

    def to_json(self) -> dict:
        return {
            "left": self.left,
            "family": self.family,
            "p": self.p,
            "r": self.r,
            "maxdeg": self.maxdeg,
            "table": self.table.to_json(),
            "engine": self.engine.to_json(),
            "oracle": self.oracle.to_json(),
            "agree": self.agree,
        }


def crosscheck(
    left: FunctorExpr | str,
    family: str,
    p: int,
    r: int,
    maxdeg: int,
    budget: Budget | None = None,
    strict: bool = True,
) -> CrosscheckReport:
    """Compare the untwisted table pushed through the engine with a direct twisted computation."""
    left = parse(left) if isinstance(left, str) else left
    d = left.degree(p)
    table = oracle_table(left, family, p, maxdeg, budget=budget)
    engine = truncate(untwist(table, p, r), maxdeg)
    oracle = oracle_ext(twisted(left, r), twisted(piece(family, (d,)), r), p, maxdeg, budget=budget)
    report = CrosscheckReport(str(left), family, p, r, maxdeg, table, engine, oracle)
    if strict and not report.agree:
        raise CrosscheckError(f"engine {engine.to_json()} != oracle {oracle.to_json()} for {left}, {family}, p={p}, r={r}")
    return report
