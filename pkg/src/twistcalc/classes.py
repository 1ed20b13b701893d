"""Formal bookkeeping for divided-power classes and the cocycles built from them.

Nothing here constructs an actual extension; a symbol carries its index,
degree, source and target and the list of divided-power factors it is
assembled from.  The laws these symbols obey are checked by
:func:`check_laws`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import combin
from .combin import CompMatrix


@dataclass(frozen=True)
class DividedPowerSymbol:
    k: int
    j: int
    p: int

    @property
    def degree(self) -> int:
        return 2 * self.j * self.k

    @property
    def is_unit(self) -> bool:
        return self.k == 0


def gamma(k: int, j: int, p: int) -> DividedPowerSymbol:
    if not 0 <= j < p:
        raise ValueError(f"basis index {j} outside 0..{p - 1}")
    if k < 0:
        raise ValueError("divided power exponent must be nonnegative")
    return DividedPowerSymbol(k, j, p)


@dataclass(frozen=True)
class CocycleSymbol:
    nu: CompMatrix
    p: int
    degree: int
    domain_index: CompMatrix
    codomain_index: CompMatrix
    factors: tuple[tuple[int, int, DividedPowerSymbol], ...]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.nu), len(self.nu[0])

    def to_json(self) -> dict:
        return {
            "nu": [list(r) for r in self.nu],
            "p": self.p,
            "degree": self.degree,
            "domain": [list(r) for r in self.domain_index],
            "codomain": [list(r) for r in self.codomain_index],
            "factors": [[i, j, f.k] for i, j, f in self.factors if not f.is_unit],
        }


def class_c(nu: Sequence[Sequence[int]], p: int) -> CocycleSymbol:
    mat = combin.as_matrix(nu)
    if len(mat[0]) != p:
        raise ValueError(f"expected {p} columns, got {len(mat[0])}")
    factors = tuple(
        (i, j, gamma(mat[i][j], j, p)) for i in range(len(mat)) for j in range(p)
    )
    degree = sum(f.degree for _, _, f in factors)
    assert degree == combin.weight_t(mat)
    return CocycleSymbol(mat, p, degree, combin.rowsum_p(mat, p), mat, factors)


def cup_compose(a: CocycleSymbol, b: CocycleSymbol) -> CocycleSymbol:
    """Cup product of two cocycle symbols, returned in normal form.

    The product of the classes indexed by two matrices is the class indexed
    by their sum, pulled back along the comultiplication; the assertions
    below are that identity at the level of symbols.
    """
    if a.p != b.p or a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape}/p={a.p} vs {b.shape}/p={b.p}")
    total = combin.matrix_add(a.nu, b.nu)
    out = class_c(total, a.p)
    assert out.degree == a.degree + b.degree, "degree is not additive"
    assert out.domain_index == combin.matrix_add(a.domain_index, b.domain_index)
    for (i, j, fa), (_, _, fb), (_, _, fo) in zip(a.factors, b.factors, out.factors):
        # gamma^x * gamma^y = binom(x+y, x) gamma^(x+y): same degree and slot
        assert fo.k == fa.k + fb.k and fo.degree == fa.degree + fb.degree
    return out


def phi_slot(
    nu: Sequence[Sequence[int]], ext_degree: int, basis_degs: Sequence[int], p: int
) -> tuple[CompMatrix, int]:
    """Where a source summand lands under the comparison map, and in which Ext degree."""
    c = class_c(nu, p)
    target = c.domain_index
    target_ext = ext_degree + c.degree
    s_src = combin.weight_s(c.nu, basis_degs)
    s_tgt = combin.weight_s(target, basis_degs)
    assert ext_degree + p * s_src + c.degree == target_ext + s_tgt, "total degree not conserved"
    return target, target_ext


@dataclass
class LawReport:
    d: int
    l: int
    p: int
    checked: int = 0
    failures: list[str] | None = None

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"d": self.d, "l": self.l, "p": self.p, "checked": self.checked, "failures": self.failures or [], "ok": self.ok}


def check_laws(d: int, l: int, p: int, basis_degs: Sequence[int] | None = None, max_ext: int = 2) -> LawReport:
    """Run every symbol law over all matrices of weight at most ``d``."""
    degs = list(basis_degs) if basis_degs is not None else [2 * i for i in range(l)]
    report = LawReport(d, l, p, 0, [])
    mats = [nu for a in range(d + 1) for nu in combin.comp_matrices(a, l, p)]
    zero = class_c(combin.comp_matrices(0, l, p)[0], p)

    def fail(msg: str) -> None:
        report.failures.append(msg)

    for nu in mats:
        c = class_c(nu, p)
        report.checked += 1
        if c.degree != combin.weight_t(nu):
            fail(f"degree of c_{nu} is {c.degree}, not t = {combin.weight_t(nu)}")
        if c.domain_index != combin.rowsum_p(nu, p):
            fail(f"domain of c_{nu} is not the row-sum image")
        if cup_compose(c, zero) != c:
            fail(f"zero class is not a unit for c_{nu}")
        for e in range(max_ext + 1):
            try:
                phi_slot(nu, e, degs, p)
            except AssertionError as exc:
                fail(f"phi_slot({nu}, {e}): {exc}")
    for lam in mats:
        for mu in mats:
            if combin.matrix_weight(lam) + combin.matrix_weight(mu) > d:
                continue
            a, b = class_c(lam, p), class_c(mu, p)
            report.checked += 1
            try:
                ab, ba = cup_compose(a, b), cup_compose(b, a)
            except AssertionError as exc:
                fail(f"cup({lam}, {mu}): {exc}")
                continue
            if ab != ba:
                fail(f"cup not commutative on {lam}, {mu}")
            if ab != class_c(combin.matrix_add(lam, mu), p):
                fail(f"cup({lam}, {mu}) differs from the class of the sum")
    return report
