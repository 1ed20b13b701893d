"""The acceptance suite, shared by ``twistcalc selftest`` and the test suite.

Each check returns a :class:`CriterionResult`; nothing here raises on a
failed comparison.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import product
from math import comb, factorial
from typing import Callable

import numpy as np

from . import combin, steinberg
from .budget import Budget, load_budget
from .classes import check_laws
from .errors import BudgetError, TwistcalcError
from .graded import GradedDims, dumps, frobenius_stretch, make_Er, shift, sum_all, sym_hilbert, tensor, total_dim
from .twist_engine import ExtTable, fit_polynomial, omega_poincare, periodic_remainder, untwist


@dataclass
class CriterionResult:
    number: int
    title: str
    ok: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} [{self.number:2d}] {self.title}: {self.detail} ({self.seconds:.2f}s)"

    def to_json(self) -> dict:
        return {"criterion": self.number, "title": self.title, "ok": self.ok, "detail": self.detail}


def random_table(rng: np.random.Generator, d: int, max_deg: int = 10, max_mult: int = 3) -> ExtTable:
    entries = {}
    for lam in combin.partitions(d):
        size = int(rng.integers(0, 4))
        degs = rng.integers(0, max_deg + 1, size=size)
        mults = rng.integers(1, max_mult + 1, size=size)
        g: dict[int, int] = {}
        for deg, mult in zip(degs, mults):
            g[int(deg)] = g.get(int(deg), 0) + int(mult)
        entries[lam] = GradedDims(g)
    return ExtTable(d, entries)


def count_integer_matrices(rows: tuple[int, ...], cols: tuple[int, ...]) -> int:
    """Nonnegative integer matrices with the given row and column sums, by enumeration."""
    if not rows:
        return int(not any(cols))
    total = 0
    for first in product(*(range(c + 1) for c in cols)):
        if sum(first) == rows[0]:
            total += count_integer_matrices(rows[1:], tuple(c - x for c, x in zip(cols, first)))
    return total


def _hand_expanded_sym(gen_dim: int, shifts: list[int], coh: int, poly: int) -> dict[tuple[int, int], int]:
    # pick j generators of each degree; C(g+j-1, j) monomials in g variables
    out: dict[tuple[int, int], int] = {}
    for picks in product(range(poly + 1), repeat=len(shifts)):
        u = sum(picks)
        c = sum(s * j for s, j in zip(shifts, picks))
        if u > poly or c > coh:
            continue
        ways = 1
        for j in picks:
            ways *= comb(gen_dim + j - 1, j)
        out[(c, u)] = out.get((c, u), 0) + ways
    return out


def _timed(number: int, title: str, fn: Callable[[], tuple[bool, str]]) -> CriterionResult:
    start = time.perf_counter()
    try:
        ok, detail = fn()
    except (TwistcalcError, ArithmeticError, ValueError, AssertionError) as exc:
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return CriterionResult(number, title, ok, detail, time.perf_counter() - start)


def criterion_1() -> CriterionResult:
    def run():
        start = time.perf_counter()
        for p, r in product((2, 3, 5), range(4)):
            g = make_Er(p, r)
            if set(g) != set(range(0, 2 * p**r, 2)) or set(g.values()) != {1} or total_dim(g) != p**r:
                return False, f"make_Er({p},{r}) = {g.to_json()}"
        elapsed = time.perf_counter() - start
        return elapsed < 1.0, "p in {2,3,5}, r <= 3" + ("" if elapsed < 1.0 else f" too slow: {elapsed:.2f}s")

    return _timed(1, "E_r table", run)


def criterion_2() -> CriterionResult:
    def run():
        for p, r in product((2, 3, 5), range(1, 4)):
            lhs = make_Er(p, r)
            rhs = tensor(frobenius_stretch(make_Er(p, r - 1), p), make_Er(p, 1))
            if lhs != rhs:
                return False, f"p={p}, r={r}: {lhs.to_json()} != {rhs.to_json()}"
        return True, "E_r = stretch(E_(r-1)) * E_1 for p in {2,3,5}, 1 <= r <= 3"

    return _timed(2, "factorization", run)


def criterion_3(stretch_goal: bool = True, budget: Budget | None = None) -> CriterionResult:
    from .schur_oracle import oracle_ext

    def run():
        start = time.perf_counter()
        got = oracle_ext("Fr(1)", "Fr(1)", 2, 6, budget=budget)
        elapsed = time.perf_counter() - start
        want = GradedDims({0: 1, 2: 1})
        if got != want:
            return False, f"S(2,2), p=2: {dumps(got)}"
        if elapsed >= 60:
            return False, f"S(2,2) took {elapsed:.1f}s"
        detail = f"S(2,2), p=2 -> {dumps(got)}"
        if stretch_goal:
            try:
                big = oracle_ext("Fr(1)", "Fr(1)", 3, 6, budget=budget)
            except BudgetError as exc:
                return True, detail + f"; stretch goal skipped ({exc})"
            if big != GradedDims({0: 1, 2: 1, 4: 1}):
                return False, detail + f"; S(3,3), p=3 -> {dumps(big)}"
            detail += f"; stretch S(3,3), p=3 -> {dumps(big)}"
        return True, detail

    return _timed(3, "Frobenius twist self-extensions", run)


def criterion_4(budget: Budget | None = None) -> CriterionResult:
    from .schur_oracle import crosscheck

    def run():
        table = ExtTable(1, {(1,): GradedDims({0: 1})})
        for p, r in product((2, 3), range(4)):
            got = untwist(table, p, r)
            if got != make_Er(p, r):
                return False, f"untwist at p={p}, r={r}: {got.to_json()}"
        report = crosscheck("Id", "Id", 2, 1, 6, budget=budget, strict=False)
        if not report.agree or report.engine != make_Er(2, 1):
            return False, f"oracle {report.oracle.to_json()} vs engine {report.engine.to_json()}"
        return True, "engine = E_r for p in {2,3}, r <= 3; oracle agrees at (2,1)"

    return _timed(4, "engine/oracle cross-check", run)


def criterion_5(seed: int = 0, count: int = 200) -> CriterionResult:
    def run():
        rng = np.random.default_rng(seed)
        for k in range(count):
            d = int(rng.integers(1, 5))
            p = int(rng.choice([2, 3]))
            r = int(rng.integers(0, 3))
            table = random_table(rng, d)
            result = untwist(table, p, r)
            e_d = table.lookup((d,))
            rest = periodic_remainder(result, e_d, d, p, r)
            rebuilt = sum_all([rest] + [shift(e_d, 2 * d * i) for i in range(p**r)])
            if rebuilt != result:
                return False, f"table {k}: reconstruction differs"
        return True, f"{count} random tables, seed {seed}"

    return _timed(5, "periodic remainder", run)


def criterion_6(seed: int = 0, count: int = 100) -> CriterionResult:
    def run():
        rng = np.random.default_rng(seed + 1)
        for k in range(count):
            d = int(rng.integers(1, 5))
            p = int(rng.choice([2, 3]))
            table = random_table(rng, d)
            poly = fit_polynomial(table, p, range(7))
            if poly.degree > d or not poly.is_integer_valued():
                return False, f"table {k}: {poly}"
            for r in range(7):
                if p**r >= d and poly(p**r) != total_dim(untwist(table, p, r, method="direct" if p**r <= 27 else "grouped")):
                    return False, f"table {k}: prediction at r={r} fails"
        return True, f"{count} random tables, seed {seed}"

    return _timed(6, "dimension polynomial", run)


def criterion_7(max_degree: int = 4, budget: Budget | None = None) -> CriterionResult:
    from .schur_oracle import build_schur_algebra, evaluate_functor, hom_dim, piece

    def run():
        checked = 0
        for D in range(1, max_degree + 1):
            A = build_schur_algebra(D, D, 2, budget=budget)
            mods = {}
            for lam in combin.partitions(D):
                mods["Div", lam] = evaluate_functor(piece("Div", lam), D, 2, algebra=A)
                mods["Sym", lam] = evaluate_functor(piece("Sym", lam), D, 2, algebra=A)
            for lam, mu in product(combin.partitions(D), repeat=2):
                got = hom_dim(mods["Div", lam], mods["Sym", mu])
                want = count_integer_matrices(lam, mu)
                checked += 1
                if got != want:
                    return False, f"D={D}, {lam} -> {mu}: {got} != {want}"
        return True, f"{checked} pairs over S(D,D), D <= {max_degree}, p=2"

    return _timed(7, "hom combinatorics", run)


def criterion_8() -> CriterionResult:
    def run():
        start = time.perf_counter()
        checked, failures = 0, []
        for d, l, p in product(range(4), (1, 2), (2, 3)):
            report = check_laws(d, l, p)
            checked += report.checked
            failures += report.failures or []
        elapsed = time.perf_counter() - start
        if failures:
            return False, failures[0]
        return elapsed < 1.0, f"{checked} checks" + ("" if elapsed < 1.0 else f" too slow: {elapsed:.2f}s")

    return _timed(8, "classes law suite", run)


def criterion_9() -> CriterionResult:
    def run():
        word = ["V0", "1", "V2"]
        orbit = [steinberg.format_word(w) for w in steinberg.orbit_mod_u(word, 5)]
        want_orbit = ["V0⊗V2^(2)", "V0^(1)⊗V2^(3)", "V0^(2)⊗V2^(4)", "V2⊗V0^(3)", "V2^(1)⊗V0^(4)"]
        shifts = steinberg.q_shifts(word, 5)
        names = steinberg.format_qshifts(shifts)
        bases = {q.base for q in shifts}
        if orbit != want_orbit:
            return False, f"orbit {orbit}"
        if names != ["V", "V^(1)", "V^(2)", "W", "W^(1)"] or ("V2", "1", "1", "V0") not in bases:
            return False, f"q-shifts {names}"
        return True, "orbit and q-shifts of V0⊗V2^(2) at u=5"

    return _timed(9, "Steinberg orbit", run)


def criterion_10() -> CriterionResult:
    def run():
        for d in range(1, 7):
            n = len(combin.pairings(2 * d))
            if n != factorial(2 * d) // (2**d * factorial(d)):
                return False, f"d={d}: {n} pairings"
        for p in (2, 3):
            if omega_poincare(1, GradedDims({0: 1}), p) != make_Er(p, 1):
                return False, f"omega_poincare at p={p}"
        return True, "pairing counts for d <= 6; omega at d=1 for p in {2,3}"

    return _timed(10, "pairing identity", run)


def criterion_11() -> CriterionResult:
    def run():
        got = dict(sym_hilbert(4, [0, 2], 4, 3).items())
        want = _hand_expanded_sym(4, [0, 2], 4, 3)
        return got == want, f"{len(want)} bigraded coefficients"

    return _timed(11, "symmetric algebra Hilbert series", run)


def run_all(quick: bool = False, seed: int = 0, budget: Budget | None = None) -> list[CriterionResult]:
    budget = budget or load_budget()
    return [
        criterion_1(),
        criterion_2(),
        criterion_3(stretch_goal=not quick, budget=budget),
        criterion_4(budget=budget),
        criterion_5(seed),
        criterion_6(seed),
        criterion_7(max_degree=3 if quick else 4, budget=budget),
        criterion_8(),
        criterion_9(),
        criterion_10(),
        criterion_11(),
    ]
