"""Untwisting formulas over composition-indexed decompositions.

An :class:`ExtTable` lists, for each partition ``lam`` of ``d``, the graded
dimensions of the Ext group against the ``lam``-multihomogeneous piece of
the target functor.  Evaluating it against a parameter space with ``k``
basis vectors of degrees ``s_1 <= ... <= s_k`` gives

    sum over mu in compositions(d, k) of table[sort(mu)] shifted by sum_i s_i mu_i.

For the Frobenius parameter space ``make_Er(p, r)`` the basis degrees are
``0, 2, ..., 2(p**r - 1)``.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np

from . import combin
from .combin import CompMatrix, Partition
from .errors import DegreeExceededError, MismatchError, MissingEntryError, NegativeCoefficientError
from .graded import GradedDims, basis_degrees, frobenius_stretch, make_Er, scale, sum_all, tensor_power
from .graded import tensor as gtensor
from .graded import total_dim


def _partition_key(text: str) -> Partition:
    text = text.strip()
    if text in ("", "0"):
        return ()
    return combin.strip_zeros(int(x) for x in text.split(","))


def partition_label(lam: Partition) -> str:
    return ",".join(str(x) for x in lam)


@dataclass(frozen=True)
class ExtTable:
    """Partition of ``d`` -> graded dimensions."""

    d: int
    entries: Mapping[Partition, GradedDims] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.d < 0:
            raise ValueError("d must be nonnegative")
        clean: dict[Partition, GradedDims] = {}
        for key, val in self.entries.items():
            lam = combin.strip_zeros(key)
            if list(lam) != sorted(lam, reverse=True) or any(x <= 0 for x in lam):
                raise ValueError(f"{key!r} is not a partition")
            if sum(lam) != self.d:
                raise ValueError(f"{key!r} is not a partition of {self.d}")
            clean[lam] = val if isinstance(val, GradedDims) else GradedDims(val)
        object.__setattr__(self, "entries", dict(sorted(clean.items(), reverse=True)))

    def lookup(self, lam: Sequence[int], sparse: bool = False) -> GradedDims:
        key = combin.strip_zeros(lam)
        if key in self.entries:
            return self.entries[key]
        if sparse:
            return GradedDims()
        raise MissingEntryError(f"no entry for partition ({partition_label(key)}) in table of degree {self.d}")

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "entries": {partition_label(k): v.to_json() for k, v in self.entries.items()},
        }

    @classmethod
    def from_json(cls, data: Mapping) -> ExtTable:
        entries = {_partition_key(k): GradedDims.from_json(v) for k, v in data.get("entries", {}).items()}
        return cls(int(data["d"]), entries)

    @classmethod
    def loads(cls, text: str) -> ExtTable:
        return cls.from_json(json.loads(text))


@dataclass(frozen=True)
class Decomposition:
    """Multiset of (index, shift) pairs, kept in enumeration order."""

    summands: tuple[tuple[tuple, int], ...]

    def __len__(self) -> int:
        return len(self.summands)

    def __iter__(self) -> Iterator[tuple[tuple, int]]:
        return iter(self.summands)

    def multiset(self) -> Counter:
        return Counter(self.summands)

    def shifts(self) -> list[int]:
        return [s for _, s in self.summands]

    def to_json(self) -> list:
        return [[_index_json(idx), s] for idx, s in self.summands]


def _index_json(idx: tuple) -> list:
    if idx and isinstance(idx[0], tuple):
        return [list(row) for row in idx]
    return list(idx)


def _even_basis(E: Mapping[int, int]) -> list[int]:
    odd = [deg for deg in E if deg % 2]
    if odd:
        raise ValueError(f"parameter space has odd degrees {odd}")
    return basis_degrees(E)


def param_decomposition(d: int, E: Mapping[int, int]) -> Decomposition:
    degs = _even_basis(E)
    if not degs:
        return Decomposition((((), 0),)) if d == 0 else Decomposition(())
    out = []
    for mu in combin.compositions(d, len(degs)):
        out.append((combin.partition_of(mu), sum(s * m for s, m in zip(degs, mu))))
    return Decomposition(tuple(out))


def untwist_general(table: ExtTable, E: Mapping[int, int], sparse: bool = False) -> GradedDims:
    """Evaluate the table against an arbitrary even parameter space by enumeration."""
    acc: dict[int, int] = {}
    for lam, s in param_decomposition(table.d, E):
        for deg, mult in table.lookup(lam, sparse).items():
            acc[deg + s] = acc.get(deg + s, 0) + mult
    return GradedDims(acc)


def _set_partitions(items: list[int]) -> Iterator[list[list[int]]]:
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        yield [[head]] + part
        for i in range(len(part)):
            yield part[:i] + [[head] + part[i]] + part[i + 1 :]


def slot_weight_series(lam: Partition, k: int) -> np.ndarray:
    """Coefficient ``e`` counts compositions in ``k`` slots sorting to ``lam``
    with ``sum_i i * mu_i == e`` (slots numbered from 0).

    Computed by Moebius inversion over set partitions of the parts, each
    block contributing a geometric series in the block's total.
    """
    parts = [v for v in lam if v]
    top = sum(parts) * (k - 1)
    total = np.zeros(top + 1, dtype=object)
    total[:] = 0
    for blocks in _set_partitions(list(range(len(parts)))):
        sign = 1
        sums = []
        for b in blocks:
            sign *= (-1) ** (len(b) - 1) * factorial(len(b) - 1)
            sums.append(sum(parts[i] for i in b))
        series = np.zeros(top + 1, dtype=object)
        series[:] = 0
        # numerator prod (1 - x^{c k})
        num = {0: 1}
        for c in sums:
            nxt: dict[int, int] = {}
            for e, v in num.items():
                nxt[e] = nxt.get(e, 0) + v
                if e + c * k <= top:
                    nxt[e + c * k] = nxt.get(e + c * k, 0) - v
            num = nxt
        for e, v in num.items():
            series[e] += v
        # divide by prod (1 - x^c): strided prefix sums
        for c in sums:
            for res in range(c):
                series[res::c] = np.cumsum(series[res::c])
        total += sign * series
    denom = 1
    for m in Counter(parts).values():
        denom *= factorial(m)
    out = total // denom
    assert all(x >= 0 for x in out) and all(x * denom == y for x, y in zip(out, total))
    return out


def untwist(
    table: ExtTable, p: int, r: int, sparse: bool = False, method: str = "grouped"
) -> GradedDims:
    """Ext of the Frobenius-twisted pair, from the untwisted table."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    k = p**r
    if method == "direct":
        acc: dict[int, int] = {}
        for mu in combin.compositions(table.d, k):
            s = sum(2 * i * m for i, m in enumerate(mu))
            for deg, mult in table.lookup(combin.partition_of(mu), sparse).items():
                acc[deg + s] = acc.get(deg + s, 0) + mult
        return GradedDims(acc)
    if method != "grouped":
        raise ValueError(f"unknown method {method!r}")
    pieces = []
    for lam in combin.partitions(table.d, max_parts=k):
        entry = table.lookup(lam, sparse)
        if not entry:
            continue
        series = slot_weight_series(lam, k)
        length = 2 * len(series) + entry.max_degree() + 1
        acc_arr = np.zeros(length, dtype=object)
        acc_arr[:] = 0
        for deg, mult in entry.items():
            acc_arr[deg : deg + 2 * len(series) : 2] += series * mult
        pieces.append({i: int(v) for i, v in enumerate(acc_arr) if v})
    return sum_all(pieces)


def periodic_remainder(result: Mapping[int, int], e_d: Mapping[int, int], d: int, p: int, r: int) -> GradedDims:
    """Subtract the ``p**r`` evenly spaced copies of ``e_d``."""
    acc = dict(result)
    for i in range(p**r):
        for deg, mult in e_d.items():
            acc[deg + 2 * d * i] = acc.get(deg + 2 * d * i, 0) - mult
    bad = {deg: v for deg, v in acc.items() if v < 0}
    if bad:
        raise NegativeCoefficientError(f"remainder negative in degrees {sorted(bad)}")
    return GradedDims(acc)


@dataclass(frozen=True)
class DimensionPolynomial:
    """Polynomial in q with rational coefficients, lowest degree first."""

    coeffs: tuple[Fraction, ...]

    @property
    def degree(self) -> int:
        nz = [i for i, c in enumerate(self.coeffs) if c]
        return nz[-1] if nz else -1

    def __call__(self, q: int | Fraction) -> Fraction:
        out = Fraction(0)
        for c in reversed(self.coeffs):
            out = out * q + c
        return out

    def is_integer_valued(self) -> bool:
        return all(self(x).denominator == 1 for x in range(max(self.degree, 0) + 1))

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs[: self.degree + 1]]

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"({c})" + ("" if i == 0 else "*q" if i == 1 else f"*q^{i}"))
        return " + ".join(terms) if terms else "0"


def _lagrange(points: Sequence[tuple[int, int]]) -> list[Fraction]:
    n = len(points)
    coeffs = [Fraction(0)] * n
    for i, (xi, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for t in range(len(basis) - 1):
                basis[t] -= xj * basis[t + 1]
            denom *= xi - xj
        for t in range(n):
            coeffs[t] += yi * basis[t] / denom
    return coeffs


def fit_polynomial(
    table: ExtTable,
    p: int,
    r_values: Iterable[int],
    sparse: bool = False,
    degree_bound: int | None = None,
) -> DimensionPolynomial:
    """Interpolate total dimension as a function of ``q = p**r``.

    The first ``d+1`` admissible values of ``r`` (those with ``p**r >= d``)
    fix the interpolant; every later value is a held-out check.
    """
    bound = table.d if degree_bound is None else degree_bound
    rs = sorted({r for r in r_values if p**r >= table.d})
    if len(rs) < table.d + 1:
        raise ValueError(f"need {table.d + 1} values of r with p^r >= {table.d}, got {len(rs)}")
    points = [(p**r, total_dim(untwist(table, p, r, sparse))) for r in rs]
    poly = DimensionPolynomial(tuple(_lagrange(points[: table.d + 1])))
    if poly.degree > bound:
        raise DegreeExceededError(f"interpolant has degree {poly.degree} > {bound}")
    for q, value in points[table.d + 1 :]:
        if poly(q) != value:
            raise MismatchError(f"prediction {poly(q)} at q={q} but direct value {value}")
    if not poly.is_integer_valued():
        raise MismatchError(f"interpolant {poly} is not integer-valued")
    return poly


def bifunctor_decomposition(d: int, E: Mapping[int, int], p: int, form: str = "source") -> Decomposition:
    """Matrix-indexed summands of the parametrized bifunctor.

    ``source`` reads the parameter as stretch(E)⊗E_1 (rows = basis of E,
    columns 0..p-1 = basis of E_1); ``target`` uses E directly in degree p*d.
    """
    degs = _even_basis(E)
    l = len(degs)
    if l == 0:
        raise ValueError("parameter space is zero")
    out = []
    if form == "source":
        for nu in combin.comp_matrices(d, l, p):
            out.append((nu, p * combin.weight_s(nu, degs) + combin.weight_t(nu)))
    elif form == "target":
        for mu in combin.comp_matrices(p * d, l, 1):
            out.append((mu, combin.weight_s(mu, degs)))
    else:
        raise ValueError(f"form must be 'source' or 'target', got {form!r}")
    return Decomposition(tuple(out))


def omega_poincare(d: int, E: Mapping[int, int], p: int) -> GradedDims:
    """Graded dimension of one copy of stretch(E)^{⊗d}⊗E_1^{⊗d} per pairing of 2d points."""
    one = gtensor(tensor_power(frobenius_stretch(E, p), d), tensor_power(make_Er(p, 1), d))
    return scale(one, len(combin.pairings(2 * d)))


def target_shift_of(nu: CompMatrix, degs: Sequence[int], p: int) -> int:
    """Shift carried by the target summand indexed by the row-sum image of ``nu``."""
    return combin.weight_s(combin.rowsum_p(nu, p), degs)


__all__ = [
    "ExtTable",
    "Decomposition",
    "DimensionPolynomial",
    "param_decomposition",
    "untwist",
    "untwist_general",
    "periodic_remainder",
    "fit_polynomial",
    "bifunctor_decomposition",
    "omega_poincare",
    "slot_weight_series",
    "partition_label",
]
