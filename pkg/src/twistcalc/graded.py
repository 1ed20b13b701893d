"""Graded dimensions (Poincare data) of graded vector spaces.

A :class:`GradedDims` records, for every degree, how many basis vectors
live there.  Zero multiplicities are never stored, so two values compare
equal exactly when they describe isomorphic graded spaces.

>>> make_Er(2, 1)
GradedDims({0: 1, 2: 1})
>>> tensor(frobenius_stretch(make_Er(2, 1), 2), make_Er(2, 1)) == make_Er(2, 2)
True
"""

from __future__ import annotations

import json
from math import comb
from typing import Iterable, Iterator, Mapping


class GradedDims(Mapping[int, int]):
    """Immutable finite-support map degree -> positive multiplicity."""

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[int, int] = {}
        for deg, mult in items:
            deg, mult = int(deg), int(mult)
            if deg < 0:
                raise ValueError(f"negative degree {deg}")
            if mult < 0:
                raise ValueError(f"negative multiplicity {mult} in degree {deg}")
            if mult:
                acc[deg] = acc.get(deg, 0) + mult
        self._coeffs = dict(sorted(acc.items()))
        self._hash: int | None = None

    def __getitem__(self, deg: int) -> int:
        return self._coeffs[deg]

    def get(self, deg: int, default: int = 0) -> int:  # type: ignore[override]
        return self._coeffs.get(deg, default)

    def __iter__(self) -> Iterator[int]:
        return iter(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GradedDims):
            return self._coeffs == other._coeffs
        if isinstance(other, Mapping):
            return self._coeffs == GradedDims(other)._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._coeffs.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"GradedDims({self._coeffs})"

    def __add__(self, other: GradedDims) -> GradedDims:
        return direct_sum(self, other)

    def __mul__(self, other: GradedDims) -> GradedDims:
        return tensor(self, other)

    def max_degree(self) -> int:
        return max(self._coeffs) if self._coeffs else -1

    def to_json(self) -> dict[str, int]:
        return {str(k): v for k, v in self._coeffs.items()}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> GradedDims:
        return cls({int(k): int(v) for k, v in data.items()})


ZERO = GradedDims()
UNIT = GradedDims({0: 1})


def direct_sum(a: Mapping[int, int], b: Mapping[int, int]) -> GradedDims:
    out = dict(a)
    for deg, mult in b.items():
        out[deg] = out.get(deg, 0) + mult
    return GradedDims(out)


def sum_all(parts: Iterable[Mapping[int, int]]) -> GradedDims:
    out: dict[int, int] = {}
    for part in parts:
        for deg, mult in part.items():
            out[deg] = out.get(deg, 0) + mult
    return GradedDims(out)


def scale(a: Mapping[int, int], factor: int) -> GradedDims:
    if factor < 0:
        raise ValueError("negative scale factor")
    return GradedDims({deg: factor * mult for deg, mult in a.items()})


def tensor(a: Mapping[int, int], b: Mapping[int, int]) -> GradedDims:
    """Degree convolution."""
    out: dict[int, int] = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = out.get(i + j, 0) + x * y
    return GradedDims(out)


def tensor_power(a: Mapping[int, int], k: int) -> GradedDims:
    out = UNIT
    for _ in range(k):
        out = tensor(out, a)
    return out


def shift(a: Mapping[int, int], s: int) -> GradedDims:
    if s < 0:
        raise ValueError("shift must be nonnegative")
    return GradedDims({deg + s: mult for deg, mult in a.items()})


def frobenius_stretch(a: Mapping[int, int], p: int) -> GradedDims:
    """Multiply every degree by ``p``."""
    return GradedDims({p * deg: mult for deg, mult in a.items()})


def make_Er(p: int, r: int) -> GradedDims:
    """One copy of the ground field in each even degree below ``2 p**r``."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    return GradedDims({2 * i: 1 for i in range(p**r)})


def total_dim(a: Mapping[int, int]) -> int:
    return sum(a.values())


def basis_degrees(a: Mapping[int, int]) -> list[int]:
    """Degrees of a homogeneous basis, ascending, repeated by multiplicity."""
    return [deg for deg in sorted(a) for _ in range(a[deg])]


class BigradedTable(Mapping[tuple[int, int], int]):
    """Coefficients indexed by (cohomological degree, polynomial degree).

    Both truncation bounds are part of the value; entries beyond them are
    never stored.
    """

    __slots__ = ("_coeffs", "trunc_coh", "trunc_poly")

    def __init__(self, coeffs: Mapping[tuple[int, int], int], trunc_coh: int, trunc_poly: int):
        if trunc_coh < 0 or trunc_poly < 0:
            raise ValueError("truncation bounds must be nonnegative")
        self.trunc_coh = int(trunc_coh)
        self.trunc_poly = int(trunc_poly)
        kept = {}
        for (c, u), m in coeffs.items():
            if m < 0:
                raise ValueError("negative coefficient")
            if m and c <= trunc_coh and u <= trunc_poly:
                kept[(int(c), int(u))] = int(m)
        self._coeffs = dict(sorted(kept.items()))

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self._coeffs[key]

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BigradedTable):
            return (self._coeffs, self.trunc_coh, self.trunc_poly) == (
                other._coeffs,
                other.trunc_coh,
                other.trunc_poly,
            )
        if isinstance(other, Mapping):
            return self._coeffs == dict(other)
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"BigradedTable({self._coeffs}, trunc_coh={self.trunc_coh}, trunc_poly={self.trunc_poly})"

    def to_json(self) -> list[list[int]]:
        return [[c, u, m] for (c, u), m in self._coeffs.items()]


def sym_hilbert(
    generator_dim: int, shift_degrees: list[int], trunc_coh: int, trunc_poly: int
) -> BigradedTable:
    """Expand prod over s of (1 - t^s u)^(-generator_dim), truncated.

    ``t`` tracks cohomological degree and ``u`` word length.
    """
    if generator_dim < 1:
        raise ValueError("generator_dim must be positive")
    if trunc_coh < 0 or trunc_poly < 0:
        raise ValueError("truncation bounds must be nonnegative")
    for s in shift_degrees:
        if s < 0 or s % 2:
            raise ValueError(f"shift degrees must be nonnegative and even, got {s}")
    series: dict[tuple[int, int], int] = {(0, 0): 1}
    for s in shift_degrees:
        # (1 - t^s u)^(-g) = sum_k C(k+g-1, g-1) t^(sk) u^k
        factor = {}
        for k in range(trunc_poly + 1):
            if s * k > trunc_coh:
                break
            factor[(s * k, k)] = comb(k + generator_dim - 1, generator_dim - 1)
        nxt: dict[tuple[int, int], int] = {}
        for (c1, u1), m1 in series.items():
            for (c2, u2), m2 in factor.items():
                c, u = c1 + c2, u1 + u2
                if c <= trunc_coh and u <= trunc_poly:
                    nxt[(c, u)] = nxt.get((c, u), 0) + m1 * m2
        series = nxt
    return BigradedTable(series, trunc_coh, trunc_poly)


def dumps(value: GradedDims | BigradedTable) -> str:
    return json.dumps(value.to_json(), sort_keys=False, separators=(",", ":"))
