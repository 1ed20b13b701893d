"""Compositions, partitions, matrix compositions and perfect matchings.

Every enumeration is returned in descending lexicographic order of the
flattened tuple, so ``compositions(1, 2)`` is ``[(1, 0), (0, 1)]``.
"""

from __future__ import annotations

from collections import Counter
from math import factorial
from typing import Iterator, Sequence

Composition = tuple[int, ...]
Partition = tuple[int, ...]
CompMatrix = tuple[tuple[int, ...], ...]
Pairing = tuple[tuple[int, int], ...]


def _iter_compositions(d: int, k: int) -> Iterator[Composition]:
    if k == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in _iter_compositions(d - first, k - 1):
            yield (first,) + rest


def compositions(d: int, k: int) -> list[Composition]:
    if d < 0 or k < 1:
        raise ValueError("need d >= 0 and k >= 1")
    return list(_iter_compositions(d, k))


def reorder(mu: Sequence[int]) -> Partition:
    """Sort decreasingly; the length of ``mu`` is kept."""
    return tuple(sorted(mu, reverse=True))


def strip_zeros(parts: Sequence[int]) -> Partition:
    out = list(parts)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def partition_of(mu: Sequence[int]) -> Partition:
    """Canonical key: decreasing parts, trailing zeros removed."""
    return strip_zeros(reorder(mu))


def partitions(d: int, max_parts: int | None = None) -> list[Partition]:
    """Partitions of ``d`` (no zero parts), descending lexicographic."""
    if d < 0:
        raise ValueError("d must be nonnegative")
    limit = d if max_parts is None else max_parts
    out: list[Partition] = []

    def rec(rem: int, cap: int, acc: list[int]) -> None:
        if rem == 0:
            out.append(tuple(acc))
            return
        if len(acc) == limit:
            return
        for part in range(min(rem, cap), 0, -1):
            acc.append(part)
            rec(rem - part, part, acc)
            acc.pop()

    rec(d, d, [])
    return out


def count_reorderings(lam: Sequence[int], k: int) -> int:
    """Number of compositions with ``k`` slots that sort to ``lam``."""
    nonzero = [v for v in lam if v]
    if len(nonzero) > k:
        return 0
    mults = Counter(nonzero)
    mults[0] = k - len(nonzero)
    out = factorial(k)
    for m in mults.values():
        out //= factorial(m)
    return out


def comp_matrices(a: int, l: int, m: int) -> list[CompMatrix]:
    """All ``l`` x ``m`` nonnegative integer matrices with entry sum ``a``."""
    if l < 1 or m < 1:
        raise ValueError("need l >= 1 and m >= 1")
    return [
        tuple(flat[i * m : (i + 1) * m] for i in range(l))
        for flat in _iter_compositions(a, l * m)
    ]


def as_matrix(rows: Sequence[Sequence[int]]) -> CompMatrix:
    out = tuple(tuple(int(x) for x in row) for row in rows)
    if not out or len({len(r) for r in out}) != 1:
        raise ValueError("a matrix needs at least one row and equal row lengths")
    if any(x < 0 for r in out for x in r):
        raise ValueError("matrix entries must be nonnegative")
    return out


def matrix_weight(nu: CompMatrix) -> int:
    return sum(sum(row) for row in nu)


def weight_s(nu: Sequence[Sequence[int]], basis_degs: Sequence[int]) -> int:
    if len(nu) != len(basis_degs):
        raise ValueError(f"{len(nu)} rows but {len(basis_degs)} basis degrees")
    return sum(deg * sum(row) for row, deg in zip(nu, basis_degs))


def weight_t(nu: Sequence[Sequence[int]]) -> int:
    return sum(2 * j * x for row in nu for j, x in enumerate(row))


def rowsum_p(nu: Sequence[Sequence[int]], p: int) -> CompMatrix:
    return tuple((p * sum(row),) for row in nu)


def matrix_add(a: CompMatrix, b: CompMatrix) -> CompMatrix:
    if len(a) != len(b) or any(len(x) != len(y) for x, y in zip(a, b)):
        raise ValueError("shape mismatch")
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def pairings(two_d: int) -> list[Pairing]:
    """Perfect matchings of {1..two_d}, each as increasing pairs sorted by first entry."""
    if two_d < 0 or two_d % 2:
        raise ValueError(f"need an even nonnegative size, got {two_d}")
    out: list[Pairing] = []

    def rec(free: tuple[int, ...], acc: list[tuple[int, int]]) -> None:
        if not free:
            out.append(tuple(acc))
            return
        head, rest = free[0], free[1:]
        for idx, partner in enumerate(rest):
            acc.append((head, partner))
            rec(rest[:idx] + rest[idx + 1 :], acc)
            acc.pop()

    rec(tuple(range(1, two_d + 1)), [])
    return out


def double_factorial_odd(d: int) -> int:
    """(2d)! / (2^d d!)."""
    return factorial(2 * d) // (2**d * factorial(d))
