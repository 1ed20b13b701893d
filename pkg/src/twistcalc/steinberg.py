"""Tensor words of twisted simple factors and their cyclic twist orbits.

A word ``("V0", "1", "V2")`` stands for V0 ⊗ V2^(2): position ``k`` carries
twist level ``k`` and ``"1"`` is the trivial module.  Canonical words have
no trailing ``"1"``; the trivial module is the empty word.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

TRIVIAL = "1"
Word = tuple[str, ...]


def canonical(w: Iterable[str]) -> Word:
    out = list(w)
    while out and out[-1] == TRIVIAL:
        out.pop()
    return tuple(out)


def parse_word(text: str) -> Word:
    return canonical(x.strip() for x in text.split(",") if x.strip())


def twist(w: Sequence[str], e: int) -> Word:
    if e < 0:
        raise ValueError("twist must be nonnegative")
    return canonical((TRIVIAL,) * e + tuple(w))


def nontrivial_count(w: Sequence[str]) -> int:
    return sum(1 for x in w if x != TRIVIAL)


def _check(w: Sequence[str], u: int) -> Word:
    if u < 1:
        raise ValueError("u must be positive")
    cw = canonical(w)
    if len(cw) > u:
        raise ValueError(f"word has a factor at level {len(cw) - 1} >= u = {u}")
    return cw


def _rotate(w: Word, u: int) -> Word:
    padded = list(w) + [TRIVIAL] * (u - len(w))
    return canonical([padded[-1]] + padded[:-1])


def orbit_mod_u(w: Sequence[str], u: int) -> list[Word]:
    """Orbit under raising every level by one modulo ``u``, starting at ``w``."""
    start = _check(w, u)
    out = [start]
    cur = _rotate(start, u)
    while cur != start:
        out.append(cur)
        cur = _rotate(cur, u)
    return out


@dataclass(frozen=True)
class QShift:
    """An orbit element written as ``base`` twisted ``twist`` times."""

    base: Word
    twist: int

    @property
    def word(self) -> Word:
        return twist(self.base, self.twist)

    def to_json(self) -> dict:
        return {"base": list(self.base), "twist": self.twist, "word": list(self.word)}


def q_shifts(w: Sequence[str], u: int) -> list[QShift]:
    out = []
    for elt in orbit_mod_u(w, u):
        lead = 0
        while lead < len(elt) and elt[lead] == TRIVIAL:
            lead += 1
        out.append(QShift(elt[lead:], lead))
    return out


def window(w: Sequence[str], u: int) -> list[str]:
    return list(w) + [TRIVIAL] * (u - len(w))


def find_good_shift(w: Sequence[str], u: int, head: int, tail: int) -> QShift | None:
    """First orbit element with at least ``head`` leading and ``tail`` trailing trivial slots in [0, u)."""
    for q in q_shifts(w, u):
        slots = window(q.word, u)
        lead = next((i for i, x in enumerate(slots) if x != TRIVIAL), u)
        trail = next((i for i, x in enumerate(reversed(slots)) if x != TRIVIAL), u)
        if lead >= head and trail >= tail:
            return q
    return None


def format_word(w: Sequence[str]) -> str:
    """``V0⊗V2^(2)`` style rendering; untwisted factors carry no exponent."""
    parts = [x if k == 0 else f"{x}^({k})" for k, x in enumerate(w) if x != TRIVIAL]
    return "⊗".join(parts) if parts else TRIVIAL


def format_qshifts(shifts: Sequence[QShift]) -> list[str]:
    """Name distinct bases V, W, X, ... in order of appearance and attach twists."""
    names: dict[Word, str] = {}
    letters = "VWXYZABCDEFGHIJKLMNOPQRSTU"
    out = []
    for q in shifts:
        if q.base not in names:
            names[q.base] = letters[len(names) % len(letters)] + ("" if len(names) < len(letters) else str(len(names) // len(letters)))
        out.append(names[q.base] if q.twist == 0 else f"{names[q.base]}^({q.twist})")
    return out
