"""Functor expressions and their realization inside tensor powers.

Grammar::

    expr  := atom | atom "∘" "Fr(" r ")"
    atom  := "Id" | "Fr(" r ")" | "Sym(" a ")" | "Div(" a ")" | "Ext(" a ")"
           | "Ten(" expr ("," expr)* ")"

``o`` and ``@`` are accepted in place of ``∘``.  A realization of an
expression on ``k^n`` is a pair ``(sub, ker)`` of row spaces in
``(k^n)^{⊗deg}`` with ``ker ⊆ sub``; the functor value is ``sub / ker``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

import numpy as np

from . import linalg
from .algebra import multi_indices
from .gf import GF


@dataclass(frozen=True)
class Id:
    def degree(self, p: int) -> int:
        return 1

    def __str__(self) -> str:
        return "Id"


@dataclass(frozen=True)
class Fr:
    r: int

    def degree(self, p: int) -> int:
        return p**self.r

    def __str__(self) -> str:
        return f"Fr({self.r})"


@dataclass(frozen=True)
class Sym:
    a: int

    def degree(self, p: int) -> int:
        return self.a

    def __str__(self) -> str:
        return f"Sym({self.a})"


@dataclass(frozen=True)
class Div:
    a: int

    def degree(self, p: int) -> int:
        return self.a

    def __str__(self) -> str:
        return f"Div({self.a})"


@dataclass(frozen=True)
class Ext:
    a: int

    def degree(self, p: int) -> int:
        return self.a

    def __str__(self) -> str:
        return f"Ext({self.a})"


@dataclass(frozen=True)
class Ten:
    parts: tuple

    def degree(self, p: int) -> int:
        return sum(x.degree(p) for x in self.parts)

    def __str__(self) -> str:
        return "Ten(" + ",".join(str(x) for x in self.parts) + ")"


@dataclass(frozen=True)
class Compose:
    outer: "FunctorExpr"
    inner: Fr

    def degree(self, p: int) -> int:
        return self.outer.degree(p) * self.inner.degree(p)

    def __str__(self) -> str:
        return f"{self.outer}∘{self.inner}"


FunctorExpr = Union[Id, Fr, Sym, Div, Ext, Ten, Compose]


class ParseError(ValueError):
    pass


_TOKEN = re.compile(r"\s*(Id|Fr|Sym|Div|Ext|Ten|\d+|[(),]|∘|@|o(?![A-Za-z]))")


def _tokenize(text: str) -> list[str]:
    pos, out = 0, []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected input at {text[pos:]!r}")
        tok = m.group(1)
        out.append("∘" if tok in ("@", "o") else tok)
        pos = m.end()
    return out


def parse(text: str) -> FunctorExpr:
    toks = _tokenize(text)
    pos = 0

    def peek() -> str | None:
        return toks[pos] if pos < len(toks) else None

    def take(expected: str | None = None) -> str:
        nonlocal pos
        tok = peek()
        if tok is None or (expected is not None and tok != expected):
            raise ParseError(f"expected {expected or 'token'}, got {tok!r} in {text!r}")
        pos += 1
        return tok

    def number() -> int:
        tok = take()
        if not tok.isdigit():
            raise ParseError(f"expected a number, got {tok!r}")
        return int(tok)

    def atom() -> FunctorExpr:
        head = take()
        if head == "Id":
            return Id()
        if head in ("Fr", "Sym", "Div", "Ext"):
            take("(")
            k = number()
            take(")")
            if head != "Fr" and k < 1:
                raise ParseError(f"{head} needs a positive degree")
            return {"Fr": Fr, "Sym": Sym, "Div": Div, "Ext": Ext}[head](k)
        if head == "Ten":
            take("(")
            parts = [expr()]
            while peek() == ",":
                take(",")
                parts.append(expr())
            take(")")
            return Ten(tuple(parts))
        raise ParseError(f"unknown functor {head!r}")

    def expr() -> FunctorExpr:
        left = atom()
        if peek() == "∘":
            take("∘")
            right = atom()
            if not isinstance(right, Fr):
                raise ParseError("only precomposition with Fr(r) is supported")
            if isinstance(left, Compose) or _contains_compose(left):
                raise ParseError("at most one Frobenius layer is supported")
            return Compose(left, right)
        return left

    out = expr()
    if pos != len(toks):
        raise ParseError(f"trailing input in {text!r}")
    return out


def _contains_compose(e: FunctorExpr) -> bool:
    if isinstance(e, Compose):
        return True
    if isinstance(e, Ten):
        return any(_contains_compose(x) for x in e.parts)
    return False


def degree(e: FunctorExpr, p: int) -> int:
    return e.degree(p)


# realizations --------------------------------------------------------------


@dataclass
class Subquotient:
    sub: np.ndarray
    ker: np.ndarray

    @property
    def ambient(self) -> int:
        return self.sub.shape[1]


def _sorted_index(digits: np.ndarray, n: int) -> np.ndarray:
    s = np.sort(digits, axis=1)
    weights = n ** np.arange(digits.shape[1] - 1, -1, -1)
    return s @ weights


def _sym_kernel(F: GF, n: int, a: int) -> np.ndarray:
    dig = multi_indices(n, a)
    T = n**a
    target = _sorted_index(dig, n)
    rows = [i for i in range(T) if target[i] != i]
    K = np.zeros((len(rows), T), dtype=np.int64)
    for k, i in enumerate(rows):
        K[k, i] = 1
        K[k, target[i]] = F.neg(1)
    return K


def _sign(perm: tuple[int, ...]) -> int:
    sign, seen = 1, set()
    for i in range(len(perm)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = perm[j]
            length += 1
        sign *= (-1) ** (length - 1)
    return sign


def _ext_kernel(F: GF, n: int, a: int) -> np.ndarray:
    dig = multi_indices(n, a)
    T = n**a
    target = _sorted_index(dig, n)
    rows = []
    for i in range(T):
        d = list(dig[i])
        if len(set(d)) < a:
            v = np.zeros(T, dtype=np.int64)
            v[i] = 1
            rows.append(v)
        elif target[i] != i:
            order = tuple(int(x) for x in np.argsort(d))
            v = np.zeros(T, dtype=np.int64)
            v[i] = 1
            v[target[i]] = F.neg(1) if _sign(order) == 1 else 1
            rows.append(v)
    return np.array(rows, dtype=np.int64).reshape(len(rows), T)


def _div_invariants(F: GF, n: int, a: int) -> np.ndarray:
    dig = multi_indices(n, a)
    target = _sorted_index(dig, n)
    T = n**a
    reps = sorted(set(int(t) for t in target))
    S = np.zeros((len(reps), T), dtype=np.int64)
    where = {r: k for k, r in enumerate(reps)}
    for i in range(T):
        S[where[int(target[i])], i] = 1
    return S


def _empty(T: int) -> np.ndarray:
    return np.zeros((0, T), dtype=np.int64)


def _tensor(F: GF, parts: list[Subquotient]) -> Subquotient:
    sub = parts[0].sub
    for q in parts[1:]:
        sub = F.kron(sub, q.sub)
    kers = []
    for k in range(len(parts)):
        if parts[k].ker.shape[0] == 0:
            continue
        piece = None
        for j, q in enumerate(parts):
            factor = q.ker if j == k else q.sub
            piece = factor if piece is None else F.kron(piece, factor)
        kers.append(piece)
    ker = linalg.row_basis(F, np.vstack(kers), sub.shape[1]) if kers else _empty(sub.shape[1])
    return Subquotient(sub, ker)


def realize(e: FunctorExpr, n: int, F: GF) -> Subquotient:
    p = F.p
    if isinstance(e, Id):
        return Subquotient(np.eye(n, dtype=np.int64), _empty(n))
    if isinstance(e, Sym):
        return Subquotient(np.eye(n**e.a, dtype=np.int64), _sym_kernel(F, n, e.a))
    if isinstance(e, Div):
        return Subquotient(_div_invariants(F, n, e.a), _empty(n**e.a))
    if isinstance(e, Ext):
        return Subquotient(np.eye(n**e.a, dtype=np.int64), _ext_kernel(F, n, e.a))
    if isinstance(e, Fr):
        if e.r == 0:
            return realize(Id(), n, F)
        a = p**e.r
        ker = _sym_kernel(F, n, a)
        powers = np.zeros((n, n**a), dtype=np.int64)
        for i in range(n):
            powers[i, i * sum(n**t for t in range(a))] = 1
        return Subquotient(np.vstack([powers, ker]), ker)
    if isinstance(e, Ten):
        return _tensor(F, [realize(x, n, F) for x in e.parts])
    if isinstance(e, Compose):
        inner = realize(e.inner, n, F)
        reps = linalg.complement(F, inner.ker, inner.sub, inner.ambient)
        w = reps.shape[0]
        outer = realize(e.outer, w, F)
        a = e.outer.degree(p)
        embed = reps
        for _ in range(a - 1):
            embed = F.kron(embed, reps)
        base = _tensor(F, [inner] * a)
        sub = np.vstack([F.matmul(outer.sub, embed), base.ker])
        ker = np.vstack([F.matmul(outer.ker, embed), base.ker]) if outer.ker.shape[0] else base.ker
        return Subquotient(sub, ker)
    raise TypeError(f"not a functor expression: {e!r}")
