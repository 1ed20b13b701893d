"""Arithmetic in GF(p**m) on numpy integer arrays.

Elements are integers ``0 <= a < q``; the base-``p`` digits of ``a`` are the
coefficients of a polynomial in the generator, reduced modulo a fixed monic
irreducible of degree ``m``.  Integers below ``p`` are the prime subfield.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

import numpy as np


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))


def _poly_mulmod(a: list[int], b: list[int], modulus: list[int], p: int) -> list[int]:
    m = len(modulus) - 1
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    for t in range(len(out) - 1, m - 1, -1):
        c = out[t]
        if c:
            for s in range(m + 1):
                out[t - m + s] = (out[t - m + s] - c * modulus[s]) % p
    return (out + [0] * m)[:m]


class GF:
    """The field with ``p**m`` elements."""

    def __init__(self, p: int, m: int = 1):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        if m < 1:
            raise ValueError("extension degree must be positive")
        self.p, self.m, self.q = p, m, p**m
        q = self.q
        if m == 1:
            self.modulus = [0, 1]
            self._mul = None
        else:
            self.modulus = self._find_modulus()
            digits = self.digits(np.arange(q))
            self._add = self.from_digits((digits[:, :, None] + digits[:, None, :]) % p)
            self._mul = self._build_mul()
            self._neg = self.from_digits((-digits) % p)
        inv = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            prods = self.mul(np.full(q, a), np.arange(q))
            inv[a] = int(np.nonzero(prods == 1)[0][0])
        self._inv = inv
        # reduction of x^t, m <= t <= 2m-2, as digit vectors
        self._reduce = {}
        for t in range(m, 2 * m - 1):
            mono = [0] * t + [1]
            self._reduce[t] = _poly_mulmod(mono, [1], self.modulus, p) if m > 1 else None

    def __repr__(self) -> str:
        return f"GF({self.q})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GF) and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.m, tuple(self.modulus)))

    def _find_modulus(self) -> list[int]:
        p, m = self.p, self.m
        for tail in product(range(p), repeat=m):
            modulus = list(reversed(tail)) + [1]
            if modulus[0] == 0:
                continue
            if self._has_no_zero_divisors(modulus):
                return modulus
        raise RuntimeError("no irreducible polynomial found")

    def _has_no_zero_divisors(self, modulus: list[int]) -> bool:
        p, m = self.p, self.m
        elems = list(product(range(p), repeat=m))
        for a in elems[1:]:
            for b in elems[1:]:
                if not any(_poly_mulmod(list(a), list(b), modulus, p)):
                    return False
        return True

    def _build_mul(self) -> np.ndarray:
        q, p, m = self.q, self.p, self.m
        table = np.zeros((q, q), dtype=np.int64)
        digs = [list(self.digits(np.array(a))) for a in range(q)]
        for a in range(q):
            for b in range(a, q):
                c = _poly_mulmod(digs[a], digs[b], self.modulus, p)
                val = sum(int(x) * p**i for i, x in enumerate(c))
                table[a, b] = table[b, a] = val
        return table

    # digit helpers
    def digits(self, a: np.ndarray) -> np.ndarray:
        """Shape (m, *a.shape) array of base-p digits."""
        a = np.asarray(a, dtype=np.int64)
        return np.stack([(a // self.p**i) % self.p for i in range(self.m)])

    def from_digits(self, d: np.ndarray) -> np.ndarray:
        out = np.zeros(d.shape[1:], dtype=np.int64)
        for i in range(self.m):
            out += d[i] * self.p**i
        return out

    # elementwise arithmetic
    def asarray(self, a) -> np.ndarray:
        return np.asarray(a, dtype=np.int64)

    def add(self, a, b) -> np.ndarray:
        if self.m == 1:
            return (np.asarray(a) + np.asarray(b)) % self.p
        return self._add[a, b]

    def neg(self, a) -> np.ndarray:
        if self.m == 1:
            return (-np.asarray(a)) % self.p
        return self._neg[a]

    def sub(self, a, b) -> np.ndarray:
        return self.add(a, self.neg(b))

    def mul(self, a, b) -> np.ndarray:
        if self.m == 1:
            return (np.asarray(a, dtype=np.int64) * np.asarray(b, dtype=np.int64)) % self.p
        return self._mul[a, b]

    def inv(self, a) -> np.ndarray:
        if np.any(np.asarray(a) == 0):
            raise ZeroDivisionError("inverse of zero")
        return self._inv[a]

    def reduce_integers(self, a: np.ndarray) -> np.ndarray:
        """Integers -> prime-field elements."""
        return np.asarray(a, dtype=np.int64) % self.p

    def sum(self, a: np.ndarray, axis: int) -> np.ndarray:
        if self.m == 1:
            return np.asarray(a).sum(axis=axis) % self.p
        d = self.digits(a).sum(axis=axis + 1 if axis >= 0 else axis) % self.p
        return self.from_digits(d)

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        p, m = self.p, self.m
        if m == 1:
            return _matmul_mod(a, b, p)
        a_prime = a.size == 0 or a.max() < p
        b_prime = b.size == 0 or b.max() < p
        if a_prime and b_prime:
            return _matmul_mod(a, b, p)
        if b_prime:
            return self.matmul_prime(a, b)
        if a_prime:
            db = self.digits(b)
            return self.from_digits(np.stack([_matmul_mod(a, db[i], p) for i in range(m)]))
        da, db = self.digits(a), self.digits(b)
        acc = [None] * (2 * m - 1)
        for s in range(m):
            for t in range(m):
                prod = _matmul_mod(da[s], db[t], p)
                acc[s + t] = prod if acc[s + t] is None else (acc[s + t] + prod) % p
        for t in range(2 * m - 2, m - 1, -1):
            red = self._reduce[t]
            for i, c in enumerate(red):
                if c:
                    acc[i] = (acc[i] + c * acc[t]) % p
        return self.from_digits(np.stack(acc[:m]))

    def matmul_prime(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """``a @ b`` when every entry of ``b`` lies in the prime field."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.m == 1:
            return _matmul_mod(a, b, self.p)
        da = self.digits(a)
        return self.from_digits(np.stack([_matmul_mod(da[i], b, self.p) for i in range(self.m)]))

    def identity(self, n: int) -> np.ndarray:
        return np.eye(n, dtype=np.int64)

    def kron(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        prod = self.mul(a[:, None, :, None], b[None, :, None, :])
        return prod.reshape(a.shape[0] * b.shape[0], a.shape[1] * b.shape[1])

    def random(self, rng: np.random.Generator, shape) -> np.ndarray:
        return rng.integers(0, self.q, size=shape, dtype=np.int64)

    # scalar polynomial helpers (coefficients low -> high)
    def poly_trim(self, f: list[int]) -> list[int]:
        f = list(f)
        while f and f[-1] == 0:
            f.pop()
        return f

    def poly_mul(self, f: list[int], g: list[int]) -> list[int]:
        if not f or not g:
            return []
        out = [0] * (len(f) + len(g) - 1)
        for i, x in enumerate(f):
            if x:
                for j, y in enumerate(g):
                    out[i + j] = int(self.add(out[i + j], self.mul(x, y)))
        return self.poly_trim(out)

    def poly_divmod(self, f: list[int], g: list[int]) -> tuple[list[int], list[int]]:
        g = self.poly_trim(g)
        if not g:
            raise ZeroDivisionError("polynomial division by zero")
        r = self.poly_trim(f)
        lead_inv = int(self.inv(g[-1]))
        quo = [0] * max(len(r) - len(g) + 1, 0)
        while len(r) >= len(g):
            c = int(self.mul(r[-1], lead_inv))
            k = len(r) - len(g)
            quo[k] = c
            for i, y in enumerate(g):
                r[k + i] = int(self.sub(r[k + i], self.mul(c, y)))
            r = self.poly_trim(r)
        return self.poly_trim(quo), r

    def poly_eval(self, f: list[int], x: int) -> int:
        out = 0
        for c in reversed(f):
            out = int(self.add(self.mul(out, x), c))
        return out

    def poly_xgcd(self, f: list[int], g: list[int]) -> tuple[list[int], list[int], list[int]]:
        """(h, s, t) with s*f + t*g = h = gcd, h monic."""
        r0, r1 = self.poly_trim(f), self.poly_trim(g)
        s0, s1, t0, t1 = [1], [], [], [1]
        while r1:
            quo, rem = self.poly_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, self.poly_sub(s0, self.poly_mul(quo, s1))
            t0, t1 = t1, self.poly_sub(t0, self.poly_mul(quo, t1))
        if not r0:
            return [], s0, t0
        c = int(self.inv(r0[-1]))
        scale = lambda h: [int(self.mul(c, x)) for x in h]  # noqa: E731
        return scale(r0), scale(s0), scale(t0)

    def poly_sub(self, f: list[int], g: list[int]) -> list[int]:
        n = max(len(f), len(g))
        f = list(f) + [0] * (n - len(f))
        g = list(g) + [0] * (n - len(g))
        return self.poly_trim([int(self.sub(a, b)) for a, b in zip(f, g)])


def _matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    inner = a.shape[-1]
    # float64 products are exact below 2**53, and go through BLAS
    limit = max((2**53) // max((p - 1) ** 2, 1), 1)
    out = None
    for start in range(0, max(inner, 1), limit):
        part = a[..., start : start + limit].astype(np.float64) @ b[start : start + limit].astype(np.float64)
        part = np.fmod(part, p).astype(np.int64)
        out = part if out is None else (out + part) % p
    return out


@lru_cache(maxsize=None)
def field(q: int) -> GF:
    """GF(q) for a prime power ``q``."""
    for p in range(2, q + 1):
        if q % p == 0:
            m, rest = 0, q
            while rest % p == 0:
                rest //= p
                m += 1
            if rest != 1:
                raise ValueError(f"{q} is not a prime power")
            return GF(p, m)
    raise ValueError(f"{q} is not a prime power")


def default_field_size(p: int, D: int) -> int:
    """Smallest power of ``p`` exceeding ``D``."""
    q = p
    while q <= D:
        q *= p
    return q
