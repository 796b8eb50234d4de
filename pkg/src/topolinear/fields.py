"""Finite fields GF(p^k) as dense integer-indexed tables.

Elements are indices 0..q-1; index sum(c_i * p**i) stands for the coefficient
vector (c_0..c_{k-1}) over GF(p). Multiplication goes through exp/log tables
for a primitive element; the monic irreducible modulus is chosen as the
lexicographically least one and recorded so outputs are reproducible.
"""

from __future__ import annotations

from functools import lru_cache


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _poly_mod(num: list[int], den: list[int], p: int) -> list[int]:
    """Remainder of num by monic den, coefficients mod p, little-endian."""
    num = num[:]
    dn = len(den) - 1
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i] % p
        if c:
            shift = i - dn
            for j, dj in enumerate(den):
                num[shift + j] = (num[shift + j] - c * dj) % p
    out = [c % p for c in num[:dn]]
    return out + [0] * (dn - len(out))


def _poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _monic_polys(p: int, deg: int):
    """All monic degree-deg polynomials, lexicographic in index order."""
    for idx in range(p**deg):
        coeffs = []
        t = idx
        for _ in range(deg):
            coeffs.append(t % p)
            t //= p
        yield coeffs + [1]


def _is_irreducible(poly: list[int], p: int) -> bool:
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        for cand in _monic_polys(p, d):
            if not any(_poly_mod(poly, cand, p)):
                return False
    return True


def _index_to_poly(idx: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        out.append(idx % p)
        idx //= p
    return out


def _poly_to_index(poly: list[int], p: int) -> int:
    idx = 0
    for c in reversed(poly):
        idx = idx * p + (c % p)
    return idx


class FieldTable:
    """GF(p^k) with precomputed add/mul/neg/inv and exp/log tables."""

    def __init__(self, p: int, k: int):
        if not _is_prime(p):
            raise ValueError(f"p={p} is not prime")
        if k < 1:
            raise ValueError("k must be >= 1")
        q = p**k
        if q > 256:
            raise ValueError(f"order {q} exceeds the supported bound 256")
        self.p = p
        self.k = k
        self.q = q

        if k == 1:
            self.modulus: tuple[int, ...] = (0, 1)  # x, unused for k = 1
            mul_row = lambda a, b: (a * b) % p
            self.add = tuple(tuple((a + b) % p for b in range(q)) for a in range(q))
        else:
            modulus = next(m for m in _monic_polys(p, k) if _is_irreducible(m, p))
            self.modulus = tuple(modulus)
            polys = [_index_to_poly(i, p, k) for i in range(q)]

            def mul_row(a: int, b: int) -> int:
                prod = _poly_mul(polys[a], polys[b], p)
                return _poly_to_index(_poly_mod(prod, modulus, p), p)

            def add_row(a: int, b: int) -> int:
                return _poly_to_index(
                    [(x + y) % p for x, y in zip(polys[a], polys[b])], p
                )

            self.add = tuple(tuple(add_row(a, b) for b in range(q)) for a in range(q))

        mul = [[0] * q for _ in range(q)]
        for a in range(q):
            for b in range(q):
                mul[a][b] = mul_row(a, b)
        self.mul_table = tuple(tuple(row) for row in mul)

        self.neg = tuple(next(b for b in range(q) if self.add[a][b] == 0) for a in range(q))

        # primitive element: least g whose powers exhaust the nonzeros
        gen = None
        for g in range(1, q):
            seen, x = set(), 1
            for _ in range(q - 1):
                x = mul[x][g]
                seen.add(x)
            if len(seen) == q - 1:
                gen = g
                break
        assert gen is not None
        self.generator = gen

        exp = [1] * (2 * (q - 1))
        for i in range(1, q - 1):
            exp[i] = mul[exp[i - 1]][gen]
        for i in range(q - 1, 2 * (q - 1)):
            exp[i] = exp[i - (q - 1)]
        log = [0] * q
        for i in range(q - 1):
            log[exp[i]] = i
        self.exp_table = tuple(exp)
        self.log_table = tuple(log)

        inv = [0] * q
        for a in range(1, q):
            inv[a] = exp[(q - 1) - log[a]]
        self.inv_table = tuple(inv)

    def a(self, x: int, y: int) -> int:
        return self.add[x][y]

    def s(self, x: int, y: int) -> int:
        return self.add[x][self.neg[y]]

    def m(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        return self.exp_table[self.log_table[x] + self.log_table[y]]

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.inv_table[x]

    def meta(self) -> dict:
        return {"p": self.p, "k": self.k, "modulus": list(self.modulus),
                "generator": self.generator}

    def __repr__(self):
        return f"FieldTable(p={self.p}, k={self.k})"


@lru_cache(maxsize=None)
def field_make(p: int, k: int = 1) -> FieldTable:
    return FieldTable(p, k)
