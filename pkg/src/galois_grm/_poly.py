"""Dense univariate polynomials over Z/N as Python int lists.

Coefficients are stored low degree first and trimmed, so the zero
polynomial is ``[]``. Division requires the divisor's leading
coefficient to be invertible mod N.
"""

from __future__ import annotations

from typing import Sequence

Poly = list[int]


def trim(a: Sequence[int], N: int) -> Poly:
    out = [c % N for c in a]
    while out and out[-1] == 0:
        out.pop()
    return out


def deg(a: Sequence[int]) -> int:
    return len(a) - 1


def add(a: Sequence[int], b: Sequence[int], N: int) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return trim(out, N)


def sub(a: Sequence[int], b: Sequence[int], N: int) -> Poly:
    return add(a, [-c for c in b], N)


def scale(a: Sequence[int], c: int, N: int) -> Poly:
    return trim([c * x for x in a], N)


def mul(a: Sequence[int], b: Sequence[int], N: int) -> Poly:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out, N)


def divmod_(a: Sequence[int], b: Sequence[int], N: int) -> tuple[Poly, Poly]:
    b = trim(b, N)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lc = pow(b[-1], -1, N)
    r = trim(a, N)
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], r
    quo = [0] * (len(r) - db)
    while r and len(r) - 1 >= db:
        shift = len(r) - 1 - db
        c = r[-1] * inv_lc % N
        quo[shift] = c
        for i, y in enumerate(b):
            r[i + shift] = (r[i + shift] - c * y) % N
        r = trim(r, N)
    return trim(quo, N), r


def mod(a: Sequence[int], b: Sequence[int], N: int) -> Poly:
    return divmod_(a, b, N)[1]


def monic(a: Sequence[int], p: int) -> Poly:
    a = trim(a, p)
    if not a:
        return a
    return scale(a, pow(a[-1], -1, p), p)


def gcd(a: Sequence[int], b: Sequence[int], p: int) -> Poly:
    a, b = trim(a, p), trim(b, p)
    while b:
        a, b = b, mod(a, b, p)
    return monic(a, p)


def xgcd(a: Sequence[int], b: Sequence[int], p: int) -> tuple[Poly, Poly, Poly]:
    """Return (g, s, t) with s*a + t*b = g, g monic, over the prime field F_p."""
    r0, r1 = trim(a, p), trim(b, p)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        qt, r = divmod_(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(qt, s1, p), p)
        t0, t1 = t1, sub(t0, mul(qt, t1, p), p)
    if not r0:
        return [], s0, t0
    inv = pow(r0[-1], -1, p)
    return scale(r0, inv, p), scale(s0, inv, p), scale(t0, inv, p)


def powmod(a: Sequence[int], e: int, f: Sequence[int], N: int) -> Poly:
    result: Poly = [1] if len(trim(f, N)) > 1 else []
    base = mod(a, f, N)
    while e:
        if e & 1:
            result = mod(mul(result, base, N), f, N)
        e >>= 1
        if e:
            base = mod(mul(base, base, N), f, N)
    return result


def evaluate(a: Sequence[int], x: int, N: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % N
    return acc
