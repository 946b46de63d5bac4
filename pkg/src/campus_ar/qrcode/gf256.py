"""Arithmetic in GF(256) with reduction polynomial 0x11D (x^8+x^4+x^3+x^2+1)."""

from __future__ import annotations

REDUCER = 0x11D

# alpha = 2 generates the multiplicative group; tables built once at import.
EXP = [0] * 512
LOG = [0] * 256
_x = 1
for _i in range(255):
    EXP[_i] = _x
    LOG[_x] = _i
    _x <<= 1
    if _x & 0x100:
        _x ^= REDUCER
for _i in range(255, 512):
    EXP[_i] = EXP[_i - 255]
del _i, _x


def gf_mul(a: int, b: int) -> int:
    if a == 0 or b == 0:
        return 0
    return EXP[LOG[a] + LOG[b]]


def gf_div(a: int, b: int) -> int:
    if b == 0:
        raise ZeroDivisionError("division by zero in GF(256)")
    if a == 0:
        return 0
    return EXP[LOG[a] + 255 - LOG[b]]


def gf_pow(a: int, n: int) -> int:
    if a == 0:
        if n == 0:
            return 1
        if n < 0:
            raise ZeroDivisionError("negative power of zero in GF(256)")
        return 0
    return EXP[(LOG[a] * n) % 255]


def gf_inv(a: int) -> int:
    if a == 0:
        raise ZeroDivisionError("zero has no inverse in GF(256)")
    return EXP[255 - LOG[a]]


def poly_mul(p: list[int], q: list[int]) -> list[int]:
    """Product of polynomials with highest-degree coefficient first."""
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] ^= gf_mul(a, b)
    return out


def poly_eval(p: list[int], x: int) -> int:
    """Horner evaluation; p has highest-degree coefficient first."""
    y = 0
    for c in p:
        y = gf_mul(y, x) ^ c
    return y


def poly_scale(p: list[int], k: int) -> list[int]:
    return [gf_mul(c, k) for c in p]


def poly_add(p: list[int], q: list[int]) -> list[int]:
    """XOR-sum aligning lowest-degree terms (highest-first representation)."""
    n = max(len(p), len(q))
    out = [0] * n
    out[n - len(p):] = p
    for i, c in enumerate(q):
        out[i + n - len(q)] ^= c
    return out
