"""Reed-Solomon encoding and syndrome-based correction over GF(256).

Generator polynomial g(x) = prod_{i=0}^{ec_len-1} (x - alpha^i); a codeword is
data followed by parity, highest-degree coefficient first. Up to
floor(ec_len/2) byte errors are corrected (Berlekamp-Massey + Chien + Forney),
with a re-encode guard that turns miscorrections into explicit failures.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import zip_longest

from ..errors import CampusArError
from .gf256 import EXP, gf_div, gf_inv, gf_mul, poly_eval, poly_mul

MAX_EC_LEN = 30


class BadEcLength(CampusArError):
    pass


class Uncorrectable(CampusArError):
    pass


def _check_ec_len(ec_len: int) -> None:
    if not 1 <= ec_len <= MAX_EC_LEN:
        raise BadEcLength(f"ec_len must be in 1..{MAX_EC_LEN}, got {ec_len}")


@lru_cache(maxsize=None)
def generator_poly(ec_len: int) -> tuple[int, ...]:
    """Product of (x - alpha^i) for i in 0..ec_len-1, monic, highest-first."""
    _check_ec_len(ec_len)
    g = [1]
    for i in range(ec_len):
        g = poly_mul(g, [1, EXP[i]])
    return tuple(g)


def rs_encode(data: bytes, ec_len: int) -> bytes:
    """Parity of length ec_len: remainder of data * x^ec_len mod g(x)."""
    _check_ec_len(ec_len)
    if not data:
        raise ValueError("data must be non-empty")
    if len(data) + ec_len > 255:
        raise ValueError("codeword longer than 255 bytes")
    gen = generator_poly(ec_len)
    # Synthetic division; the divisor is monic so no normalization step.
    rem = list(data) + [0] * ec_len
    for i in range(len(data)):
        coef = rem[i]
        if coef:
            for j in range(1, len(gen)):
                rem[i + j] ^= gf_mul(gen[j], coef)
    return bytes(rem[-ec_len:])


def _eval_low_first(p: list[int], x: int) -> int:
    """Evaluate a lowest-degree-first polynomial at x."""
    acc = 0
    for c in reversed(p):
        acc = gf_mul(acc, x) ^ c
    return acc


def _berlekamp_massey(synd: list[int]) -> list[int]:
    """Error locator sigma(z), lowest-degree coefficient first, sigma[0] = 1."""
    cur = [1]
    prev = [1]
    errors = 0
    shift = 1
    last_delta = 1
    for i, s in enumerate(synd):
        delta = s
        for k in range(1, errors + 1):
            if k < len(cur):
                delta ^= gf_mul(cur[k], synd[i - k])
        if delta == 0:
            shift += 1
            continue
        scaled = [0] * shift + [gf_mul(gf_div(delta, last_delta), c) for c in prev]
        updated = [a ^ b for a, b in zip_longest(cur, scaled, fillvalue=0)]
        if 2 * errors <= i:
            prev = cur
            errors = i + 1 - errors
            last_delta = delta
            shift = 1
        else:
            shift += 1
        cur = updated
    while len(cur) > 1 and cur[-1] == 0:
        cur.pop()
    return cur


def rs_correct(codeword: bytes, ec_len: int) -> tuple[bytes, int]:
    """Correct up to floor(ec_len/2) byte errors; return (data, error count).

    Raises Uncorrectable when the error count exceeds capability, the locator
    roots are inconsistent, or the repaired word fails the re-encode check.
    """
    _check_ec_len(ec_len)
    n = len(codeword)
    if n < ec_len + 1:
        raise ValueError(f"codeword of length {n} cannot carry {ec_len} parity bytes")

    synd = [poly_eval(list(codeword), EXP[i]) for i in range(ec_len)]
    if not any(synd):
        return codeword[:-ec_len], 0

    t = ec_len // 2
    sigma = _berlekamp_massey(synd)
    degree = len(sigma) - 1
    if degree == 0 or degree > t:
        raise Uncorrectable(f"locator degree {degree} exceeds capability t={t}")

    # Chien search over byte positions: byte i carries power n-1-i, and
    # sigma(alpha^-(n-1-i)) = 0 exactly when byte i is in error.
    positions = []
    inverses = []
    for i in range(n):
        x_inv = EXP[255 - (n - 1 - i) % 255] if (n - 1 - i) % 255 else 1
        if _eval_low_first(sigma, x_inv) == 0:
            positions.append(i)
            inverses.append(x_inv)
    if len(positions) != degree:
        raise Uncorrectable("locator roots do not match error count")

    # Forney with first consecutive root alpha^0:
    #   omega(z) = S(z) sigma(z) mod z^ec_len
    #   e_i = X_i * omega(X_i^-1) / sigma'(X_i^-1)
    omega = [0] * ec_len
    for a, sa in enumerate(synd):
        if sa:
            for b, sb in enumerate(sigma):
                if a + b < ec_len:
                    omega[a + b] ^= gf_mul(sa, sb)

    fixed = bytearray(codeword)
    for i, x_inv in zip(positions, inverses):
        num = _eval_low_first(omega, x_inv)
        # Formal derivative keeps odd-power terms only (characteristic 2).
        den = _eval_low_first([c if k % 2 else 0 for k, c in enumerate(sigma)][1:], x_inv)
        if den == 0:
            raise Uncorrectable("degenerate locator derivative")
        fixed[i] ^= gf_mul(gf_inv(x_inv), gf_div(num, den))

    data = bytes(fixed[:-ec_len])
    if rs_encode(data, ec_len) != bytes(fixed[-ec_len:]):
        raise Uncorrectable("re-encode check failed after correction")
    return data, len(positions)
