import random

import pytest

from campus_ar.qrcode import gf256
from campus_ar.qrcode.gf256 import gf_div, gf_inv, gf_mul, gf_pow


def test_multiplicative_identity_and_zero():
    for x in range(256):
        assert gf_mul(x, 1) == x
        assert gf_mul(1, x) == x
        assert gf_mul(x, 0) == 0
        assert gf_mul(0, x) == 0


def test_alpha_generates_full_group():
    # alpha^255 = 1 and no smaller power returns to 1.
    x = 1
    seen = set()
    for k in range(1, 256):
        x = gf_mul(x, 2)
        if k < 255:
            assert x != 1, f"alpha has order {k}"
            seen.add(x)
    assert x == 1
    assert len(seen) == 254


def test_every_nonzero_element_has_inverse():
    for x in range(1, 256):
        inv = gf_inv(x)
        assert gf_mul(x, inv) == 1
        assert gf_div(1, x) == inv


def test_field_axioms_random_triples():
    rng = random.Random(0x11D)
    for _ in range(2000):
        a, b, c = rng.randrange(256), rng.randrange(256), rng.randrange(256)
        assert gf_mul(a, b) == gf_mul(b, a)
        assert gf_mul(gf_mul(a, b), c) == gf_mul(a, gf_mul(b, c))
        assert gf_mul(a, b ^ c) == gf_mul(a, b) ^ gf_mul(a, c)


def test_pow_matches_repeated_mul():
    rng = random.Random(7)
    for _ in range(200):
        a = rng.randrange(1, 256)
        n = rng.randrange(0, 40)
        acc = 1
        for _ in range(n):
            acc = gf_mul(acc, a)
        assert gf_pow(a, n) == acc


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        gf_div(5, 0)
    with pytest.raises(ZeroDivisionError):
        gf_inv(0)


def test_exp_log_tables_are_mutually_consistent():
    for i in range(255):
        assert gf256.LOG[gf256.EXP[i]] == i
