import random

import pytest

from campus_ar.qrcode.gf256 import EXP, gf_mul, poly_eval
from campus_ar.qrcode.reed_solomon import (
    BadEcLength,
    Uncorrectable,
    generator_poly,
    rs_encode,
    rs_correct,
)

# Frozen from an independent shift-xor expansion of prod (x - alpha^i); the
# ec=7 row also matches the published table for this reduction polynomial.
KNOWN_GENERATORS = {
    7: (1, 127, 122, 154, 164, 11, 68, 117),
    10: (1, 216, 194, 159, 111, 199, 94, 95, 113, 157, 193),
}


def naive_generator(ec_len: int) -> list[int]:
    """Factor-product oracle: expand the linear factors with schoolbook loops."""
    g = [1]
    for i in range(ec_len):
        factor = [1, EXP[i]]
        out = [0] * (len(g) + 1)
        for a, ca in enumerate(g):
            for b, cb in enumerate(factor):
                out[a + b] ^= gf_mul(ca, cb)
        g = out
    return g


@pytest.mark.parametrize("ec_len", [7, 10, 15, 16, 26])
def test_generator_matches_factor_product_oracle(ec_len):
    assert list(generator_poly(ec_len)) == naive_generator(ec_len)


@pytest.mark.parametrize("ec_len,expected", sorted(KNOWN_GENERATORS.items()))
def test_generator_matches_frozen_constants(ec_len, expected):
    assert generator_poly(ec_len) == expected


def test_all_zero_data_gives_all_zero_parity():
    assert rs_encode(bytes(19), 7) == bytes(7)


@pytest.mark.parametrize("ec_len", [7, 10, 15, 16, 26])
def test_codeword_syndromes_are_zero(ec_len):
    rng = random.Random(ec_len)
    for _ in range(20):
        data = bytes(rng.randrange(256) for _ in range(ec_len + 5))
        cw = data + rs_encode(data, ec_len)
        for i in range(ec_len):
            assert poly_eval(list(cw), EXP[i]) == 0


def test_generator_roots_are_first_powers_of_alpha():
    g = list(generator_poly(7))
    for i in range(7):
        assert poly_eval(g, EXP[i]) == 0
    assert poly_eval(g, EXP[7]) != 0


def test_clean_codeword_decodes_with_zero_corrections():
    data = b"campus navigation"
    cw = data + rs_encode(data, 10)
    assert rs_correct(cw, 10) == (data, 0)


def test_single_error_every_position_and_many_values():
    data = bytes(range(1, 20))
    cw = data + rs_encode(data, 7)
    rng = random.Random(1)
    for pos in range(len(cw)):
        for _ in range(4):
            delta = rng.randrange(1, 256)
            corrupted = bytearray(cw)
            corrupted[pos] ^= delta
            fixed, count = rs_correct(bytes(corrupted), 7)
            assert fixed == data
            assert count == 1


@pytest.mark.parametrize("ec_len", [7, 10, 15, 16, 26])
def test_random_errors_up_to_capability(ec_len):
    rng = random.Random(ec_len * 31)
    t = ec_len // 2
    for _ in range(60):
        data = bytes(rng.randrange(256) for _ in range(rng.randrange(1, 30)))
        cw = data + rs_encode(data, ec_len)
        e = rng.randrange(1, t + 1)
        corrupted = bytearray(cw)
        for pos in rng.sample(range(len(cw)), e):
            corrupted[pos] ^= rng.randrange(1, 256)
        fixed, count = rs_correct(bytes(corrupted), ec_len)
        assert fixed == data
        assert count == e


def test_beyond_capability_raises_not_silently_corrupts():
    rng = random.Random(99)
    data = bytes(rng.randrange(256) for _ in range(20))
    cw = data + rs_encode(data, 7)
    for _ in range(200):
        corrupted = bytearray(cw)
        for pos in rng.sample(range(len(cw)), 4):
            corrupted[pos] ^= rng.randrange(1, 256)
        with pytest.raises(Uncorrectable):
            rs_correct(bytes(corrupted), 7)


def test_bad_ec_length():
    with pytest.raises(BadEcLength):
        rs_encode(b"xy", 0)
    with pytest.raises(BadEcLength):
        rs_encode(b"xy", 31)
    with pytest.raises(ValueError):
        rs_encode(b"", 7)
    with pytest.raises(ValueError):
        rs_correct(bytes(7), 7)
