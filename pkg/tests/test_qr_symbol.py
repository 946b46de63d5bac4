import random

import pytest

from campus_ar.qrcode import (
    BadForcedConfig,
    BitMatrix,
    NoFinderOrientation,
    Orientation,
    PayloadTooLarge,
    RS_BLOCKS,
    byte_capacity,
    decode_symbol,
    encode_symbol,
)
from campus_ar.qrcode.decoder import _nearest_format
from campus_ar.qrcode.encoder import (
    data_positions,
    format_info_bits,
    function_pattern_map,
    symbol_size,
)

EXPECTED_CAPACITY = {
    (1, "L"): 19 - 2,
    (1, "M"): 16 - 2,
    (2, "L"): 34 - 2,
    (2, "M"): 28 - 2,
    (3, "L"): 55 - 2,
    (3, "M"): 44 - 2,
}

EXPECTED_EC = {(1, "L"): 7, (1, "M"): 10, (2, "L"): 10, (2, "M"): 16, (3, "L"): 15, (3, "M"): 26}


def test_capacity_table():
    for key, expected in EXPECTED_CAPACITY.items():
        assert byte_capacity(*key) == expected
    for key, ec in EXPECTED_EC.items():
        assert RS_BLOCKS[key].ec_codewords == ec


def test_version_selection_prefers_smallest():
    _, cfg = encode_symbol(b"x" * 14, "M")
    assert cfg.version == 1
    _, cfg = encode_symbol(b"HCTIS1|ENG|1|N07|S1042", "M")
    assert cfg.version == 2
    _, cfg = encode_symbol(b"x" * 27, "M")
    assert cfg.version == 3


def test_payload_too_large():
    with pytest.raises(PayloadTooLarge):
        encode_symbol(b"x" * 43, "M")
    with pytest.raises(PayloadTooLarge):
        encode_symbol(b"x" * 54, "L")


def test_bad_forced_config():
    with pytest.raises(BadForcedConfig):
        encode_symbol(b"x", "M", forced=(4, 0))
    with pytest.raises(BadForcedConfig):
        encode_symbol(b"x", "M", forced=(1, 8))
    with pytest.raises(BadForcedConfig):
        encode_symbol(b"x" * 20, "M", forced=(1, 0))
    with pytest.raises(BadForcedConfig):
        encode_symbol(b"x", "Q")


def finder_at(m: BitMatrix, r0: int, c0: int) -> bool:
    return all(
        m.get(r0 + dr, c0 + dc) == (max(abs(dr - 3), abs(dc - 3)) != 2)
        for dr in range(7)
        for dc in range(7)
    )


@pytest.mark.parametrize("version,level", sorted(RS_BLOCKS))
def test_finder_patterns_present(version, level):
    sym, _ = encode_symbol(b"finders", level, forced=(version, 0))
    n = sym.size
    assert n == symbol_size(version)
    assert finder_at(sym, 0, 0)
    assert finder_at(sym, 0, n - 7)
    assert finder_at(sym, n - 7, 0)


@pytest.mark.parametrize("version,expected", [(1, 208), (2, 359), (3, 567)])
def test_data_module_counts(version, expected):
    _, reserved = function_pattern_map(version)
    assert len(data_positions(version, reserved)) == expected


def test_format_info_self_test_all_32():
    for level in ("L", "M", "Q", "H"):
        for mask in range(8):
            word = format_info_bits(level, mask)
            assert _nearest_format(word) == (level, mask)
            # Still decodes with 3 corrupted bits (codeword min distance is 7).
            assert _nearest_format(word ^ 0b10101) == (level, mask)


def test_format_word_reference_values():
    # Frozen from an independent BCH(15,5) computation.
    assert format_info_bits("M", 0) == 0x5412
    assert format_info_bits("L", 0) == 0x77C4
    assert format_info_bits("L", 7) == 0x6976


def test_round_trip_sample_all_masks_and_orientations():
    rng = random.Random(2024)
    for version in (1, 2, 3):
        for level in ("L", "M"):
            payload = bytes(rng.randrange(256) for _ in range(byte_capacity(version, level)))
            for mask in range(8):
                sym, cfg = encode_symbol(payload, level, forced=(version, mask))
                assert cfg.mask == mask
                for orientation in Orientation:
                    report = decode_symbol(orientation.apply(sym))
                    assert report.payload == payload
                    assert report.orientation_applied == orientation
                    assert report.config == cfg


def test_auto_mask_decodes_same_as_forced():
    payload = b"HCTIS1|ENG|1|N07|S1042"
    auto_sym, auto_cfg = encode_symbol(payload, "M")
    assert decode_symbol(auto_sym).payload == payload
    forced_sym, _ = encode_symbol(payload, "M", forced=(auto_cfg.version, auto_cfg.mask))
    assert forced_sym == auto_sym


def test_auto_mask_is_deterministic():
    payload = b"determinism"
    first, cfg1 = encode_symbol(payload, "L")
    second, cfg2 = encode_symbol(payload, "L")
    assert cfg1 == cfg2
    assert first == second


def test_error_injection_within_capability():
    rng = random.Random(7)
    payload = b"HCTIS1|ENG|1|N07|S1042"
    sym, cfg = encode_symbol(payload, "M")
    shape = RS_BLOCKS[(cfg.version, cfg.ec_level)]
    t = shape.ec_codewords // 2
    _, reserved = function_pattern_map(cfg.version)
    positions = data_positions(cfg.version, reserved)
    for _ in range(30):
        corrupted = sym.copy()
        for byte_index in rng.sample(range(shape.total_codewords), t):
            for bit in range(8):
                r, c = positions[byte_index * 8 + bit]
                corrupted.set(r, c, not corrupted.get(r, c))
        report = decode_symbol(corrupted)
        assert report.payload == payload
        assert 0 < report.corrected_errors <= t


def test_clean_symbol_reports_zero_corrections():
    sym, _ = encode_symbol(b"clean", "L")
    assert decode_symbol(sym).corrected_errors == 0


def test_no_finder_orientation():
    with pytest.raises(NoFinderOrientation):
        decode_symbol(BitMatrix(21))


def test_unsupported_size_rejected():
    with pytest.raises(ValueError):
        decode_symbol(BitMatrix(23))


def test_opencv_reference_decoder_agrees():
    cv2 = pytest.importorskip("cv2")
    np = pytest.importorskip("numpy")
    detector = cv2.QRCodeDetector()
    for payload, level in [
        (b"HCTIS1|ENG|1|N07|S1042", "M"),
        (b"campus navigation", "L"),
        (b"A" * 40, "M"),
    ]:
        sym, _ = encode_symbol(payload, level)
        n, scale, quiet = sym.size, 10, 4
        side = (n + 2 * quiet) * scale
        img = np.full((side, side), 255, np.uint8)
        for r in range(n):
            for c in range(n):
                if sym.get(r, c):
                    img[
                        (r + quiet) * scale:(r + quiet + 1) * scale,
                        (c + quiet) * scale:(c + quiet + 1) * scale,
                    ] = 0
        decoded, _, _ = detector.detectAndDecode(img)
        assert decoded == payload.decode("ascii")
