"""QR symbol decoder: orientation normalization, format read, RS correction.

The input is a clean bit matrix in any of the eight square symmetries. The
three finder squares fix the orientation up to a diagonal flip; the format
information (and, for versions 2-3, the alignment square near the fourth
corner) settles the rest.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import CampusArError
from .encoder import (
    ALIGNMENT_CENTER,
    LEVEL_BITS,
    MASK_FUNCTIONS,
    RS_BLOCKS,
    format_cells_split,
    format_cells_tl,
    format_info_bits,
    function_pattern_map,
    data_positions,
    QrSymbolConfig,
)
from .matrix import SUPPORTED_SIZES, BitMatrix, Orientation
from .reed_solomon import Uncorrectable, rs_correct


class NoFinderOrientation(CampusArError):
    pass


class BadFormatInfo(CampusArError):
    pass


class MalformedBitstream(CampusArError):
    pass


@dataclass(frozen=True)
class DecodeReport:
    payload: bytes
    corrected_errors: int
    orientation_applied: Orientation
    config: QrSymbolConfig


# All 32 valid format words, indexed by the (level, mask) they encode.
_FORMAT_WORDS = {
    format_info_bits(level, mask): (level, mask)
    for level in LEVEL_BITS
    for mask in range(8)
}


def _nearest_format(word: int) -> tuple[str, int] | None:
    """Decode a 15-bit format word tolerating up to 3 bit errors."""
    best = None
    best_dist = 4
    for valid, decoded in _FORMAT_WORDS.items():
        dist = bin(word ^ valid).count("1")
        if dist < best_dist:
            best, best_dist = decoded, dist
    return best


def _finder_ok(m: BitMatrix, r0: int, c0: int) -> bool:
    for dr in range(7):
        for dc in range(7):
            expected = max(abs(dr - 3), abs(dc - 3)) != 2
            if m.get(r0 + dr, c0 + dc) != expected:
                return False
    return True


def _separators_ok(m: BitMatrix) -> bool:
    n = m.size
    for i in range(8):
        if (
            m.get(7, i) or m.get(i, 7)                  # around TL
            or m.get(7, n - 8 + i) or m.get(i, n - 8)   # around TR
            or m.get(n - 8, i) or m.get(n - 8 + i, 7)   # around BL
        ):
            return False
    return True


def _alignment_ok(m: BitMatrix, version: int) -> bool:
    if version not in ALIGNMENT_CENTER:
        return True
    center = ALIGNMENT_CENTER[version]
    for dr in range(-2, 3):
        for dc in range(-2, 3):
            if m.get(center + dr, center + dc) != (max(abs(dr), abs(dc)) != 1):
                return False
    return True


def _function_patterns_ok(m: BitMatrix, version: int) -> bool:
    n = m.size
    return (
        _finder_ok(m, 0, 0)
        and _finder_ok(m, 0, n - 7)
        and _finder_ok(m, n - 7, 0)
        and _separators_ok(m)
        and _alignment_ok(m, version)
    )


def _read_format(m: BitMatrix) -> tuple[str, int]:
    n = m.size
    for cells in (format_cells_tl(n), format_cells_split(n)):
        word = 0
        for i, (r, c) in enumerate(cells):
            if m.get(r, c):
                word |= 1 << i
        decoded = _nearest_format(word)
        if decoded is not None:
            return decoded
    raise BadFormatInfo("neither format-information copy decodes")


def _decode_canonical(m: BitMatrix, version: int, orientation: Orientation) -> DecodeReport:
    level, mask = _read_format(m)
    if (version, level) not in RS_BLOCKS:
        raise BadFormatInfo(f"unsupported EC level {level!r} for this decoder")

    shape = RS_BLOCKS[(version, level)]
    _, reserved = function_pattern_map(version)
    positions = data_positions(version, reserved)
    fn = MASK_FUNCTIONS[mask]

    codeword = bytearray()
    byte = 0
    for index, (r, c) in enumerate(positions[: shape.total_codewords * 8]):
        byte = (byte << 1) | ((m.get(r, c) ^ fn(r, c)) & 1)
        if index % 8 == 7:
            codeword.append(byte)
            byte = 0

    data, corrected = rs_correct(bytes(codeword), shape.ec_codewords)

    mode = data[0] >> 4
    if mode != 0b0100:
        raise MalformedBitstream(f"mode indicator {mode:#06b} is not byte mode")
    count = ((data[0] & 0x0F) << 4) | (data[1] >> 4)
    if count > len(data) - 2:
        raise MalformedBitstream(f"length field {count} exceeds data capacity")
    payload = bytearray()
    for i in range(count):
        payload.append(((data[1 + i] & 0x0F) << 4) | (data[2 + i] >> 4))

    return DecodeReport(
        payload=bytes(payload),
        corrected_errors=corrected,
        orientation_applied=orientation,
        config=QrSymbolConfig(version, level, mask),
    )


def decode_symbol(matrix: BitMatrix) -> DecodeReport:
    """Decode a symbol given in any of the eight square symmetries."""
    if matrix.size not in SUPPORTED_SIZES:
        raise ValueError(f"matrix size {matrix.size} not in {SUPPORTED_SIZES}")
    version = (matrix.size - 17) // 4

    first_error: CampusArError | None = None
    any_finders = False
    for orientation in Orientation:
        candidate = orientation.inverse().apply(matrix)
        if not _function_patterns_ok(candidate, version):
            continue
        any_finders = True
        try:
            return _decode_canonical(candidate, version, orientation)
        except (BadFormatInfo, MalformedBitstream, Uncorrectable) as exc:
            if first_error is None:
                first_error = exc
    if not any_finders:
        raise NoFinderOrientation("no symmetry places the three finder squares")
    raise first_error
