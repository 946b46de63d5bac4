"""QR Model 2 byte-mode symbol encoder, versions 1-3, levels L/M.

Every supported (version, level) pair is a single Reed-Solomon block, so no
block interleaving is needed while masking, format info and module placement
follow the standard layout.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import CampusArError
from .matrix import BitMatrix
from .reed_solomon import rs_encode

SUPPORTED_VERSIONS = (1, 2, 3)
SUPPORTED_LEVELS = ("L", "M")

# Error-correction level indicator bits in the format information. Q and H
# exist only so the decoder can recognize (and reject) their format words.
LEVEL_BITS = {"L": 1, "M": 0, "Q": 3, "H": 2}

PAD_BYTES = (0xEC, 0x11)

# Alignment pattern center coordinate (both axes) for versions 2 and 3;
# version 1 has none.
ALIGNMENT_CENTER = {2: 18, 3: 22}

FORMAT_MASK = 0x5412
_FORMAT_GEN = 0b10100110111  # BCH(15,5) generator

# Mask penalty weights.
PENALTY_RUN = 3
PENALTY_BLOCK = 3
PENALTY_FINDER = 40
PENALTY_BALANCE = 10


class PayloadTooLarge(CampusArError):
    pass


class BadForcedConfig(CampusArError):
    pass


@dataclass(frozen=True)
class RsBlockShape:
    total_codewords: int
    data_codewords: int

    @property
    def ec_codewords(self) -> int:
        return self.total_codewords - self.data_codewords


# Single-block shapes per (version, level), from the standard's RS block table.
RS_BLOCKS = {
    (1, "L"): RsBlockShape(26, 19),
    (1, "M"): RsBlockShape(26, 16),
    (2, "L"): RsBlockShape(44, 34),
    (2, "M"): RsBlockShape(44, 28),
    (3, "L"): RsBlockShape(70, 55),
    (3, "M"): RsBlockShape(70, 44),
}


@dataclass(frozen=True)
class QrSymbolConfig:
    version: int
    ec_level: str
    mask: int


def symbol_size(version: int) -> int:
    return 17 + 4 * version


def byte_capacity(version: int, ec_level: str) -> int:
    """Maximum byte-mode payload length: data codewords minus the 12-bit header."""
    return RS_BLOCKS[(version, ec_level)].data_codewords - 2


MASK_FUNCTIONS = (
    lambda r, c: (r + c) % 2 == 0,
    lambda r, c: r % 2 == 0,
    lambda r, c: c % 3 == 0,
    lambda r, c: (r + c) % 3 == 0,
    lambda r, c: (r // 2 + c // 3) % 2 == 0,
    lambda r, c: (r * c) % 2 + (r * c) % 3 == 0,
    lambda r, c: ((r * c) % 2 + (r * c) % 3) % 2 == 0,
    lambda r, c: ((r + c) % 2 + (r * c) % 3) % 2 == 0,
)


def format_info_bits(ec_level: str, mask: int) -> int:
    """15-bit BCH(15,5)-protected format word, already XORed with 0x5412."""
    data = (LEVEL_BITS[ec_level] << 3) | mask
    rem = data << 10
    while rem.bit_length() >= 11:
        rem ^= _FORMAT_GEN << (rem.bit_length() - 11)
    return ((data << 10) | rem) ^ FORMAT_MASK


def format_cells_tl(n: int) -> list[tuple[int, int]]:
    """Cell of format bit i (LSB first) in the copy around the top-left finder."""
    return (
        [(i, 8) for i in range(6)]
        + [(7, 8), (8, 8), (8, 7)]
        + [(8, 14 - i) for i in range(9, 15)]
    )


def format_cells_split(n: int) -> list[tuple[int, int]]:
    """Cell of format bit i (LSB first) in the copy split over TR and BL."""
    return [(8, n - 1 - i) for i in range(8)] + [(n - 15 + i, 8) for i in range(8, 15)]


def build_codewords(payload: bytes, version: int, ec_level: str) -> bytes:
    shape = RS_BLOCKS[(version, ec_level)]
    capacity_bits = shape.data_codewords * 8
    bits: list[int] = []

    def put(value: int, width: int) -> None:
        bits.extend((value >> (width - 1 - i)) & 1 for i in range(width))

    put(0b0100, 4)
    put(len(payload), 8)
    for byte in payload:
        put(byte, 8)
    put(0, min(4, capacity_bits - len(bits)))
    while len(bits) % 8:
        bits.append(0)
    data = bytearray()
    for i in range(0, len(bits), 8):
        byte = 0
        for b in bits[i:i + 8]:
            byte = (byte << 1) | b
        data.append(byte)
    pad_index = 0
    while len(data) < shape.data_codewords:
        data.append(PAD_BYTES[pad_index % 2])
        pad_index += 1
    return bytes(data) + rs_encode(bytes(data), shape.ec_codewords)


def function_pattern_map(version: int) -> tuple[BitMatrix, BitMatrix]:
    """(modules, reserved) with every function pattern drawn and reserved.

    Format-information cells are reserved but left light; their values depend
    on the mask and are written by place_format_info.
    """
    n = symbol_size(version)
    modules = BitMatrix(n)
    reserved = BitMatrix(n)

    def put(r: int, c: int, dark: bool) -> None:
        modules.set(r, c, dark)
        reserved.set(r, c, True)

    # Finder patterns with their light separators at TL, TR, BL.
    for r0, c0 in ((0, 0), (0, n - 7), (n - 7, 0)):
        for dr in range(-1, 8):
            for dc in range(-1, 8):
                r, c = r0 + dr, c0 + dc
                if not (0 <= r < n and 0 <= c < n):
                    continue
                if 0 <= dr <= 6 and 0 <= dc <= 6:
                    # Dark border, light ring, dark 3x3 core.
                    put(r, c, max(abs(dr - 3), abs(dc - 3)) != 2)
                else:
                    put(r, c, False)  # separator

    # Timing patterns, dark on even coordinates.
    for i in range(8, n - 8):
        put(6, i, i % 2 == 0)
        put(i, 6, i % 2 == 0)

    # Alignment pattern for versions 2-3: concentric 5x5 near the fourth corner.
    if version in ALIGNMENT_CENTER:
        center = ALIGNMENT_CENTER[version]
        for dr in range(-2, 3):
            for dc in range(-2, 3):
                ring = max(abs(dr), abs(dc))
                put(center + dr, center + dc, ring != 1)

    # Dark module.
    put(n - 8, 8, True)

    # Reserve both format-information areas.
    for r, c in format_cells_tl(n) + format_cells_split(n):
        reserved.set(r, c, True)

    return modules, reserved


def data_positions(version: int, reserved: BitMatrix) -> list[tuple[int, int]]:
    """Standard zigzag order: column pairs right to left, alternating direction."""
    n = reserved.size
    positions = []
    col = n - 1
    upward = True
    while col > 0:
        if col == 6:
            col -= 1
        rows = range(n - 1, -1, -1) if upward else range(n)
        for row in rows:
            for c in (col, col - 1):
                if not reserved.get(row, c):
                    positions.append((row, c))
        upward = not upward
        col -= 2
    return positions


def place_format_info(m: BitMatrix, ec_level: str, mask: int) -> None:
    word = format_info_bits(ec_level, mask)
    for i, (r, c) in enumerate(format_cells_tl(m.size)):
        m.set(r, c, (word >> i) & 1 == 1)
    for i, (r, c) in enumerate(format_cells_split(m.size)):
        m.set(r, c, (word >> i) & 1 == 1)


def penalty_score(m: BitMatrix) -> int:
    n = m.size
    rows = m.rows
    cols = [[rows[r][c] for r in range(n)] for c in range(n)]
    score = 0

    # N1: runs of 5 or more same-colored modules.
    for line in rows + cols:
        run = 1
        for i in range(1, n):
            if line[i] == line[i - 1]:
                run += 1
            else:
                if run >= 5:
                    score += PENALTY_RUN + run - 5
                run = 1
        if run >= 5:
            score += PENALTY_RUN + run - 5

    # N2: 2x2 blocks of one color.
    for r in range(n - 1):
        for c in range(n - 1):
            if rows[r][c] == rows[r][c + 1] == rows[r + 1][c] == rows[r + 1][c + 1]:
                score += PENALTY_BLOCK

    # N3: finder-like 1011101 with four light modules on either side.
    dark_pat = (True, False, True, True, True, False, True)
    for line in rows + cols:
        for i in range(n - 10):
            window = tuple(line[i:i + 11])
            if window == dark_pat + (False,) * 4 or window == (False,) * 4 + dark_pat:
                score += PENALTY_FINDER

    # N4: deviation of the dark-module proportion from 50%.
    dark = sum(sum(row) for row in rows)
    score += PENALTY_BALANCE * (abs(100 * dark // (n * n) - 50) // 5)
    return score


def encode_symbol(
    payload: bytes,
    ec_level: str = "M",
    forced: tuple[int, int] | None = None,
) -> tuple[BitMatrix, QrSymbolConfig]:
    """Encode payload bytes into a symbol; smallest fitting version unless forced.

    forced, when given, is a (version, mask) pair; the mask search is skipped.
    """
    if ec_level not in SUPPORTED_LEVELS:
        raise BadForcedConfig(f"unsupported EC level {ec_level!r}")

    if forced is not None:
        version, forced_mask = forced
        if version not in SUPPORTED_VERSIONS:
            raise BadForcedConfig(f"version must be one of {SUPPORTED_VERSIONS}")
        if not 0 <= forced_mask <= 7:
            raise BadForcedConfig("mask must be in 0..7")
        if len(payload) > byte_capacity(version, ec_level):
            raise BadForcedConfig(
                f"payload of {len(payload)} bytes exceeds version {version}-{ec_level} "
                f"capacity {byte_capacity(version, ec_level)}"
            )
    else:
        forced_mask = None
        for version in SUPPORTED_VERSIONS:
            if len(payload) <= byte_capacity(version, ec_level):
                break
        else:
            raise PayloadTooLarge(
                f"payload of {len(payload)} bytes exceeds version 3-{ec_level} "
                f"capacity {byte_capacity(3, ec_level)}"
            )

    codewords = build_codewords(payload, version, ec_level)
    base, reserved = function_pattern_map(version)
    positions = data_positions(version, reserved)

    bit_of = {}
    for index, pos in enumerate(positions):
        byte_index, bit_index = divmod(index, 8)
        if byte_index < len(codewords):
            bit_of[pos] = (codewords[byte_index] >> (7 - bit_index)) & 1 == 1
        else:
            bit_of[pos] = False  # remainder bits

    def masked_symbol(mask: int) -> BitMatrix:
        m = base.copy()
        fn = MASK_FUNCTIONS[mask]
        for (r, c), bit in bit_of.items():
            m.set(r, c, bit ^ fn(r, c))
        place_format_info(m, ec_level, mask)
        return m

    if forced_mask is not None:
        chosen_mask = forced_mask
        symbol = masked_symbol(chosen_mask)
    else:
        chosen_mask, symbol = min(
            ((mask, masked_symbol(mask)) for mask in range(8)),
            key=lambda pair: (penalty_score(pair[1]), pair[0]),
        )

    return symbol, QrSymbolConfig(version, ec_level, chosen_mask)
