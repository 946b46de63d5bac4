"""QR Model 2 byte-mode symbols: encode, decode, Reed-Solomon correction."""

from .decoder import (
    BadFormatInfo,
    DecodeReport,
    MalformedBitstream,
    NoFinderOrientation,
    decode_symbol,
)
from .encoder import (
    BadForcedConfig,
    PayloadTooLarge,
    QrSymbolConfig,
    RsBlockShape,
    RS_BLOCKS,
    byte_capacity,
    encode_symbol,
)
from .gf256 import gf_div, gf_inv, gf_mul, gf_pow
from .matrix import BadMatrixText, BitMatrix, Orientation
from .reed_solomon import BadEcLength, Uncorrectable, rs_correct, rs_encode

__all__ = [
    "BadEcLength",
    "BadForcedConfig",
    "BadFormatInfo",
    "BadMatrixText",
    "BitMatrix",
    "DecodeReport",
    "MalformedBitstream",
    "NoFinderOrientation",
    "Orientation",
    "PayloadTooLarge",
    "QrSymbolConfig",
    "RsBlockShape",
    "RS_BLOCKS",
    "Uncorrectable",
    "byte_capacity",
    "decode_symbol",
    "encode_symbol",
    "gf_div",
    "gf_inv",
    "gf_mul",
    "gf_pow",
    "rs_correct",
    "rs_encode",
]
