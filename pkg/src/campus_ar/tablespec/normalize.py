"""Text-level rectification of OCR output before parsing.

Total and idempotent: whitespace is canonicalized, smart quotes become ASCII,
and digit-confusable letters are repaired only inside tokens that are
otherwise all digits and commas. Identifiers are never rewritten.
"""

from __future__ import annotations

_SMART_QUOTES = str.maketrans({"“": '"', "”": '"', "‘": "'", "’": "'"})
_CONFUSION = str.maketrans("OolI", "0011")
_NUMERIC_CHARS = set("0123456789,OolI")


def _repair_token(token: str) -> str:
    if set(token) <= _NUMERIC_CHARS:
        return token.translate(_CONFUSION)
    return token


def normalize_ocr_text(raw: str) -> str:
    """Canonicalize whitespace and quotes; repair O/o/l/I inside numeric tokens."""
    out_lines = []
    for line in raw.translate(_SMART_QUOTES).splitlines():
        tokens = [_repair_token(t) for t in line.split()]
        if tokens:
            out_lines.append(" ".join(tokens))
    return "\n".join(out_lines)
