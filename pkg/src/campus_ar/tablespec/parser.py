"""Parse a normalized table-specification document into the schema IR.

Rows are tokenized by keyword anchoring: the first datatype keyword at token
position >= 1 ends the column name, the following token is the size when it is
all digits and commas, and everything after that is constraint text.
"""

from __future__ import annotations

import re

from ..errors import CampusArError
from .model import (
    CheckComparison,
    CheckEnum,
    ColumnSpec,
    ComparisonOp,
    ConstraintSpec,
    DataType,
    Length,
    MAX_PRECISION,
    MAX_VARCHAR2_LENGTH,
    Precision,
    PrimaryKey,
    RawSpecDocument,
    SizeSpec,
    TableSpec,
    Unique,
)

HEADER_RE = re.compile(r"^column\s*name\s+data\s*type\s+size\s+constraint$", re.IGNORECASE)
_SIZE_TOKEN_RE = re.compile(r"^[0-9,]+$")
_COMPARISON_RE = re.compile(r"^(<=|>=|<>|!=|<|>|=)\s*(-?\d+(?:\.\d+)?)$")
_QUOTED_RE = re.compile(r"\"([^\"]*)\"|'([^']*)'")
_OR_RE = re.compile(r"\s+or\s+", re.IGNORECASE)

_OP_SYMBOLS = {
    "<": ComparisonOp.LT,
    "<=": ComparisonOp.LE,
    ">": ComparisonOp.GT,
    ">=": ComparisonOp.GE,
    "=": ComparisonOp.EQ,
    "<>": ComparisonOp.NE,
    "!=": ComparisonOp.NE,
}


class TableSpecError(CampusArError):
    pass


class MissingHeader(TableSpecError):
    pass


class MissingTitle(TableSpecError):
    pass


class EmptyTable(TableSpecError):
    pass


class UnknownDatatype(TableSpecError):
    pass


class MalformedSize(TableSpecError):
    pass


class MalformedConstraint(TableSpecError):
    pass


def _parse_size(token: str, datatype: DataType, line: str) -> SizeSpec:
    parts = token.split(",")
    if "" in parts or len(parts) > 2:
        raise MalformedSize(f"size {token!r} is not L or p,s in row {line!r}")
    numbers = [int(p) for p in parts]
    if datatype is DataType.NUMBER:
        precision = numbers[0]
        scale = numbers[1] if len(numbers) == 2 else None
        if not 1 <= precision <= MAX_PRECISION:
            raise MalformedSize(f"precision {precision} out of 1..{MAX_PRECISION} in row {line!r}")
        if scale is not None and not 0 <= scale <= precision:
            raise MalformedSize(f"scale {scale} out of 0..{precision} in row {line!r}")
        return Precision(precision, scale)
    if len(numbers) != 1:
        raise MalformedSize(f"VARCHAR2 size {token!r} must be a single length in row {line!r}")
    length = numbers[0]
    if not 1 <= length <= MAX_VARCHAR2_LENGTH:
        raise MalformedSize(f"length {length} out of 1..{MAX_VARCHAR2_LENGTH} in row {line!r}")
    return Length(length)


def _parse_enum_values(text: str, line: str) -> tuple[str, ...]:
    values = []
    pos = 0
    while True:
        match = _QUOTED_RE.match(text, pos)
        if not match:
            raise MalformedConstraint(f"expected quoted value at {text[pos:]!r} in row {line!r}")
        value = match.group(1) if match.group(1) is not None else match.group(2)
        if value == "":
            raise MalformedConstraint(f"empty enumeration value in row {line!r}")
        values.append(value)
        pos = match.end()
        if pos == len(text):
            return tuple(values)
        sep = _OR_RE.match(text, pos)
        if not sep:
            raise MalformedConstraint(f"expected 'or' at {text[pos:]!r} in row {line!r}")
        pos = sep.end()


def _parse_constraint(text: str, line: str) -> ConstraintSpec | None:
    if not text:
        return None
    lowered = text.lower()
    if lowered == "primary key":
        return PrimaryKey()
    if lowered == "unique":
        return Unique()
    if lowered.startswith("check"):
        body = text[len("check"):].strip()
        comparison = _COMPARISON_RE.match(body)
        if comparison:
            literal_text = comparison.group(2)
            literal = int(literal_text) if re.fullmatch(r"-?\d+", literal_text) else float(literal_text)
            return CheckComparison(_OP_SYMBOLS[comparison.group(1)], literal)
        if body.startswith(("'", '"')):
            return CheckEnum(_parse_enum_values(body, line))
    raise MalformedConstraint(f"constraint text {text!r} matches no rule in row {line!r}")


def _parse_row(line: str) -> ColumnSpec:
    tokens = line.split()
    anchor = None
    for i in range(1, len(tokens)):
        if tokens[i].lower() in ("number", "varchar2"):
            anchor = i
            break
    if anchor is None:
        raise UnknownDatatype(f"no datatype in {{Number, Varchar2}} found in row {line!r}")
    name = "_".join(tokens[:anchor])
    datatype = DataType.NUMBER if tokens[anchor].lower() == "number" else DataType.VARCHAR2

    rest = tokens[anchor + 1:]
    size = None
    if rest and _SIZE_TOKEN_RE.match(rest[0]):
        size = _parse_size(rest[0], datatype, line)
        rest = rest[1:]
    constraint = _parse_constraint(" ".join(rest), line)
    return ColumnSpec(name=name, datatype=datatype, size=size, constraint=constraint)


def parse_table_spec(doc: RawSpecDocument) -> TableSpec:
    """Front half of the syntax engine: normalized document to TableSpec."""
    header_index = None
    for i, line in enumerate(doc.lines):
        if HEADER_RE.match(line):
            header_index = i
            break
    if header_index is None:
        raise MissingHeader(f"no column header line in {doc.source_name}")
    title_words = [word for line in doc.lines[:header_index] for word in line.split()]
    if not title_words:
        raise MissingTitle(f"no table name before the header in {doc.source_name}")
    rows = doc.lines[header_index + 1:]
    if not rows:
        raise EmptyTable(f"no data rows after the header in {doc.source_name}")
    return TableSpec(
        table_name="_".join(title_words),
        columns=tuple(_parse_row(line) for line in rows),
    )
