"""Schema intermediate representation: table, columns, sizes, constraints."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Union

IDENTIFIER_RE = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")

MAX_PRECISION = 38
MAX_VARCHAR2_LENGTH = 4000


class DataType(Enum):
    NUMBER = "NUMBER"
    VARCHAR2 = "VARCHAR2"


class ComparisonOp(Enum):
    LT = "LT"
    LE = "LE"
    GT = "GT"
    GE = "GE"
    EQ = "EQ"
    NE = "NE"


@dataclass(frozen=True)
class Length:
    length: int


@dataclass(frozen=True)
class Precision:
    precision: int
    scale: int | None = None


SizeSpec = Union[Length, Precision]


@dataclass(frozen=True)
class PrimaryKey:
    pass


@dataclass(frozen=True)
class Unique:
    pass


@dataclass(frozen=True)
class CheckComparison:
    op: ComparisonOp
    literal: int | float


@dataclass(frozen=True)
class CheckEnum:
    values: tuple[str, ...]


ConstraintSpec = Union[PrimaryKey, Unique, CheckComparison, CheckEnum]


@dataclass(frozen=True)
class ColumnSpec:
    name: str
    datatype: DataType
    size: SizeSpec | None = None
    constraint: ConstraintSpec | None = None


@dataclass(frozen=True)
class TableSpec:
    table_name: str
    columns: tuple[ColumnSpec, ...]

    def to_dict(self) -> dict:
        return {
            "table_name": self.table_name,
            "columns": [_column_to_dict(c) for c in self.columns],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "TableSpec":
        return cls(
            table_name=data["table_name"],
            columns=tuple(_column_from_dict(c) for c in data["columns"]),
        )


@dataclass(frozen=True)
class RawSpecDocument:
    """Normalized text lines of one table-specification document."""

    source_name: str
    lines: tuple[str, ...]

    @classmethod
    def from_text(cls, raw: str, source_name: str = "<text>") -> "RawSpecDocument":
        from .normalize import normalize_ocr_text

        normalized = normalize_ocr_text(raw)
        return cls(source_name=source_name, lines=tuple(normalized.splitlines()))


@dataclass(frozen=True)
class Violation:
    code: str
    detail: str
    column: str | None = field(default=None)

    def __str__(self) -> str:
        where = f" [{self.column}]" if self.column else ""
        return f"{self.code}{where}: {self.detail}"


def _size_violations(col: ColumnSpec) -> list[Violation]:
    out = []
    size = col.size
    if size is None:
        return out
    if isinstance(size, Precision):
        if col.datatype is not DataType.NUMBER:
            out.append(Violation("SizeKindMismatch", "precision size on a non-NUMBER column", col.name))
        if not 1 <= size.precision <= MAX_PRECISION:
            out.append(Violation("PrecisionOutOfRange", f"precision {size.precision} not in 1..{MAX_PRECISION}", col.name))
        if size.scale is not None:
            if size.scale < 0:
                out.append(Violation("NegativeScale", f"scale {size.scale} is negative", col.name))
            elif size.scale > size.precision:
                out.append(Violation("ScaleExceedsPrecision", f"scale {size.scale} > precision {size.precision}", col.name))
    else:
        if col.datatype is not DataType.VARCHAR2:
            out.append(Violation("SizeKindMismatch", "length size on a non-VARCHAR2 column", col.name))
        if not 1 <= size.length <= MAX_VARCHAR2_LENGTH:
            out.append(Violation("LengthOutOfRange", f"length {size.length} not in 1..{MAX_VARCHAR2_LENGTH}", col.name))
    return out


def validate(spec: TableSpec) -> list[Violation]:
    """All invariant breaches in the spec; empty exactly when it is valid."""
    violations: list[Violation] = []

    if not IDENTIFIER_RE.match(spec.table_name):
        violations.append(Violation("BadTableName", f"{spec.table_name!r} is not an identifier"))
    if not spec.columns:
        violations.append(Violation("NoColumns", "table must have at least one column"))

    seen: dict[str, str] = {}
    pk_columns = []
    for col in spec.columns:
        if not IDENTIFIER_RE.match(col.name):
            violations.append(Violation("BadColumnName", f"{col.name!r} is not an identifier", col.name))
        key = col.name.lower()
        if key in seen:
            violations.append(Violation("DuplicateColumnName", f"{col.name!r} collides with {seen[key]!r}", col.name))
        else:
            seen[key] = col.name
        if isinstance(col.constraint, PrimaryKey):
            pk_columns.append(col.name)
        violations.extend(_size_violations(col))
        if isinstance(col.constraint, CheckEnum):
            if not col.constraint.values:
                violations.append(Violation("EmptyEnum", "check enumeration has no values", col.name))
            elif any(v == "" for v in col.constraint.values):
                violations.append(Violation("EmptyEnumValue", "check enumeration contains an empty string", col.name))

    if len(pk_columns) > 1:
        violations.append(
            Violation("MultiplePrimaryKeys", f"primary key on {', '.join(pk_columns)}")
        )
    return violations


def _size_to_dict(size: SizeSpec | None) -> dict | None:
    if size is None:
        return None
    if isinstance(size, Length):
        return {"length": size.length}
    return {"precision": size.precision, "scale": size.scale}


def _size_from_dict(data: dict | None) -> SizeSpec | None:
    if data is None:
        return None
    if "length" in data:
        return Length(length=data["length"])
    return Precision(precision=data["precision"], scale=data.get("scale"))


def _constraint_to_dict(constraint: ConstraintSpec | None) -> dict | None:
    if constraint is None:
        return None
    if isinstance(constraint, PrimaryKey):
        return {"kind": "PRIMARY_KEY"}
    if isinstance(constraint, Unique):
        return {"kind": "UNIQUE"}
    if isinstance(constraint, CheckComparison):
        return {"kind": "CHECK_COMPARISON", "op": constraint.op.value, "literal": constraint.literal}
    return {"kind": "CHECK_ENUM", "values": list(constraint.values)}


def _constraint_from_dict(data: dict | None) -> ConstraintSpec | None:
    if data is None:
        return None
    kind = data["kind"]
    if kind == "PRIMARY_KEY":
        return PrimaryKey()
    if kind == "UNIQUE":
        return Unique()
    if kind == "CHECK_COMPARISON":
        return CheckComparison(op=ComparisonOp(data["op"]), literal=data["literal"])
    if kind == "CHECK_ENUM":
        return CheckEnum(values=tuple(data["values"]))
    raise ValueError(f"unknown constraint kind {kind!r}")


def _column_to_dict(col: ColumnSpec) -> dict:
    return {
        "name": col.name,
        "datatype": col.datatype.value,
        "size": _size_to_dict(col.size),
        "constraint": _constraint_to_dict(col.constraint),
    }


def _column_from_dict(data: dict) -> ColumnSpec:
    return ColumnSpec(
        name=data["name"],
        datatype=DataType(data["datatype"]),
        size=_size_from_dict(data.get("size")),
        constraint=_constraint_from_dict(data.get("constraint")),
    )
