"""Deterministic `create table` DDL from a validated TableSpec.

Check constraints are named from the table-name initials plus "CH" and a
1-based ordinal counted over check constraints in column order, and their
predicates are parenthesized with the column repeated on each disjunct, so the
emitted statement is executable Oracle-style SQL.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from ..errors import CampusArError
from ..tablespec.model import (
    CheckComparison,
    CheckEnum,
    ColumnSpec,
    ComparisonOp,
    DataType,
    Length,
    Precision,
    PrimaryKey,
    TableSpec,
    Unique,
    Violation,
    validate,
)

MAX_INDENT = 16

OP_SQL = {
    ComparisonOp.LT: "<",
    ComparisonOp.LE: "<=",
    ComparisonOp.GT: ">",
    ComparisonOp.GE: ">=",
    ComparisonOp.EQ: "=",
    ComparisonOp.NE: "<>",
}


class KeywordCase(Enum):
    LOWER = "LOWER"
    UPPER = "UPPER"


class InvalidSpec(CampusArError):
    def __init__(self, violations: list[Violation]):
        self.violations = violations
        super().__init__("; ".join(str(v) for v in violations))


@dataclass(frozen=True)
class DdlOptions:
    keyword_case: KeywordCase = KeywordCase.LOWER
    indent: int = 0
    constraint_prefix_override: str | None = None

    def __post_init__(self) -> None:
        if not 0 <= self.indent <= MAX_INDENT:
            raise ValueError(f"indent must be in 0..{MAX_INDENT}")


def constraint_name(table_name: str, ordinal: int) -> str:
    """Uppercase initials of the underscore-separated words, then CH<ordinal>."""
    if ordinal < 1:
        raise ValueError("ordinal is 1-based")
    initials = "".join(word[0] for word in table_name.split("_") if word)
    return f"{initials.upper()}CH{ordinal}"


def _require_valid(spec: TableSpec) -> None:
    violations = validate(spec)
    if violations:
        raise InvalidSpec(violations)


def _sql_literal(value: int | float) -> str:
    return str(value)


def _quote_value(value: str) -> str:
    return "'" + value.replace("'", "''") + "'"


def _type_sql(col: ColumnSpec, kw) -> str:
    base = kw("number") if col.datatype is DataType.NUMBER else kw("varchar2")
    size = col.size
    if size is None:
        return base
    if isinstance(size, Precision):
        inner = str(size.precision) if size.scale is None else f"{size.precision},{size.scale}"
    else:
        inner = str(size.length)
    return f"{base}({inner})"


def generate_ddl(spec: TableSpec, opts: DdlOptions = DdlOptions()) -> str:
    """One `create table` statement, byte-deterministic for fixed (spec, opts)."""
    _require_valid(spec)
    kw = str.upper if opts.keyword_case is KeywordCase.UPPER else str.lower
    indent = " " * opts.indent
    prefix = opts.constraint_prefix_override

    lines = [f"{kw('create table')} {spec.table_name} ("]
    check_ordinal = 0
    for i, col in enumerate(spec.columns):
        parts = [col.name, _type_sql(col, kw)]
        constraint = col.constraint
        if isinstance(constraint, PrimaryKey):
            parts.append(kw("primary key"))
        elif isinstance(constraint, Unique):
            parts.append(kw("unique"))
        elif isinstance(constraint, (CheckComparison, CheckEnum)):
            check_ordinal += 1
            if prefix is not None:
                name = f"{prefix}CH{check_ordinal}"
            else:
                name = constraint_name(spec.table_name, check_ordinal)
            if isinstance(constraint, CheckComparison):
                predicate = f"{col.name} {OP_SQL[constraint.op]} {_sql_literal(constraint.literal)}"
            else:
                disjuncts = [f"{col.name} = {_quote_value(v)}" for v in constraint.values]
                predicate = f" {kw('or')} ".join(disjuncts)
            parts.append(f"{kw('constraint')} {name} {kw('check')} ({predicate})")
        comma = "," if i < len(spec.columns) - 1 else ""
        lines.append(f"{indent}{' '.join(parts)}{comma}")
    lines.append(");")
    return "\n".join(lines)
