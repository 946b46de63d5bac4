"""OCR text normalization and table-specification parsing into the schema IR."""

from .model import (
    CheckComparison,
    CheckEnum,
    ColumnSpec,
    ComparisonOp,
    ConstraintSpec,
    DataType,
    Length,
    Precision,
    PrimaryKey,
    RawSpecDocument,
    SizeSpec,
    TableSpec,
    Unique,
    Violation,
    validate,
)
from .normalize import normalize_ocr_text
from .parser import (
    EmptyTable,
    MalformedConstraint,
    MalformedSize,
    MissingHeader,
    MissingTitle,
    TableSpecError,
    UnknownDatatype,
    parse_table_spec,
)

__all__ = [
    "CheckComparison",
    "CheckEnum",
    "ColumnSpec",
    "ComparisonOp",
    "ConstraintSpec",
    "DataType",
    "EmptyTable",
    "Length",
    "MalformedConstraint",
    "MalformedSize",
    "MissingHeader",
    "MissingTitle",
    "Precision",
    "PrimaryKey",
    "RawSpecDocument",
    "SizeSpec",
    "TableSpec",
    "TableSpecError",
    "Unique",
    "UnknownDatatype",
    "Violation",
    "normalize_ocr_text",
    "parse_table_spec",
    "validate",
]
