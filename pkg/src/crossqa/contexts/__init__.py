from .model import Cell, Column, Context, ImageRef, Paragraph, Table, WikiEntity
from .columns import classify_column, is_year_like, ordering_key, parse_date, parse_number
from .parsing import (
    ContextError,
    ContextSchemaError,
    DanglingReferenceError,
    load_context_file,
    parse_context,
)
from .table_ops import filter_table, linearize_table

__all__ = [
    "Cell",
    "Column",
    "Context",
    "ContextError",
    "ContextSchemaError",
    "DanglingReferenceError",
    "ImageRef",
    "Paragraph",
    "Table",
    "WikiEntity",
    "classify_column",
    "filter_table",
    "is_year_like",
    "linearize_table",
    "load_context_file",
    "ordering_key",
    "parse_context",
    "parse_date",
    "parse_number",
]
