from .figures import FIGURE_KINDS, FigureSpec, render
from .schema import REQUIRED_COLUMNS, ResultRow, SchemaError, read_rows

__all__ = [
    "FIGURE_KINDS",
    "FigureSpec",
    "render",
    "REQUIRED_COLUMNS",
    "ResultRow",
    "SchemaError",
    "read_rows",
]
