"""Column semantic typing and the cell value parsers backing it.

A column is `date` when every non-empty cell parses as a date and at least one
cell carries an explicit day or month (a column of bare 4-digit years stays
numeric). It is `numeric` when every non-empty cell parses as a number, and
`index` when those numbers are integers ascending by exactly +1 from the first
value. Everything else, including all-empty columns, is `text`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

MONTHS = {
    "january": 1, "february": 2, "march": 3, "april": 4, "may": 5, "june": 6,
    "july": 7, "august": 8, "september": 9, "october": 10, "november": 11,
    "december": 12,
    "jan": 1, "feb": 2, "mar": 3, "apr": 4, "jun": 6, "jul": 7, "aug": 8,
    "sep": 9, "sept": 9, "oct": 10, "nov": 11, "dec": 12,
}

_ISO_RE = re.compile(r"^(\d{4})-(\d{1,2})-(\d{1,2})$")
_MDY_RE = re.compile(r"^([A-Za-z]+)\.?\s+(\d{1,2}),?\s+(\d{4})$")
_DMY_RE = re.compile(r"^(\d{1,2})\s+([A-Za-z]+)\.?\s+(\d{4})$")
_YEAR_RE = re.compile(r"^\d{4}$")
_CURRENCY = "$€£¥"


@dataclass(frozen=True)
class DateValue:
    year: int
    month: int
    day: int
    explicit: bool  # True when the cell spelled out more than a bare year

    def key(self) -> tuple[int, int, int]:
        return (self.year, self.month, self.day)


def parse_date(text: str) -> DateValue | None:
    s = text.strip()
    if not s:
        return None
    m = _ISO_RE.match(s)
    if m:
        y, mo, d = int(m.group(1)), int(m.group(2)), int(m.group(3))
        if 1 <= mo <= 12 and 1 <= d <= 31:
            return DateValue(y, mo, d, explicit=True)
        return None
    m = _MDY_RE.match(s)
    if m:
        mo = MONTHS.get(m.group(1).lower())
        d, y = int(m.group(2)), int(m.group(3))
        if mo and 1 <= d <= 31:
            return DateValue(y, mo, d, explicit=True)
        return None
    m = _DMY_RE.match(s)
    if m:
        mo = MONTHS.get(m.group(2).lower())
        d, y = int(m.group(1)), int(m.group(3))
        if mo and 1 <= d <= 31:
            return DateValue(y, mo, d, explicit=True)
        return None
    if _YEAR_RE.match(s):
        y = int(s)
        if 1000 <= y <= 2999:
            # Bare years compare as January 1.
            return DateValue(y, 1, 1, explicit=False)
    return None


def parse_number(text: str) -> float | None:
    s = text.strip()
    if not s:
        return None
    if s[0] in _CURRENCY:
        s = s[1:].strip()
    s = s.replace(",", "")
    if not s:
        return None
    try:
        return float(s)
    except ValueError:
        return None


def classify_column(cells: list[str]) -> str:
    """Assign one of date / numeric / index / text to a column of cell texts.

    Empty cells are ignored in the vote; a column of only empty cells is text.
    """
    values = [c for c in cells if c.strip()]
    if not values:
        return "text"

    dates = [parse_date(c) for c in values]
    if all(d is not None for d in dates) and any(d.explicit for d in dates):  # type: ignore[union-attr]
        return "date"

    numbers = [parse_number(c) for c in values]
    if all(n is not None for n in numbers):
        if len(numbers) >= 2 and all(float(n).is_integer() for n in numbers):  # type: ignore[arg-type]
            ints = [int(n) for n in numbers]  # type: ignore[arg-type]
            if all(ints[i + 1] == ints[i] + 1 for i in range(len(ints) - 1)):
                return "index"
        return "numeric"

    return "text"


def is_year_like(cells: list[str]) -> bool:
    """True when every non-empty cell is an integer in [1000, 2999].

    Such numeric columns (typically Year columns) take temporal superlative
    wording (EARLIEST / MOST RECENT) instead of LOWEST / HIGHEST.
    """
    values = [c for c in cells if c.strip()]
    if not values:
        return False
    for v in values:
        n = parse_number(v)
        if n is None or not float(n).is_integer() or not 1000 <= int(n) <= 2999:
            return False
    return True


def ordering_key(text: str, semantic_type: str):
    """Sortable key for a cell under its column's semantic type, or None."""
    if semantic_type == "date":
        d = parse_date(text)
        return d.key() if d else None
    if semantic_type in ("numeric", "index"):
        return parse_number(text)
    return None
