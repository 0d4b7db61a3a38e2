"""Plain-text matrix and vector formats.

Matrices: one row per line, entries separated by single spaces.  Binary
matrices use ``0``/``1``; field matrices use the power (``a^k``) or hex form.
Vectors: one per line, entries separated by commas and/or whitespace.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

import numpy as np

from .gf2m import FieldContext, format_element, parse_element

_SEP = re.compile(r"[,\s]+")


def format_binary_matrix(M) -> str:
    rows = np.asarray(M).tolist()
    return "\n".join(" ".join(str(int(x)) for x in row) for row in rows) + "\n"


def parse_binary_matrix(text: str) -> np.ndarray:
    rows = []
    for line in text.splitlines():
        if not line.strip():
            continue
        row = [int(t) for t in line.split()]
        if any(x not in (0, 1) for x in row):
            raise ValueError(f"non-binary entry in row {line!r}")
        rows.append(row)
    if len({len(r) for r in rows}) > 1:
        raise ValueError("ragged matrix")
    return np.array(rows, dtype=np.uint8)


def format_field_matrix(field: FieldContext, M: Sequence[Sequence[int]], fmt: str = "pow") -> str:
    return "\n".join(" ".join(format_element(field, x, fmt) for x in row) for row in M) + "\n"


def parse_field_matrix(field: FieldContext, text: str) -> list[list[int]]:
    return [
        [parse_element(field, t) for t in line.split()]
        for line in text.splitlines()
        if line.strip()
    ]


def format_vector(field: FieldContext, v: Iterable[int], fmt: str = "pow") -> str:
    return ",".join(format_element(field, x, fmt) for x in v)


def parse_vector(field: FieldContext, line: str) -> list[int]:
    return [parse_element(field, t) for t in _SEP.split(line.strip()) if t]


def parse_vectors(field: FieldContext, text: str) -> list[list[int]]:
    return [parse_vector(field, line) for line in text.splitlines() if line.strip()]


def first_difference(expected: str, actual: str) -> tuple[int, int, str, str] | None:
    """Locate the first differing cell (row, col, expected, actual) of two matrix texts."""
    exp_rows = [r.split() for r in expected.splitlines() if r.strip()]
    act_rows = [r.split() for r in actual.splitlines() if r.strip()]
    for i in range(max(len(exp_rows), len(act_rows))):
        er = exp_rows[i] if i < len(exp_rows) else []
        ar = act_rows[i] if i < len(act_rows) else []
        for j in range(max(len(er), len(ar))):
            e = er[j] if j < len(er) else "<missing>"
            a = ar[j] if j < len(ar) else "<missing>"
            if e != a:
                return i, j, e, a
    return None
