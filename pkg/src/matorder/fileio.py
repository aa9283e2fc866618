"""Plain-text matrix files and monomial literals.

Matrix file::

    # optional comment lines
    3 3
    1 1 1
    0 0 -1
    0 -1 1/2

The header gives rows and columns; each entry is a signed decimal integer
or ``p/q``.  Blank lines are ignored.  ``parse_matrix(render_matrix(M))``
returns ``M`` exactly.
"""
from __future__ import annotations

import re
from fractions import Fraction
from pathlib import Path
from typing import Iterable

from .exactlin import ExactMatrix
from .orders import Monomial

__all__ = ["MatrixFileError", "parse_matrix", "render_matrix", "read_matrix",
           "parse_monomial", "render_monomial", "render_fraction"]

_TOKEN = re.compile(r"[+-]?\d+(?:/\d+)?\Z")
_MONO = re.compile(r"\d+(?:,\d+)*\Z")


class MatrixFileError(ValueError):
    def __init__(self, msg: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = "" if line is None else f"line {line}" + ("" if column is None else f", column {column}") + ": "
        super().__init__(where + msg)


def render_fraction(x: Fraction) -> str:
    return str(x)  # Fraction already drops a denominator of 1


def _tokens(line: str):
    for m in re.finditer(r"\S+", line):
        yield m.start() + 1, m.group()


def parse_matrix(text: str) -> ExactMatrix:
    if not text.isascii():
        bad = next(k for k, ch in enumerate(text) if ord(ch) > 127)
        line = text.count("\n", 0, bad) + 1
        raise MatrixFileError("non-ASCII character", line, bad - text.rfind("\n", 0, bad))
    shape = None
    rows = []
    lineno = 0
    lines = text.split("\n")
    if lines[-1] == "":
        lines.pop()
    for lineno, line in enumerate(lines, 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        toks = list(_tokens(line))
        if shape is None:
            if len(toks) != 2 or not all(t.isdigit() and int(t) > 0 for _, t in toks):
                raise MatrixFileError("header must be two positive integers 'm n'", lineno, toks[0][0])
            shape = int(toks[0][1]), int(toks[1][1])
            continue
        m, n = shape
        if len(rows) == m:
            raise MatrixFileError(f"more than the {m} rows declared in the header", lineno, toks[0][0])
        if len(toks) != n:
            raise MatrixFileError(f"expected {n} entries, found {len(toks)}", lineno,
                                  toks[n][0] if len(toks) > n else len(line) + 1)
        row = []
        for col, tok in toks:
            if not _TOKEN.match(tok):
                raise MatrixFileError(f"bad entry {tok!r}", lineno, col)
            try:
                row.append(Fraction(tok))
            except ZeroDivisionError:
                raise MatrixFileError(f"zero denominator in {tok!r}", lineno, col) from None
        rows.append(row)
    if shape is None:
        raise MatrixFileError("missing header", lineno or 1)
    if len(rows) != shape[0]:
        raise MatrixFileError(f"header declares {shape[0]} rows, found {len(rows)}", lineno)
    return ExactMatrix.from_rows(rows)


def render_matrix(a: ExactMatrix, comments: Iterable[str] = ()) -> str:
    out = [f"# {c}" for c in comments]
    out.append(f"{a.nrows} {a.ncols}")
    out.extend(" ".join(render_fraction(x) for x in row) for row in a.entries)
    return "\n".join(out) + "\n"


def read_matrix(path) -> ExactMatrix:
    try:
        raw = Path(path).read_bytes()
    except OSError as exc:
        raise MatrixFileError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        text = raw.decode("ascii")
    except UnicodeDecodeError as exc:
        line = raw.count(b"\n", 0, exc.start) + 1
        raise MatrixFileError("non-ASCII byte", line, exc.start - raw.rfind(b"\n", 0, exc.start)) from exc
    return parse_matrix(text)


def parse_monomial(s: str) -> Monomial:
    if not _MONO.match(s):
        raise ValueError(f"bad monomial literal {s!r}; expected e.g. 2,3,0")
    return tuple(int(x) for x in s.split(","))


def render_monomial(m: Monomial) -> str:
    return ",".join(str(x) for x in m)
