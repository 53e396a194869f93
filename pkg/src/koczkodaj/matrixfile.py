"""Plain-text matrix files.

Format: the first data line holds ``n``.  It is followed either by ``n`` lines
of ``n`` values (full form) or by one line of ``n(n-1)/2`` upper-triangle
values, row by row (upper form; the lower triangle is completed exactly).
Blank lines and lines starting with ``#`` are ignored.

Values are written with 17 significant digits, so a written matrix reads back
bit for bit.
"""

from __future__ import annotations

from pathlib import Path

from .core import RECIPROCITY_TOL, PairwiseComparisonMatrix, complete_from_upper, validate_matrix
from .errors import NotSquare, ParseError, WrongLength


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _floats(line: str, lineno: int) -> list[float]:
    try:
        return [float(tok) for tok in line.split()]
    except ValueError:
        raise ParseError(f"line {lineno}: expected numbers, got {line!r}") from None


def parse_matrix(text: str, tolerance: float = RECIPROCITY_TOL) -> PairwiseComparisonMatrix:
    lines = [
        (no, ln.strip())
        for no, ln in enumerate(text.splitlines(), start=1)
        if ln.strip() and not ln.lstrip().startswith("#")
    ]
    if not lines:
        raise ParseError("empty matrix file")
    head_no, head = lines[0]
    try:
        n = int(head)
    except ValueError:
        raise ParseError(f"line {head_no}: first line must be the size n, got {head!r}") from None
    if n < 1:
        raise ParseError(f"line {head_no}: size must be >= 1, got {n}")
    body = lines[1:]
    m = n * (n - 1) // 2

    if len(body) == n:
        rows = [_floats(ln, no) for no, ln in body]
        if any(len(r) != n for r in rows):
            raise NotSquare(f"expected {n} values per row, got row lengths {[len(r) for r in rows]}")
        return validate_matrix(rows, tolerance)
    if len(body) <= 1:
        upper = _floats(body[0][1], body[0][0]) if body else []
        if len(upper) != m:
            if len(upper) == n and n > 1:
                raise NotSquare(f"{n}x{n} full form needs {n} rows, got 1")
            raise WrongLength(f"upper form for n={n} needs {m} values, got {len(upper)}")
        return complete_from_upper(n, upper)
    raise NotSquare(f"expected {n} rows (full form) or 1 line of {m} values (upper form), got {len(body)} lines")


def read_matrix(path: str | Path, tolerance: float = RECIPROCITY_TOL) -> PairwiseComparisonMatrix:
    return parse_matrix(Path(path).read_text(encoding="utf-8"), tolerance)


def format_matrix(A: PairwiseComparisonMatrix, form: str = "upper", comment: str | None = None) -> str:
    out = [f"# {c}" for c in comment.splitlines()] if comment else []
    out.append(str(A.n))
    if form == "upper":
        out.append(" ".join(_fmt(x) for x in A.upper()))
    elif form == "full":
        out.extend(" ".join(_fmt(x) for x in row) for row in A.tolist())
    else:
        raise ValueError(f"form must be 'upper' or 'full', got {form!r}")
    return "\n".join(out) + "\n"


def write_matrix(A: PairwiseComparisonMatrix, path: str | Path, form: str = "upper", comment: str | None = None):
    Path(path).write_text(format_matrix(A, form, comment), encoding="utf-8")
