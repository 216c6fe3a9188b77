"""Line-oriented text formats for spaces and single matrices.

Space file::

    field 2
    n 2
    kind symmetric
    dim 1
    A
    0 0
    0 1
    B 1
    1 1
    1 0

Matrix file: a ``field p`` line followed by the rows.  ``#`` starts a
comment and blank lines are ignored in both.
"""

from __future__ import annotations

from ..errors import ParseError
from ..field import FieldSpec
from ..matrix import Matrix
from .core import KINDS, AffineSpace


def _lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((lineno, line))
    return out


class _Reader:
    def __init__(self, text: str):
        self.lines = _lines(text)
        self.pos = 0

    def next(self, what: str) -> tuple[int, str]:
        if self.pos >= len(self.lines):
            last = self.lines[-1][0] if self.lines else 0
            raise ParseError(f"unexpected end of input, expected {what}", last + 1)
        item = self.lines[self.pos]
        self.pos += 1
        return item

    def header(self, key: str) -> tuple[int, str]:
        lineno, line = self.next(f"'{key} ...'")
        parts = line.split()
        if len(parts) != 2 or parts[0] != key:
            raise ParseError(f"expected '{key} <value>', got {line!r}", lineno)
        return lineno, parts[1]

    def int_header(self, key: str) -> tuple[int, int]:
        lineno, value = self.header(key)
        try:
            return lineno, int(value)
        except ValueError:
            raise ParseError(f"'{key}' needs an integer, got {value!r}", lineno) from None

    def rows(self, spec: FieldSpec, n: int, label: str) -> Matrix:
        rows = []
        for _ in range(n):
            lineno, line = self.next(f"a row of {label}")
            parts = line.split()
            if len(parts) != n:
                raise ParseError(f"{label}: expected {n} entries, got {len(parts)}", lineno)
            try:
                vals = [int(x) for x in parts]
            except ValueError:
                raise ParseError(f"{label}: non-integer entry in {line!r}", lineno) from None
            for v in vals:
                if not 0 <= v < spec.p:
                    raise ParseError(f"{label}: entry {v} outside [0, {spec.p})", lineno)
            rows.append(vals)
        return Matrix(spec, rows)

    def done(self) -> None:
        if self.pos < len(self.lines):
            lineno, line = self.lines[self.pos]
            raise ParseError(f"trailing content {line!r}", lineno)


def _field(reader: _Reader) -> FieldSpec:
    lineno, p = reader.int_header("field")
    try:
        return FieldSpec(p)
    except ValueError as exc:
        raise ParseError(str(exc), lineno) from None


def parse_space(text: str) -> AffineSpace:
    reader = _Reader(text)
    spec = _field(reader)
    lineno, n = reader.int_header("n")
    if n < 1:
        raise ParseError(f"n must be positive, got {n}", lineno)
    lineno, kind = reader.header("kind")
    if kind not in KINDS:
        raise ParseError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}", lineno)
    lineno, d = reader.int_header("dim")
    if d < 0:
        raise ParseError(f"dim must be nonnegative, got {d}", lineno)
    lineno, line = reader.next("'A'")
    if line != "A":
        raise ParseError(f"expected 'A', got {line!r}", lineno)
    base = reader.rows(spec, n, "A")
    basis = []
    for r in range(1, d + 1):
        lineno, line = reader.next(f"'B {r}'")
        if line.split() != ["B", str(r)]:
            raise ParseError(f"expected 'B {r}', got {line!r}", lineno)
        basis.append(reader.rows(spec, n, f"B {r}"))
    reader.done()
    # kind violations surface as HypothesisViolation naming the basis index
    return AffineSpace(spec, n, base, tuple(basis), kind)


def _matrix_lines(M: Matrix) -> list[str]:
    return [" ".join(str(x) for x in row) for row in M.rows]


def serialize_space(S: AffineSpace) -> str:
    out = [f"field {S.spec.p}", f"n {S.n}", f"kind {S.kind}", f"dim {S.d}", "A"]
    out += _matrix_lines(S.base)
    for r, B in enumerate(S.basis, 1):
        out.append(f"B {r}")
        out += _matrix_lines(B)
    return "\n".join(out) + "\n"


def parse_matrix(text: str) -> Matrix:
    reader = _Reader(text)
    spec = _field(reader)
    rest = reader.lines[reader.pos:]
    if not rest:
        raise ParseError("matrix has no rows", reader.lines[-1][0] + 1)
    n = len(rest[0][1].split())
    if len(rest) != n:
        raise ParseError(f"expected a square matrix: {len(rest)} rows of width {n}", rest[-1][0])
    M = reader.rows(spec, n, "matrix")
    reader.done()
    return M


def serialize_matrix(M: Matrix) -> str:
    return "\n".join([f"field {M.spec.p}", *_matrix_lines(M)]) + "\n"
