"""Plain-text instance and solution formats, plus image rendering.

All formats are line oriented with LF endings and single-space separation.
Serializers emit a canonical form (fixed ordering, one trailing newline);
parsers are strict about structure but tolerate trailing blank lines, and
report failures with 1-based line numbers.
"""

from __future__ import annotations

from .errors import ParseError
from .grid import BinaryImage, RecInstance, Rel, WRecInstance, corner_points
from .reductions import ThreeColorInstance

_REL_TOKENS = {rel.value: rel for rel in Rel}


class _Reader:
    def __init__(self, text: str):
        self.lines = text.split("\n")
        self.pos = 0

    @property
    def lineno(self) -> int:
        return self.pos

    def next(self, what: str) -> str:
        if self.pos >= len(self.lines):
            raise ParseError(f"unexpected end of input, expected {what}", self.pos)
        line = self.lines[self.pos].rstrip("\r")
        self.pos += 1
        return line

    def expect_literal(self, literal: str) -> None:
        line = self.next(repr(literal))
        if line != literal:
            raise ParseError(f"expected {literal!r}, got {line!r}", self.lineno)

    def expect_trailing_blank(self) -> None:
        while self.pos < len(self.lines):
            line = self.lines[self.pos].rstrip("\r")
            if line:
                raise ParseError(f"unexpected content after END: {line!r}", self.pos + 1)
            self.pos += 1


def _int(token: str, what: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected an integer for {what}, got {token!r}", lineno) from None


def _keyed_ints(reader: _Reader, keys: tuple[str, ...]) -> list[int]:
    """Parse a line like 'k 2 nu 1 t 0' against the expected key names."""
    line = reader.next(" ".join(keys))
    tokens = line.split()
    if len(tokens) != 2 * len(keys):
        raise ParseError(f"expected '{' <int> '.join(keys)} <int>', got {line!r}", reader.lineno)
    values = []
    for index, key in enumerate(keys):
        if tokens[2 * index] != key:
            raise ParseError(
                f"expected key {key!r}, got {tokens[2 * index]!r}", reader.lineno
            )
        values.append(_int(tokens[2 * index + 1], key, reader.lineno))
    return values


def _sum_line(reader: _Reader, key: str, count: int) -> tuple[int, ...]:
    line = reader.next(f"{key} line")
    tokens = line.split()
    if not tokens or tokens[0] != key:
        raise ParseError(f"expected a {key!r} line, got {line!r}", reader.lineno)
    if len(tokens) != count + 1:
        raise ParseError(
            f"expected {count} values after {key!r}, got {len(tokens) - 1}", reader.lineno
        )
    values = tuple(_int(token, f"{key} entry", reader.lineno) for token in tokens[1:])
    for value in values:
        if value < 0:
            raise ParseError(f"{key} entries must be nonnegative, got {value}", reader.lineno)
    return values


def parse_instance(text: str) -> RecInstance | WRecInstance:
    """Parse REC or WREC text, dispatching on the header line."""
    reader = _Reader(text)
    header = reader.next("a REC or WREC header")
    if header == "REC":
        return _parse_rec(reader)
    if header == "WREC":
        return _parse_wrec(reader)
    raise ParseError(f"expected 'REC' or 'WREC', got {header!r}", reader.lineno)


def _parse_rec(reader: _Reader) -> RecInstance:
    k, nu, t = _keyed_ints(reader, ("k", "nu", "t"))
    m, n = _keyed_ints(reader, ("m", "n"))
    if k < 1 or m < 1 or n < 1 or m % k or n % k:
        raise ParseError(f"k={k} must be positive and divide m={m} and n={n}", reader.lineno)
    rows = _sum_line(reader, "R", n)
    cols = _sum_line(reader, "C", m)
    reader.expect_literal("V")
    values = {}
    for i, j in corner_points(m, n, k):
        line = reader.next("a corner value line")
        tokens = line.split()
        if len(tokens) != 3:
            raise ParseError(f"expected 'i j v', got {line!r}", reader.lineno)
        ci = _int(tokens[0], "corner column", reader.lineno)
        cj = _int(tokens[1], "corner row", reader.lineno)
        if (ci, cj) != (i, j):
            raise ParseError(f"expected corner ({i},{j}), got ({ci},{cj})", reader.lineno)
        value = _int(tokens[2], "block value", reader.lineno)
        if value not in (0, nu):
            raise ParseError(f"block value must be 0 or nu={nu}, got {value}", reader.lineno)
        values[(i, j)] = value
    reader.expect_literal("END")
    reader.expect_trailing_blank()
    return RecInstance(k, nu, t, m, n, rows, cols, values)


def _parse_wrec(reader: _Reader) -> WRecInstance:
    k, t = _keyed_ints(reader, ("k", "t"))
    m, n = _keyed_ints(reader, ("m", "n"))
    if k < 1 or m < 1 or n < 1 or m % k or n % k:
        raise ParseError(f"k={k} must be positive and divide m={m} and n={n}", reader.lineno)
    rows = _sum_line(reader, "R", n)
    cols = _sum_line(reader, "C", m)
    reader.expect_literal("W")
    windows = {}
    while True:
        line = reader.next("a window line or 'END'")
        if line == "END":
            break
        tokens = line.split()
        if len(tokens) != 4:
            raise ParseError(f"expected 'i j rel value', got {line!r}", reader.lineno)
        i = _int(tokens[0], "anchor column", reader.lineno)
        j = _int(tokens[1], "anchor row", reader.lineno)
        rel = _REL_TOKENS.get(tokens[2])
        if rel is None:
            raise ParseError(f"expected one of <=, >=, =, got {tokens[2]!r}", reader.lineno)
        value = _int(tokens[3], "window value", reader.lineno)
        if value < 0:
            raise ParseError(f"window values must be nonnegative, got {value}", reader.lineno)
        if i < 1 or j < 1 or i + k - 1 > m or j + k - 1 > n:
            raise ParseError(f"window at ({i},{j}) exceeds the {m}x{n} grid", reader.lineno)
        if (i, j) in windows:
            raise ParseError(f"duplicate anchor ({i},{j})", reader.lineno)
        windows[(i, j)] = (rel, value)
    reader.expect_trailing_blank()
    return WRecInstance(k, t, m, n, rows, cols, windows)


def serialize_instance(inst: RecInstance | WRecInstance) -> str:
    """Canonical text form, inverse of parse_instance on its own output."""
    if isinstance(inst, RecInstance):
        lines = [
            "REC",
            f"k {inst.k} nu {inst.nu} t {inst.t}",
            f"m {inst.m} n {inst.n}",
            "R " + " ".join(str(r) for r in inst.row_sums),
            "C " + " ".join(str(c) for c in inst.col_sums),
            "V",
        ]
        for i, j in inst.corners():
            lines.append(f"{i} {j} {inst.block_values[(i, j)]}")
    else:
        lines = [
            "WREC",
            f"k {inst.k} t {inst.t}",
            f"m {inst.m} n {inst.n}",
            "R " + " ".join(str(r) for r in inst.row_sums),
            "C " + " ".join(str(c) for c in inst.col_sums),
            "W",
        ]
        for i, j in inst.anchors():
            rel, value = inst.windows[(i, j)]
            lines.append(f"{i} {j} {rel.value} {value}")
    lines.append("END")
    return "\n".join(lines) + "\n"


def write_solution(x: BinaryImage) -> str:
    """Solution text: 'SOL m n' then the rows, top row first."""
    lines = [f"SOL {x.m} {x.n}"]
    for q in range(x.n, 0, -1):
        lines.append("".join(str(bit) for bit in x.rows[q - 1]))
    return "\n".join(lines) + "\n"


def parse_solution(text: str) -> BinaryImage:
    reader = _Reader(text)
    line = reader.next("a SOL header")
    tokens = line.split()
    if len(tokens) != 3 or tokens[0] != "SOL":
        raise ParseError(f"expected 'SOL m n', got {line!r}", reader.lineno)
    m = _int(tokens[1], "m", reader.lineno)
    n = _int(tokens[2], "n", reader.lineno)
    if m < 1 or n < 1:
        raise ParseError(f"dimensions must be positive, got {m}x{n}", reader.lineno)
    rows: list[tuple[int, ...]] = []
    for _ in range(n):
        line = reader.next("a solution row")
        if len(line) != m or any(ch not in "01" for ch in line):
            raise ParseError(f"expected {m} characters of 0/1, got {line!r}", reader.lineno)
        rows.append(tuple(int(ch) for ch in line))
    reader.expect_trailing_blank()
    rows.reverse()
    return BinaryImage(m, n, tuple(rows))


def render_ascii(x: BinaryImage) -> str:
    """'#' for ones, '.' for zeros, top row first."""
    return (
        "\n".join(
            "".join("#" if bit else "." for bit in x.rows[q - 1])
            for q in range(x.n, 0, -1)
        )
        + "\n"
    )


def render_pgm(x: BinaryImage) -> bytes:
    """Binary PGM (P5, maxval 255): ones black, zeros white, top row first."""
    header = f"P5\n{x.m} {x.n}\n255\n".encode("ascii")
    payload = bytes(
        0 if bit else 255 for q in range(x.n, 0, -1) for bit in x.rows[q - 1]
    )
    return header + payload


def render(x: BinaryImage, fmt: str) -> str | bytes:
    if fmt == "ascii":
        return render_ascii(x)
    if fmt == "pgm":
        return render_pgm(x)
    raise ParseError(f"unknown render format {fmt!r}")


def parse_three_color(text: str) -> ThreeColorInstance:
    """Parse the 3COLOR text form (two row and two column sum families)."""
    reader = _Reader(text)
    reader.expect_literal("3COLOR")
    m, n = _keyed_ints(reader, ("m", "n"))
    if m < 1 or n < 1:
        raise ParseError(f"dimensions must be positive, got {m}x{n}", reader.lineno)
    rows_1 = _sum_line(reader, "R1", n)
    rows_2 = _sum_line(reader, "R2", n)
    cols_1 = _sum_line(reader, "C1", m)
    cols_2 = _sum_line(reader, "C2", m)
    reader.expect_literal("END")
    reader.expect_trailing_blank()
    return ThreeColorInstance(m, n, rows_1, rows_2, cols_1, cols_2)


def serialize_three_color(tc: ThreeColorInstance) -> str:
    lines = [
        "3COLOR",
        f"m {tc.m} n {tc.n}",
        "R1 " + " ".join(str(v) for v in tc.row_sums_1),
        "R2 " + " ".join(str(v) for v in tc.row_sums_2),
        "C1 " + " ".join(str(v) for v in tc.col_sums_1),
        "C2 " + " ".join(str(v) for v in tc.col_sums_2),
        "END",
    ]
    return "\n".join(lines) + "\n"
