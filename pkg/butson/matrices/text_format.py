"""
Matrix text format.

    bh <m> <l>          followed by m lines of m exponents in [0, l)
    circ <m> <l>        followed by one line holding the first row
"""

import re
from pathlib import Path
from typing import List, Tuple, Union

from butson.matrices.models import RootMatrix
from butson.matrices.service import circulant, is_circulant
from butson.shared.exceptions import MatrixParseError

TOKEN = re.compile(r"\S+")
HEADER_KINDS = ("bh", "circ")

Token = Tuple[str, int]


def _tokens(line: str) -> List[Token]:
    return [(match.group(0), match.start() + 1) for match in TOKEN.finditer(line)]


def _parse_int(token: Token, line_no: int, source: str, what: str) -> int:
    text, column = token
    if not re.fullmatch(r"[+-]?\d+", text):
        raise MatrixParseError(f"{what} '{text}' is not an integer", line_no, column, source)
    return int(text)


def _parse_row(tokens: List[Token], m: int, l: int, line_no: int, source: str) -> Tuple[int, ...]:
    if len(tokens) != m:
        column = tokens[m][1] if len(tokens) > m else (tokens[-1][1] + len(tokens[-1][0]) if tokens else 1)
        raise MatrixParseError(
            f"expected {m} exponents, found {len(tokens)}", line_no, column, source
        )
    row = []
    for token in tokens:
        value = _parse_int(token, line_no, source, "exponent")
        if value < 0 or value >= l:
            raise MatrixParseError(
                f"exponent {value} is outside [0, {l})", line_no, token[1], source
            )
        row.append(value)
    return tuple(row)


def parse_matrix_text(text: str, source: str = "<input>") -> RootMatrix:
    """Parse the bh/circ text format with line and column diagnostics"""
    lines = [(number, _tokens(line)) for number, line in enumerate(text.splitlines(), start=1)]
    lines = [(number, tokens) for number, tokens in lines if tokens]
    if not lines:
        raise MatrixParseError("empty input, expected a 'bh' or 'circ' header", 1, 1, source)

    header_no, header = lines[0]
    kind = header[0][0]
    if kind not in HEADER_KINDS:
        raise MatrixParseError(f"unknown header '{kind}', expected 'bh' or 'circ'", header_no, header[0][1], source)
    if len(header) != 3:
        column = header[3][1] if len(header) > 3 else header[-1][1] + len(header[-1][0])
        raise MatrixParseError(f"header must be '{kind} <m> <l>'", header_no, column, source)

    m = _parse_int(header[1], header_no, source, "dimension")
    l = _parse_int(header[2], header_no, source, "root order")
    if m < 1:
        raise MatrixParseError("dimension must be positive", header_no, header[1][1], source)
    if l < 1:
        raise MatrixParseError("root order must be positive", header_no, header[2][1], source)

    body = lines[1:]
    expected_rows = 1 if kind == "circ" else m
    if len(body) < expected_rows:
        last_line = body[-1][0] + 1 if body else header_no + 1
        raise MatrixParseError(
            f"expected {expected_rows} row line(s), found {len(body)}", last_line, 1, source
        )
    if len(body) > expected_rows:
        extra_no, extra = body[expected_rows]
        raise MatrixParseError("unexpected extra line", extra_no, extra[0][1], source)

    rows = [_parse_row(tokens, m, l, number, source) for number, tokens in body]
    if kind == "circ":
        return circulant(l, rows[0])
    return RootMatrix(m=m, l=l, exps=tuple(rows))


def load_matrix_file(path: Union[str, Path]) -> RootMatrix:
    path = Path(path)
    try:
        data = path.read_bytes()
    except OSError as e:
        raise MatrixParseError(f"cannot read file: {e.strerror or e}", 1, 1, str(path))
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as e:
        before = data[:e.start]
        line = before.count(b"\n") + 1
        column = e.start - (before.rfind(b"\n") + 1) + 1
        raise MatrixParseError(f"invalid UTF-8 byte 0x{data[e.start]:02x}", line, column, str(path))
    return parse_matrix_text(text, source=str(path))


def format_matrix_text(M: RootMatrix, circulant_shorthand: bool = False) -> str:
    """Inverse of parse_matrix_text"""
    if circulant_shorthand and is_circulant(M):
        return f"circ {M.m} {M.l}\n" + " ".join(str(a) for a in M.exps[0]) + "\n"
    lines = [f"bh {M.m} {M.l}"]
    lines.extend(" ".join(str(a) for a in row) for row in M.exps)
    return "\n".join(lines) + "\n"
