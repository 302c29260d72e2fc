"""Line-oriented sparse storage format.

One term per line, ``num/den e1 e2 ... ek`` (or ``num e1 ...``); ``#``
starts a comment; a blank line terminates a polynomial block. A file may
hold several blocks. The zero polynomial is an empty block, written as a
single ``0`` line so it survives blank-line splitting.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, TextIO

from .poly import MultiPoly, VarTable


class SparseFormatError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _blocks(lines: Iterable[str]):
    block: list[tuple[int, str]] = []
    started = False
    for lineno, raw in enumerate(lines, 1):
        text = raw.split("#", 1)[0].strip()
        if not raw.strip():
            if started:
                yield block
                block, started = [], False
            continue
        if not text:
            continue  # pure comment line
        started = True
        block.append((lineno, text))
    if started:
        yield block


def _parse_block(block, table: VarTable) -> MultiPoly:
    terms: dict[tuple[int, ...], Fraction] = {}
    for lineno, text in block:
        fields = text.split()
        if fields == ["0"]:
            continue
        if len(fields) != len(table) + 1:
            raise SparseFormatError(
                f"expected coefficient and {len(table)} exponents, got {len(fields)} fields", lineno
            )
        try:
            coeff = Fraction(fields[0])
            exps = tuple(int(e) for e in fields[1:])
        except ValueError as exc:
            raise SparseFormatError(str(exc), lineno) from None
        if any(e < 0 for e in exps):
            raise SparseFormatError("negative exponent", lineno)
        if exps in terms:
            raise SparseFormatError(f"duplicate exponent vector {exps}", lineno)
        terms[exps] = coeff
    return MultiPoly(table, terms)


def loads(text: str, table) -> list[MultiPoly]:
    table = table if isinstance(table, VarTable) else VarTable(table)
    return [_parse_block(b, table) for b in _blocks(text.splitlines())]


def load(fp: TextIO, table) -> list[MultiPoly]:
    return loads(fp.read(), table)


def dumps(polys: Iterable[MultiPoly], comments: Iterable[str] | None = None) -> str:
    """Serialize ``polys`` as consecutive blocks, optionally with a comment each."""
    polys = list(polys)
    comments = list(comments) if comments is not None else [None] * len(polys)
    out = []
    for p, comment in zip(polys, comments):
        if comment:
            out.append(f"# {comment}")
        if p.is_zero():
            out.append("0")
        for exps, c in p.items():
            coeff = str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
            out.append(" ".join([coeff, *map(str, exps)]))
        out.append("")
    return "\n".join(out)
