"""Sparse multivariate polynomials with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Sequence

Exponent = tuple[int, ...]


class UnknownVariableError(ValueError):
    """A variable name is not part of the polynomial's variable table."""

    def __init__(self, name: str):
        super().__init__(f"unknown variable {name}")
        self.name = name


class VarTable(tuple):
    """Ordered, immutable tuple of distinct variable names."""

    def __new__(cls, names: Iterable[str]):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names!r}")
        for n in names:
            if not isinstance(n, str) or not n.isidentifier():
                raise ValueError(f"invalid variable name {n!r}")
        return super().__new__(cls, names)

    def index(self, name: str) -> int:  # type: ignore[override]
        try:
            return super().index(name)
        except ValueError:
            raise UnknownVariableError(name) from None

    def __repr__(self) -> str:
        return f"VarTable({list(self)!r})"


Z_TABLE = VarTable(["z1", "z2", "z3", "r"])
X_TABLE = VarTable(["x1", "x2", "x3"])
W_TABLE = VarTable(["w"])
T_TABLE = VarTable(["t"])


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    raise TypeError(f"coefficient must be rational, got {type(c).__name__}")


def _grlex_key(e: Exponent):
    # total degree first, then lexicographic in the table order
    return (sum(e), e)


class MultiPoly:
    """Immutable sparse polynomial over ``Fraction`` in a fixed :class:`VarTable`.

    Terms map exponent tuples (one entry per table variable) to nonzero
    coefficients. Arithmetic between polynomials requires identical tables.
    """

    __slots__ = ("_table", "_terms", "_hash")

    def __init__(self, table: Sequence[str], terms: Mapping[Exponent, object] | None = None):
        table = table if isinstance(table, VarTable) else VarTable(table)
        clean: dict[Exponent, Fraction] = {}
        nv = len(table)
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != nv:
                raise ValueError(f"exponent {exp} does not match table of size {nv}")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            c = _as_fraction(c)
            if c:
                clean[exp] = clean.get(exp, 0) + c
                if not clean[exp]:
                    del clean[exp]
        self._table = table
        self._terms = clean
        self._hash = None

    # constructors

    @classmethod
    def constant(cls, table, value) -> "MultiPoly":
        table = table if isinstance(table, VarTable) else VarTable(table)
        return cls(table, {(0,) * len(table): value})

    @classmethod
    def var(cls, table, name: str) -> "MultiPoly":
        table = table if isinstance(table, VarTable) else VarTable(table)
        exp = [0] * len(table)
        exp[table.index(name)] = 1
        return cls(table, {tuple(exp): 1})

    @classmethod
    def from_coeffs(cls, table, coeffs: Sequence) -> "MultiPoly":
        """Univariate constructor; ``coeffs[k]`` multiplies ``var^k``."""
        table = table if isinstance(table, VarTable) else VarTable(table)
        if len(table) != 1:
            raise ValueError("from_coeffs needs a one-variable table")
        return cls(table, {(k,): c for k, c in enumerate(coeffs) if c})

    # basic accessors

    @property
    def table(self) -> VarTable:
        return self._table

    @property
    def terms(self) -> dict[Exponent, Fraction]:
        return dict(self._terms)

    def items(self):
        """Terms in graded-lexicographic order, highest first."""
        return sorted(self._terms.items(), key=lambda kv: _grlex_key(kv[0]), reverse=True)

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = {sum(e) for e in self._terms}
        if not degs:
            return True
        if len(degs) != 1:
            return False
        return degree is None or degs == {degree}

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * len(self._table), Fraction(0))

    def coeffs(self) -> list[Fraction]:
        """Dense coefficient list (low to high) of a univariate polynomial."""
        if len(self._table) != 1:
            raise ValueError("coeffs() needs a one-variable table")
        out = [Fraction(0)] * (self.degree() + 1)
        for (k,), c in self._terms.items():
            out[k] = c
        return out

    # arithmetic

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other._table != self._table:
                raise ValueError(f"variable tables differ: {self._table!r} vs {other._table!r}")
            return other
        if isinstance(other, (int, Fraction, Rational)) and not isinstance(other, bool):
            return MultiPoly.constant(self._table, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for e, c in other._terms.items():
            terms[e] = terms.get(e, 0) + c
        return MultiPoly(self._table, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self._table, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly(self._table, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        # division by a nonzero rational constant only
        if isinstance(other, MultiPoly):
            if other.degree() > 0:
                raise ValueError("division by a non-constant polynomial")
            other = other.constant_term()
        other = _as_fraction(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        return MultiPoly(self._table, {e: c / other for e, c in self._terms.items()})

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = MultiPoly.constant(self._table, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self._table == other._table and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == MultiPoly.constant(self._table, other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((tuple(self._table), tuple(self.items())))
        return self._hash

    # calculus and evaluation

    def diff(self, name: str) -> "MultiPoly":
        i = self._table.index(name)
        out = {}
        for e, c in self._terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                out[tuple(ne)] = c * e[i]
        return MultiPoly(self._table, out)

    def __call__(self, *point):
        return poly_eval(self, point)

    def substitute(self, mapping: Mapping[str, "MultiPoly"]) -> "MultiPoly":
        return poly_substitute(self, mapping)

    def to_text(self) -> str:
        return format_poly(self)

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"MultiPoly({list(self._table)!r}, {format_poly(self)!r})"


def poly_eval(p: MultiPoly, point: Sequence):
    """Evaluate ``p`` at ``point``.

    Rational inputs (ints/Fractions) give an exact ``Fraction``; any float or
    complex component switches to floating evaluation. Univariate
    polynomials use Horner's rule.
    """
    point = list(point)
    if len(point) != len(p.table):
        raise ValueError(f"point has {len(point)} entries, table has {len(p.table)}")
    exact = all(isinstance(v, (int, Fraction)) and not isinstance(v, bool) for v in point)
    zero = Fraction(0) if exact else 0j
    if not p._terms:
        return zero
    if len(point) == 1:
        x = point[0]
        acc = zero
        for c in reversed(p.coeffs()):
            acc = acc * x + (c if exact else complex(c))
        return acc
    # cache powers per variable
    maxdeg = [max(e[i] for e in p._terms) for i in range(len(point))]
    powers = []
    for x, d in zip(point, maxdeg):
        pw = [Fraction(1) if exact else 1.0 + 0j]
        for _ in range(d):
            pw.append(pw[-1] * x)
        powers.append(pw)
    acc = zero
    for e, c in p._terms.items():
        term = c if exact else complex(c)
        for i, k in enumerate(e):
            if k:
                term = term * powers[i][k]
        acc += term
    return acc


def poly_substitute(p: MultiPoly, mapping: Mapping[str, MultiPoly]) -> MultiPoly:
    """Compose ``p`` with ``mapping`` (every variable of ``p``'s table -> polynomial)."""
    for name in mapping:
        p.table.index(name)
    missing = [n for n in p.table if n not in mapping]
    if missing:
        raise ValueError(f"unmapped variable {missing[0]}")
    images = [mapping[n] for n in p.table]
    tables = {im.table for im in images}
    if len(tables) != 1:
        raise ValueError("substitution images must share one variable table")
    target = images[0].table
    if p.is_zero():
        return MultiPoly(target)
    maxdeg = [max(e[i] for e in p._terms) for i in range(len(images))]
    powers = []
    for im, d in zip(images, maxdeg):
        pw = [MultiPoly.constant(target, 1)]
        for _ in range(d):
            pw.append(pw[-1] * im)
        powers.append(pw)
    acc: dict[Exponent, Fraction] = {}
    for e, c in p._terms.items():
        term = MultiPoly.constant(target, c)
        for i, k in enumerate(e):
            if k:
                term = term * powers[i][k]
        for te, tc in term._terms.items():
            acc[te] = acc.get(te, 0) + tc
    return MultiPoly(target, acc)


def poly_diff(p: MultiPoly, name: str) -> MultiPoly:
    return p.diff(name)


def _format_coeff(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def format_poly(p: MultiPoly) -> str:
    """Print ``p`` in the text grammar accepted by :func:`parse_poly`."""
    if p.is_zero():
        return "0"
    parts = []
    for e, c in p.items():
        mono = "*".join(
            name if k == 1 else f"{name}^{k}" for name, k in zip(p.table, e) if k
        )
        a = abs(c)
        if not mono:
            body = _format_coeff(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_format_coeff(a)}*{mono}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out

