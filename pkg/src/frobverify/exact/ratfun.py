"""Univariate rational functions over the rationals, kept in lowest terms."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .poly import MultiPoly, VarTable, W_TABLE

Coeffs = list  # low-to-high list of Fractions, no trailing zeros


def _trim(a: Sequence) -> Coeffs:
    a = [Fraction(c) for c in a]
    while a and a[-1] == 0:
        a.pop()
    return a


def _divmod(a: Coeffs, b: Coeffs) -> tuple[Coeffs, Coeffs]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        c = a[-1] / lead
        q[shift] = c
        for i, bc in enumerate(b):
            a[i + shift] -= c * bc
        a = _trim(a)
    return _trim(q), a


def _gcd(a: Coeffs, b: Coeffs) -> Coeffs:
    """Monic gcd by the Euclidean algorithm."""
    a, b = _trim(a), _trim(b)
    while b:
        _, r = _divmod(a, b)
        a, b = b, r
    if not a:
        return a
    lead = a[-1]
    return [c / lead for c in a]


def _mul(a: Coeffs, b: Coeffs) -> Coeffs:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _add(a: Coeffs, b: Coeffs) -> Coeffs:
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def _neg(a: Coeffs) -> Coeffs:
    return [-c for c in a]


def _deriv(a: Coeffs) -> Coeffs:
    return _trim([k * a[k] for k in range(1, len(a))])


def squarefree_factors(a: Sequence) -> list[tuple[Coeffs, int]]:
    """Yun's decomposition of a nonconstant polynomial: ``[(factor, multiplicity)]``.

    Factors are monic, squarefree and pairwise coprime; the leading
    coefficient of ``a`` is dropped.
    """
    a = _trim(a)
    if len(a) < 2:
        return []
    out = []
    da = _deriv(a)
    g = _gcd(a, da)
    b, _ = _divmod(a, g)
    c, _ = _divmod(da, g)
    k = 1
    while len(b) > 1:
        d = _add(c, _neg(_deriv(b)))
        y = _gcd(b, d)
        if len(y) > 1:
            out.append((y, k))
        b, _ = _divmod(b, y)
        c, _ = _divmod(d, y)
        k += 1
    return out


class RatFunW:
    """``num/den`` in one variable, normalized: coprime, monic denominator.

    ``num`` and ``den`` are exposed as :class:`MultiPoly` over the
    one-variable table (``[w]`` by default).
    """

    __slots__ = ("_num", "_den", "_table")

    def __init__(self, num, den=None, table: VarTable = W_TABLE):
        if isinstance(num, MultiPoly):
            table = num.table
            num = num.coeffs()
        elif isinstance(num, (int, Fraction)):
            num = [num]
        if den is None:
            den = [1]
        elif isinstance(den, MultiPoly):
            if den.table != table:
                raise ValueError("numerator and denominator tables differ")
            den = den.coeffs()
        elif isinstance(den, (int, Fraction)):
            den = [den]
        if len(table) != 1:
            raise ValueError("RatFunW needs a one-variable table")
        num, den = _trim(num), _trim(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        g = _gcd(num, den) if num else [Fraction(1)]
        if len(g) > 1:
            num, _ = _divmod(num, g)
            den, _ = _divmod(den, g)
        if not num:
            den = [Fraction(1)]
        lead = den[-1]
        self._num = tuple(c / lead for c in num)
        self._den = tuple(c / lead for c in den)
        self._table = table

    @classmethod
    def from_coeffs(cls, num: Sequence, den: Sequence = (1,), table: VarTable = W_TABLE) -> "RatFunW":
        return cls(list(num), list(den), table)

    @classmethod
    def var(cls, table: VarTable = W_TABLE) -> "RatFunW":
        return cls([0, 1], [1], table)

    @property
    def table(self) -> VarTable:
        return self._table

    @property
    def num(self) -> MultiPoly:
        return MultiPoly.from_coeffs(self._table, self._num)

    @property
    def den(self) -> MultiPoly:
        return MultiPoly.from_coeffs(self._table, self._den)

    @property
    def num_coeffs(self) -> tuple[Fraction, ...]:
        return self._num

    @property
    def den_coeffs(self) -> tuple[Fraction, ...]:
        return self._den

    def is_zero(self) -> bool:
        return not self._num

    def is_constant(self) -> bool:
        return len(self._num) <= 1 and len(self._den) == 1

    def _coerce(self, other) -> "RatFunW":
        if isinstance(other, RatFunW):
            if other._table != self._table:
                raise ValueError("variable tables differ")
            return other
        if isinstance(other, MultiPoly):
            return RatFunW(other)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return RatFunW([other], [1], self._table)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        num = _add(_mul(list(self._num), list(o._den)), _mul(list(o._num), list(self._den)))
        return RatFunW(num, _mul(list(self._den), list(o._den)), self._table)

    __radd__ = __add__

    def __neg__(self):
        return RatFunW(_neg(list(self._num)), list(self._den), self._table)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return RatFunW(_mul(list(self._num), list(o._num)), _mul(list(self._den), list(o._den)), self._table)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunW(_mul(list(self._num), list(o._den)), _mul(list(self._den), list(o._num)), self._table)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("integer exponent required")
        if n < 0:
            return RatFunW([1], [1], self._table) / (self ** (-n))
        num, den = [Fraction(1)], [Fraction(1)]
        for _ in range(n):
            num = _mul(num, list(self._num))
            den = _mul(den, list(self._den))
        return RatFunW(num, den, self._table)

    def __eq__(self, other):
        o = self._coerce(other) if not isinstance(other, RatFunW) else other
        if o is NotImplemented:
            return NotImplemented
        return ratfun_equal(self, o)

    def __hash__(self):
        return hash((self._num, self._den))

    def diff(self) -> "RatFunW":
        return ratfun_diff(self)

    def __call__(self, x):
        return ratfun_eval(self, x)

    def __repr__(self):
        return f"RatFunW(({self.num}) / ({self.den}))"

    __str__ = __repr__


def ratfun_equal(a: RatFunW, b: RatFunW) -> bool:
    """Exact identity test by cross-multiplication."""
    if a.table != b.table:
        raise ValueError("variable tables differ")
    lhs = _mul(list(a.num_coeffs), list(b.den_coeffs))
    rhs = _mul(list(b.num_coeffs), list(a.den_coeffs))
    return not _add(lhs, _neg(rhs))


def ratfun_diff(f: RatFunW) -> RatFunW:
    n, d = list(f.num_coeffs), list(f.den_coeffs)
    num = _add(_mul(_deriv(n), d), _neg(_mul(n, _deriv(d))))
    return RatFunW(num, _mul(d, d), f.table)


def ratfun_eval(f: RatFunW, x):
    """Evaluate at ``x``; exact for int/Fraction input, complex otherwise."""
    exact = isinstance(x, (int, Fraction)) and not isinstance(x, bool)

    def horner(cs):
        acc = Fraction(0) if exact else 0j
        for c in reversed(cs):
            acc = acc * x + (c if exact else complex(c))
        return acc

    den = horner(f.den_coeffs)
    if den == 0:
        raise ZeroDivisionError(f"pole of rational function at {x}")
    return horner(f.num_coeffs) / den
