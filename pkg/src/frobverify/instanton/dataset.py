"""Instanton data for n = 0, 1, 2 and the hypersurface scaffolding around it."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Optional

from ..exact import W_TABLE, Z_TABLE, MultiPoly, RatFunW, parse_poly
from ..exact import sparse

SUPPORTED_N = (0, 1, 2)
DEGREE = {0: 2, 1: 6, 2: 10}


class UnsupportedInstantonError(ValueError):
    """No published data for the requested instanton number."""


class PartialDataError(RuntimeError):
    """The requested polynomial is only known as a leading fragment."""


class DataIntegrityError(RuntimeError):
    """A dataset file does not match its pinned checksum."""


def _data_root():
    return resources.files("frobverify.instanton") / "data"


@lru_cache(maxsize=None)
def manifest() -> dict:
    return json.loads((_data_root() / "manifest.json").read_text())


def _read(rel: str) -> str:
    expected = manifest()["files"].get(rel)
    if expected is None:
        raise DataIntegrityError(f"{rel} is not listed in the manifest")
    raw = (_data_root() / rel).read_bytes()
    digest = hashlib.sha256(raw).hexdigest()
    if digest != expected:
        raise DataIntegrityError(f"checksum mismatch for {rel}: {digest} != {expected}")
    return raw.decode()


def load_polys(rel: str, table=Z_TABLE) -> list[MultiPoly]:
    return sparse.loads(_read(rel), table)


def load_ratfuns(rel: str) -> tuple[RatFunW, ...]:
    blocks = sparse.loads(_read(rel), W_TABLE)
    if len(blocks) % 2:
        raise DataIntegrityError(f"{rel}: odd number of numerator/denominator blocks")
    return tuple(RatFunW(blocks[i], blocks[i + 1]) for i in range(0, len(blocks), 2))


# S3 acts on C^4 by permuting (z1, z2, z3)

def permute_z(p: MultiPoly, perm: dict[str, str]) -> MultiPoly:
    """Substitute ``z_i -> z_perm(i)``; names missing from ``perm`` are fixed."""
    mapping = {name: MultiPoly.var(p.table, perm.get(name, name)) for name in p.table}
    return p.substitute(mapping)


CYCLE = {"z1": "z2", "z2": "z3", "z3": "z1"}
TRANSPOSITIONS = ({"z1": "z2", "z2": "z1"}, {"z2": "z3", "z3": "z2"}, {"z1": "z3", "z3": "z1"})


def cyclic_triplet(p1: MultiPoly) -> tuple[MultiPoly, MultiPoly, MultiPoly]:
    p2 = permute_z(p1, CYCLE)
    return p1, p2, permute_z(p2, CYCLE)


@dataclass(frozen=True)
class InstantonDataset:
    n: int
    l: int
    Q: MultiPoly
    q: tuple[MultiPoly, MultiPoly, MultiPoly]
    b: tuple[MultiPoly, MultiPoly, MultiPoly]
    g_canon: tuple[RatFunW, RatFunW, RatFunW]
    k: Fraction
    c: Fraction
    u_partial: bool
    u_fragment: MultiPoly
    _u: Optional[tuple[MultiPoly, MultiPoly, MultiPoly]]

    @property
    def u(self) -> tuple[MultiPoly, MultiPoly, MultiPoly]:
        if self.u_partial:
            raise PartialDataError(
                f"u1 for n = {self.n} is only published as a leading fragment; use u_fragment explicitly"
            )
        return self._u

    @property
    def sign_triple(self) -> tuple[int, int, int]:
        """Branch signs of f_i = sqrt(g_ii) at w = 2, as pinned in the manifest."""
        return tuple(manifest()["sign_triples"][str(self.n)])


@lru_cache(maxsize=None)
def dataset(n: int) -> InstantonDataset:
    if n not in SUPPORTED_N:
        raise UnsupportedInstantonError(f"no instanton data for n = {n} (available: 0, 1, 2)")
    d = f"n{n}"
    (Q,) = load_polys(f"{d}/Q.poly")
    q = tuple(load_polys(f"{d}/q{i}.poly")[0] for i in (1, 2, 3))
    (b1,) = load_polys(f"{d}/b1.poly")
    (u1,) = load_polys(f"{d}/u1.poly")
    partial = f"{d}/u1.poly" in manifest()["partial"]
    if n == 0:
        b = (b1, load_polys(f"{d}/b2.poly")[0], load_polys(f"{d}/b3.poly")[0])
        u = (u1, load_polys(f"{d}/u2.poly")[0], load_polys(f"{d}/u3.poly")[0])
    else:
        b = cyclic_triplet(b1)
        u = None if partial else cyclic_triplet(u1)
    g = load_ratfuns(f"{d}/gcanon.poly")
    half = Fraction(2 * n + 1, 2)
    return InstantonDataset(
        n=n,
        l=DEGREE[n],
        Q=Q,
        q=q,
        b=b,
        g_canon=g,
        k=half**2 / 2,
        c=Fraction(1),
        u_partial=partial,
        u_fragment=u1,
        _u=u,
    )


# the path gamma(w) on the hypersurface Q = 0

def gamma(w):
    """Point (z1, z2, z3, r) on the hypersurface for parameter ``w``."""
    return (w * w - 1, -2 * w + 2, 2 * w + 2, w * w + 3)


@lru_cache(maxsize=None)
def gamma_map() -> dict[str, MultiPoly]:
    return {
        name: parse_poly(text, W_TABLE)
        for name, text in zip(Z_TABLE, ("w^2 - 1", "-2*w + 2", "2*w + 2", "w^2 + 3"))
    }


def along_gamma(p: MultiPoly) -> MultiPoly:
    """``p`` composed with gamma, as a polynomial in w."""
    return p.substitute(gamma_map())


T_OF_W = RatFunW(parse_poly("(w + 1)*(w - 3)^3", W_TABLE), parse_poly("(w - 1)*(w + 3)^3", W_TABLE))


def cross_ratio_of_w(w):
    """Cross-ratio t(w) = (w+1)(w-3)^3 / ((w-1)(w+3)^3); exact for rational w."""
    den = (w - 1) * (w + 3) ** 3
    if den == 0:
        raise ZeroDivisionError(f"t(w) has a pole at w = {w}")
    num = (w + 1) * (w - 3) ** 3
    if isinstance(w, (int, Fraction)):
        return Fraction(num) / den
    return num / den


def pullback_ratfun(n: int, i: int) -> RatFunW:
    """u_i(gamma(w)) / b_i(gamma(w)) as an exact rational function (i = 1..3)."""
    ds = dataset(n)
    return RatFunW(along_gamma(ds.u[i - 1]), along_gamma(ds.b[i - 1]))


def pullback_coeff(n: int, i: int, w):
    """Value of u_i / b_i at gamma(w); exact for rational ``w``."""
    ds = dataset(n)
    u = ds.u[i - 1]
    b = ds.b[i - 1]
    pt = gamma(Fraction(w) if isinstance(w, int) else w)
    den = b(*pt)
    if den == 0:
        raise ZeroDivisionError(f"b{i} vanishes at gamma({w})")
    return u(*pt) / den


def euler_field_action(p: MultiPoly) -> MultiPoly:
    """L_E~ p with E~ = (1/2)(z1 d/dz1 + z2 d/dz2 + z3 d/dz3 + r d/dr)."""
    acc = MultiPoly(p.table)
    for name in p.table:
        acc = acc + MultiPoly.var(p.table, name) * p.diff(name)
    return acc / 2


def identity_field_numerator(p: MultiPoly) -> MultiPoly:
    """Numerator of L_I~ p: I~ = -(d/dz1 + d/dz2 + d/dz3) / (6 (z1+z2+z3)).

    Returns ``-(1/6) * (dp/dz1 + dp/dz2 + dp/dz3)``, which equals
    ``(z1+z2+z3) * L_I~ p``.
    """
    s = p.diff("z1") + p.diff("z2") + p.diff("z3")
    return -s / 6


def z_sum(table=Z_TABLE) -> MultiPoly:
    return sum((MultiPoly.var(table, n) for n in ("z1", "z2", "z3")), MultiPoly(table))
