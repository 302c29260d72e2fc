"""Homogeneity +1 / -1 metrics g+ and g- attached to the n = 0 metric."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

import numpy as np

from ..exact import MultiPoly, RatFunW, Z_TABLE
from .dataset import along_gamma, cyclic_triplet, dataset, load_polys, load_ratfuns


@dataclass(frozen=True)
class GPlusMinusData:
    """Display data for g+ (sign=+1) or g- (sign=-1).

    ``phi[i]`` is the w-dependent factor in front of ``(x1 - x2)^m``.
    ``scale`` is the exact constant with
    ``u_i(gamma(w)) / b_i(gamma(w)) = scale * phi_i(w) * (q1 - q2)(gamma(w))^m``.
    """

    sign: int
    m: int
    k: Fraction
    phi: tuple[RatFunW, RatFunW, RatFunW]
    u: tuple[MultiPoly, MultiPoly, MultiPoly]
    b: tuple[MultiPoly, MultiPoly, MultiPoly]
    scale: Optional[Fraction]

    def metric(self, w: complex, x) -> np.ndarray:
        """Diagonal components at canonical point ``x`` with branch value ``w``."""
        d12 = complex(x[0]) - complex(x[1])
        return np.array([complex(p(complex(w))) for p in self.phi]) * d12**self.m

    def pullback_ratios(self) -> list[RatFunW]:
        """(u_i / b_i along gamma) divided by (phi_i * (q1 - q2)^m along gamma)."""
        ds = dataset(0)
        d12 = RatFunW(along_gamma(ds.q[0] - ds.q[1]))
        out = []
        for i in range(3):
            lhs = RatFunW(along_gamma(self.u[i]), along_gamma(self.b[i]))
            out.append(lhs / (self.phi[i] * d12**self.m))
        return out


@lru_cache(maxsize=None)
def g_plus_minus(sign) -> GPlusMinusData:
    if sign in ("+", "plus", 1):
        s = 1
    elif sign in ("-", "minus", -1):
        s = -1
    else:
        raise ValueError(f"sign must be + or -, got {sign!r}")
    ds = dataset(0)
    if s == 1:
        (u1,) = load_polys("n0/uplus1.poly")
        u = cyclic_triplet(u1)
        phi = load_ratfuns("n0/gplus.poly")
    else:
        one = MultiPoly.constant(Z_TABLE, 1)
        u = (one, one, one)
        phi = load_ratfuns("n0/gminus.poly")
    data = GPlusMinusData(sign=s, m=s, k=ds.k, phi=phi, u=u, b=ds.b, scale=Fraction(0))
    ratios = data.pullback_ratios()
    consistent = all(r.is_constant() for r in ratios) and len({r.num_coeffs for r in ratios}) == 1
    # None flags a display that disagrees with its polynomial form
    scale = ratios[0].num_coeffs[0] if consistent else None
    return GPlusMinusData(sign=s, m=s, k=ds.k, phi=phi, u=u, b=ds.b, scale=scale)
