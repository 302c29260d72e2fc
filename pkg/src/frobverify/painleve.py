"""Painleve VI coefficients for the instanton family and a residual evaluator.

Candidates are rational functions lambda(w); t is tied to w by the quartic,
t(w) = (w + 1)(w - 3)^3 / ((w - 1)(w + 3)^3). Derivatives in t come from
exact derivatives in w and the chain rule,

    lambda_t = lambda'(w) / t'(w),   lambda_tt = (lambda_t)'(w) / t'(w),

so only the final evaluation is in floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

from .exact import W_TABLE, RatFunW
from .exact import sparse
from .instanton.dataset import T_OF_W

HEADER = "lambda-candidate v1"


class CriticalPointError(ValueError):
    """dt/dw vanishes, so w is not a local coordinate in t."""


class SingularConfigurationError(ValueError):
    """lambda hits 0, 1 or t, or t hits 0 or 1."""


class CandidateFormatError(ValueError):
    pass


@dataclass(frozen=True)
class PviCoefficients:
    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    delta: Fraction
    n: int
    sign: int

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.alpha, self.beta, self.gamma, self.delta)


def _sign(sign) -> int:
    if sign in (1, "+", "plus"):
        return 1
    if sign in (-1, "-", "minus"):
        return -1
    raise ValueError(f"sign must be plus or minus, got {sign!r}")


def pvi_coefficients(n: int, sign) -> PviCoefficients:
    """alpha = (1/2)((n + 1/2) -+ 1)^2, beta = -gamma = -(1/2)(n + 1/2)^2, delta = 1/2 - gamma."""
    if int(n) != n or n < 0:
        raise ValueError("n must be a nonnegative integer")
    s = _sign(sign)
    half = Fraction(2 * int(n) + 1, 2)
    gamma = half**2 / 2
    return PviCoefficients(
        alpha=(half - s) ** 2 / 2,
        beta=-gamma,
        gamma=gamma,
        delta=Fraction(1, 2) - gamma,
        n=int(n),
        sign=s,
    )


@lru_cache(maxsize=None)
def dt_dw_ratfun() -> RatFunW:
    return T_OF_W.diff()


def implicit_dw_dt(w) -> complex | Fraction:
    """dw/dt = 1 / t'(w); exact for rational ``w``."""
    d = dt_dw_ratfun()(w)
    if d == 0:
        raise CriticalPointError(f"dt/dw vanishes at w = {w}")
    return 1 / d


@dataclass(frozen=True)
class CandidateSolution:
    lam: RatFunW

    @classmethod
    def from_text(cls, text: str) -> "CandidateSolution":
        lines = text.splitlines()
        first = next((i for i, ln in enumerate(lines) if ln.strip()), None)
        if first is None or lines[first].strip() != HEADER:
            raise CandidateFormatError(f"missing header {HEADER!r}")
        blocks = sparse.loads("\n".join(lines[first + 1 :]), W_TABLE)
        if len(blocks) != 2:
            raise CandidateFormatError(f"expected numerator and denominator blocks, found {len(blocks)}")
        num, den = blocks
        if den.is_zero():
            raise CandidateFormatError("denominator is zero")
        return cls(RatFunW(num, den))

    @classmethod
    def load(cls, path) -> "CandidateSolution":
        return cls.from_text(Path(path).read_text())

    def to_text(self) -> str:
        body = sparse.dumps([self.lam.num, self.lam.den], ["numerator", "denominator"])
        return f"{HEADER}\n{body}"

    @property
    def derivatives(self) -> tuple[RatFunW, RatFunW, RatFunW]:
        return _t_derivatives(self.lam)


@lru_cache(maxsize=64)
def _t_derivatives(lam: RatFunW) -> tuple[RatFunW, RatFunW, RatFunW]:
    tp = dt_dw_ratfun()
    lam_t = lam.diff() / tp
    lam_tt = lam_t.diff() / tp
    return lam, lam_t, lam_tt


def pvi_rhs(lam, lam_t, t, coeffs: PviCoefficients):
    """Right side of Painleve VI at (lambda, dlambda/dt, t)."""
    if t in (0, 1):
        raise SingularConfigurationError(f"t = {t} is singular")
    if lam in (0, 1) or lam == t:
        raise SingularConfigurationError(f"lambda = {lam} hits 0, 1 or t")
    a, b, g, d = (float(c) for c in coeffs.as_tuple())
    first = 0.5 * (1 / lam + 1 / (lam - 1) + 1 / (lam - t)) * lam_t**2
    second = (1 / t + 1 / (t - 1) + 1 / (lam - t)) * lam_t
    bracket = a + b * t / lam**2 + g * (t - 1) / (lam - 1) ** 2 + d * t * (t - 1) / (lam - t) ** 2
    return first - second + lam * (lam - 1) * (lam - t) / (t**2 * (t - 1) ** 2) * bracket


@dataclass(frozen=True)
class PviEvaluation:
    """Residual lambda_tt - RHS at one w, with the germ it was evaluated on."""

    w: complex
    t: complex
    lam: complex
    lam_t: complex
    lam_tt: complex
    residual: complex


def pvi_residual(candidate, coeffs: PviCoefficients, w) -> PviEvaluation:
    if isinstance(candidate, RatFunW):
        candidate = CandidateSolution(candidate)
    w = complex(w)
    if dt_dw_ratfun()(w) == 0:
        raise CriticalPointError(f"dt/dw vanishes at w = {w}")
    try:
        t = complex(T_OF_W(w))
        lam, lam_t, lam_tt = (complex(f(w)) for f in candidate.derivatives)
    except ZeroDivisionError as exc:
        raise SingularConfigurationError(f"pole at w = {w}") from exc
    res = lam_tt - pvi_rhs(lam, lam_t, t, coeffs)
    return PviEvaluation(w, t, lam, lam_t, lam_tt, res)
