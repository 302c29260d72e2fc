"""Cartan moving-frame calculus in three complex dimensions.

Conventions
-----------
A vector-valued 1-form is stored as a 3x3 array ``A`` with
``Omega_a = sum_i A[a, i] dx_i``. A scalar 2-form is an antisymmetric 3x3
array ``B`` with ``B[i, j]`` the coefficient of ``dx_i ^ dx_j`` (so the
form is ``sum_{i<j} B[i, j] dx_i ^ dx_j``). Cross products follow

    (Omega x theta)_1 = Omega_2 ^ theta_3 - Omega_3 ^ theta_2   (cyclic)

so that the torsion is ``d theta - Omega x theta`` and the curvature is
``d Omega - (1/2) Omega x Omega``, i.e. ``R_1 = d Omega_1 - Omega_2 ^ Omega_3``.

All derivatives are central differences with one Richardson level. First
derivatives use step ``DEFAULT_H``; quantities built from nested differences
(curvature of a metric, derivative of nabla E) use the larger ``NESTED_H``,
since their round-off grows like eps / h^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .numeric.fd import DEFAULT_H, gradient

NESTED_H = 2e-3

Point = np.ndarray
Evaluator = Callable[[Point], np.ndarray]

CYCLIC = ((0, 1, 2), (1, 2, 0), (2, 0, 1))
PAIRS = ((0, 1), (0, 2), (1, 2))


class CoincidentPointError(ValueError):
    """Two canonical coordinates coincide; Egoroff forms are singular there."""


def _check_point(p) -> np.ndarray:
    p = np.asarray(p, dtype=complex)
    if p.shape != (3,):
        raise ValueError("points must have three coordinates")
    if not np.all(np.isfinite(p)):
        raise ValueError("non-finite point")
    for i, j in PAIRS:
        if p[i] == p[j]:
            raise CoincidentPointError(f"x{i + 1} = x{j + 1} at {p}")
    return p


@dataclass(frozen=True)
class CanonicalCoframe:
    """theta_i = h_i dx_i, given by the evaluator for H = (h1, h2, h3)."""

    H: Evaluator

    def theta(self, x) -> np.ndarray:
        return np.diag(np.asarray(self.H(x), dtype=complex))

    def metric(self, x) -> np.ndarray:
        return np.asarray(self.H(x), dtype=complex) ** 2


@dataclass(frozen=True)
class ConnectionForm:
    """A general so(3)-valued 1-form, given by ``x -> A`` (see module docstring)."""

    A: Evaluator

    def __call__(self, x) -> np.ndarray:
        return np.asarray(self.A(x), dtype=complex)

    def egoroff_coefficients(self, x) -> np.ndarray:
        """F = i_E Omega with E the Euler field."""
        x = np.asarray(x, dtype=complex)
        return self(x) @ x


def egoroff_matrix(F, x) -> np.ndarray:
    x = np.asarray(x, dtype=complex)
    f1, f2, f3 = F
    x1, x2, x3 = x
    return np.array(
        [
            [0, f1 / (x2 - x3), -f1 / (x2 - x3)],
            [-f2 / (x3 - x1), 0, f2 / (x3 - x1)],
            [f3 / (x1 - x2), -f3 / (x1 - x2), 0],
        ],
        dtype=complex,
    )


@dataclass(frozen=True)
class EgoroffConnection(ConnectionForm):
    """Omega_1 = f1 (dx2 - dx3) / (x2 - x3) and cyclic, from the evaluator for F."""

    F: Evaluator = None

    @classmethod
    def from_F(cls, F: Evaluator) -> "EgoroffConnection":
        return cls(A=lambda x: egoroff_matrix(F(x), x), F=F)


def zero_connection() -> ConnectionForm:
    return ConnectionForm(lambda x: np.zeros((3, 3), dtype=complex))


# exterior algebra helpers


def wedge(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Wedge of scalar 1-forms as an antisymmetric coefficient matrix."""
    return np.outer(a, b) - np.outer(b, a)


def d_one_form(alpha: Evaluator, x, h: float = DEFAULT_H) -> np.ndarray:
    """Exterior derivative of a 1-form (or stacked 1-forms, last axis = dx index)."""
    grad = gradient(alpha, x, h)  # grad[i, ..., j] = d_i alpha_j
    moved = np.moveaxis(grad, 0, -2)  # [..., i, j]
    return moved - np.swapaxes(moved, -1, -2)


def d_function(f: Evaluator, x, h: float = DEFAULT_H) -> np.ndarray:
    """Differential of a (vector of) function(s): result[..., i] = d_i f."""
    grad = gradient(f, x, h)
    return np.moveaxis(grad, 0, -1)


def cross_forms(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """(A x B)_a = A_b ^ B_c - A_c ^ B_b for vector-valued 1-forms."""
    out = np.zeros((3, 3, 3), dtype=complex)
    for a, b, c in CYCLIC:
        out[a] = wedge(A[b], B[c]) - wedge(A[c], B[b])
    return out


def cross_form_vector(A: np.ndarray, v: np.ndarray) -> np.ndarray:
    """(Omega x v)_a = Omega_b v_c - Omega_c v_b, a vector-valued 1-form."""
    out = np.zeros((3, 3), dtype=complex)
    for a, b, c in CYCLIC:
        out[a] = A[b] * v[c] - A[c] * v[b]
    return out


def cross_matrix(v: np.ndarray) -> np.ndarray:
    """Matrix K with K @ u = v x u."""
    return np.array([[0, -v[2], v[1]], [v[2], 0, -v[0]], [-v[1], v[0], 0]], dtype=complex)


def two_form_components(B: np.ndarray) -> np.ndarray:
    """Coefficients on (dx1^dx2, dx1^dx3, dx2^dx3) along the last two axes."""
    return np.stack([B[..., i, j] for i, j in PAIRS], axis=-1)


def magnitudes(components: np.ndarray) -> np.ndarray:
    """Largest absolute component of each vector index."""
    comp = np.abs(components)
    return comp.reshape(comp.shape[0], -1).max(axis=1)


# Cartan structure equations


def torsion_residual(coframe: CanonicalCoframe, conn: ConnectionForm, p, h: float = DEFAULT_H) -> np.ndarray:
    """Components of d theta - Omega x theta, shape (3, 3): rows = vector index,
    columns = (dx1^dx2, dx1^dx3, dx2^dx3)."""
    p = _check_point(p)
    dtheta = d_one_form(coframe.theta, p, h)
    T = dtheta - cross_forms(conn(p), coframe.theta(p))
    return two_form_components(T)


def curvature_form(conn: ConnectionForm, p, h: float = DEFAULT_H) -> np.ndarray:
    """Components of d Omega - (1/2) Omega x Omega, same layout as torsion."""
    p = _check_point(p)
    A = conn(p)
    R = d_one_form(conn, p, h) - 0.5 * cross_forms(A, A)
    return two_form_components(R)


def covariant_derivative_vector(v: Evaluator, conn: ConnectionForm, p, h: float = DEFAULT_H) -> np.ndarray:
    """d v - Omega x v as a vector-valued 1-form (3x3)."""
    return d_function(v, p, h) - cross_form_vector(conn(p), np.asarray(v(p), dtype=complex))


def check_conditions(
    coframe: CanonicalCoframe, conn: ConnectionForm, m, p, h: float = DEFAULT_H
) -> dict[str, float]:
    """Residuals of conditions C1-C4 at ``p``.

    C1: Egoroff shape, measured by the diagonal entries i_{d_a} Omega_a
    together with i_I Omega; C2: |dF - Omega x F|; C3: |dH - Omega x H|;
    C4: |F x H - (m/2) H|.
    """
    p = _check_point(p)
    A = conn(p)
    c1 = max(np.abs(np.diag(A)).max(), np.abs(A.sum(axis=1)).max())
    F = conn.egoroff_coefficients
    c2 = np.abs(covariant_derivative_vector(F, conn, p, h)).max()
    c3 = np.abs(covariant_derivative_vector(coframe.H, conn, p, h)).max()
    Hp = np.asarray(coframe.H(p), dtype=complex)
    c4 = np.abs(np.cross(F(p), Hp) - (float(m) / 2) * Hp).max()
    return {"C1": float(c1), "C2": float(c2), "C3": float(c3), "C4": float(c4)}


def egoroff_reformulations(coframe: CanonicalCoframe, conn: ConnectionForm, p, h: float = DEFAULT_H) -> dict[str, float]:
    """Residuals of the three reformulations of the Egoroff property.

    C1a: d(H . theta) = d(g11 dx1 + g22 dx2 + g33 dx3);
    C1b: (dH - Omega x H) . theta, a 2-form;
    C1c: i_I Omega.
    """
    p = _check_point(p)
    c1a = np.abs(d_one_form(coframe.metric, p, h)).max()
    DH = covariant_derivative_vector(coframe.H, conn, p, h)
    theta = coframe.theta(p)
    B = sum(wedge(DH[a], theta[a]) for a in range(3))
    c1b = np.abs(B).max()
    c1c = np.abs(conn(p).sum(axis=1)).max()
    return {"C1a": float(c1a), "C1b": float(c1b), "C1c": float(c1c)}


def covariant_endomorphism_check(
    coframe: CanonicalCoframe, conn: ConnectionForm, E: Evaluator, p, h: float = NESTED_H
) -> float:
    """max over frame vectors Z of |nabla_Z (nabla E)|.

    nabla E is assembled in the orthonormal frame from the frame components
    of E and the connection, (nabla_V E) = V(E) - Omega(V) x E; its covariant
    derivative is Z(M) - [Omega(Z)x, M].
    """
    p = _check_point(p)

    def frame_E(x):
        return np.asarray(coframe.H(x), dtype=complex) * np.asarray(E(x), dtype=complex)

    def endomorphism(x):
        Hx = np.asarray(coframe.H(x), dtype=complex)
        DE = covariant_derivative_vector(frame_E, conn, x, h)  # [a, i]
        return DE / Hx[np.newaxis, :]  # column b: nabla_{e_b} E

    M = endomorphism(p)
    dM = gradient(endomorphism, p, h)  # [c, a, b] = d_c M
    A = conn(p)
    Hp = np.asarray(coframe.H(p), dtype=complex)
    worst = 0.0
    for c in range(3):
        W = cross_matrix(A[:, c] / Hp[c])
        cov = dM[c] / Hp[c] - (W @ M - M @ W)
        worst = max(worst, float(np.abs(cov).max()))
    return worst


# metric-side oracles


def _full_metric(metric: Evaluator, x) -> np.ndarray:
    g = np.asarray(metric(x), dtype=complex)
    return np.diag(g) if g.ndim == 1 else g


def christoffel(metric: Evaluator, x, h: float = DEFAULT_H) -> np.ndarray:
    """Gamma[i, j, k] = Gamma^i_{jk} from central differences of the metric."""
    g = _full_metric(metric, x)
    ginv = np.linalg.inv(g)
    dg = gradient(lambda y: _full_metric(metric, y), x, h)  # dg[l, a, b] = d_l g_ab
    # lower-index Gamma_{l, j, k} = (d_j g_lk + d_k g_lj - d_l g_jk) / 2
    low = 0.5 * (np.einsum("jlk->ljk", dg) + np.einsum("klj->ljk", dg) - dg)
    return np.einsum("il,ljk->ijk", ginv, low)


def riemann_components(metric: Evaluator, p, h: float = NESTED_H) -> np.ndarray:
    """R[i, j, k, l] = R^i_{jkl} = d_k G^i_{lj} - d_l G^i_{kj} + G^i_{km} G^m_{lj} - G^i_{lm} G^m_{kj}."""
    p = np.asarray(p, dtype=complex)
    G = christoffel(metric, p, h)
    dG = gradient(lambda y: christoffel(metric, y, h), p, h)  # dG[k, i, l, j]
    term1 = np.einsum("kilj->ijkl", dG)
    term2 = np.einsum("likj->ijkl", dG)
    quad = np.einsum("ikm,mlj->ijkl", G, G) - np.einsum("ilm,mkj->ijkl", G, G)
    return term1 - term2 + quad


def riemann_tensor(metric: Evaluator, p, h: float = NESTED_H) -> float:
    """max |R^i_{jkl}| at ``p``; an independent flatness oracle."""
    g = _full_metric(metric, np.asarray(p, dtype=complex))
    if abs(np.linalg.det(g)) == 0:
        raise np.linalg.LinAlgError("singular metric")
    return float(np.abs(riemann_components(metric, p, h)).max())


def lie_derivative_metric(V: Evaluator, metric: Evaluator, p, h: float = DEFAULT_H) -> np.ndarray:
    """(L_V g)_ij = V^k d_k g_ij + g_kj d_i V^k + g_ik d_j V^k."""
    p = np.asarray(p, dtype=complex)
    g = _full_metric(metric, p)
    dg = gradient(lambda y: _full_metric(metric, y), p, h)  # [k, i, j]
    Vp = np.asarray(V(p), dtype=complex)
    dV = gradient(V, p, h)  # [i, k] = d_i V^k
    return np.einsum("k,kij->ij", Vp, dg) + np.einsum("kj,ik->ij", g, dV) + np.einsum("ik,jk->ij", g, dV)


def euler_field(x) -> np.ndarray:
    return np.asarray(x, dtype=complex)


def identity_field(x) -> np.ndarray:
    return np.ones(3, dtype=complex)
