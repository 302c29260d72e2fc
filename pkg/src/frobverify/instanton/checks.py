"""Exact identity suites for the instanton data and its scaffolding."""

from __future__ import annotations

from fractions import Fraction

from ..exact import MultiPoly, RatFunW, VarTable, Z_TABLE
from ..report import CheckResult, exact_check
from .companions import g_plus_minus
from .dataset import (
    CYCLE,
    SUPPORTED_N,
    T_OF_W,
    TRANSPOSITIONS,
    along_gamma,
    cyclic_triplet,
    dataset,
    euler_field_action,
    identity_field_numerator,
    permute_z,
    z_sum,
)

_SCALED = VarTable(["z1", "z2", "z3", "r", "s"])


def _index_perm(perm: dict[str, str]) -> list[int]:
    """0-based image index of each z_i under ``perm``."""
    return [int(perm.get(f"z{i}", f"z{i}")[1]) - 1 for i in (1, 2, 3)]


def homogeneity_residual(p: MultiPoly, degree: int) -> MultiPoly:
    """p(s z, s r) - s^degree p(z, r) over the table (z1, z2, z3, r, s)."""
    s = MultiPoly.var(_SCALED, "s")
    scaled = p.substitute({n: MultiPoly.var(_SCALED, n) * s for n in p.table})
    plain = p.substitute({n: MultiPoly.var(_SCALED, n) for n in p.table})
    return scaled - s**degree * plain


def euler_identity_suite(perm: dict[str, str] | None = None, prefix: str = "scaffold") -> list[CheckResult]:
    """Euler / identity field identities on Q and q_i, optionally after an S3 permutation."""
    ds = dataset(0)
    Q, q = ds.Q, ds.q
    if perm is not None:
        Q = permute_z(Q, perm)
        q = tuple(permute_z(p, perm) for p in q)
    s = z_sum()
    out = [
        exact_check(f"{prefix}.euler.Q", euler_field_action(Q) - Q),
        exact_check(f"{prefix}.identity.Q", identity_field_numerator(Q)),
    ]
    for i, qi in enumerate(q, 1):
        out.append(exact_check(f"{prefix}.euler.q{i}", euler_field_action(qi) - qi))
        out.append(exact_check(f"{prefix}.identity.q{i}", identity_field_numerator(qi) - s))
    return out


def scaffold_suite() -> list[CheckResult]:
    """Q along gamma, the sum rule for q_i, the cross-ratio along gamma, Euler/identity fields."""
    ds = dataset(0)
    s = z_sum()
    out = [
        exact_check("scaffold.Q_gamma", along_gamma(ds.Q)),
        exact_check("scaffold.q_sum", ds.q[0] + ds.q[1] + ds.q[2] + 3 * s * s),
    ]
    qg = [along_gamma(p) for p in ds.q]
    cr = RatFunW(qg[2] - qg[0], qg[1] - qg[0])
    out.append(exact_check("scaffold.cross_ratio_gamma", cr == T_OF_W))
    out.extend(euler_identity_suite())
    return out


def s3_equivariance_suite(ns=SUPPORTED_N) -> list[CheckResult]:
    out = []
    ds0 = dataset(0)
    perms = {"cycle": CYCLE, **{f"swap{''.join(sorted(p))}".replace("z", ""): p for p in TRANSPOSITIONS}}
    for name, perm in perms.items():
        idx = _index_perm(perm)
        ok = permute_z(ds0.Q, perm) == ds0.Q
        ok &= all(permute_z(ds0.q[i], perm) == ds0.q[idx[i]] for i in range(3))
        out.append(exact_check(f"s3.{name}.Q_q", ok))
        # fields: permutation commutes with L_E~ and with the numerator of L_I~
        fields_ok = all(
            permute_z(euler_field_action(p), perm) == euler_field_action(permute_z(p, perm))
            and permute_z(identity_field_numerator(p), perm) == identity_field_numerator(permute_z(p, perm))
            for p in (ds0.Q, *ds0.q)
        )
        out.append(exact_check(f"s3.{name}.fields", fields_ok))
        permuted_suite = [r.status for r in euler_identity_suite(perm, prefix="tmp")]
        reference = [r.status for r in euler_identity_suite(prefix="tmp")]
        out.append(exact_check(f"s3.{name}.euler_suite", permuted_suite == reference))
        for n in ns:
            ds = dataset(n)
            triplets = [("b", ds.b)] + ([] if ds.u_partial else [("u", ds.u)])
            ok = all(
                permute_z(tri[i], perm) == tri[idx[i]] for _, tri in triplets for i in range(3)
            )
            label = "".join(t for t, _ in triplets)
            out.append(exact_check(f"n{n}.s3.{name}.{label}", ok))
    return out


def homogeneity_suite(ns=SUPPORTED_N) -> list[CheckResult]:
    ds0 = dataset(0)
    out = [exact_check("scaffold.homogeneous.Q", homogeneity_residual(ds0.Q, 2))]
    for i, q in enumerate(ds0.q, 1):
        out.append(exact_check(f"scaffold.homogeneous.q{i}", homogeneity_residual(q, 2)))
    for n in ns:
        ds = dataset(n)
        polys = [("b1", ds.b[0])]
        polys += [("u1_fragment", ds.u_fragment)] if ds.u_partial else [("u1", ds.u[0])]
        for name, p in polys:
            out.append(exact_check(f"n{n}.homogeneous.{name}", homogeneity_residual(p, ds.l)))
    return out


def dataset_suite(n: int) -> list[CheckResult]:
    """Trace identity and structural facts about the stored data for one n."""
    ds = dataset(n)
    out = []
    total = ds.g_canon[0] + ds.g_canon[1] + ds.g_canon[2] + Fraction((2 * n + 1) ** 2, 4)
    out.append(exact_check(f"n{n}.trace.exact", total.num, f"k = {ds.k}"))
    if n == 0:
        gen_b, gen_u = cyclic_triplet(ds.b[0]), cyclic_triplet(ds.u[0])
        out.append(exact_check("n0.cyclic_triplets", gen_b == ds.b and gen_u == ds.u))
    if n == 1:
        out.append(exact_check("n1.u1.term_count", len(ds.u[0]) == 84, f"{len(ds.u[0])} terms"))
    if n == 2:
        out.append(exact_check("n2.u1.partial_flag", ds.u_partial, "u1 stored as leading fragment"))
    return out


def pullback_suite(n: int) -> list[CheckResult]:
    """u_i(gamma(w)) / b_i(gamma(w)) equals the canonical component g_ii(w)."""
    ds = dataset(n)
    out = []
    for i in range(3):
        lhs = RatFunW(along_gamma(ds.u[i]), along_gamma(ds.b[i]))
        out.append(exact_check(f"n{n}.pullback.g{i + 1}{i + 1}", lhs == ds.g_canon[i]))
    return out


def companion_suite() -> list[CheckResult]:
    out = []
    for sign, label in ((1, "plus"), (-1, "minus")):
        data = g_plus_minus(sign)
        ok = data.scale is not None
        detail = f"u/b = {data.scale} * display" if ok else "ratio not constant"
        out.append(exact_check(f"n0.g{label}.pullback", ok, detail))
    return out
