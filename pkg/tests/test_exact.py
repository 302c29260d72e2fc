from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from frobverify.exact import (
    W_TABLE,
    Z_TABLE,
    MultiPoly,
    ParseError,
    RatFunW,
    UnknownVariableError,
    parse_poly,
    poly_diff,
    poly_eval,
    poly_substitute,
    ratfun_diff,
    ratfun_equal,
)
from frobverify.exact import sparse
from frobverify.exact.ratfun import squarefree_factors
from frobverify.instanton import dataset, gamma_map

Q_TEXT = "(z1 - z2)^2 + (z2 - z3)^2 + (z3 - z1)^2 - 2*r^2"
Q1_TEXT = "2*r*(2*z1 - z2 - z3) - 3*z1^2 - 6*z2*z3"


def P(text, table=Z_TABLE):
    return parse_poly(text, table)


def W(text):
    return parse_poly(text, W_TABLE)


# parser


def test_parse_q1_matches_dataset():
    assert P(Q1_TEXT) == dataset(0).q[0]


def test_parse_zero_has_no_terms():
    p = P("0")
    assert p.is_zero() and len(p) == 0


def test_unknown_variable():
    with pytest.raises(UnknownVariableError, match="unknown variable z4"):
        P("z4 + 1")


@pytest.mark.parametrize(
    "text, expected",
    [
        ("-z1^2", "-(z1^2)"),
        ("2^3^2", "512"),
        ("z1 - z2 - z3", "z1 - (z2 + z3)"),
        ("z1*z2/2", "(1/2)*z1*z2"),
        ("-(z1 + r)*3", "-3*z1 - 3*r"),
        ("z1^0", "1"),
    ],
)
def test_precedence(text, expected):
    assert P(text) == P(expected)


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("2 z1", "implicit multiplication"),
        ("z1^-1", "negative exponent"),
        ("(z1 + 1", "position"),
        ("z1 + * z2", "position"),
        ("z1 / z2", "position"),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(ParseError, match=fragment):
        P(text)


def test_parse_error_reports_position():
    with pytest.raises(ParseError) as info:
        P("z1 + $")
    assert info.value.pos == 5


def test_division_by_zero_constant():
    with pytest.raises((ParseError, ZeroDivisionError)):
        P("z1 / 0")


@pytest.mark.parametrize("n", [0, 1, 2])
def test_round_trip_dataset_polynomials(n):
    ds = dataset(n)
    polys = [ds.Q, *ds.q, *ds.b, ds.u_fragment]
    for p in polys:
        assert P(p.to_text()) == p


# evaluation, differentiation, substitution


def test_eval_q_and_q1_at_gamma_2():
    assert poly_eval(P(Q_TEXT), (3, -2, 6, 7)) == 0
    assert poly_eval(P(Q1_TEXT), (3, -2, 6, 7)) == 73


def test_eval_rational_stays_rational():
    v = poly_eval(P("z1/3 + r"), (Fraction(1, 2), 0, 0, 1))
    assert v == Fraction(7, 6) and isinstance(v, Fraction)


def test_eval_complex():
    assert poly_eval(P("z1^2 + 1"), (1j, 0, 0, 0)) == 0


def test_eval_at_zero_is_constant_term():
    p = P("3*z1*z2 - 7/2 + r^4")
    assert poly_eval(p, (0, 0, 0, 0)) == Fraction(-7, 2)


def test_eval_length_mismatch():
    with pytest.raises(ValueError):
        poly_eval(P("z1"), (1, 2))


def test_diff_examples():
    assert poly_diff(P("z1^2"), "z1") == P("2*z1")
    assert poly_diff(P(Q_TEXT), "r") == P("-4*r")
    assert poly_diff(P("17/3"), "z2").is_zero()
    with pytest.raises(UnknownVariableError):
        poly_diff(P("z1"), "x1")


def test_substitute_q_along_gamma():
    assert poly_substitute(P(Q_TEXT), gamma_map()).is_zero()


def test_substitute_cyclic_b1_gives_b2():
    ds = dataset(0)
    cyc = {"z1": P("z2"), "z2": P("z3"), "z3": P("z1"), "r": P("r")}
    assert poly_substitute(ds.b[0], cyc) == ds.b[1]


def test_substitute_identity_and_unmapped():
    p = P(Q1_TEXT)
    ident = {name: MultiPoly.var(Z_TABLE, name) for name in Z_TABLE}
    assert poly_substitute(p, ident) == p
    with pytest.raises(ValueError, match="unmapped variable"):
        poly_substitute(p, {"z1": P("z1")})


def test_substitute_degree_bound():
    p = P(Q1_TEXT)
    img = poly_substitute(p, gamma_map())
    assert img.degree() <= p.degree() * 2


# rational functions


def test_ratfun_equal_examples():
    assert ratfun_equal(RatFunW(W("w^2 - 1"), W("w - 1")), RatFunW(W("w + 1")))
    assert not ratfun_equal(RatFunW(W("w")), RatFunW(W("w + 1")))
    g = dataset(0).g_canon
    # oracle: common-denominator sum of the three n = 0 components
    assert ratfun_equal(g[0] + g[1] + g[2], RatFunW(Fraction(-1, 4)))


def test_ratfun_normalization():
    r = RatFunW(W("2*w^2 - 2"), W("4*w - 4"))
    assert r.num_coeffs == (Fraction(1, 2), Fraction(1, 2)) and r.den_coeffs == (1,)


def test_ratfun_diff_examples():
    g11 = dataset(0).g_canon[0]
    # quotient-rule oracle: 4w / (w^2 - 9)^2
    assert ratfun_diff(g11) == RatFunW(W("4*w"), W("(w^2 - 9)^2"))
    assert ratfun_diff(RatFunW(Fraction(5, 3))).is_zero()
    t = RatFunW(W("(w + 1)*(w - 3)^3"), W("(w - 1)*(w + 3)^3"))
    assert ratfun_diff(t) == RatFunW(W("16*w^2*(w - 3)^2"), W("(w - 1)^2*(w + 3)^4"))


def test_ratfun_eval_pole():
    with pytest.raises(ZeroDivisionError):
        RatFunW(W("1"), W("w - 1"))(1)


def test_ratfun_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        RatFunW(W("w"), W("0"))


def test_squarefree_factors():
    # w^2 (w - 1)^2 (w + 2)
    coeffs = W("w^2*(w - 1)^2*(w + 2)").coeffs()
    factors = squarefree_factors(coeffs)
    assert [(list(f), m) for f, m in factors] == [([2, 1], 1), ([0, -1, 1], 2)]


# sparse format


def test_sparse_round_trip_and_comments():
    p, q = P(Q1_TEXT), P("0")
    text = sparse.dumps([p, q], ["q1", "zero"])
    assert sparse.loads(text, Z_TABLE) == [p, q]


@pytest.mark.parametrize(
    "text",
    ["1 1 0 0\n", "1 1 0 0 0\n1 1 0 0 0\n", "1 -1 0 0 0\n", "x 1 0 0 0\n"],
)
def test_sparse_rejects_malformed(text):
    with pytest.raises(sparse.SparseFormatError):
        sparse.loads(text, Z_TABLE)


# properties

small = st.integers(-3, 3)
exps = st.tuples(*[st.integers(0, 2)] * 4)
polys = st.dictionaries(exps, small, max_size=5).map(lambda d: MultiPoly(Z_TABLE, d))


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_ring_distributivity(a, b, c):
    assert (a + b) * c == a * c + b * c


@settings(max_examples=60, deadline=None)
@given(polys)
def test_print_parse_fixed_point(p):
    assert P(p.to_text()) == p


@settings(max_examples=40, deadline=None)
@given(polys, st.tuples(*[st.fractions(min_value=-5, max_value=5, max_denominator=5)] * 4))
def test_eval_homomorphism(p, pt):
    q = p * p + p
    assert poly_eval(q, pt) == poly_eval(p, pt) ** 2 + poly_eval(p, pt)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-4, 4), min_size=1, max_size=4), st.lists(st.integers(-4, 4), min_size=2, max_size=4))
def test_ratfun_quotient_rule_consistent(num, den):
    den_p = MultiPoly.from_coeffs(W_TABLE, den)
    if den_p.is_zero():
        return
    f = RatFunW(MultiPoly.from_coeffs(W_TABLE, num), den_p)
    # d(f * g) = f' g + f g' with g = f
    assert ratfun_diff(f * f) == 2 * f * ratfun_diff(f)
