import pytest
from hypothesis import given, settings, strategies as st

from congap.polycore import (IntPoly, PolySyntaxError, derivative, discriminant, eval_at,
                             format_poly, parse_poly, resultant)

from oracles import power_sum_eval, sylvester_discriminant, sylvester_resultant, trinomial_disc

coeff_lists = st.lists(st.integers(-50, 50), max_size=8)
nonzero_polys = coeff_lists.map(IntPoly).filter(lambda p: not p.is_zero())


def monic(max_deg=6, bound=10):
    return st.lists(st.integers(-bound, bound), min_size=1, max_size=max_deg).map(
        lambda tail: IntPoly(tail + [1]))


@pytest.mark.parametrize("text, coeffs", [
    ("x^3-2", (-2, 0, 0, 1)),
    ("coeffs:1,0,0,0,-1,-1", (-1, -1, 0, 0, 0, 1)),
    ("x^2 + x + x", (0, 2, 1)),
    ("x^5 - x - 1", (-1, -1, 0, 0, 0, 1)),
    ("3*x^2 + 2x - 7", (-7, 2, 3)),
    ("-x^2 + 1", (1, 0, -1)),
    ("x - -3", (3, 1)),
    ("x^2 + -3*x", (0, -3, 1)),
    ("  x ^ 2 +  1 ", (1, 0, 1)),
    ("x^0 + 4", (5,)),
    ("x^2 - x^2", ()),
    ("0", ()),
    ("coeffs: 0, 0, 7", (7,)),
    ("123456789012345678901234567890*x + 1", (1, 123456789012345678901234567890)),
])
def test_parse(text, coeffs):
    assert parse_poly(text).coeffs == coeffs


@pytest.mark.parametrize("text", [
    "", "x^", "x^2 +", "2**x", "x^-1", "y^2", "x x", "coeffs:", "coeffs:1,", "x^2 ++ 1",
    "- 3", "1.5*x", "x^2 1",
])
def test_parse_rejects(text):
    with pytest.raises(PolySyntaxError):
        parse_poly(text)


def test_syntax_error_reports_position():
    with pytest.raises(PolySyntaxError) as info:
        parse_poly("x^2 + y")
    assert info.value.pos == 6


@pytest.mark.parametrize("coeffs, text", [
    ((-1, -1, 0, 0, 0, 1), "x^5 - x - 1"),
    ((), "0"),
    ((0, 0, 2), "2*x^2"),
    ((1, 0, -1), "-x^2 + 1"),
    ((-3,), "-3"),
    ((0, -2), "-2*x"),
])
def test_format(coeffs, text):
    assert format_poly(IntPoly(coeffs)) == text


@given(coeff_lists)
def test_parse_format_round_trip(coeffs):
    p = IntPoly(coeffs)
    assert parse_poly(format_poly(p)) == p


def test_normal_form():
    p = IntPoly([1, 2, 0, 0])
    assert p.coeffs == (1, 2) and p.degree == 1
    assert IntPoly([0, 0]).is_zero() and IntPoly([]).degree == -1
    assert IntPoly([3, 1]).is_monic() and not IntPoly([3, 2]).is_monic()


@pytest.mark.parametrize("text, expected", [
    ("x^3 - 2", (0, 0, 3)),
    ("x^5 - x - 1", (-1, 0, 0, 0, 5)),
    ("7", ()),
])
def test_derivative(text, expected):
    assert derivative(parse_poly(text)).coeffs == expected


@pytest.mark.parametrize("text, x, value", [
    ("x^3 - 2", 4, 62), ("x^5 - x - 1", 0, -1), ("x^2 + 1", 2, 5),
])
def test_eval_at(text, x, value):
    assert eval_at(parse_poly(text), x) == value


@given(coeff_lists, st.integers(-1000, 1000))
def test_eval_matches_power_sum(coeffs, x):
    assert eval_at(IntPoly(coeffs), x) == power_sum_eval(list(IntPoly(coeffs).coeffs), x)


def test_resultant_examples():
    # frozen from the Sylvester-determinant oracle
    assert resultant(parse_poly("x^2 + 1"), parse_poly("2*x")) == 4
    assert resultant(parse_poly("x^3 - 2"), parse_poly("3*x^2")) == 108
    assert sylvester_resultant([1, 0, 1], [0, 2]) == 4


@pytest.mark.parametrize("a", [-3, 0, 2, 7])
@pytest.mark.parametrize("q", ["x^3 - 2", "x^2 + 1", "5*x^4 - x + 9", "4"])
def test_resultant_linear_is_evaluation(a, q):
    qp = parse_poly(q)
    assert resultant(IntPoly([-a, 1]), qp) == eval_at(qp, a)


def test_resultant_rejects_zero():
    with pytest.raises(ValueError):
        resultant(IntPoly(), parse_poly("x"))


@given(nonzero_polys, nonzero_polys)
def test_resultant_antisymmetry(p, q):
    sign = -1 if (p.degree * q.degree) % 2 else 1
    assert resultant(p, q) == sign * resultant(q, p)


@given(nonzero_polys, nonzero_polys)
@settings(max_examples=60)
def test_resultant_matches_sylvester(p, q):
    if p.degree == 0 and q.degree == 0:
        return
    assert resultant(p, q) == sylvester_resultant(list(p.coeffs), list(q.coeffs))


@pytest.mark.parametrize("text, disc", [
    ("x^2 + 1", -4),
    ("x^3 - 2", -108),
    ("x^5 - x - 1", 2869),
    ("x^5 + 20*x + 16", 1024000000),
    ("x - 5", 1),
    ("x^2 - 2*x + 1", 0),
])
def test_discriminant_examples(text, disc):
    assert discriminant(parse_poly(text)) == disc


def test_discriminant_trinomial_oracle():
    assert trinomial_disc(3, 0, -2) == -108
    assert trinomial_disc(5, -1, -1) == 2869
    assert trinomial_disc(5, 20, 16) == 1024000000 == 32000 ** 2
    for n, a, b in [(3, 1, 1), (4, -3, 5), (5, 7, -2), (6, 1, 1), (7, -1, 3)]:
        p = IntPoly([b, a] + [0] * (n - 2) + [1])
        assert discriminant(p) == trinomial_disc(n, a, b)


def test_discriminant_rejects():
    with pytest.raises(ValueError):
        discriminant(parse_poly("2*x^2 + 1"))
    with pytest.raises(ValueError):
        discriminant(parse_poly("5"))


@given(monic())
@settings(max_examples=80)
def test_discriminant_matches_sylvester(p):
    assert discriminant(p) == sylvester_discriminant(list(p.coeffs))


@given(st.lists(st.integers(-6, 6), min_size=2, max_size=5))
def test_discriminant_zero_iff_repeated_root(roots):
    p = IntPoly.from_roots(roots)
    assert (discriminant(p) == 0) == (len(set(roots)) < len(roots))


@given(monic(max_deg=5), st.sampled_from([3, 5, 7, 11, 13, 101]))
@settings(max_examples=60)
def test_discriminant_commutes_with_reduction(p, q):
    # disc of the reduced polynomial, computed mod q with the same formula
    reduced = IntPoly([c % q for c in p.coeffs])
    assert discriminant(p) % q == discriminant(reduced) % q
