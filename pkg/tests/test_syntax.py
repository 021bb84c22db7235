import pytest
from hypothesis import given

from biquat.field_core import make_field
from biquat.syntax import ParseError, format_element, parse_element, parse_symbol_text, parse_witt_text

from oracles import elements

F2t = make_field(1, None, ("t",))
F4t = make_field(2, None, ("t",))
F2st = make_field(1, None, ("s", "t"))


def test_parse_examples(F2t):
    t = F2t.gen("t")
    assert parse_element("t^2+t", F2t) == t * t + t
    assert parse_element("1/(t+1)", F2t) == (t + 1).inverse()
    assert parse_element("3*t - t", F2t) == F2t.zero_element
    assert parse_element(" ( t + 1 ) ^ 2 ", F2t) == t * t + 1


def test_division_by_zero_in_text(F2t):
    with pytest.raises(ZeroDivisionError):
        parse_element("t/0", F2t)


@pytest.mark.parametrize("src,pos", [("t+", 2), ("t**2", 2), ("(t+1", 4), ("t $ 1", 2), ("", 0)])
def test_syntax_errors_carry_position(F2t, src, pos):
    with pytest.raises(ParseError) as info:
        parse_element(src, F2t)
    assert info.value.pos == pos


def test_unknown_variable(F2t):
    with pytest.raises(ParseError):
        parse_element("s+1", F2t)
    with pytest.raises(ParseError):
        parse_element("x", make_field(1))


def test_generator_of_extension(F4t):
    x = parse_element("x", F4t)
    assert x * x == x + 1


def test_symbol_and_witt_literals(F2t):
    a, b = parse_symbol_text("[t^2, 1/(t+1))", F2t)
    assert a == F2t("t^2") and b == F2t("1/(t+1)")
    assert parse_witt_text("(t; 1; (t+1)/t)", F2t) == [F2t("t"), F2t.one_element, F2t("(t+1)/t")]
    with pytest.raises(ParseError):
        parse_symbol_text("[t, 1]", F2t)
    with pytest.raises(ParseError):
        parse_symbol_text("[t, 1, 2)", F2t)


@given(elements(F2t, 4))
def test_round_trip_gf2t(x):
    assert parse_element(format_element(x), F2t) == x


@given(elements(F4t, 3))
def test_round_trip_gf4t(x):
    assert parse_element(format_element(x), F4t) == x


def test_round_trip_bivariate(F2st):
    for src in ["s*t+1", "(s^2+t)/(s*t+s+1)", "1/(s+t)", "s^3*t^2+s"]:
        x = parse_element(src, F2st)
        assert parse_element(format_element(x), F2st) == x
