from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mdzeta.errors import ParseError
from mdzeta.symbolic import (
    LinearCombo,
    MdzvSymbol,
    MzvSymbol,
    Variant,
    add_exponents,
    combo_algebra,
    mzv,
    parse_combo,
    parse_symbol,
    plain,
    sub,
    sup1,
    suprho,
)


def test_parse_and_print_round_trip():
    for text in ["z(4;4)", "z1(1,3;2,2)", "zr(2,2;1,3)", "s1(2,2;2,2)", "sr(1,2;3,4)", "s01(2,2;2,2)", "s10(2,2;2,2)", "mzv(1,3)", "mzv()"]:
        assert str(parse_symbol(text)) == text
    assert parse_symbol(" z1( 2, 2 ; 2,2 )") == sup1(2, 2, 2, 2)


@pytest.mark.parametrize("text", ["z(1,2;3,4)", "z1(2;2)", "q(1;1)", "z(0;2)", "z1(1,2;3)", "mzv(1;2)", "z(2;2", "z1(1,2,3,4;1,2,3,4)", "zr(1,2,3;1,2,3)"])
def test_parse_rejects_malformed(text):
    with pytest.raises(ParseError):
        parse_symbol(text)


def test_formal_exponents():
    s = parse_symbol("z(a+b;c+d)")
    assert s.is_formal and not s.is_convergent()
    assert add_exponents("b", "a", 2, 1) == "a+b+3"
    assert add_exponents(2, 3) == 5


def test_convergence_guard():
    assert plain(2, 2).is_convergent()
    assert plain(1, 2).is_convergent()
    assert not plain(1, 1).is_convergent()
    assert sup1(1, 2, 1, 2).is_convergent()
    assert not sup1(1, 1, 1, 1).is_convergent()
    assert sup1(1, 3, 1, 3).is_convergent()
    assert sub(Variant.SUB1, 2, 2, 2, 2).is_convergent()


def test_mzv_admissibility():
    assert mzv(1, 3).is_admissible()
    assert not mzv(3, 1).is_admissible()
    assert mzv().is_admissible()
    assert mzv(2, 3).weight == 5


def test_symbols_order_deterministically():
    syms = [suprho(1, 3, 1, 3), plain(4, 4), mzv(4), sup1(2, 2, 2, 2), sub(Variant.SUB10, 2, 2, 2, 2)]
    assert [str(s) for s in sorted(syms)] == ["mzv(4)", "z(4;4)", "z1(2,2;2,2)", "zr(1,3;1,3)", "s10(2,2;2,2)"]


def test_combo_arithmetic_examples():
    c = parse_combo("z(4;4) + 2*z1(2,2;2,2) - 1/3*mzv(1,3)")
    assert str(c) == "-1/3*mzv(1,3) + z(4;4) + 2*z1(2,2;2,2)"
    assert (c - c).is_zero()
    assert c.scale(0).is_zero()
    assert c[sup1(2, 2, 2, 2)] == 2
    assert c[sup1(1, 1, 1, 1)] == 0
    assert combo_algebra("is_zero", c - c)
    assert combo_algebra("scale", c, 3) == c + c + c
    assert combo_algebra("add", c, -c).is_zero()
    assert combo_algebra("sub", c, c).is_zero()
    assert str(LinearCombo()) == "0"
    assert parse_combo("0").is_zero()
    assert parse_combo(str(c)) == c


def test_combo_rejects_garbage():
    for text in ["z(4;4) z1(2,2;2,2)", "2*", "x(1;1)", "z(4;4) + + z(2;2)"]:
        with pytest.raises(ParseError):
            parse_combo(text)


def test_combo_to_json_is_exact():
    c = LinearCombo([(mzv(4), Fraction(-1, 4))])
    assert c.to_json() == [{"symbol": "mzv(4)", "coeff": "-1/4"}]


symbols = st.sampled_from(
    [plain(4, 4), plain(2, 2), sup1(2, 2, 2, 2), sup1(1, 3, 1, 3), suprho(1, 3, 2, 2), sub(Variant.SUB01, 2, 2, 2, 2), mzv(1, 3), mzv(4)]
)
fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
combos = st.lists(st.tuples(symbols, fractions), max_size=6).map(LinearCombo)


@given(combos, combos)
def test_addition_commutes(a, b):
    assert a + b == b + a


@given(combos, combos, combos)
def test_addition_associates(a, b, c):
    assert (a + b) + c == a + (b + c)


@given(combos)
def test_additive_inverse_and_zero(a):
    assert (a - a).is_zero()
    assert a + LinearCombo() == a
    assert -(-a) == a


@given(combos, fractions, fractions)
def test_scaling_distributes(a, x, y):
    assert a.scale(x + y) == a.scale(x) + a.scale(y)
    assert a.scale(x).scale(y) == a.scale(x * y)


@given(combos)
def test_no_stored_zeros_and_print_round_trip(a):
    assert all(c != 0 for _, c in a.items())
    assert parse_combo(str(a)) == a


@given(combos)
def test_coefficients_stay_rational(a):
    assert all(isinstance(c, Fraction) for _, c in a.items())
    assert isinstance(a.coefficient_sum(), Fraction)


def test_depth_three_symbol_is_printable_only():
    s = MdzvSymbol(Variant.SUP1, (1, 2, 3), (1, 2, 3))
    assert s.depth == 3 and not s.is_convergent()
    assert MzvSymbol((1, 2, 3)).depth == 3
