import random
from fractions import Fraction

import pytest

from downup.errors import DomainError, ParseError, UnknownLetterError
from downup.expr import DU, DWU, OMEGA, Alphabet, NcPoly, add, format_word, mul, parse, scale

D = NcPoly.letter(DU, "d")
U = NcPoly.letter(DU, "u")


def test_parse_three_term_example():
    p = parse("d^2*u - 2*d*u*d + u*d^2", DU)
    assert p.terms == {
        ("d", "d", "u"): Fraction(1),
        ("d", "u", "d"): Fraction(-2),
        ("u", "d", "d"): Fraction(1),
    }


def test_parse_unit():
    p = parse("1", DU)
    assert p.terms == {(): Fraction(1)}


def test_parse_unknown_letter():
    with pytest.raises(UnknownLetterError) as err:
        parse("d*w", DU)
    assert err.value.position == 2


def test_parse_syntax_error_position():
    with pytest.raises(ParseError) as err:
        parse("d + * u", DU)
    assert err.value.position == 4


def test_parse_juxtaposition_and_rationals():
    assert parse("2d^2u", DU) == parse("2*d^2*u", DU)
    assert parse("-3/4*u", DU).terms == {("u",): Fraction(-3, 4)}
    assert parse("d(d+u)d", DU) == parse("d*d*d + d*u*d", DU)


def test_parse_omega_alias():
    p = parse("omega^2 + d*omega*u", DWU)
    q = parse(f"{OMEGA}^2 + d*{OMEGA}*u", DWU)
    assert p == q
    assert p.terms == {(OMEGA, OMEGA): Fraction(1), ("d", OMEGA, "u"): Fraction(1)}


def test_mul_trivial():
    assert mul(D, U).terms == {("d", "u"): Fraction(1)}


def test_additive_inverse_cancels():
    du = mul(D, U)
    assert add(du, scale(-1, du)).terms == {}
    assert not add(du, scale(-1, du))


def test_mul_difference_of_letters():
    # (d+u)(d-u) expanded by hand: dd - du + ud - uu
    p = mul(D + U, D - U)
    assert p.terms == {
        ("d", "d"): Fraction(1),
        ("d", "u"): Fraction(-1),
        ("u", "d"): Fraction(1),
        ("u", "u"): Fraction(-1),
    }


def test_power():
    p = (D + U) ** 2
    assert p == parse("d^2 + d*u + u*d + u^2", DU)
    assert (D ** 0).terms == {(): Fraction(1)}


def test_alphabet_mismatch():
    x = NcPoly.letter(Alphabet(("y", "x")), "x")
    with pytest.raises(DomainError, match="alphabet mismatch"):
        add(D, x)


def _random_poly(rng, alphabet, max_terms=4, max_len=4):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        word = tuple(rng.choice(alphabet.letters) for _ in range(rng.randint(0, max_len)))
        terms[word] = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
    return NcPoly(alphabet, terms)


def test_ring_axioms_random():
    rng = random.Random(7)
    for _ in range(25):
        p = _random_poly(rng, DU)
        q = _random_poly(rng, DU)
        r = _random_poly(rng, DU)
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r
        assert (p + q) * r == p * r + q * r
        assert p + q == q + p


def test_parse_print_roundtrip_random():
    rng = random.Random(11)
    for alphabet in (DU, DWU):
        for _ in range(25):
            p = _random_poly(rng, alphabet)
            assert parse(str(p), alphabet) == p
    assert str(NcPoly.zero(DU)) == "0"


def test_print_deglex_order():
    p = parse("u + 3*d*u - 1/2", DU)
    assert str(p) == "3*d*u + u - 1/2"
    q = parse("d^2*u - 2*d*u*d + u*d^2", DU)
    assert str(q) == "d^2*u - 2*d*u*d + u*d^2"


def test_canonical_equality_is_table_equality():
    p = parse("d*u + u*d", DU)
    q = parse("u*d + d*u", DU)
    assert p == q and p.terms == q.terms


def test_format_word_folds_runs():
    assert format_word(("d", "d", "u")) == "d^2*u"
    assert format_word(()) == "1"


def test_word_order_precedence():
    # with precedence d > u: ddu > dud > udd, and longer words dominate
    assert DU.word_key(("d", "d", "u")) > DU.word_key(("d", "u", "d"))
    assert DU.word_key(("d", "u", "d")) > DU.word_key(("u", "d", "d"))
    assert DU.word_key(("u", "u", "u", "u")) > DU.word_key(("d", "d", "d"))
