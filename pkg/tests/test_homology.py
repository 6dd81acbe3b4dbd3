"""Tests for the bimodule resolution and Tor profiles of one-dimensional modules."""

import random
from fractions import Fraction

import pytest

from downup.algebra import Params
from downup.errors import DomainError
from downup.homology import (
    BimoduleElement,
    OneDimModule,
    TorProfile,
    apply_d1,
    apply_d2,
    apply_d3,
    closed_form_matrices,
    enumerate_one_dim,
    tor_matrices,
    tor_profile,
    tor1_bound,
)


def random_params(rng, beta_zero=False):
    def frac():
        return Fraction(rng.randint(-6, 6), rng.randint(1, 4))

    return Params(frac(), 0 if beta_zero else frac(), frac())


def test_d1_on_a_generator():
    p = Params(2, 0, 1)
    image = apply_d1(BimoduleElement.generator(1, "d"), p)
    expected = BimoduleElement(
        0, {(("d",), "", ()): Fraction(1), ((), "", ("d",)): Fraction(-1)}
    )
    assert image == expected


def test_d2_in_the_monomial_case_keeps_only_plain_summands():
    p = Params(0, 0, 0)
    image = apply_d2(BimoduleElement.generator(2, "d2u"), p)
    expected = BimoduleElement(
        1,
        {
            ((), "d", ("d", "u")): Fraction(1),
            (("d",), "d", ("u",)): Fraction(1),
            (("d", "d"), "u", ()): Fraction(1),
        },
    )
    assert image == expected


def test_d3_with_beta_zero_has_two_terms():
    p = Params(2, 0, 1)
    image = apply_d3(BimoduleElement.generator(3, "d2u2"), p)
    expected = BimoduleElement(
        2,
        {(("d",), "du2", ()): Fraction(1), ((), "d2u", ("u",)): Fraction(-1)},
    )
    assert image == expected


def test_composites_vanish_for_random_parameters():
    rng = random.Random(71)
    for _ in range(50):
        p = random_params(rng)
        assert not apply_d2(apply_d3(BimoduleElement.generator(3, "d2u2"), p), p)
        for tag in ("d2u", "du2"):
            assert not apply_d1(apply_d2(BimoduleElement.generator(2, tag), p), p)


def test_stage_mismatch_is_rejected():
    p = Params(1, 1, 1)
    with pytest.raises(DomainError):
        apply_d1(BimoduleElement.generator(2, "d2u"), p)
    with pytest.raises(DomainError):
        apply_d2(BimoduleElement.generator(1, "d"), p)
    with pytest.raises(DomainError):
        apply_d3(BimoduleElement.generator(2, "du2"), p)
    with pytest.raises(DomainError):
        BimoduleElement(1, {((), "d2u2", ()): Fraction(1)})
    with pytest.raises(DomainError):
        BimoduleElement(4, {})


def test_module_validity_equations():
    p = Params(2, 0, 1)
    assert OneDimModule(0, 0).satisfies(p)
    assert OneDimModule(1, -1).satisfies(p)
    assert not OneDimModule(1, 1).satisfies(p)
    assert OneDimModule(3, 5).satisfies(Params(1, 0, 0))
    assert not OneDimModule(1, 1).satisfies(Params(1, 0, 1))


def test_enumerate_trivial_regime_is_a_single_module():
    assert enumerate_one_dim(Params(1, 0, 1), 50) == [OneDimModule(0, 0)]


def test_enumerate_starts_at_zero_and_stays_valid():
    rng = random.Random(13)
    for _ in range(20):
        p = random_params(rng, beta_zero=True)
        modules = enumerate_one_dim(p, 25)
        assert modules[0] == OneDimModule(0, 0)
        assert len(modules) == len(set(modules))
        for m in modules:
            assert m.satisfies(p)
            for value in (m.delta, m.mu):
                assert abs(value.numerator) <= 400 and value.denominator <= 400


def test_enumerate_is_deterministic_and_finds_the_diagonal_witness():
    p = Params(2, 0, 1)
    first = enumerate_one_dim(p, 40)
    assert first == enumerate_one_dim(p, 40)
    assert OneDimModule(1, -1) in first
    assert all(m.delta * m.mu == -1 for m in first if m != OneDimModule(0, 0))


def test_profile_of_the_trivial_pair_at_gamma_zero():
    p = Params(2, 0, 0)
    k = OneDimModule(0, 0)
    assert tor_profile(k, k, p).dims == (1, 2, 2, 1)


def test_profile_collapses_when_alpha_is_one_and_gamma_nonzero():
    p = Params(1, 0, 1)
    k = OneDimModule(0, 0)
    assert tor_profile(k, k, p).dims == (1, 0, 0, 1)


def test_profile_of_a_nontrivial_self_pair():
    p = Params(2, 0, 0)
    t = OneDimModule(1, 0)
    assert tor_profile(t, t, p).dims == (1, 1, 0, 0)


def test_tor0_detects_equality_of_modules():
    rng = random.Random(37)
    for _ in range(15):
        p = random_params(rng, beta_zero=True)
        modules = enumerate_one_dim(p, 8)
        for t1 in modules:
            for t2 in modules:
                profile = tor_profile(t1, t2, p)
                assert profile.dims[0] == (1 if t1 == t2 else 0)
                total = profile.dims[0] - profile.dims[1] + profile.dims[2] - profile.dims[3]
                assert total == 0


def test_closed_forms_match_the_collapsed_differentials():
    rng = random.Random(41)
    checked = 0
    while checked < 20:
        p = random_params(rng, beta_zero=True)
        modules = enumerate_one_dim(p, 6)
        t1, t2 = rng.choice(modules), rng.choice(modules)
        assert tor_matrices(t1, t2, p) == closed_form_matrices(t1, t2, p)
        checked += 1


def test_profile_rejects_invalid_input():
    p = Params(2, 0, 1)
    with pytest.raises(DomainError):
        tor_profile(OneDimModule(1, 1), OneDimModule(0, 0), p)
    with pytest.raises(DomainError):
        tor_profile(OneDimModule(0, 0), OneDimModule(0, 0), Params(2, 1, 1))
    with pytest.raises(DomainError):
        closed_form_matrices(OneDimModule(0, 0), OneDimModule(0, 0), Params(2, 1, 1))
    with pytest.raises(DomainError):
        TorProfile((1, 1, 0, 1))
    with pytest.raises(DomainError):
        TorProfile((2, 2, 1, 1))


def test_tor1_bound_by_regime():
    assert tor1_bound(Params(2, 0, 1), 40) == 1
    assert tor1_bound(Params(1, 0, 1), 40) == 0
    assert tor1_bound(Params(2, 0, 0), 20) == 2
    assert tor1_bound(Params(1, 0, 0), 20) == 2
    with pytest.raises(DomainError):
        tor1_bound(Params(2, 1, 1), 10)


def test_module_parsing():
    assert OneDimModule.parse("1,-1") == OneDimModule(1, -1)
    assert OneDimModule.parse(" 2/3 , 0 ") == OneDimModule(Fraction(2, 3), 0)
    with pytest.raises(DomainError):
        OneDimModule.parse("1")
    with pytest.raises(DomainError):
        OneDimModule.parse("1,x")


def test_element_rendering():
    p = Params(2, 0, 1)
    image = apply_d3(BimoduleElement.generator(3, "d2u2"), p)
    assert str(image) == "-1*1(x)d^2*u(x)u + 1*d(x)d*u^2(x)1"
    assert str(BimoduleElement(0, {})) == "0"
