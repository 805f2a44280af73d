"""Pseudo-weight calculators and the AWGNC lower-bound family."""

import random
from fractions import Fraction

import pytest

from pgcone.cone import TypeVector, type_of
from pgcone.errors import BadM, ZeroEta, ZeroVector
from pgcone.weights import (awgnc_pw, bec_pw, beta_coefficient, bound_cor3,
                            bound_cor4, bound_generalized, bound_lemma1,
                            bound_lemma2, bound_thm5, bsc_pw, conjectured_wp,
                            generalized_applicable, pw_from_type,
                            thm5_applicable)

VEC_43 = [1, 1, 1, 1, 2, 2, 2]  # type t_1=4, t_2=3


def test_awgnc_basics():
    assert awgnc_pw([0, 0, 0]) == 0
    assert awgnc_pw(VEC_43) == Fraction(25, 4)
    assert awgnc_pw([1, 1, 1, 1]) == 4


def test_awgnc_q4_value():
    vec = [1] * 6 + [2] * 5 + [0] * 10
    assert awgnc_pw(vec) == Fraction(128, 13)


def test_bec():
    assert bec_pw([0, 0]) == 0
    assert bec_pw([1, 0, 2, Fraction(1, 3)]) == 3
    assert bec_pw([1] * 4 + [0] * 3) == 4


def test_bsc_values():
    assert bsc_pw([2] + [1] * 12) == 12
    assert bsc_pw([1, 1, 1, 1, 0, 0, 0]) == 4
    assert bsc_pw([1, 0, 0]) == 1
    assert bsc_pw(VEC_43) == 5


def test_bsc_zero_rejected():
    with pytest.raises(ZeroVector):
        bsc_pw([0, 0])


def test_bsc_flip_count_consistency():
    # ceil(w/2) equals the least k of largest entries reaching half mass.
    rng = random.Random(2)
    for _ in range(50):
        vec = [rng.randint(0, 4) for _ in range(9)]
        if not any(vec):
            continue
        w = bsc_pw(vec)
        entries = sorted((x for x in vec if x), reverse=True)
        half = Fraction(sum(entries), 2)
        acc, e = 0, 0
        for x in entries:
            acc += x
            e += 1
            if acc >= half:
                break
        assert (w + 1) // 2 == e


def test_scale_invariance():
    rng = random.Random(4)
    for _ in range(20):
        vec = [Fraction(rng.randint(0, 5), rng.randint(1, 4))
               for _ in range(8)]
        if not any(vec):
            continue
        c = Fraction(rng.randint(1, 9), rng.randint(1, 9))
        scaled = [c * x for x in vec]
        assert awgnc_pw(vec) == awgnc_pw(scaled)
        assert bec_pw(vec) == bec_pw(scaled)
        assert bsc_pw(vec) == bsc_pw(scaled)


def test_pw_from_type_agrees_with_direct():
    rng = random.Random(6)
    for _ in range(30):
        vec = [rng.randint(0, 3) for _ in range(10)]
        t = type_of(vec)
        assert pw_from_type(t, "AWGNC") == awgnc_pw(vec)
        assert pw_from_type(t, "BEC") == bec_pw(vec)
        if any(vec):
            assert pw_from_type(t, "BSC") == bsc_pw(vec)


def test_pw_from_type_examples():
    assert pw_from_type(TypeVector({1: 4, 2: 3}, 7), "AWGNC") == Fraction(25, 4)
    assert pw_from_type(TypeVector({1: 5}, 9), "AWGNC") == 5
    assert pw_from_type(TypeVector({1: 8, 2: 5}, 21), "BEC") == 13


def test_lemma1():
    rep = bound_lemma1(TypeVector({1: 4, 2: 3}, 7))
    assert rep.applicable and rep.value == 6
    uniform = bound_lemma1(TypeVector({2: 5}, 7))
    assert uniform.value == 5
    bad = bound_lemma1(TypeVector({3: 1}, 7))
    assert not bad.applicable and bad.reason


def test_lemma2():
    rep = bound_lemma2(VEC_43, 2)
    assert rep.value == 6 and not rep.equality
    star = Fraction(16, 10)
    rep = bound_lemma2(VEC_43, star)
    assert rep.value == Fraction(25, 4) and rep.equality
    assert bound_lemma2([0, 0], 3).value == 0
    with pytest.raises(ZeroEta):
        bound_lemma2(VEC_43, 0)


def test_lemma2_maximized_at_eta_star():
    rng = random.Random(9)
    for _ in range(20):
        vec = [rng.randint(0, 4) for _ in range(8)]
        if not any(vec):
            continue
        star = Fraction(sum(x * x for x in vec), sum(vec))
        best = bound_lemma2(vec, star).value
        assert best == awgnc_pw(vec)
        for delta in (Fraction(-1, 10), Fraction(1, 10)):
            if star + delta != 0:
                assert bound_lemma2(vec, star + delta).value <= best


def test_cor3_betas():
    rep = bound_cor3(TypeVector({1: 4, 2: 3}, 7), Fraction(4, 3))
    assert rep.parameters["beta"][1] == Fraction(15, 16)
    assert rep.parameters["beta"][2] == Fraction(12, 16)
    rep2 = bound_cor3(TypeVector({1: 4, 2: 3}, 7), 2)
    assert rep2.parameters["beta"][1] == Fraction(3, 4)
    assert rep2.parameters["beta"][2] == 1
    assert beta_coefficient(0, 2) == 0
    with pytest.raises(ZeroEta):
        bound_cor3(TypeVector({1: 1}, 3), 0)


def test_cor3_matches_lemma2():
    rng = random.Random(13)
    for _ in range(20):
        vec = [rng.randint(0, 3) for _ in range(9)]
        eta = Fraction(rng.randint(1, 5), rng.randint(1, 3))
        assert bound_cor3(type_of(vec), eta).value == \
            bound_lemma2(vec, eta).value


def test_cor4():
    rep = bound_cor4([1, 1, 0, 1])
    assert rep.value == 3
    rep = bound_cor4(VEC_43)
    assert rep.parameters["r"] == 2
    assert rep.value == Fraction(56, 9)
    assert beta_coefficient(3, 2) == Fraction(3, 4)
    with pytest.raises(ZeroVector):
        bound_cor4([0, 0])


def test_thm5():
    assert bound_thm5(2) == Fraction(16, 3)
    assert bound_thm5(4) == 8
    t = TypeVector({1: 4, 2: 3}, 7)
    assert thm5_applicable(t, 2)
    assert not thm5_applicable(TypeVector({1: 3, 2: 3}, 7), 2)
    assert not thm5_applicable(TypeVector({1: 5, 3: 1}, 7), 2)
    assert awgnc_pw(VEC_43) >= bound_thm5(2)


def test_generalized():
    assert bound_generalized(2, 2) == bound_thm5(2)
    assert bound_generalized(4, 3) == Fraction(54, 7)
    with pytest.raises(BadM):
        bound_generalized(4, 1)
    t = TypeVector({1: 6, 3: 1}, 21)
    assert generalized_applicable(t, 4, 3)
    assert not generalized_applicable(TypeVector({1: 6}, 21), 4, 3)
    assert not generalized_applicable(
        TypeVector({Fraction(1, 2): 7, 2: 1}, 21), 4, 2)
    # Mass at odd values other than 1 does not qualify: a tripled minimum
    # codeword (t_3 = q+2) must stay out of scope, its weight is only q+2.
    assert not generalized_applicable(TypeVector({3: 4}, 7), 2, 3)
    assert not generalized_applicable(TypeVector({1: 2, 3: 4}, 21), 4, 3)


def test_conjectured_wp():
    assert conjectured_wp(2) == Fraction(25, 4)
    assert conjectured_wp(4) == Fraction(128, 13)
    for q in (2, 4, 8, 16):
        assert conjectured_wp(q) >= bound_thm5(q)
        s = q.bit_length() - 1
        t = TypeVector({1: q + 2, 2: q // 2 + s + 1}, q * q + q + 1)
        assert pw_from_type(t, "AWGNC") == conjectured_wp(q)
    with pytest.raises(ValueError):
        conjectured_wp(6)
