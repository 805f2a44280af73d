"""Explicit minimal-pseudo-codeword constructions and the alpha procedure."""

from fractions import Fraction
from math import inf

import pytest

from pgcone.cone import is_member, mod2_reduce, type_of
from pgcone.construct import (conjectured_family_search, ex3_minimal_pcw,
                              ex5_procedure, max_alpha, overlapping_pair)
from pgcone.errors import NoSuchPair
from pgcone.plane import incidence_matrix
from pgcone.weights import bound_thm5, conjectured_wp, thm5_applicable


def test_overlapping_pair_q2(plane2, codewords2):
    x1, x2 = overlapping_pair(plane2, pool=codewords2)
    s1 = {i for i, x in enumerate(x1) if x}
    s2 = {i for i, x in enumerate(x2) if x}
    assert len(s1) == len(s2) == 4
    assert len(s1 & s2) == 2


def test_overlapping_pair_q4(plane4, codewords4):
    x1, x2 = overlapping_pair(plane4, pool=codewords4)
    s1 = {i for i, x in enumerate(x1) if x}
    s2 = {i for i, x in enumerate(x2) if x}
    assert len(s1 & s2) == 3


def test_no_pair_with_excess_overlap(plane2, codewords2):
    # Distinct minimum-weight supports never share 3 of their 4 points.
    with pytest.raises(NoSuchPair):
        overlapping_pair(plane2, overlap=3, pool=codewords2)


def test_ex3_q2(plane2, codewords2):
    trace = ex3_minimal_pcw(plane2, pool=codewords2)
    t = trace.final_type
    assert (t.get(1), t.get(2)) == (4, 3)
    assert trace.pseudo_weights["AWGNC"] == Fraction(25, 4)
    assert trace.ranks["final"] == 6
    assert trace.minimal
    assert len(trace.switched) == 1


def test_ex3_q2_intermediate(plane2, codewords2):
    trace = ex3_minimal_pcw(plane2, pool=codewords2)
    t = type_of(trace.intermediate)
    assert (t.get(1), t.get(2)) == (4, 2)
    assert trace.ranks["intermediate"] < 6


def test_ex3_q4(plane4, codewords4):
    trace = ex3_minimal_pcw(plane4, pool=codewords4)
    t = trace.final_type
    assert (t.get(1), t.get(2)) == (6, 5)
    assert trace.pseudo_weights["AWGNC"] == Fraction(128, 13)
    assert trace.ranks["final"] == 20
    assert len(trace.switched) == 2


def test_ex3_q4_switches_share_a_line(plane4, codewords4):
    trace = ex3_minimal_pcw(plane4, pool=codewords4)
    a, b = sorted(trace.switched)
    plane4.line_through(a, b)  # raises if the points were equal


def test_ex3_dominates_bound(plane2, plane4, codewords2, codewords4):
    for p, pool, q in ((plane2, codewords2, 2), (plane4, codewords4, 4)):
        trace = ex3_minimal_pcw(p, pool=pool)
        assert thm5_applicable(trace.final_type, q)
        assert trace.pseudo_weights["AWGNC"] > bound_thm5(q)
        assert trace.pseudo_weights["AWGNC"] == conjectured_wp(q)


def test_ex3_mod2_reduces_to_codeword(plane2, codewords2):
    trace = ex3_minimal_pcw(plane2, pool=codewords2)
    H = incidence_matrix(plane2)
    word = mod2_reduce(trace.final.canonical)
    assert any(word)
    for row in H.rows:
        assert sum(word[i] for i in row) % 2 == 0
    # The parity part is the symmetric difference of the two generators.
    x1, x2 = trace.generators
    assert word == tuple(a ^ b for a, b in zip(x1, x2))


def test_conjectured_family_q2(plane2, codewords2):
    trace = conjectured_family_search(plane2, pool=codewords2)
    t = trace.final_type
    assert (t.get(1), t.get(2)) == (4, 3)
    assert trace.pseudo_weights["AWGNC"] == conjectured_wp(2)


def test_conjectured_family_q4(plane4, codewords4):
    trace = conjectured_family_search(plane4, pool=codewords4)
    t = trace.final_type
    assert (t.get(1), t.get(2)) == (6, 5)
    assert trace.pseudo_weights["AWGNC"] == conjectured_wp(4)


def test_max_alpha_empty_positions(plane2, codewords2):
    H = incidence_matrix(plane2)
    assert max_alpha(H, codewords2[0], set()) is inf


def test_max_alpha_fixture(fixture_h):
    # Base (1,1,0): the pivot-2 inequality x0 + x1 >= x2 caps the raise at 2.
    alpha = max_alpha(fixture_h, [1, 1, 0], {2})
    assert alpha == 2
    assert is_member(fixture_h, [1, 1, 2])[0]
    assert not is_member(fixture_h, [1, 1, Fraction(5, 2)])[0]


def test_max_alpha_zero_line_blocks(plane2, codewords2):
    # Every point outside a q=2 hyperoval lies on one line that misses the
    # hyperoval entirely, so no single zero can be raised at all.
    H = incidence_matrix(plane2)
    base = codewords2[0]
    for zero in (i for i, x in enumerate(base) if x == 0):
        assert max_alpha(H, base, {zero}) == 0


def test_max_alpha_matches_switch_threshold(plane2, codewords2):
    trace = ex3_minimal_pcw(plane2, pool=codewords2)
    H = incidence_matrix(plane2)
    (pos,) = trace.switched
    alpha = max_alpha(H, trace.intermediate, {pos})
    assert alpha >= 2 and alpha is not inf
    raised = list(trace.intermediate.entries)
    raised[pos] = alpha
    assert is_member(H, raised)[0]
    raised[pos] = alpha + 1
    assert not is_member(H, raised)[0]


def test_ex5(plane4, codewords4):
    trace = ex5_procedure(plane4, pool=codewords4)
    t = trace.final_type
    assert (t.t0, t.get(1), t.get(2)) == (8, 8, 5)
    assert set(trace.switched.values()) == {2}
    assert trace.ranks["final"] == 20
    assert trace.minimal
    H = incidence_matrix(plane4)
    # Raising the same positions beyond the threshold leaves the cone.
    over = list(trace.intermediate.entries)
    for i in trace.switched:
        over[i] = Fraction(5, 2)
    assert not is_member(H, over)[0]


def test_ex5_intermediate_type(plane4, codewords4):
    trace = ex5_procedure(plane4, pool=codewords4)
    t = type_of(trace.intermediate)
    assert (t.t0, t.get(1), t.get(2)) == (11, 8, 2)
    assert trace.ranks["intermediate"] == 19


def test_ex5_requires_q4(plane2):
    with pytest.raises(ValueError):
        ex5_procedure(plane2)


def test_trace_json(plane2, codewords2):
    import json
    trace = ex3_minimal_pcw(plane2, pool=codewords2)
    obj = json.loads(trace.to_json())
    assert obj["minimal"] is True
    assert obj["overlap"] == 2
    assert len(obj["final"]) == 7
