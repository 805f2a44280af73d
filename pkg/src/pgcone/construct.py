"""Explicit minimal-pseudo-codeword constructions: sum of two overlapping
minimum-weight codewords with zero positions switched to twos, and the
two-zero-line alpha-threshold procedure on PG(2, 4)."""

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import inf

from .cone import (PseudoCodeword, _vec, active_rank, cone_constraints,
                   is_member, type_of)
from .errors import NoSuchPair, NotInCone, NoZeroLinePair, SearchExhausted
from .plane import Plane, find_hyperovals, incidence_matrix, min_weight_codewords
from .weights import awgnc_pw, bec_pw, bsc_pw


@dataclass
class ConstructionTrace:
    generators: tuple
    overlap: int
    switched: dict
    intermediate: PseudoCodeword
    final: PseudoCodeword
    ranks: dict
    final_type: object
    pseudo_weights: dict
    minimal: bool
    notes: str = ""

    def to_json(self):
        return json.dumps({
            "generators": [list(g) for g in self.generators],
            "overlap": self.overlap,
            "switched": {str(k): str(v) for k, v in self.switched.items()},
            "intermediate": list(self.intermediate.canonical),
            "final": list(self.final.canonical),
            "ranks": self.ranks,
            "type": {str(k): v for k, v in self.final_type.counts.items()},
            "pseudo_weights": {k: str(v) for k, v in self.pseudo_weights.items()},
            "minimal": self.minimal,
            "notes": self.notes,
        }, indent=2)


def _weights_of(omega):
    return {"AWGNC": awgnc_pw(omega), "BSC": bsc_pw(omega),
            "BEC": bec_pw(omega)}


def _codeword_pool(p: Plane):
    """Minimum-weight codewords: exhaustive for small dimension, hyperoval
    backtracking otherwise (minimum-weight supports are hyperovals)."""
    H = incidence_matrix(p)
    k = p.n - (3 ** (p.q.bit_length() - 1) + 1)
    if k <= 24:
        return min_weight_codewords(H, p.q + 2)
    ovals = find_hyperovals(p, limit=4000)
    words = []
    for pts in ovals:
        v = [0] * p.n
        for i in pts:
            v[i] = 1
        words.append(tuple(v))
    return words


def overlapping_pair(p: Plane, overlap=None, pool=None):
    """First (lexicographic) pair of weight-(q+2) codewords whose supports
    overlap in `overlap` positions (default (q+2)/2)."""
    if overlap is None:
        overlap = (p.q + 2) // 2
    words = pool if pool is not None else _codeword_pool(p)
    sups = [frozenset(i for i, x in enumerate(w) if x) for w in words]
    for a in range(len(words)):
        for b in range(a + 1, len(words)):
            if len(sups[a] & sups[b]) == overlap:
                return words[a], words[b]
    raise NoSuchPair(
        f"no weight-{p.q + 2} codeword pair with overlap {overlap}")


def _overlapping_pairs(p: Plane, overlap, pool=None):
    words = pool if pool is not None else _codeword_pool(p)
    sups = [frozenset(i for i, x in enumerate(w) if x) for w in words]
    for a in range(len(words)):
        for b in range(a + 1, len(words)):
            if len(sups[a] & sups[b]) == overlap:
                yield words[a], words[b]


def max_alpha(H, base, positions):
    """Supremum alpha >= 0 such that base + alpha * indicator(positions)
    stays in the cone; exact slack/coefficient ray-shooting. Returns
    math.inf when no constraint involves the change."""
    base_vec = _vec(base)
    cs = cone_constraints(H)
    ok, violated = is_member(H, base_vec, cs)
    if not ok:
        raise NotInCone(f"base violates {violated.label}")
    positions = set(positions)
    best = inf
    for con in cs.cone_rows:
        step = sum(con.coeffs[i] for i in positions)
        if step >= 0:
            continue
        slack = sum(c * x for c, x in zip(con.coeffs, base_vec) if c)
        best = min(best, Fraction(slack, -step))
    return best


def _switched(base_vec, positions, value):
    out = list(base_vec)
    for i in positions:
        out[i] = Fraction(value)
    return tuple(out)


def ex3_minimal_pcw(p: Plane, pool=None) -> ConstructionTrace:
    """Sum a default-overlap minimum-weight codeword pair, then switch
    s = log2(q) zeros to twos so the result certifies minimal."""
    q = p.q
    s = q.bit_length() - 1
    H = incidence_matrix(p)
    cs = cone_constraints(H)
    n = H.n_cols
    for x1, x2 in _overlapping_pairs(p, (q + 2) // 2, pool=pool):
        omega_t = tuple(Fraction(a + b) for a, b in zip(x1, x2))
        zeros = [i for i, x in enumerate(omega_t) if x == 0]
        rank_t = active_rank(H, omega_t, cs)
        # Any two distinct points share a line, so the q=4 "on the same
        # line" requirement holds for every candidate pair.
        for switch in combinations(zeros, s):
            cand = _switched(omega_t, switch, 2)
            ok, _ = is_member(H, cand, cs)
            if not ok:
                continue
            rank_f = active_rank(H, cand, cs)
            if rank_f != n - 1:
                continue
            final = PseudoCodeword(cand)
            return ConstructionTrace(
                generators=(tuple(x1), tuple(x2)),
                overlap=(q + 2) // 2,
                switched={i: 2 for i in switch},
                intermediate=PseudoCodeword(omega_t),
                final=final,
                ranks={"intermediate": rank_t, "final": rank_f},
                final_type=type_of(final),
                pseudo_weights=_weights_of(final),
                minimal=True,
            )
    raise SearchExhausted("no switch set certified a minimal pseudo-codeword")


def _is_simplex_configuration(p: Plane, points):
    """Pluggable reading of the conjecture's simplex condition: a single
    point for s=1, any two distinct points with their common line for s=2,
    and pairwise non-collinear triples (a triangle frame) for s=3."""
    pts = list(points)
    if len(pts) <= 2:
        return True
    for a, b, c in combinations(pts, 3):
        line = p.line_through(a, b)
        if c in p.lines[line]:
            return False
    return True


def conjectured_family_search(p: Plane, pool=None,
                              max_candidates=None) -> ConstructionTrace:
    """Search switch sets of size s = log2(q) in simplex configuration whose
    result certifies minimal; the conjecture's target type is
    t_1 = q+2, t_2 = q/2 + s + 1."""
    q = p.q
    s = q.bit_length() - 1
    H = incidence_matrix(p)
    cs = cone_constraints(H)
    n = H.n_cols
    from .weights import conjectured_wp
    target = conjectured_wp(q)
    tried = 0
    for x1, x2 in _overlapping_pairs(p, (q + 2) // 2, pool=pool):
        omega_t = tuple(Fraction(a + b) for a, b in zip(x1, x2))
        zeros = [i for i, x in enumerate(omega_t) if x == 0]
        for switch in combinations(zeros, s):
            if not _is_simplex_configuration(p, switch):
                continue
            tried += 1
            if max_candidates is not None and tried > max_candidates:
                raise SearchExhausted(
                    f"candidate budget {max_candidates} exhausted")
            cand = _switched(omega_t, switch, 2)
            ok, _ = is_member(H, cand, cs)
            if not ok:
                continue
            if active_rank(H, cand, cs) != n - 1:
                continue
            final = PseudoCodeword(cand)
            if awgnc_pw(final) != target:
                continue
            return ConstructionTrace(
                generators=(tuple(x1), tuple(x2)),
                overlap=(q + 2) // 2,
                switched={i: 2 for i in switch},
                intermediate=PseudoCodeword(omega_t),
                final=final,
                ranks={"final": n - 1},
                final_type=type_of(final),
                pseudo_weights=_weights_of(final),
                minimal=True,
                notes=f"conjectured family target pseudo-weight {target}",
            )
    raise SearchExhausted("no simplex switch set realized the conjecture")


def ex5_procedure(p: Plane, pool=None) -> ConstructionTrace:
    """Two-zero-line procedure on PG(2, 4): overlap-2 codeword pair, find
    fully zero lines L1, L2, raise a point on each to the maximal feasible
    alpha and certify minimality at alpha = 2."""
    if p.q != 4:
        raise ValueError("the procedure is specific to q = 4")
    H = incidence_matrix(p)
    cs = cone_constraints(H)
    n = H.n_cols
    found_zero_lines = False
    for x1, x2 in _overlapping_pairs(p, 2, pool=pool):
        omega_t = tuple(Fraction(a + b) for a, b in zip(x1, x2))
        zero_lines = [j for j in range(n)
                      if all(omega_t[i] == 0 for i in p.lines[j])]
        for l1, l2 in combinations(zero_lines, 2):
            found_zero_lines = True
            p0 = next(iter(p.lines[l1] & p.lines[l2]))
            # The intersection point is raised together with P1 and P2:
            # the two zero lines then stay tight (alpha >= alpha), which is
            # what lifts the tight-constraint rank back to n - 1.
            for pt1 in sorted(p.lines[l1] - {p0}):
                for pt2 in sorted(p.lines[l2] - {p0}):
                    alpha = max_alpha(H, omega_t, {p0, pt1, pt2})
                    if alpha is inf or alpha <= 0:
                        continue
                    cand = _switched(omega_t, (p0, pt1, pt2), alpha)
                    rank_f = active_rank(H, cand, cs)
                    if rank_f != n - 1:
                        continue
                    final = PseudoCodeword(cand)
                    return ConstructionTrace(
                        generators=(tuple(x1), tuple(x2)),
                        overlap=2,
                        switched={p0: alpha, pt1: alpha, pt2: alpha},
                        intermediate=PseudoCodeword(omega_t),
                        final=final,
                        ranks={"intermediate": active_rank(H, omega_t, cs),
                               "final": rank_f},
                        final_type=type_of(final),
                        pseudo_weights=_weights_of(final),
                        minimal=True,
                        notes=f"zero lines {l1},{l2}; intersection {p0}; "
                              f"max alpha {alpha}",
                    )
    if not found_zero_lines:
        raise NoZeroLinePair("no codeword pair exposed two all-zero lines")
    raise SearchExhausted("no point pair certified a minimal pseudo-codeword")
