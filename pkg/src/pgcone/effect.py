"""Effectiveness classification of minimal pseudo-codewords: does some
admissible LLR vector make a given ray beat (or tie) every other ray?"""

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .cone import PseudoCodeword
from .errors import IncompleteRaySet
from .rays import RaySet
from .simplex import GE, OPTIMAL, LinearProgram, lp_solve

FIRST = "First"
SECOND_ONLY = "SecondOnly"
NOT_EFFECTIVE = "NotEffective"

POSSIBLY_EFFECTIVE = "PossiblyEffective"
EXCLUDED_BY_RANGE = "ExcludedByCor8"


@dataclass
class EffectivenessReport:
    ray: tuple
    channel: str
    kind: str
    witness: tuple = None

    def to_json(self):
        return json.dumps({
            "ray": list(self.ray),
            "channel": self.channel,
            "kind": self.kind,
            "witness": None if self.witness is None
            else [str(x) for x in self.witness],
        })


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def bsc_effectiveness(rayset: RaySet, omega, L=1) -> EffectivenessReport:
    """Exhaustive scan over lambda in {+-L}^n. Classification depends only on
    the signs of the inner products, so L is a free positive scale."""
    if not rayset.complete:
        raise IncompleteRaySet("BSC classification needs the full ray set")
    L = Fraction(L)
    if L <= 0:
        raise ValueError("L must be positive")
    target = PseudoCodeword(omega).canonical
    others = [r.canonical for r in rayset if r.canonical != target]
    n = len(target)
    if n > 25:
        raise ValueError("exhaustive scan is limited to n <= 25")
    best_kind = NOT_EFFECTIVE
    witness = None
    for signs in product((1, -1), repeat=n):
        lam = tuple(s * L for s in signs)
        own = _dot(target, lam)
        if own > 0:
            continue
        if any(_dot(o, lam) < 0 for o in others):
            continue
        if own < 0:
            return EffectivenessReport(target, f"BSC({L})", FIRST, lam)
        if best_kind == NOT_EFFECTIVE:
            best_kind, witness = SECOND_ONLY, lam
    return EffectivenessReport(target, f"BSC({L})", best_kind, witness)


def cor8_screen(omega, q) -> str:
    """Necessary BSC-second-kind window: q+2 <= bsc_pw <= 2q+2."""
    from .weights import bsc_pw
    w = bsc_pw(omega)
    if q + 2 <= w <= 2 * q + 2:
        return POSSIBLY_EFFECTIVE
    return EXCLUDED_BY_RANGE


def awgnc_first_kind(rayset: RaySet, omega) -> EffectivenessReport:
    """LP search for a box-bounded AWGNC witness: minimize <omega, lambda>
    subject to <omega', lambda> >= 0 for every other ray and
    -1 <= lambda <= 1; first kind iff the optimum is negative."""
    if not rayset.complete:
        raise IncompleteRaySet("AWGNC classification needs the full ray set")
    target = PseudoCodeword(omega).canonical
    others = [r.canonical for r in rayset if r.canonical != target]
    n = len(target)
    rows = [(list(o), GE, 0) for o in others]
    lp = LinearProgram(objective=list(target), constraints=rows,
                       bounds=[(-1, 1)] * n)
    res = lp_solve(lp)
    assert res.status == OPTIMAL
    if res.optimal_value < 0:
        return EffectivenessReport(target, "AWGNC", FIRST,
                                   tuple(res.solution))
    kind = SECOND_ONLY if res.optimal_value == 0 else NOT_EFFECTIVE
    wit = tuple(res.solution) if kind == SECOND_ONLY else None
    return EffectivenessReport(target, "AWGNC", kind, wit)
