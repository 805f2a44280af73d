"""Channel pseudo-weights (AWGNC, BSC, BEC) and the exact-rational family of
AWGNC lower bounds driven by the type of a pseudo-codeword."""

from dataclasses import dataclass, field
from fractions import Fraction

from .cone import TypeVector, _vec
from .errors import BadM, ZeroEta, ZeroVector


def awgnc_pw(omega) -> Fraction:
    """||omega||_1^2 / ||omega||_2^2, and 0 for the zero vector."""
    vec = _vec(omega)
    if any(x < 0 for x in vec):
        raise ValueError("entries must be nonnegative")
    one = sum(vec)
    if one == 0:
        return Fraction(0)
    two = sum(x * x for x in vec)
    return one * one / two


def bec_pw(omega) -> int:
    """Support size."""
    return sum(1 for x in _vec(omega) if x != 0)


def bsc_pw(omega) -> int:
    """Median-mass rule: with e the least number of largest entries covering
    half the total mass, the weight is 2e on an exact tie and 2e - 1 on a
    strict overshoot."""
    vec = sorted((x for x in _vec(omega) if x != 0), reverse=True)
    if not vec:
        raise ZeroVector("BSC pseudo-weight of the zero vector is undefined")
    total = sum(vec)
    half = Fraction(total, 2)
    acc = Fraction(0)
    for e, x in enumerate(vec, start=1):
        acc += x
        if acc >= half:
            return 2 * e if acc == half else 2 * e - 1
    raise AssertionError("unreachable")


def pw_from_type(t: TypeVector, kind: str):
    """Pseudo-weight from a type vector alone; kind in {AWGNC, BSC, BEC}."""
    kind = kind.upper()
    if kind == "BEC":
        return sum(t.counts.values())
    if kind == "AWGNC":
        one = sum(k * v for k, v in t.counts.items())
        if one == 0:
            return Fraction(0)
        two = sum(k * k * v for k, v in t.counts.items())
        return one * one / two
    if kind == "BSC":
        entries = []
        for k, v in t.counts.items():
            entries.extend([k] * v)
        return bsc_pw(entries + [0] * t.t0)
    raise ValueError(f"unknown channel kind {kind!r}")


@dataclass
class BoundReport:
    bound_name: str
    value: Fraction
    applicable: bool = True
    reason: str = ""
    parameters: dict = field(default_factory=dict)
    equality: bool = False


def bound_lemma1(t: TypeVector) -> BoundReport:
    """max(15/16 t1 + 12/16 t2, 3/4 t1 + t2); needs values within {0,1,2}."""
    if any(k not in (1, 2) for k in t.counts):
        return BoundReport("Lemma1", Fraction(0), applicable=False,
                           reason="type has components outside {0, 1, 2}")
    t1, t2 = t.get(1), t.get(2)
    value = max(Fraction(15, 16) * t1 + Fraction(12, 16) * t2,
                Fraction(3, 4) * t1 + t2)
    return BoundReport("Lemma1", value, parameters={"t1": t1, "t2": t2})


def bound_lemma2(omega, eta) -> BoundReport:
    """(2 eta ||omega||_1 - ||omega||_2^2) / eta^2, tight at
    eta = ||omega||_2^2 / ||omega||_1."""
    eta = Fraction(eta)
    if eta == 0:
        raise ZeroEta("eta must be nonzero")
    vec = _vec(omega)
    one = sum(vec)
    two = sum(x * x for x in vec)
    value = (2 * eta * one - two) / (eta * eta)
    equality = True if one == 0 else eta == two / one
    return BoundReport("Lemma2", value, parameters={"eta": eta},
                       equality=equality)


def bound_cor3(t: TypeVector, eta) -> BoundReport:
    """Sum of beta_l t_l with beta_l = l(2 eta - l)/eta^2."""
    eta = Fraction(eta)
    if eta == 0:
        raise ZeroEta("eta must be nonzero")
    betas = {k: k * (2 * eta - k) / (eta * eta) for k in t.counts}
    value = sum(betas[k] * v for k, v in t.counts.items())
    if not t.counts:
        value = Fraction(0)
    return BoundReport("Cor3", Fraction(value),
                       parameters={"eta": eta, "beta": betas})


def beta_coefficient(value, eta) -> Fraction:
    value, eta = Fraction(value), Fraction(eta)
    if eta == 0:
        raise ZeroEta("eta must be nonzero")
    return value * (2 * eta - value) / (eta * eta)


def bound_cor4(omega) -> BoundReport:
    """4r/(r+1)^2 times the support size, r the max/min positive entry ratio."""
    vec = [x for x in _vec(omega) if x != 0]
    if not vec:
        raise ZeroVector("Cor4 requires a nonzero vector")
    r = max(vec) / min(vec)
    value = 4 * r / ((r + 1) ** 2) * len(vec)
    return BoundReport("Cor4", value, parameters={"r": r, "supp": len(vec)})


def thm5_applicable(t: TypeVector, q) -> bool:
    """Only values {0,1,2}, t_1 >= q+2 and t_2 >= 1."""
    if any(k not in (1, 2) for k in t.counts):
        return False
    return t.get(1) >= q + 2 and t.get(2) >= 1


def bound_thm5(q) -> Fraction:
    return Fraction(4 * (q + 2), 3)


def generalized_applicable(t: TypeVector, q, m) -> bool:
    """Values are integers in {0..m}, t_m > 0 and t_1 >= q+2.

    The unit-valued mass requirement (rather than total odd-valued mass) is
    what the bound's proof actually consumes; counting mass at other odd
    values would admit scaled codewords that violate the bound.
    """
    if m < 2:
        raise BadM("m must be at least 2")
    for k in t.counts:
        if k.denominator != 1 or not 1 <= k <= m:
            return False
    if t.get(m) == 0:
        return False
    return t.get(1) >= q + 2


def bound_generalized(q, m) -> Fraction:
    if m < 2:
        raise BadM("m must be at least 2")
    return Fraction(m * m * (q + 2), m * m - m + 1)


def conjectured_wp(q) -> Fraction:
    """AWGNC pseudo-weight of the conjectured type t_1 = q+2,
    t_2 = q/2 + s + 1 family."""
    s = q.bit_length() - 1
    if q != 1 << s or s < 1:
        raise ValueError("q must be a power of two, q >= 2")
    f = Fraction(s, q + 2)
    return Fraction(4, 3) * (q + 2) * (1 + f) / (1 + f / (3 * (1 + f)))
