"""The fundamental cone of a parity-check matrix: constraint generation,
exact membership, minimality certification via the rank of tight
constraints, type vectors, stopping sets and mod-2 reduction."""

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import LengthMismatch, NonInteger, NotInCone
from .plane import ParityCheck


def _vec(omega):
    """Coerce a PseudoCodeword or a raw sequence into a Fraction tuple."""
    if isinstance(omega, PseudoCodeword):
        return omega.entries
    return tuple(Fraction(x) for x in omega)


class PseudoCodeword:
    """A nonnegative exact-rational vector, identified up to positive scaling
    through its canonical primitive-integer form."""

    def __init__(self, entries):
        if isinstance(entries, PseudoCodeword):
            entries = entries.entries
        entries = tuple(Fraction(x) for x in entries)
        if any(x < 0 for x in entries):
            raise ValueError("pseudo-codeword entries must be nonnegative")
        self.entries = entries

    @property
    def n(self):
        return len(self.entries)

    @property
    def canonical(self):
        """Unique positive integer multiple with entry gcd 1 (0 maps to 0)."""
        entries = self.entries
        if all(x == 0 for x in entries):
            return (0,) * len(entries)
        denom_lcm = 1
        for x in entries:
            denom_lcm = denom_lcm * x.denominator // gcd(denom_lcm, x.denominator)
        ints = [int(x * denom_lcm) for x in entries]
        g = 0
        for v in ints:
            g = gcd(g, v)
        return tuple(v // g for v in ints)

    def scaled(self, c):
        c = Fraction(c)
        if c <= 0:
            raise ValueError("scaling constant must be positive")
        return PseudoCodeword(x * c for x in self.entries)

    def __eq__(self, other):
        return isinstance(other, PseudoCodeword) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"PseudoCodeword({list(self.entries)})"

    def to_json(self):
        return json.dumps({
            "n": self.n,
            "entries": [f"{x.numerator}/{x.denominator}" for x in self.entries],
            "canonical": list(self.canonical),
        })

    @classmethod
    def from_json(cls, text):
        obj = json.loads(text)
        return cls(Fraction(e) for e in obj["entries"])


class TypeVector:
    """Map from positive component value to multiplicity; t_0 is implicit."""

    def __init__(self, counts, n):
        self.counts = {Fraction(k): int(v) for k, v in counts.items()
                       if v and Fraction(k) != 0}
        if any(k < 0 for k in self.counts):
            raise ValueError("type values must be nonnegative")
        self.n = n
        if sum(self.counts.values()) > n:
            raise ValueError("type counts exceed the vector length")

    @property
    def t0(self):
        return self.n - sum(self.counts.values())

    def get(self, value):
        value = Fraction(value)
        if value == 0:
            return self.t0
        return self.counts.get(value, 0)

    def values(self):
        """Distinct positive component values, sorted."""
        return sorted(self.counts)

    def scaled(self, c):
        c = Fraction(c)
        if c <= 0:
            raise ValueError("scaling constant must be positive")
        return TypeVector({k * c: v for k, v in self.counts.items()}, self.n)

    def __eq__(self, other):
        return (isinstance(other, TypeVector)
                and self.counts == other.counts and self.n == other.n)

    def __repr__(self):
        items = ", ".join(f"t_{k}={v}" for k, v in sorted(self.counts.items()))
        return f"TypeVector(n={self.n}, t_0={self.t0}, {items})"


@dataclass(frozen=True)
class Constraint:
    """One inequality a . omega >= 0 with {-1, 0, +1} coefficients."""
    label: tuple          # ("cone", j, i) or ("nonneg", i)
    coeffs: tuple


class ConstraintSet:
    def __init__(self, cone_rows, nonneg_rows, n):
        self.cone_rows = tuple(cone_rows)
        self.nonneg_rows = tuple(nonneg_rows)
        self.n = n

    def __len__(self):
        return len(self.cone_rows) + len(self.nonneg_rows)

    def __iter__(self):
        yield from self.cone_rows
        yield from self.nonneg_rows


def cone_constraints(H: ParityCheck) -> ConstraintSet:
    """One row per (check j, pivot i in I_j), plus unit nonnegativity rows."""
    n = H.n_cols
    cone_rows = []
    for j, support in enumerate(H.rows):
        for i in support:
            coeffs = [0] * n
            for i2 in support:
                coeffs[i2] = 1
            coeffs[i] = -1
            cone_rows.append(Constraint(("cone", j, i), tuple(coeffs)))
    nonneg = []
    for i in range(n):
        coeffs = [0] * n
        coeffs[i] = 1
        nonneg.append(Constraint(("nonneg", i), tuple(coeffs)))
    return ConstraintSet(cone_rows, nonneg, n)


def _dot(coeffs, vec):
    return sum(c * x for c, x in zip(coeffs, vec) if c)


def is_member(H: ParityCheck, omega, constraints=None):
    """Exact membership; returns (bool, first violated constraint or None)."""
    vec = _vec(omega)
    if len(vec) != H.n_cols:
        raise LengthMismatch(f"expected length {H.n_cols}, got {len(vec)}")
    cs = constraints if constraints is not None else cone_constraints(H)
    for con in cs:
        if _dot(con.coeffs, vec) < 0:
            return False, con
    return True, None


def integer_rank(rows):
    """Rank of integer rows by Bareiss fraction-free elimination."""
    mat = [list(r) for r in rows if any(r)]
    if not mat:
        return 0
    n_cols = len(mat[0])
    rank = 0
    prev_pivot = 1
    r = 0
    for c in range(n_cols):
        pivot_row = None
        for rr in range(r, len(mat)):
            if mat[rr][c] != 0:
                pivot_row = rr
                break
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        piv = mat[r][c]
        for rr in range(r + 1, len(mat)):
            factor = mat[rr][c]
            if factor == 0 and piv == prev_pivot:
                continue
            row = mat[rr]
            prow = mat[r]
            for cc in range(c, n_cols):
                row[cc] = (piv * row[cc] - factor * prow[cc]) // prev_pivot
        prev_pivot = piv
        r += 1
        rank += 1
        if r == len(mat):
            break
    return rank


def tight_constraints(H: ParityCheck, omega, constraints=None):
    """Constraints satisfied with equality at omega (membership assumed)."""
    vec = _vec(omega)
    cs = constraints if constraints is not None else cone_constraints(H)
    return [con for con in cs if _dot(con.coeffs, vec) == 0]


def active_rank(H: ParityCheck, omega, constraints=None) -> int:
    """Rank of the tight-constraint coefficient matrix at omega."""
    ok, violated = is_member(H, omega, constraints)
    if not ok:
        raise NotInCone(f"vector violates {violated.label}")
    tight = tight_constraints(H, omega, constraints)
    return integer_rank([con.coeffs for con in tight])


def is_minimal(H: ParityCheck, omega, constraints=None) -> bool:
    """Extreme ray of the cone: nonzero with tight rank n - 1."""
    vec = _vec(omega)
    if all(x == 0 for x in vec):
        return False
    return active_rank(H, vec, constraints) == H.n_cols - 1


def type_of(omega, n=None) -> TypeVector:
    vec = _vec(omega)
    counts = {}
    for x in vec:
        if x != 0:
            counts[x] = counts.get(x, 0) + 1
    return TypeVector(counts, len(vec) if n is None else n)


def support(omega):
    vec = _vec(omega)
    return frozenset(i for i, x in enumerate(vec) if x != 0)


def is_stopping_set(H: ParityCheck, point_set) -> bool:
    """Every check touching the set must touch it at least twice."""
    pts = set(point_set)
    for row in H.rows:
        hits = sum(1 for i in row if i in pts)
        if hits == 1:
            return False
    return True


def mod2_reduce(omega):
    """Entrywise parity of an integer-valued vector."""
    vec = _vec(omega)
    out = []
    for x in vec:
        if x.denominator != 1:
            raise NonInteger(f"entry {x} is not an integer")
        out.append(int(x) % 2)
    return tuple(out)
