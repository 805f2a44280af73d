"""Extreme-ray (minimal pseudo-codeword) enumeration of the fundamental cone
by the double description method over exact integers, an independent
support-guided oracle for cross-checking, and pseudo-weight histograms."""

import json
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd

from . import weights
from .cone import (PseudoCodeword, cone_constraints, integer_rank, is_member,
                   is_minimal, is_stopping_set)
from .plane import ParityCheck


@dataclass
class RaySet:
    rays: tuple
    h_matrix_id: str
    complete: bool
    n: int = 0

    def __post_init__(self):
        seen = {}
        for r in self.rays:
            pcw = r if isinstance(r, PseudoCodeword) else PseudoCodeword(r)
            seen[pcw.canonical] = None
        self.rays = tuple(PseudoCodeword(c) for c in sorted(seen))
        if self.rays:
            self.n = self.rays[0].n

    def __len__(self):
        return len(self.rays)

    def __iter__(self):
        return iter(self.rays)

    def canonicals(self):
        return [r.canonical for r in self.rays]

    def save_jsonl(self, path):
        with open(path, "w") as fh:
            fh.write(json.dumps({"h_matrix_id": self.h_matrix_id,
                                 "complete": self.complete,
                                 "n": self.n}) + "\n")
            for r in self.rays:
                fh.write(json.dumps({"ray": list(r.canonical)}) + "\n")

    @classmethod
    def load_jsonl(cls, path):
        with open(path) as fh:
            header = json.loads(fh.readline())
            rays = [PseudoCodeword(json.loads(line)["ray"]) for line in fh if line.strip()]
        return cls(rays=tuple(rays), h_matrix_id=header["h_matrix_id"],
                   complete=header["complete"], n=header["n"])


@dataclass
class Budget:
    max_seconds: float = None
    max_rays: int = None


def insertion_order(constraint_set, seed=None):
    """Order of cone-constraint insertion; default (j, i) lexicographic,
    a seed selects a reproducible shuffle for cross-validation."""
    order = list(range(len(constraint_set.cone_rows)))
    if seed is not None:
        random.Random(seed).shuffle(order)
    return order


def _reduce(vec):
    g = 0
    for v in vec:
        g = gcd(g, v)
    return tuple(v // g for v in vec) if g > 1 else tuple(vec)


def enumerate_rays(H: ParityCheck, budget: Budget = None, seed=None,
                   certify=True) -> RaySet:
    """Double description: start from the nonnegative orthant's unit rays and
    insert the cone inequalities one at a time, combining adjacent
    positive/negative ray pairs. Adjacency is the algebraic test: the
    constraints tight at both rays must have rank n - 2.

    On budget exhaustion the current rays are filtered through full
    membership and minimality certification and returned with
    complete=False.
    """
    n = H.n_cols
    cs = cone_constraints(H)
    order = insertion_order(cs, seed=seed)
    cone_rows = [cs.cone_rows[k].coeffs for k in order]
    nonneg_rows = [con.coeffs for con in cs.nonneg_rows]
    rays = [_unit(n, i) for i in range(n)]
    start = time.monotonic()
    complete = True

    def out_of_budget(count):
        if budget is None:
            return False
        if budget.max_seconds is not None and \
                time.monotonic() - start > budget.max_seconds:
            return True
        if budget.max_rays is not None and count > budget.max_rays:
            return True
        return False

    processed = list(nonneg_rows)
    for step, a in enumerate(cone_rows):
        vals = [_idot(a, r) for r in rays]
        keep = [r for r, v in zip(rays, vals) if v >= 0]
        pos = [(r, v) for r, v in zip(rays, vals) if v > 0]
        neg = [(r, v) for r, v in zip(rays, vals) if v < 0]
        if neg:
            tight_cache = {id(r): _tight_set(processed, r)
                           for r, _ in pos + neg}
            for (rp, vp), (rm, vm) in ((p, m) for p in pos for m in neg):
                common = tight_cache[id(rp)] & tight_cache[id(rm)]
                if integer_rank([processed[k] for k in common]) != n - 2:
                    continue
                new = _reduce([vp * b - vm * c for b, c in zip(rm, rp)])
                keep.append(new)
        rays = _dedupe(keep)
        processed.append(a)
        if out_of_budget(len(rays)):
            complete = False
            break

    result = []
    for r in rays:
        if not complete or certify:
            ok, _ = is_member(H, r, cs)
            if not ok or not is_minimal(H, r, cs):
                continue
        result.append(PseudoCodeword(r))
    return RaySet(rays=tuple(result), h_matrix_id=H.matrix_id(),
                  complete=complete, n=n)


def _unit(n, i):
    v = [0] * n
    v[i] = 1
    return tuple(v)


def _idot(a, r):
    return sum(x * y for x, y in zip(a, r) if x)


def _tight_set(processed, r):
    return frozenset(k for k, a in enumerate(processed) if _idot(a, r) == 0)


def _dedupe(rays):
    seen = {}
    for r in rays:
        seen.setdefault(_reduce(r), None)
    return list(seen)


def support_guided_rays(H: ParityCheck) -> RaySet:
    """Independent exhaustive oracle: for every stopping-set support, find all
    strictly positive nullspace generators of (|S| - 1)-rank systems of
    restricted tight cone constraints, then certify each candidate.

    Exponential in n; intended as the q = 2 cross-check.
    """
    n = H.n_cols
    if n > 12:
        raise ValueError("oracle enumeration is limited to n <= 12")
    cs = cone_constraints(H)
    cone_rows = [con.coeffs for con in cs.cone_rows]
    found = {}
    for size in range(2, n + 1):
        for S in combinations(range(n), size):
            if not is_stopping_set(H, S):
                continue
            restricted = sorted({tuple(a[i] for i in S) for a in cone_rows})
            k = len(S)
            for vec in _rank_deficient_solutions(restricted, k):
                if any(x <= 0 for x in vec):
                    continue
                full = [Fraction(0)] * n
                for i, x in zip(S, vec):
                    full[i] = x
                ok, _ = is_member(H, full, cs)
                if ok and is_minimal(H, full, cs):
                    found.setdefault(PseudoCodeword(full).canonical, None)
    rays = tuple(PseudoCodeword(c) for c in sorted(found))
    return RaySet(rays=rays, h_matrix_id=H.matrix_id(), complete=True, n=n)


def _rank_deficient_solutions(rows, k):
    """Yield nullspace generators of every independent (k-1)-subset of rows.

    Subsets are built recursively with an incrementally maintained integer
    row echelon, so dependent branches are pruned with one row reduction.
    """
    if k == 1:
        return

    def reduce_row(echelon, row):
        r = list(row)
        for pc, pr in echelon:
            if r[pc]:
                f, g = r[pc], pr[pc]
                r = [g * a - f * b for a, b in zip(r, pr)]
                r = list(_reduce(r))
        return r

    def rec(start, depth, echelon):
        if depth == k - 1:
            yield _nullspace_from_echelon(echelon, k)
            return
        for idx in range(start, len(rows) - (k - 2 - depth)):
            red = reduce_row(echelon, rows[idx])
            if not any(red):
                continue
            pc = next(c for c, v in enumerate(red) if v)
            yield from rec(idx + 1, depth + 1, echelon + [(pc, red)])

    yield from rec(0, 0, [])


def _nullspace_from_echelon(echelon, k):
    """Nullspace generator from k-1 echelon rows with distinct pivots.

    Row m was reduced against rows 0..m-1 only, so in reverse order each
    row's non-pivot columns are already solved; back-substitution suffices.
    """
    pivot_cols = {pc for pc, _ in echelon}
    free = next(c for c in range(k) if c not in pivot_cols)
    x = [None] * k
    x[free] = Fraction(1)
    for pc, row in reversed(echelon):
        s = Fraction(0)
        for c in range(k):
            if c != pc and row[c] and x[c] is not None:
                s += row[c] * x[c]
        x[pc] = -s / row[pc]
    vec = [v if v is not None else Fraction(0) for v in x]
    lead = next((v for v in vec if v != 0), None)
    if lead is not None and lead < 0:
        vec = [-v for v in vec]
    return vec


def histogram(rs: RaySet, kind: str, bin_width=None):
    """Counts of rays per half-open bin [b, b + w); returns a sorted list of
    (bin_low, bin_high, count)."""
    kind = kind.upper()
    if bin_width is None:
        bin_width = Fraction(1)
    bin_width = Fraction(bin_width)
    if bin_width <= 0:
        raise ValueError("bin width must be positive")
    calc = {"AWGNC": weights.awgnc_pw, "BSC": weights.bsc_pw,
            "BEC": weights.bec_pw}[kind]
    bins = {}
    for r in rs:
        w = Fraction(calc(r))
        low = (w // bin_width) * bin_width
        bins[low] = bins.get(low, 0) + 1
    return [(low, low + bin_width, cnt) for low, cnt in sorted(bins.items())]


def histogram_csv(rows):
    out = ["bin_low,bin_high,count"]
    for low, high, cnt in rows:
        out.append(f"{low},{high},{cnt}")
    return "\n".join(out) + "\n"
