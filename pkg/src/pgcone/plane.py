"""PG(2, q) via the Singer/trace difference set, its circulant parity-check
matrix, GF(2) linear algebra, minimum-weight codewords and arc detection."""

import hashlib
from dataclasses import dataclass, field

from .errors import DimensionTooLarge, UnsupportedQ
from .fields import SubfieldEmbedding, field_new, trace_to_subfield

SUPPORTED_S = (1, 2, 3, 4)


@dataclass(frozen=True)
class Plane:
    """Projective plane of order q with points labelled by Singer exponents.

    Line j is the cyclic translate (D + j) mod n of the difference set D.
    """
    q: int
    n: int
    difference_set: tuple
    lines: tuple = field(repr=False)

    def lines_through(self, point):
        return [j for j in range(self.n) if point in self.lines[j]]

    def line_through(self, p1, p2):
        """The unique line through two distinct points."""
        if p1 == p2:
            raise ValueError("points must be distinct")
        for j in range(self.n):
            if p1 in self.lines[j] and p2 in self.lines[j]:
                return j
        raise ValueError("no common line: not a projective plane")


class ParityCheck:
    """Square circulant 0/1 incidence matrix with row/column support sets."""

    def __init__(self, rows, n_cols):
        self.n_rows = len(rows)
        self.n_cols = n_cols
        self.rows = tuple(tuple(sorted(r)) for r in rows)
        cols = [[] for _ in range(n_cols)]
        for j, r in enumerate(self.rows):
            for i in r:
                cols[i].append(j)
        self.cols = tuple(tuple(c) for c in cols)
        self.row_masks = tuple(sum(1 << i for i in r) for r in self.rows)

    def entry(self, j, i):
        return 1 if i in self.rows[j] else 0

    def to_alist(self):
        """Serialize in the standard alist text format (1-indexed)."""
        col_deg = [len(c) for c in self.cols]
        row_deg = [len(r) for r in self.rows]
        out = [f"{self.n_cols} {self.n_rows}",
               f"{max(col_deg, default=0)} {max(row_deg, default=0)}",
               " ".join(map(str, col_deg)),
               " ".join(map(str, row_deg))]
        for c in self.cols:
            out.append(" ".join(str(j + 1) for j in c))
        for r in self.rows:
            out.append(" ".join(str(i + 1) for i in r))
        return "\n".join(out) + "\n"

    @classmethod
    def from_alist(cls, text):
        fields = text.split()
        pos = 0

        def take(k):
            nonlocal pos
            vals = [int(x) for x in fields[pos:pos + k]]
            if len(vals) != k:
                raise ValueError("truncated alist")
            pos += k
            return vals

        n_cols, n_rows = take(2)
        take(2)  # max degrees
        col_deg = take(n_cols)
        row_deg = take(n_rows)
        for d in col_deg:
            take(d)  # column neighbor lists (redundant with rows)
        rows = []
        for d in row_deg:
            rows.append([i - 1 for i in take(d)])
        return cls(rows, n_cols)

    def to_dense_text(self):
        lines = []
        for j in range(self.n_rows):
            lines.append(" ".join(str(self.entry(j, i)) for i in range(self.n_cols)))
        return "\n".join(lines) + "\n"

    def matrix_id(self):
        return hashlib.sha256(self.to_alist().encode()).hexdigest()[:16]


@dataclass
class ArcReport:
    point_set: frozenset
    is_arc: bool
    is_hyperoval: bool
    violating_line: int | None = None


@dataclass
class AxiomReport:
    ok: bool
    failure: str | None = None


def _plane_field(q):
    s = q.bit_length() - 1
    if q != 1 << s or s not in SUPPORTED_S:
        raise UnsupportedQ(f"q={q} is not a supported power of two")
    return s


def build_plane(q, primitive_poly=None):
    """Build PG(2, q), q = 2^s, from the trace-zero Singer difference set."""
    s = _plane_field(q)
    small = field_new(s)
    big = field_new(3 * s, primitive_poly)
    emb = SubfieldEmbedding(small, big)
    n = q * q + q + 1
    d_set = []
    for i in range(n):
        a = big.exp_table[i]
        if trace_to_subfield(big, a, emb) == 0:
            d_set.append(i)
    if len(d_set) != q + 1:
        raise UnsupportedQ(f"trace construction failed for q={q}")
    lines = tuple(frozenset((d + j) % n for d in d_set) for j in range(n))
    return Plane(q=q, n=n, difference_set=tuple(d_set), lines=lines)


def incidence_matrix(p: Plane) -> ParityCheck:
    """Lines as rows, points as columns; circulant by construction."""
    return ParityCheck([sorted(line) for line in p.lines], p.n)


def verify_axioms(p: Plane) -> AxiomReport:
    """Exhaustively check the four projective-plane incidence axioms."""
    n, q = p.n, p.q
    for j, line in enumerate(p.lines):
        if len(line) != q + 1:
            return AxiomReport(False, f"line {j} has {len(line)} points")
    for i in range(n):
        deg = sum(1 for line in p.lines if i in line)
        if deg != q + 1:
            return AxiomReport(False, f"point {i} lies on {deg} lines")
    for a in range(n):
        for b in range(a + 1, n):
            common = sum(1 for line in p.lines if a in line and b in line)
            if common != 1:
                return AxiomReport(
                    False, f"points {a},{b} share {common} lines")
    for j1 in range(n):
        for j2 in range(j1 + 1, n):
            meet = len(p.lines[j1] & p.lines[j2])
            if meet != 1:
                return AxiomReport(
                    False, f"lines {j1},{j2} meet in {meet} points")
    return AxiomReport(True)


def _gf2_eliminate(masks, n_cols):
    """Row-reduce bitmask rows; returns (pivot_rows, pivot_cols)."""
    pivots = []
    pivot_cols = []
    for m in masks:
        for pm, pc in zip(pivots, pivot_cols):
            if (m >> pc) & 1:
                m ^= pm
        if m:
            c = m.bit_length() - 1
            pivots.append(m)
            pivot_cols.append(c)
    return pivots, pivot_cols


def gf2_rank(H: ParityCheck) -> int:
    return len(_gf2_eliminate(list(H.row_masks), H.n_cols)[0])


def gf2_nullspace(H: ParityCheck):
    """Basis of the GF(2) nullspace (codewords) as bitmasks over columns."""
    n = H.n_cols
    mat = list(H.row_masks)
    pivots = {}  # col -> reduced row mask
    for m in mat:
        for c, pm in pivots.items():
            if (m >> c) & 1:
                m ^= pm
        if m:
            c = m.bit_length() - 1
            pivots[c] = m
    # Back-substitute to full RREF.
    cols = sorted(pivots, reverse=True)
    for idx, c in enumerate(cols):
        for c2 in cols[:idx]:
            if (pivots[c2] >> c) & 1:
                pivots[c2] ^= pivots[c]
    free_cols = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free_cols:
        v = 1 << fc
        for c, pm in pivots.items():
            if (pm >> fc) & 1:
                v |= 1 << c
        basis.append(v)
    return basis


def _mask_bits(m, n):
    return [(m >> i) & 1 for i in range(n)]


def mask_to_vector(m, n):
    return tuple((m >> i) & 1 for i in range(n))


def min_weight_codewords(H: ParityCheck, w_max: int):
    """All nonzero codewords of weight <= w_max by full codebook enumeration."""
    basis = gf2_nullspace(H)
    k = len(basis)
    if k > 24:
        raise DimensionTooLarge(f"dimension {k} exceeds the exhaustive limit 24")
    found = []
    word = 0
    # Gray-code walk over all 2^k combinations.
    prev = 0
    for idx in range(1, 1 << k):
        gray = idx ^ (idx >> 1)
        flip = (gray ^ prev).bit_length() - 1
        prev = gray
        word ^= basis[flip]
        if word and word.bit_count() <= w_max:
            found.append(word)
    found.sort()
    return [mask_to_vector(m, H.n_cols) for m in found]


def arc_check(p: Plane, point_set) -> ArcReport:
    """Arc iff no line meets the set in three or more points."""
    pts = frozenset(point_set)
    for j, line in enumerate(p.lines):
        if len(line & pts) > 2:
            return ArcReport(pts, False, False, violating_line=j)
    return ArcReport(pts, True, len(pts) == p.q + 2)


def find_hyperovals(p: Plane, limit=1):
    """Backtracking search for (q+2)-arcs; returns up to `limit` of them."""
    n = p.n
    target = p.q + 2
    results = []
    incident = [[j for j in range(n) if i in p.lines[j]] for i in range(n)]
    line_count = [0] * n  # points of the current arc on each line

    def extend(current, start):
        if len(current) == target:
            results.append(tuple(current))
            return
        # Not enough candidate points left to finish the arc.
        for nxt in range(start, n - (target - len(current)) + 1):
            if any(line_count[j] >= 2 for j in incident[nxt]):
                continue
            current.append(nxt)
            for j in incident[nxt]:
                line_count[j] += 1
            extend(current, nxt + 1)
            current.pop()
            for j in incident[nxt]:
                line_count[j] -= 1
            if len(results) >= limit:
                return

    extend([], 0)
    return results
