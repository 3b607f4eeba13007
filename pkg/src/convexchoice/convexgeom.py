"""Convex-space operations, exact hull membership, and generator canonicalization.

Hull membership is decided by a phase-1 simplex over exact rationals with
Bland's anti-cycling rule, so it terminates and needs no tolerance.  A
brute-force Caratheodory enumeration serves as an independent oracle for the
same question; the two must agree and the test suite checks that they do.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Generic, List, Sequence, Tuple, TypeVar

from .dist import Dist, Outcome, conv_dist, from_pairs, outcome_sort_key, outcome_tag
from .prob import Prob

C = TypeVar("C")


@dataclass(frozen=True)
class ConvexInstance(Generic[C]):
    """A carrier's binary mixing operator conv(p, a, b)."""

    conv: Callable[[Prob, C, C], C]


def _conv_rat(p: Prob, x: Fraction, y: Fraction) -> Fraction:
    return p.value * x + (1 - p.value) * y


RAT_INSTANCE: ConvexInstance[Fraction] = ConvexInstance(_conv_rat)
DIST_INSTANCE: ConvexInstance[Dist] = ConvexInstance(conv_dist)


def convn(weights: Dist, points: Sequence[C], inst: ConvexInstance[C]) -> C:
    """n-ary convex combination, by recursion on the support of `weights`.

    `weights` is a distribution over integer indices into `points`.
    """
    entries = weights.entries
    for idx, _ in entries:
        if not isinstance(idx, int) or isinstance(idx, bool) or not 0 <= idx < len(points):
            raise ValueError(f"no point for supported index {idx!r}")
    if len(entries) == 1:
        return points[entries[0][0]]
    (i0, w0), rest = entries[0], entries[1:]
    if w0 == 1:
        return points[i0]
    scale = 1 / (1 - w0)
    rest_weights = Dist(tuple((i, w * scale) for i, w in rest))
    return inst.conv(Prob(w0), points[i0], convn(rest_weights, points, inst))


def barycenter(d: Dist, inst: ConvexInstance[C]) -> C:
    """Convex combination of a distribution's own support elements."""
    pts = list(d.support())
    weights = from_pairs((i, w) for i, (_, w) in enumerate(d.entries))
    return convn(weights, pts, inst)


@dataclass(frozen=True)
class PointVec:
    """A distribution embedded as a coordinate vector over a shared basis."""

    basis: Tuple[Outcome, ...]
    coords: Tuple[Fraction, ...]


def make_basis(dists: Sequence[Dist]) -> Tuple[Outcome, ...]:
    seen = {}
    for d in dists:
        for k in d.support():
            seen.setdefault((outcome_tag(k), k), k)
    return tuple(sorted(seen.values(), key=outcome_sort_key))


def vectorize(d: Dist, basis: Sequence[Outcome]) -> PointVec:
    return PointVec(tuple(basis), tuple(d.weight(b) for b in basis))


def _int_rows(columns: List[List[Fraction]], rhs: List[Fraction]) -> List[List[int]]:
    """Scale each equation to integers; row scaling preserves the solution set."""
    m = len(rhs)
    n = len(columns)
    rows = []
    for i in range(m):
        vals = [columns[j][i] for j in range(n)]
        vals.append(rhs[i])
        scale = 1
        for v in vals:
            scale = scale * v.denominator // math.gcd(scale, v.denominator)
        rows.append([v.numerator * (scale // v.denominator) for v in vals])
    return rows


def _simplex_feasible(columns: List[List[Fraction]], rhs: List[Fraction]) -> bool:
    """Phase-1 simplex: is there x >= 0 with sum_j x_j * columns[j] = rhs?

    Assumes rhs >= 0 componentwise (true here: coordinates are
    distribution weights).  Bland's rule on both pivots guarantees
    termination.

    Rows are kept as integer vectors with an implicit positive
    denominator: ratio tests compare by cross-multiplication and pivots
    multiply through by the (positive) pivot entry, so every sign test is
    exact and no rational arithmetic is needed in the loop.
    """
    m = len(rhs)
    n = len(columns)
    scaled = _int_rows(columns, rhs)
    # tableau rows: [col_0 .. col_{n-1} | artificial identity | rhs]
    tab = []
    for i in range(m):
        row = scaled[i][:n]
        row.extend(1 if k == i else 0 for k in range(m))
        row.append(scaled[i][n])
        tab.append(row)
    # objective: minimize the artificial sum; reduced-cost row starts as the
    # column sums over the constraint rows (artificials reduce to zero).
    width = n + m + 1
    obj = [sum(tab[i][j] for i in range(m)) for j in range(width)]
    for k in range(m):
        obj[n + k] = 0
    basis = list(range(n, n + m))

    while True:
        enter = next((j for j in range(n + m) if obj[j] > 0), None)
        if enter is None:
            break
        leave = None
        for i in range(m):
            a = tab[i][enter]
            if a > 0:
                if leave is None:
                    leave = i
                else:
                    lhs = tab[i][-1] * tab[leave][enter]
                    rhs_cmp = tab[leave][-1] * a
                    if lhs < rhs_cmp or (lhs == rhs_cmp and basis[i] < basis[leave]):
                        leave = i
        if leave is None:
            # cannot happen for a bounded feasibility system; guard anyway
            return False
        piv = tab[leave][enter]
        pivot_row = tab[leave]
        for i in range(m):
            if i != leave:
                f = tab[i][enter]
                if f:
                    row = tab[i]
                    tab[i] = row = [a * piv - f * b for a, b in zip(row, pivot_row)]
                    g = 0
                    for a in row:
                        g = math.gcd(g, a)
                    if g > 1:
                        tab[i] = [a // g for a in row]
        f = obj[enter]
        if f:
            obj = [a * piv - f * b for a, b in zip(obj, pivot_row)]
            g = 0
            for a in obj:
                g = math.gcd(g, a)
            if g > 1:
                obj = [a // g for a in obj]
        basis[leave] = enter

    return obj[-1] == 0


def in_hull(x: Dist, generators: Sequence[Dist]) -> bool:
    """Exact test for x in hull(generators), via LP feasibility."""
    if not generators:
        raise ValueError("empty generator list")
    if any(g == x for g in generators):
        return True
    basis = make_basis([x, *generators])
    xv = vectorize(x, basis).coords
    cols = [list(vectorize(g, basis).coords) + [Fraction(1)] for g in generators]
    rhs = list(xv) + [Fraction(1)]
    return _simplex_feasible(cols, rhs)


def _solve_exact(matrix: List[List[Fraction]], rhs: List[Fraction]):
    """Gauss elimination over the rationals.

    Returns the unique solution vector, or None when the system is
    inconsistent or underdetermined.
    """
    m = len(matrix)
    n = len(matrix[0]) if m else 0
    aug = [row[:] + [rhs[i]] for i, row in enumerate(matrix)]
    pivots = []
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, m) if aug[i][c] != 0), None)
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        pv = aug[r][c]
        aug[r] = [v / pv for v in aug[r]]
        for i in range(m):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i][-1] != 0:
            return None  # inconsistent
    if len(pivots) < n:
        return None  # underdetermined; a smaller subset covers this case
    sol = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        sol[c] = aug[i][-1]
    return sol


def in_hull_oracle(x: Dist, generators: Sequence[Dist]) -> bool:
    """Caratheodory enumeration: some subset of size <= dim+1 must carry x.

    Independent of the simplex path; intended for small instances only.
    """
    if not generators:
        raise ValueError("empty generator list")
    if any(g == x for g in generators):
        return True
    basis = make_basis([x, *generators])
    dim = len(basis)
    xv = list(vectorize(x, basis).coords) + [Fraction(1)]
    vecs = [list(vectorize(g, basis).coords) + [Fraction(1)] for g in generators]
    max_size = min(len(generators), dim + 1)
    for size in range(1, max_size + 1):
        for subset in itertools.combinations(range(len(generators)), size):
            matrix = [[vecs[j][row] for j in subset] for row in range(dim + 1)]
            sol = _solve_exact(matrix, xv)
            if sol is not None and all(v >= 0 for v in sol):
                return True
    return False


def canonicalize(generators: Sequence[Dist]) -> List[Dist]:
    """Reduce a generator list to the sorted extreme points of its hull.

    Deduplicates, then removes every generator lying in the hull of the
    others.  Extreme points are never removable, so one pass over the
    deduplicated list suffices and the result is removal-order independent.
    """
    if not generators:
        raise ValueError("empty generator list")
    unique: List[Dist] = []
    for g in generators:
        if not any(g == u for u in unique):
            unique.append(g)
    unique.sort()
    if len(unique) == 1:
        return unique
    alive = [True] * len(unique)
    for i, g in enumerate(unique):
        others = [unique[j] for j in range(len(unique)) if j != i and alive[j]]
        if others and in_hull(g, others):
            alive[i] = False
    return [g for g, keep in zip(unique, alive) if keep]
