"""Non-empty finitely-generated convex sets of distributions.

A `NECSet` is stored as the sorted extreme points of its hull, so
structural equality of two sets coincides with equality of the convex
sets they denote.  The nondeterministic-choice operators (binary `alt`
and finite-family `lub`) are hull-of-union; probabilistic choice mixes
generators pairwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from .convexgeom import ConvexInstance, canonicalize, in_hull
from .dist import Dist, compare_dist, conv_dist
from .prob import Prob


@dataclass(frozen=True, eq=False)
class NECSet:
    """The convex hull of a non-empty finite set of distributions."""

    ORDER_TAG = 4

    generators: Tuple[Dist, ...]

    def __post_init__(self) -> None:
        if not self.generators:
            raise ValueError("convex set must be non-empty")
        for a, b in zip(self.generators, self.generators[1:]):
            if compare_dist(a, b) >= 0:
                raise ValueError("generators not strictly sorted")

    def compare(self, other: "NECSet") -> int:
        return compare_necset(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NECSet):
            return NotImplemented
        return len(self.generators) == len(other.generators) and all(
            a == b for a, b in zip(self.generators, other.generators)
        )

    def __hash__(self) -> int:
        return hash(self.generators)

    def __lt__(self, other: "NECSet") -> bool:
        return compare_necset(self, other) < 0

    def render_inline(self) -> str:
        return "{" + "; ".join(str(d) for d in self.generators) + "}"

    def __str__(self) -> str:
        return self.render_inline()

    def __repr__(self) -> str:
        return f"NECSet({self.render_inline()})"


def compare_necset(x: NECSet, y: NECSet) -> int:
    for a, b in zip(x.generators, y.generators):
        c = compare_dist(a, b)
        if c != 0:
            return c
    if len(x.generators) != len(y.generators):
        return -1 if len(x.generators) < len(y.generators) else 1
    return 0


def singleton_necset(d: Dist) -> NECSet:
    return NECSet((d,))


def from_generators(generators: Iterable[Dist]) -> NECSet:
    """The hull of a finite generator list, in extreme-point normal form."""
    gens = list(generators)
    if not gens:
        raise ValueError("empty generator list")
    return NECSet(tuple(canonicalize(gens)))


def member(d: Dist, x: NECSet) -> bool:
    return in_hull(d, x.generators)


def alt_necset(x: NECSet, y: NECSet) -> NECSet:
    """Binary nondeterministic choice: hull of the union."""
    return from_generators(list(x.generators) + list(y.generators))


def lub_necset(family: Sequence[NECSet]) -> NECSet:
    """Collapse a non-empty finite family into the hull of its union."""
    if not family:
        raise ValueError("empty family")
    gens: List[Dist] = []
    for x in family:
        gens.extend(x.generators)
    return from_generators(gens)


def conv_necset(p: Prob, x: NECSet, y: NECSet) -> NECSet:
    """Probabilistic choice on sets: all pairwise generator mixtures."""
    if p.is_one():
        return x
    if p.is_zero():
        return y
    return from_generators(
        [conv_dist(p, gx, gy) for gx in x.generators for gy in y.generators]
    )


NECSET_INSTANCE: ConvexInstance[NECSet] = ConvexInstance(conv_necset)


def validate_necset(x: NECSet) -> None:
    """Re-check canonical-form invariants, including irredundancy."""
    if not x.generators:
        raise AssertionError("empty generator tuple")
    for a, b in zip(x.generators, x.generators[1:]):
        if compare_dist(a, b) >= 0:
            raise AssertionError("generators out of order")
    if list(x.generators) != canonicalize(list(x.generators)):
        raise AssertionError("generators not in extreme-point normal form")
