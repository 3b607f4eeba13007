"""The combined-choice monad on convex sets of distributions.

A monadic value over a carrier A is a `NECSet` whose generators are
distributions over A.  `ret` is the singleton point mass; `join` takes a
set of distributions-over-sets, replaces each by its barycenter in the
set-level convex structure, and closes under hull-of-union; `bind` is
join after map.  Probabilistic and nondeterministic choice are the
set-level mixture and hull-of-union operators.
"""

from __future__ import annotations

import itertools
from typing import Callable

from .convexgeom import barycenter
from .dist import Outcome, from_pairs, map_dist, point
from .necset import (
    NECSET_INSTANCE,
    NECSet,
    alt_necset,
    conv_necset,
    from_generators,
    lub_necset,
    singleton_necset,
)
from .prob import Prob

GcmVal = NECSet


def ret_gcm(a: Outcome) -> GcmVal:
    return singleton_necset(point(a))


def map_gcm(f: Callable[[Outcome], Outcome], m: GcmVal) -> GcmVal:
    return from_generators([map_dist(f, d) for d in m.generators])


def join_gcm(mm: GcmVal) -> GcmVal:
    """Flatten one monadic layer.

    Each generator of `mm` is a distribution whose keys are themselves
    monadic values; its barycenter in the set-level convex structure is a
    set.  The join is the hull of the union of those barycenters.
    """
    inner = [barycenter(d, NECSET_INSTANCE) for d in mm.generators]
    return lub_necset(inner)


def bind_gcm(m: GcmVal, k: Callable[[Outcome], GcmVal]) -> GcmVal:
    """join after map; duplicate continuation images merge inside map_dist."""
    lifted = from_generators([map_dist(k, d) for d in m.generators])
    return join_gcm(lifted)


def bind_gcm_direct(m: GcmVal, k: Callable[[Outcome], GcmVal]) -> GcmVal:
    """Product-of-generators formula for bind, kept as a second code path.

    For each generator d of m, every choice of one generator per
    continuation value yields the mixture sum_a d(a) * g_a; the result is
    the hull of all such mixtures.  Exponential in the support size; used
    for cross-checking, not as the primary route.
    """
    candidates = []
    for d in m.generators:
        images = [k(a) for a in d.support()]
        for pick in itertools.product(*(img.generators for img in images)):
            pairs = []
            for (_, w), g in zip(d.entries, pick):
                pairs.extend((key, w * wg) for key, wg in g.entries)
            candidates.append(from_pairs(pairs))
    return from_generators(candidates)


def choice_gcm(p: Prob, x: GcmVal, y: GcmVal) -> GcmVal:
    """x with probability p, else y."""
    return conv_necset(p, x, y)


def alt_gcm(x: GcmVal, y: GcmVal) -> GcmVal:
    """Nondeterministic choice between x and y."""
    return alt_necset(x, y)
