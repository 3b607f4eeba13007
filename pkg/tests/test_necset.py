from fractions import Fraction
from functools import reduce

import pytest
from hypothesis import given, settings

from conftest import dists, necsets, probs, small_necsets
from convexchoice.convexgeom import convn
from convexchoice.dist import conv_dist, from_pairs, point
from convexchoice.necset import (
    NECSET_INSTANCE,
    NECSet,
    alt_necset,
    conv_necset,
    from_generators,
    lub_necset,
    member,
    singleton_necset,
    validate_necset,
)
from convexchoice.prob import prob_make


def d_of(*pairs):
    return from_pairs((k, Fraction(n, m)) for k, n, m in pairs)


MID = from_pairs([(True, Fraction(1, 2)), (False, Fraction(1, 2))])


def test_singleton():
    s = singleton_necset(point("a"))
    assert s.generators == (point("a"),)
    assert member(point("a"), s)


def test_from_generators_examples():
    got = from_generators([point(True), MID, point(False)])
    assert got.generators == tuple(sorted([point(True), point(False)]))
    d = d_of(("a", 1, 3), ("b", 2, 3))
    assert from_generators([d]).generators == (d,)
    with pytest.raises(ValueError):
        from_generators([])


def test_raw_constructor_enforces_sorting():
    lo, hi = sorted([point(True), point(False)])
    with pytest.raises(ValueError):
        NECSet((hi, lo))
    with pytest.raises(ValueError):
        NECSet(())


def test_member_examples():
    x = from_generators([point("a"), point("b")])
    assert member(d_of(("a", 1, 2), ("b", 1, 2)), x)
    assert not member(point("c"), x)


def test_alt_examples():
    t, f = singleton_necset(point(True)), singleton_necset(point(False))
    both = alt_necset(t, f)
    assert both.generators == tuple(sorted([point(True), point(False)]))
    x = from_generators([MID])
    assert alt_necset(x, x) == x


def test_lub_examples():
    a, b, c = (singleton_necset(point(s)) for s in "abc")
    assert lub_necset([a]) == a
    assert lub_necset([a, b, c]).generators == (point("a"), point("b"), point("c"))
    with pytest.raises(ValueError):
        lub_necset([])


def test_conv_examples():
    t, f = singleton_necset(point(True)), singleton_necset(point(False))
    x = from_generators([point("a"), point("b")])
    y = from_generators([point("c")])
    assert conv_necset(prob_make(1, 1), x, y) == x
    assert conv_necset(prob_make(0, 1), x, y) == y
    third = conv_necset(prob_make(1, 3), t, f)
    assert third.generators == (from_pairs([(True, Fraction(1, 3)), (False, Fraction(2, 3))]),)


@given(necsets)
def test_canonical_form_validates(x):
    validate_necset(x)


@given(probs, necsets, necsets)
@settings(max_examples=50, deadline=None)
def test_convex_axioms_identity_commutativity(p, x, y):
    assert conv_necset(prob_make(1, 1), x, y) == x
    assert conv_necset(p, x, x) == x
    assert conv_necset(p, x, y) == conv_necset(p.complement, y, x)


@given(necsets, necsets, necsets)
@settings(max_examples=30, deadline=None)
def test_semilattice_axioms(x, y, z):
    assert lub_necset([x]) == x
    families = [[x, y], [z]]
    flat = lub_necset([x, y, z])
    assert flat == lub_necset([lub_necset(f) for f in families])
    assert flat == reduce(alt_necset, [x, y, z])
    assert alt_necset(x, y) == alt_necset(y, x)


@given(probs, small_necsets, small_necsets, small_necsets)
@settings(max_examples=30, deadline=None)
def test_conv_distributes_over_lub(p, x, y, z):
    family = [y, z]
    lhs = conv_necset(p, x, lub_necset(family))
    rhs = lub_necset([conv_necset(p, x, w) for w in family])
    assert lhs == rhs


@given(small_necsets, small_necsets, probs)
@settings(max_examples=30, deadline=None)
def test_lub_absorbs_mixtures(x, y, p):
    family = [x, y]
    weights = from_pairs([(0, p.value), (1, 1 - p.value)])
    mixed = convn(weights, family, NECSET_INSTANCE)
    assert lub_necset(family + [mixed]) == lub_necset(family)


@given(necsets, necsets)
@settings(max_examples=40, deadline=None)
def test_structural_equality_is_extensional(x, y):
    mutual = all(member(g, y) for g in x.generators) and all(
        member(h, x) for h in y.generators
    )
    assert (x == y) == mutual


@given(probs, probs, dists, dists)
@settings(max_examples=40, deadline=None)
def test_members_closed_under_mixture(p, q, d1, d2):
    x = from_generators([d1, d2])
    u = conv_dist(q, d1, d2)
    assert member(u, x)
    assert member(conv_dist(p, u, d1), x)
