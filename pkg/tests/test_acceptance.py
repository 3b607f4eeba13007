"""Acceptance suite: every criterion at its stated (zero) tolerance.

Run `pytest -s tests/test_acceptance.py` to see one PASS/FAIL line per
criterion.  All equality checks are exact; the only non-exact bounds are
the wall-clock budgets, which are asserted as stated.
"""

import random
import time
from fractions import Fraction
from pathlib import Path

from test_programs import _gen_expr

from convexchoice.convexgeom import in_hull, in_hull_oracle
from convexchoice.dist import from_pairs, point
from convexchoice.gcm import choice_gcm, ret_gcm
from convexchoice.laws import (
    GenConfig,
    check_all,
    check_law,
    gen_prob,
    trial_rng,
)
from convexchoice.necset import from_generators
from convexchoice.prob import prob_make
from convexchoice.programs import (
    arb,
    coinarb_source,
    monty,
    parse,
    render,
    render_expr,
    run,
)

CORPUS = Path(__file__).parent / "corpus"

ACCEPT_CONFIG = GenConfig(
    carrier_size=4, max_support=4, max_generators=4, max_denominator=12, trials=200, seed=42
)


def _report(criterion: int, ok: bool, detail: str) -> None:
    print(f"ACCEPTANCE {criterion}: {'PASS' if ok else 'FAIL'} - {detail}")


def test_criterion_1_full_law_suite():
    t0 = time.perf_counter()
    reports = check_all(ACCEPT_CONFIG)
    elapsed = time.perf_counter() - t0
    positive_bad = [r.name for r in reports if r.expected == "pass" and r.failures]
    negative_bad = [r.name for r in reports if r.expected == "fail" and not r.failures]
    ok = not positive_bad and not negative_bad and elapsed < 60.0
    _report(
        1,
        ok,
        f"{len(reports)} laws, 200 trials each, {elapsed:.1f}s "
        f"(positive failures: {positive_bad or 'none'}, "
        f"unrefuted controls: {negative_bad or 'none'})",
    )
    assert positive_bad == []
    assert negative_bad == []
    assert elapsed < 60.0


def test_criterion_2_monty_hall():
    t0 = time.perf_counter()
    switch = render(monty("switch"))
    stick = render(monty("stick"))
    elapsed = time.perf_counter() - t0
    ok = (
        switch == "{true: 2/3, false: 1/3}"
        and stick == "{true: 1/3, false: 2/3}"
        and elapsed < 5.0
    )
    _report(2, ok, f"switch={switch!r} stick={stick!r} {elapsed:.2f}s")
    assert switch == "{true: 2/3, false: 1/3}"
    assert stick == "{true: 1/3, false: 2/3}"
    assert elapsed < 5.0


def test_criterion_3_coinarb_equals_arb():
    t0 = time.perf_counter()
    arb_value = run("ret true [~] ret false")
    bad = []
    for num, den in [(0, 1), (1, 3), (1, 2), (2, 3), (1, 1)]:
        if run(coinarb_source(prob_make(num, den))) != arb_value:
            bad.append(f"{num}/{den}")
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 1.0
    _report(3, ok, f"5 probabilities, failures: {bad or 'none'}, {elapsed:.2f}s")
    assert bad == []
    assert elapsed < 1.0


def test_criterion_4_nontriviality():
    bad = []
    for i in range(20):
        rng = trial_rng(ACCEPT_CONFIG.seed, "acceptance_nontrivial", i)
        p = gen_prob(rng, ACCEPT_CONFIG)
        q = gen_prob(rng, ACCEPT_CONFIG)
        while q == p:
            q = gen_prob(rng, ACCEPT_CONFIG)
        lhs = choice_gcm(p, ret_gcm(True), ret_gcm(False))
        rhs = choice_gcm(q, ret_gcm(True), ret_gcm(False))
        if lhs == rhs:
            bad.append((str(p), str(q)))
    _report(4, not bad, f"20 pairs, collisions: {bad or 'none'}")
    assert bad == []


def _random_dist(rng):
    size = rng.randint(1, 4)
    support = rng.sample(["a", "b", "c", "d"], size)
    den = rng.randint(size, 12)
    cuts = sorted(rng.sample(range(1, den), size - 1)) if size > 1 else []
    bounds = [0] + cuts + [den]
    return from_pairs(
        (s, Fraction(b - a, den)) for s, (a, b) in zip(support, zip(bounds, bounds[1:]))
    )


def _random_mixture(rng, gens):
    weights = [rng.randint(0, 5) for _ in gens]
    if sum(weights) == 0:
        weights[0] = 1
    total = sum(weights)
    pairs = []
    for g, w in zip(gens, weights):
        pairs.extend((k, Fraction(w, total) * wk) for k, wk in g.entries)
    return from_pairs(pairs)


def test_criterion_5_hull_oracle_equivalence():
    t0 = time.perf_counter()
    disagreements = 0
    inside = 0
    for i in range(500):
        rng = trial_rng(ACCEPT_CONFIG.seed, "acceptance_hull", i)
        gens = [_random_dist(rng) for _ in range(rng.randint(1, 6))]
        x = _random_mixture(rng, gens) if rng.random() < 0.5 else _random_dist(rng)
        lp = in_hull(x, gens)
        if lp != in_hull_oracle(x, gens):
            disagreements += 1
        inside += lp
    elapsed = time.perf_counter() - t0
    ok = disagreements == 0 and elapsed < 30.0
    _report(
        5,
        ok,
        f"500 instances ({inside} inside), disagreements={disagreements}, {elapsed:.1f}s",
    )
    assert disagreements == 0
    assert elapsed < 30.0


def test_criterion_6_hull_preservation_laws():
    cfg = ACCEPT_CONFIG
    affine = check_law("affine_image_hull", cfg)
    absorb = check_law("lub_op_hull", cfg)
    ok = not affine.failures and not absorb.failures
    _report(
        6,
        ok,
        f"affine_image_hull failures={len(affine.failures)}, "
        f"lub_op_hull failures={len(absorb.failures)} (200 trials each)",
    )
    assert affine.failures == []
    assert absorb.failures == []


def test_criterion_7_flattening_identity():
    report = check_law("dist_flatten", ACCEPT_CONFIG)
    _report(7, not report.failures, f"200 trials, failures={len(report.failures)}")
    assert report.failures == []


def test_criterion_8_parser_round_trip_and_stable_rendering():
    rng = random.Random(2718)
    bad = 0
    for _ in range(200):
        ast = _gen_expr(rng, frozenset(), rng.randint(0, 3))
        if parse(render_expr(ast)) != ast:
            bad += 1
    corpus_bad = []
    for path in sorted(CORPUS.glob("*.choice")):
        ast = parse(path.read_text())
        if parse(render_expr(ast)) != ast:
            corpus_bad.append(path.name)
    # equal values built by different routes render byte-identically
    coinarb_value = run((CORPUS / "coinarb.choice").read_text())
    stable = (
        render(coinarb_value, "structured") == render(arb(), "structured")
        and render(coinarb_value) == render(arb())
    )
    mid_via_choice = choice_gcm(prob_make(1, 2), ret_gcm("a"), ret_gcm("b"))
    mid_direct = from_generators(
        [from_pairs([("a", prob_make(1, 2).value), ("b", prob_make(1, 2).value)])]
    )
    stable = stable and render(mid_via_choice, "structured") == render(mid_direct, "structured")
    ok = bad == 0 and not corpus_bad and stable
    _report(
        8,
        ok,
        f"200 random ASTs (failures={bad}), corpus={corpus_bad or 'ok'}, "
        f"byte-stable={stable}",
    )
    assert bad == 0
    assert corpus_bad == []
    assert stable
    assert point(True) in coinarb_value.generators  # sanity: coinarb evaluates to arb
