"""Acceptance gate: one test per criterion, each at its stated bound.

Run ``pytest tests/test_acceptance.py`` (or this file directly); the terminal
summary prints one PASS/FAIL line per criterion.
"""

from __future__ import annotations

import io
import random
import time

from conftest import FACTS, SEED_TTL
from nisonto.cli import main
from nisonto.gaps import GapRow, gap_analysis, query_gaps
from nisonto.kb import nis
from nisonto.reasoner import classify, realize
from nisonto.turtle import lifted_items, load_turtle, parse_turtle, serialize

from oracle import oracle_classify, oracle_realize
from randkb import add_evidence, random_assertion, random_compiled_kb, random_kb, synthetic_directive

MEMBER_STATE = nis("MemberState")


def seeded_world(*individuals):
    kb = load_turtle(SEED_TTL)
    for i in individuals:
        kb.merge(load_turtle(FACTS[i]))
    return kb.freeze()


def test_1_inferred_memberships(record_property):
    record_property("criterion", "realize infers exactly the expected article/agent classes, < 1 s")
    expected = {
        1: {"Article7-MemberState", "Article10-MemberState", "MemberState"},
        2: set(),
        3: {"Article7-MemberState"},
    }
    start = time.perf_counter()
    found = {}
    for i in expected:
        kb = seeded_world(i)
        types = realize(kb, classify(kb))
        ind = nis(f"individual{i}")
        found[i] = {c.local for c in types.types(ind) if kb.definition(c) is not None}
    elapsed = time.perf_counter() - start
    assert found == expected
    assert elapsed < 1.0, elapsed


def test_2_missing_measures(record_property):
    record_property("criterion", "individual3 misses exactly the two Article 10 measures; literal query agrees, < 1 s")
    start = time.perf_counter()
    kb = seeded_world(3)
    subs = classify(kb)
    types = realize(kb, subs)
    ind = nis("individual3")
    report = gap_analysis(kb, subs, ind, MEMBER_STATE, types)
    literal = query_gaps(kb, types, MEMBER_STATE, ind)
    elapsed = time.perf_counter() - start
    a10 = nis("Article10-MemberState")
    assert report.rows == [
        GapRow(a10, nis("designate"), nis("CSIRT")),
        GapRow(a10, nis("ensureReportingVulnerabilityTo"), nis("CSIRT")),
    ]
    assert literal == {(r.article, r.task, r.object) for r in report.rows}
    assert elapsed < 1.0, elapsed


def test_3_oracle_equivalence(record_property):
    record_property("criterion", "classify/realize equal the saturation oracle on 500 random KBs (0 mismatches)")
    mismatches = []
    for seed in range(500):
        kb = random_kb(random.Random(seed), max_classes=8, max_props=4, max_individuals=6, depth=2).freeze()
        subs = classify(kb)
        expected = oracle_classify(kb)
        types = realize(kb, subs)
        if {c: set(subs.supers(c)) for c in kb.classes} != expected:
            mismatches.append(("classify", seed))
        elif {a: set(types[a]) for a in types} != oracle_realize(kb, expected):
            mismatches.append(("realize", seed))
    assert mismatches == []


def test_4_monotonicity(record_property):
    record_property("criterion", "200 (KB, extra assertion) pairs: types never shrink, gap rows never grow")
    violations = []
    pairs = 0
    seed = 0
    while pairs < 200:
        rng = random.Random(10_000 + seed)
        seed += 1
        kb = random_kb(rng)
        if not kb.individuals:
            continue
        grown = kb.copy()
        grown.add(random_assertion(rng, kb))
        subs, subs2 = classify(kb), classify(grown)
        before, after = realize(kb, subs), realize(grown, subs2)
        pairs += 1
        for a in before:
            if not before[a] <= after[a]:
                violations.append(("types", seed, a))
        for target in (c for c in kb.classes if kb.definition(c) is not None):
            for a in kb.individuals:
                old = set(gap_analysis(kb, subs, a, target, before).rows)
                new = set(gap_analysis(grown, subs2, a, target, after).rows)
                if not new <= old:
                    violations.append(("gaps", seed, a, target))
    assert violations == []


def test_5_round_trip(record_property):
    record_property("criterion", "parse(serialize(kb)) == kb for the seed ontology and 100 random compiled KBs")
    kbs = [load_turtle(SEED_TTL)] + [random_compiled_kb(random.Random(20_000 + s)) for s in range(100)]
    failures = [n for n, kb in enumerate(kbs) if lifted_items(parse_turtle(serialize(kb))) != lifted_items(kb)]
    assert failures == []


def test_6_zero_gaps_iff_membership(record_property):
    record_property("criterion", "gap_analysis is empty exactly when realize infers the target (100%)")
    cases = disagreements = 0
    for seed in range(300):
        rng = random.Random(30_000 + seed)
        kb = random_compiled_kb(rng)
        subjects = add_evidence(rng, kb)
        kb.freeze()
        subs = classify(kb)
        types = realize(kb, subs)
        targets = [c for c in kb.classes if c.local.startswith("Agent") and kb.definition(c) is not None]
        for target in targets:
            for s in subjects:
                cases += 1
                if gap_analysis(kb, subs, s, target, types).compliant != types.has_type(s, target):
                    disagreements += 1
    assert cases > 0 and disagreements == 0


def run_check(i):
    out, err = io.StringIO(), io.StringIO()
    code = main(
        ["check", "--ontology", str(SEED_TTL), "--facts", str(FACTS[i]), "--individual", f"nis:individual{i}"],
        stdout=out,
        stderr=err,
    )
    return code, out.getvalue()


def test_7_cli_contract(record_property):
    record_property("criterion", "check exits 0/1/1 for individual1/2/3 with byte-stable reports")
    first = {i: run_check(i) for i in (1, 2, 3)}
    second = {i: run_check(i) for i in (1, 2, 3)}
    assert {i: first[i][0] for i in first} == {1: 0, 2: 1, 3: 1}
    assert first == second


def test_8_scale(record_property):
    record_property("criterion", "1000 blocks x 10 measures, 100 individuals: classify + realize < 5 s")
    kb = synthetic_directive(random.Random(8)).freeze()
    start = time.perf_counter()
    subs = classify(kb)
    types = realize(kb, subs)
    elapsed = time.perf_counter() - start
    assert len(types.types(nis("org0"))) >= 2
    assert elapsed < 5.0, elapsed


if __name__ == "__main__":
    import sys

    import pytest

    sys.exit(pytest.main([__file__, "-q"]))
