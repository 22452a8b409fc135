from __future__ import annotations

import random

import pytest

from conftest import SEED_DSL
from nisonto.dsl import (
    ACTOR,
    AGENT,
    NIS_ARTICLES,
    SCAFFOLD_CLASSES,
    SYSTEM,
    ArticleBlock,
    MeasureSet,
    compile_measures,
    load_measures,
    parse_measures,
    scaffold,
)
from nisonto.errors import DslSyntaxError, DuplicateArticleBlock, DuplicateEntity, UndeclaredEntity
from nisonto.kb import (
    DataFacet,
    DeclKind,
    EquivalentClasses,
    Facet,
    Intersection,
    Named,
    ObjectSome,
    SubClassOf,
    conjuncts,
    nis,
)
from nisonto.turtle import parse_turtle, serialize

from randkb import random_measure_set

MODEL_RELATIONS = (
    "cooperateWith persecute perform adopt designate review drive assess manage notify report comply".split()
)


def test_article_block_example():
    ms = parse_measures(
        "entity Agent MemberState\n"
        "article Article7 for MemberState:\n"
        "  adopt NationalCybersecurityStrategy\n"
    )
    assert len(ms.entities) == 1 and len(ms.articles) == 1
    (block,) = ms.articles
    assert block.cls == nis("Article7-MemberState")
    assert [(m.task, m.object) for m in block.measures] == [(nis("adopt"), nis("NationalCybersecurityStrategy"))]


def test_clause_and_qualifier_examples():
    ms = parse_measures(
        "clause NationalCybersecurityStrategy include StrategicObjectives\n"
        "qualify CyberSecurityIncidentResponsePlan SubmissionMonths max 3\n"
    )
    assert len(ms.clauses) == 1 and ms.clauses[0].verb == nis("include")
    (q,) = ms.qualifiers
    assert (q.cls, q.property, q.facet, q.bound) == (
        nis("CyberSecurityIncidentResponsePlan"), nis("SubmissionMonths"), Facet.MAX_INCLUSIVE, 3
    )


@pytest.mark.parametrize(
    "text, error, line",
    [
        ("article X for UndeclaredAgent:\n  adopt Y\n", UndeclaredEntity, 1),
        ("entity Object Thing\narticle X for Thing:\n  adopt Y\n", UndeclaredEntity, 2),
        ("entity Agent G\narticle X for G:\n  adopt Y\narticle X for G:\n  notify Y\n", DuplicateArticleBlock, 4),
        ("entity Agent G\nentity Object G\n", DuplicateEntity, 2),
        ("entity Agent G\narticle X for G:\nentity Object Y\n", DslSyntaxError, 2),
        ("entity Robot G\n", DslSyntaxError, 1),
        ("  adopt Y\n", DslSyntaxError, 1),
        ("qualify Plan months around 3\n", DslSyntaxError, 1),
        ("qualify Plan months max three\n", DslSyntaxError, 1),
        ("frobnicate a b\n", DslSyntaxError, 1),
        ("entity Agent G\narticle X for G:\n  adopt\n", DslSyntaxError, 3),
        ("clause a/b include c\n", DslSyntaxError, 1),
    ],
)
def test_errors_carry_line_numbers(text, error, line):
    with pytest.raises(error) as err:
        parse_measures(text)
    assert err.value.line == line


def test_comments_and_blank_lines_are_ignored():
    ms = parse_measures("# header\n\nentity Agent G  # trailing\n")
    assert ms.entities == [("Agent", nis("G"))]


def test_scaffold_only_for_empty_input():
    kb = compile_measures(parse_measures(""))
    assert kb == scaffold()
    assert sorted(kb.classes) == sorted(SCAFFOLD_CLASSES)
    assert set(kb.subclass_axioms()) == {SubClassOf(AGENT, Named(ACTOR)), SubClassOf(SYSTEM, Named(ACTOR))}


def test_article10_block_definition():
    kb = compile_measures(load_measures(SEED_DSL))
    assert kb.definition(nis("Article10-MemberState")) == Intersection([
        ObjectSome(nis("designate"), Named(nis("CSIRT"))),
        ObjectSome(nis("ensureReportingVulnerabilityTo"), Named(nis("CSIRT"))),
    ])
    assert SubClassOf(nis("Article10-MemberState"), Named(nis("Article10"))) in kb.tbox
    assert SubClassOf(nis("Article10"), Named(NIS_ARTICLES)) in kb.tbox


def test_agent_definition_collects_article_classes():
    kb = compile_measures(load_measures(SEED_DSL))
    assert kb.definition(nis("MemberState")) == Intersection([
        Named(AGENT), Named(nis("Article10-MemberState")), Named(nis("Article7-MemberState"))
    ])


def test_clauses_and_qualifiers_compile_to_subclass_axioms():
    kb = compile_measures(load_measures(SEED_DSL))
    assert SubClassOf(
        nis("NationalCybersecurityStrategy"), ObjectSome(nis("include"), Named(nis("StrategicObjectives")))
    ) in kb.tbox
    assert SubClassOf(
        nis("CyberSecurityIncidentResponsePlan"), DataFacet(nis("SubmissionMonths"), Facet.MAX_INCLUSIVE, 3)
    ) in kb.tbox
    assert kb.is_declared(nis("SubmissionMonths"), DeclKind.DATA_PROPERTY)


def test_seed_vocabulary_is_complete():
    ms = load_measures(SEED_DSL)
    kb = compile_measures(ms)
    for verb in MODEL_RELATIONS:
        assert kb.is_declared(nis(verb), DeclKind.OBJECT_PROPERTY), verb
    kinds = dict((iri.local, kind) for kind, iri in ms.entities)
    assert kinds["MemberState"] == kinds["CSIRT"] == "Agent"
    assert kinds["NationalCybersecurityStrategy"] == "Object"
    assert "System" in kinds.values()
    # persecute and perform stay independent
    assert kb.super_properties(nis("persecute")) == {nis("persecute")}


def test_seed_marks_article7_as_reconstruction():
    assert "RECONSTRUCTION" in SEED_DSL.read_text()


def test_empty_block_rejected_by_validate():
    ms = MeasureSet(entities=[("Agent", nis("G"))])
    ms.articles.append(ArticleBlock(nis("X"), nis("G"), ()))
    with pytest.raises(DslSyntaxError):
        compile_measures(ms)


def test_block_definitions_match_measures():
    for seed in range(60):
        ms = random_measure_set(random.Random(seed))
        kb = compile_measures(ms)
        for block in ms.articles:
            expected = {ObjectSome(m.task, Named(m.object)) for m in block.measures}
            assert set(conjuncts(kb.definition(block.cls))) == expected
            assert sum(
                1 for ax in kb.tbox if isinstance(ax, EquivalentClasses) and ax.named == block.cls
            ) == 1


def test_compile_is_deterministic_and_round_trips():
    for seed in range(60):
        ms = random_measure_set(random.Random(seed))
        first, second = compile_measures(ms), compile_measures(ms)
        assert first == second and serialize(first) == serialize(second)
        assert parse_turtle(serialize(first)) == first
