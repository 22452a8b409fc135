from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import FACTS, SEED_TTL
from nisonto.errors import LiftError, Severity, TurtleSyntaxError
from nisonto.kb import (
    DEFAULT_PREFIXES,
    ClassAssertion,
    DataFacet,
    DataPropertyAssertion,
    EquivalentClasses,
    Facet,
    Intersection,
    KnowledgeBase,
    Named,
    ObjectSome,
    SubClassOf,
    nis,
)
from nisonto.turtle import (
    lifted_items,
    load_turtle,
    parse_triples,
    parse_turtle,
    parse_turtle_with_diagnostics,
    serialize,
)

from randkb import random_compiled_kb, random_kb

HEAD = "@prefix nis: <urn:nis#> .\n@prefix owl: <http://www.w3.org/2002/07/owl#> .\n"


def test_single_statement():
    kb = parse_turtle("@prefix nis: <urn:nis#> . nis:individual3 rdf:type nis:Agent .")
    assert kb.assertions() == [ClassAssertion(nis("Agent"), nis("individual3"))]


def test_restriction_block_lifts_to_definition():
    text = HEAD + """
nis:Article7-MemberState owl:equivalentClass [
    rdf:type owl:Class ;
    owl:intersectionOf (
        [ rdf:type owl:Restriction ; owl:onProperty nis:adopt ; owl:someValuesFrom nis:NationalCybersecurityStrategy ]
    )
] .
"""
    kb = parse_turtle(text)
    assert kb.definition(nis("Article7-MemberState")) == ObjectSome(
        nis("adopt"), Named(nis("NationalCybersecurityStrategy"))
    )


def test_missing_final_dot_points_at_last_token():
    text = "@prefix nis: <urn:nis#> .\nnis:a rdf:type nis:Agent"
    with pytest.raises(TurtleSyntaxError) as err:
        parse_turtle(text)
    d = err.value.diagnostic
    assert (d.line, d.column, d.severity) == (2, 16, Severity.ERROR)
    assert text.splitlines()[d.line - 1][d.column - 1:].startswith("nis:Agent")


def test_missing_dot_between_statements_points_at_next_subject():
    text = "@prefix nis: <urn:nis#> .\nnis:a rdf:type nis:Agent\nnis:b rdf:type nis:Agent ."
    with pytest.raises(TurtleSyntaxError) as err:
        parse_turtle(text)
    assert (err.value.diagnostic.line, err.value.diagnostic.column) == (3, 1)


@pytest.mark.parametrize(
    "text, token",
    [
        ("@prefix nis: <urn:nis#> .\nfoo:a rdf:type nis:Agent .", "foo:a"),
        ("@base <urn:x#> .", "@base"),
        ('@prefix nis: <urn:nis#> .\nnis:a nis:label "x"@en .', "@en"),
        ("@prefix nis: <urn:nis#> .\nnis:a nis:size 1.5 .", "1.5"),
        ('@prefix nis: <urn:nis#> .\nnis:a nis:label """x""" .', '"""'),
        ("@prefix nis: <urn:nis#> .\nnis:a nis:p ( nis:b .", "."),
        ("@prefix nis: <urn:nis#> .\nnis:a nis:p , nis:b .", ","),
    ],
)
def test_error_positions_slice_to_offending_token(text, token):
    with pytest.raises(TurtleSyntaxError) as err:
        parse_turtle(text)
    d = err.value.diagnostic
    assert text.splitlines()[d.line - 1][d.column - 1:].startswith(token)


def test_restriction_without_property_is_a_lift_error():
    text = HEAD + "nis:X rdfs:subClassOf [ rdf:type owl:Restriction ; owl:someValuesFrom nis:Y ] ."
    with pytest.raises(LiftError):
        parse_turtle(text)


def test_facet_wire_forms():
    text = HEAD + """
@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .
nis:Plan rdfs:subClassOf [ rdf:type owl:Restriction ; owl:onProperty nis:SubmissionMonths ; xsd:maxInclusive "3"^^xsd:int ] ,
    [ owl:onProperty nis:SubmissionMonths ; owl:hasValue "2"^^xsd:int ] .
"""
    kb = parse_turtle(text)
    assert set(kb.subclass_axioms()) == {
        SubClassOf(nis("Plan"), DataFacet(nis("SubmissionMonths"), Facet.MAX_INCLUSIVE, 3)),
        SubClassOf(nis("Plan"), DataFacet(nis("SubmissionMonths"), Facet.EXACT, 2)),
    }


def test_unknown_vocabulary_becomes_warning():
    text = HEAD + """
nis:a rdf:type owl:NamedIndividual .
nis:Thing nis:colour nis:Blue .
"""
    kb, warnings = parse_turtle_with_diagnostics(text)
    assert len(warnings) == 1 and warnings[0].severity is Severity.WARNING and warnings[0].line == 5
    assert kb.individuals == [nis("a")]


def test_integer_values_on_individuals():
    kb = parse_turtle(HEAD + "nis:plan1 rdf:type nis:Plan ; nis:SubmissionMonths 2 .")
    assert DataPropertyAssertion(nis("SubmissionMonths"), nis("plan1"), 2) in kb.abox


def test_empty_kb_serializes_to_prefix_block():
    text = serialize(KnowledgeBase())
    assert text.splitlines() == [f"@prefix {k}: <{v}> ." for k, v in sorted(DEFAULT_PREFIXES.items())]
    assert parse_turtle(text) == KnowledgeBase()


@pytest.mark.parametrize("path", [SEED_TTL, *FACTS.values()])
def test_shipped_fixtures_round_trip(path):
    kb = load_turtle(path)
    text = serialize(kb)
    assert parse_turtle(text) == kb
    assert serialize(parse_turtle(text)) == text == serialize(kb)


def test_shipped_fixtures_lift_every_triple():
    for path in [SEED_TTL, *FACTS.values()]:
        _, warnings = parse_turtle_with_diagnostics(path.read_text())
        assert warnings == []


def test_every_triple_is_lifted_or_warned():
    text = HEAD + "nis:a rdf:type owl:NamedIndividual ; nis:odd nis:Value .\nnis:Z nis:note nis:W ."
    _, triples = parse_triples(text)
    kb, warnings = parse_turtle_with_diagnostics(text)
    assert len(triples) == 3
    assert kb.individuals == [nis("a")] and kb.abox == set()
    assert [(w.line, w.column) for w in warnings] == [(3, 38), (4, 7)]


def test_random_compiled_kbs_round_trip():
    for seed in range(50):
        kb = random_compiled_kb(random.Random(seed))
        assert lifted_items(parse_turtle(serialize(kb))) == lifted_items(kb)


def test_random_general_kbs_round_trip():
    for seed in range(100):
        kb = random_kb(random.Random(seed), depth=3)
        assert parse_turtle(serialize(kb)) == kb


def test_nested_intersection_filler_round_trips():
    kb = KnowledgeBase()
    filler = Intersection([Named(nis("A")), ObjectSome(nis("q"), Named(nis("B")))])
    kb.add_axiom(EquivalentClasses(nis("C"), ObjectSome(nis("p"), filler)))
    assert parse_turtle(serialize(kb)) == kb


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_injected_garbage_is_located(data):
    text = SEED_TTL.read_text()
    gaps = [i for i, ch in enumerate(text) if ch in " \n" and i > 0]
    pos = data.draw(st.sampled_from(gaps)) + 1
    junk = data.draw(st.sampled_from(["%junk ", "@base ", "1.5 ", '"open\n']))
    broken = text[:pos] + junk + text[pos:]
    with pytest.raises(TurtleSyntaxError) as err:
        parse_turtle(broken)
    d = err.value.diagnostic
    line_start = broken.rfind("\n", 0, pos) + 1
    assert (d.line, d.column) == (broken.count("\n", 0, pos) + 1, pos - line_start + 1)
