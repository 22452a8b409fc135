"""Gap analysis: which (article, task, object) measures an individual still lacks.

:func:`gap_analysis` works on the axiom structures directly. :func:`match_patterns`
is a small triple-pattern evaluator (conjunctive patterns, ``rdf:rest*`` paths
and one MINUS group) that can run the same question as a literal graph query
over :func:`nisonto.kb.rdf_view`; :func:`missing_measures_query` builds that
query.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Union

from .errors import UndefinedTarget, UnknownIndividual, UnsupportedFeature
from .kb import (
    OWL_EQUIVALENTCLASS,
    OWL_INTERSECTIONOF,
    OWL_ONPROPERTY,
    OWL_SOMEVALUESFROM,
    RDF_FIRST,
    RDF_REST,
    RDF_TYPE,
    BNode,
    DataFacet,
    DeclKind,
    Iri,
    KnowledgeBase,
    Literal,
    Named,
    ObjectSome,
    Term,
    Triple,
    conjuncts,
    rdf_view,
    term_key,
)
from .reasoner import InstanceChecker, SubsumptionMap, TypeMap, realize


@dataclass(frozen=True)
class GapRow:
    article: Iri
    task: Iri
    object: Iri | str  # a class, or "<facet> <bound>" text for data facets

    def key(self) -> tuple[str, str, str]:
        obj = self.object.value if isinstance(self.object, Iri) else self.object
        return (self.article.value, self.task.value, obj)


@dataclass
class GapReport:
    individual: Iri
    target: Iri
    rows: list[GapRow] = field(default_factory=list)
    satisfied: list[GapRow] = field(default_factory=list)

    @property
    def compliant(self) -> bool:
        return not self.rows


def required_measures(kb: KnowledgeBase, target: Iri) -> list[tuple[GapRow, ObjectSome | DataFacet]]:
    """Every (article, task, object) measure reachable from ``target``'s definition.

    Articles are the named conjuncts of the definition that are themselves
    defined with at least one restriction conjunct; other conjuncts (such as
    the bare ``Agent`` class) contribute nothing.
    """
    definition = kb.definition(target)
    if definition is None:
        raise UndefinedTarget(f"{target} has no equivalent-class definition")
    found: dict[GapRow, ObjectSome | DataFacet] = {}
    for conj in conjuncts(definition):
        if not isinstance(conj, Named):
            continue
        article_def = kb.definition(conj.cls)
        if article_def is None:
            continue
        for measure in conjuncts(article_def):
            if isinstance(measure, ObjectSome):
                obj: Iri | str = measure.filler.cls if isinstance(measure.filler, Named) else str(measure.filler)
                found[GapRow(conj.cls, measure.property, obj)] = measure
            elif isinstance(measure, DataFacet):
                text = f"{measure.facet.token} {measure.bound}"
                found[GapRow(conj.cls, measure.property, text)] = measure
    return sorted(found.items(), key=lambda item: item[0].key())


def gap_analysis(
    kb: KnowledgeBase,
    subs: SubsumptionMap,
    individual: Iri,
    target: Iri,
    types: TypeMap | None = None,
) -> GapReport:
    if not kb.is_declared(individual, DeclKind.INDIVIDUAL):
        raise UnknownIndividual(str(individual))
    measures = required_measures(kb, target)
    report = GapReport(individual, target)
    if not measures:
        return report
    if types is None:
        types = realize(kb, subs)
    entails = InstanceChecker(kb, types)
    for row, measure in measures:
        if entails(individual, measure):
            report.satisfied.append(row)
        else:
            report.rows.append(row)
    return report


def type_triples(types: TypeMap) -> set[Triple]:
    """Materialize inferred memberships as ``rdf:type`` triples."""
    return {(a, RDF_TYPE, c) for a, c in types.pairs}


# --------------------------------------------------------------------------
# Triple-pattern matching
# --------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class Var:
    name: str

    def __str__(self) -> str:
        return f"?{self.name}"


@dataclass(frozen=True)
class ZeroOrMore:
    """Property path ``pred*``; only ``rdf:rest*`` is supported."""

    predicate: Iri


PatternTerm = Union[Var, Iri, BNode, Literal]
Pattern = tuple[PatternTerm, Union[PatternTerm, ZeroOrMore], PatternTerm]
Binding = dict[str, Term]


@dataclass
class Query:
    patterns: list[Pattern]
    minus: list[Pattern] | None = None
    select: list[Var] | None = None


class TripleIndex:
    """Subject/predicate/object hash indexes over a triple set."""

    def __init__(self, triples: Iterable[Triple]):
        self.triples = set(triples)
        self.spo: dict[Term, dict[Term, set[Term]]] = defaultdict(lambda: defaultdict(set))
        self.pos: dict[Term, dict[Term, set[Term]]] = defaultdict(lambda: defaultdict(set))
        self.osp: dict[Term, dict[Term, set[Term]]] = defaultdict(lambda: defaultdict(set))
        self.nodes: set[Term] = set()
        for s, p, o in self.triples:
            self.spo[s][p].add(o)
            self.pos[p][o].add(s)
            self.osp[o][s].add(p)
            self.nodes.update((s, o))

    def match(self, s: Term | None, p: Term | None, o: Term | None) -> list[Triple]:
        if s is not None and p is not None and o is not None:
            return [(s, p, o)] if (s, p, o) in self.triples else []
        if s is not None:
            preds = [p] if p is not None else list(self.spo.get(s, {}))
            return [
                (s, pp, oo)
                for pp in preds
                for oo in self.spo.get(s, {}).get(pp, ())
                if o is None or oo == o
            ]
        if p is not None:
            objs = [o] if o is not None else list(self.pos.get(p, {}))
            return [(ss, p, oo) for oo in objs for ss in self.pos.get(p, {}).get(oo, ())]
        if o is not None:
            return [(ss, pp, o) for ss, preds in self.osp.get(o, {}).items() for pp in preds]
        return list(self.triples)

    def reachable(self, start: Term, predicate: Iri, forward: bool = True) -> set[Term]:
        seen = {start}
        stack = [start]
        while stack:
            node = stack.pop()
            step = self.spo.get(node, {}).get(predicate, ()) if forward else self.pos.get(predicate, {}).get(node, ())
            for nxt in step:
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        return seen


def _check_term(term: object, where: str) -> None:
    if not isinstance(term, Var | Iri | BNode | Literal):
        raise UnsupportedFeature(f"unsupported {where} in pattern: {term!r}")


def _check(patterns: list[Pattern]) -> None:
    for pattern in patterns:
        if not isinstance(pattern, tuple) or len(pattern) != 3:
            raise UnsupportedFeature(f"patterns are (subject, predicate, object) triples: {pattern!r}")
        s, p, o = pattern
        _check_term(s, "subject")
        _check_term(o, "object")
        if isinstance(p, ZeroOrMore):
            if p.predicate != RDF_REST:
                raise UnsupportedFeature(f"only rdf:rest* paths are supported, not {p.predicate}*")
        else:
            _check_term(p, "predicate")


def _resolve(term: PatternTerm, binding: Binding) -> Term | None:
    if isinstance(term, Var):
        return binding.get(term.name)
    return term


def _extend(binding: Binding, pattern_terms: tuple, values: tuple) -> Binding | None:
    out = dict(binding)
    for term, value in zip(pattern_terms, values):
        if isinstance(term, Var):
            bound = out.get(term.name)
            if bound is None:
                out[term.name] = value
            elif bound != value:
                return None
    return out


def _evaluate(index: TripleIndex, patterns: list[Pattern]) -> list[Binding]:
    solutions: list[Binding] = [{}]
    for s, p, o in patterns:
        nxt: list[Binding] = []
        for binding in solutions:
            rs, ro = _resolve(s, binding), _resolve(o, binding)
            if isinstance(p, ZeroOrMore):
                if rs is not None:
                    pairs = [(rs, node) for node in index.reachable(rs, p.predicate)]
                elif ro is not None:
                    pairs = [(node, ro) for node in index.reachable(ro, p.predicate, forward=False)]
                else:
                    pairs = [
                        (start, node) for start in index.nodes for node in index.reachable(start, p.predicate)
                    ]
                for a, b in pairs:
                    ext = _extend(binding, (s, o), (a, b))
                    if ext is not None:
                        nxt.append(ext)
            else:
                rp = _resolve(p, binding)
                for triple in index.match(rs, rp, ro):
                    ext = _extend(binding, (s, p, o), triple)
                    if ext is not None:
                        nxt.append(ext)
        solutions = nxt
    return solutions


def _compatible(a: Mapping[str, Term], b: Mapping[str, Term]) -> bool:
    shared = a.keys() & b.keys()
    return bool(shared) and all(a[v] == b[v] for v in shared)


def _binding_key(binding: Binding) -> tuple:
    return tuple((name, term_key(binding[name])) for name in sorted(binding))


def match_patterns(triples: Iterable[Triple], query: Query) -> list[Binding]:
    """Evaluate ``query`` over ``triples``; bindings come back sorted.

    MINUS drops every outer solution that shares at least one variable with,
    and agrees on all shared variables with, some solution of the inner group
    (the inner group is evaluated on its own).
    """
    if not isinstance(query, Query):
        raise UnsupportedFeature("queries must be Query objects")
    _check(query.patterns)
    if query.minus is not None:
        _check(query.minus)
    index = triples if isinstance(triples, TripleIndex) else TripleIndex(triples)
    solutions = _evaluate(index, query.patterns)
    if query.minus:
        removed = _evaluate(index, query.minus)
        solutions = [s for s in solutions if not any(_compatible(s, r) for r in removed)]
    if query.select is not None:
        names = [v.name for v in query.select]
        solutions = [{n: s[n] for n in names if n in s} for s in solutions]
    return sorted(solutions, key=_binding_key)


def missing_measures_query(target: Iri, individual: Iri) -> Query:
    """The missing-measures query: required someValuesFrom measures minus owned ones."""
    v = Var
    star = ZeroOrMore(RDF_REST)
    return Query(
        patterns=[
            (target, OWL_EQUIVALENTCLASS, v("a")),
            (v("a"), OWL_INTERSECTIONOF, v("b")),
            (v("b"), star, v("c")),
            (v("c"), RDF_FIRST, v("article")),
            (v("article"), OWL_EQUIVALENTCLASS, v("e")),
            (v("e"), OWL_INTERSECTIONOF, v("f")),
            (v("f"), star, v("t")),
            (v("t"), RDF_FIRST, v("s")),
            (v("s"), OWL_ONPROPERTY, v("task")),
            (v("s"), OWL_SOMEVALUESFROM, v("obj")),
        ],
        minus=[
            (individual, v("task"), v("objInd")),
            (v("objInd"), RDF_TYPE, v("obj")),
        ],
        select=[v("article"), v("task"), v("obj")],
    )


def query_gaps(kb: KnowledgeBase, types: TypeMap, target: Iri, individual: Iri) -> set[tuple[Term, Term, Term]]:
    """Run the missing-measures query over the KB's triples plus inferred types."""
    triples = rdf_view(kb) | type_triples(types)
    rows = match_patterns(triples, missing_measures_query(target, individual))
    return {(r["article"], r["task"], r["obj"]) for r in rows}
