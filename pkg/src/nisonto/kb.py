"""In-memory knowledge base: identifiers, class expressions, axioms and assertions.

The TBox holds axioms (declarations included), the ABox holds assertions about
named individuals. Class expressions are kept normalized so that structurally
equal definitions compare equal, and every read-side listing is sorted by
expanded IRI so downstream output is reproducible.
"""

from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Mapping, Union

from .errors import CyclicPropertyHierarchy, DuplicateDefinition, FrozenKnowledgeBase

RDF_NS = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDFS_NS = "http://www.w3.org/2000/01/rdf-schema#"
OWL_NS = "http://www.w3.org/2002/07/owl#"
XSD_NS = "http://www.w3.org/2001/XMLSchema#"
NIS_NS = "urn:nis#"

DEFAULT_PREFIXES: dict[str, str] = {
    "nis": NIS_NS,
    "owl": OWL_NS,
    "rdf": RDF_NS,
    "rdfs": RDFS_NS,
    "xsd": XSD_NS,
}

_LOCAL_RE = re.compile(r"[A-Za-z0-9_](?:[A-Za-z0-9_.\-]*[A-Za-z0-9_\-])?\Z")


# --------------------------------------------------------------------------
# RDF terms
# --------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class Iri:
    """An absolute IRI. Equality and ordering use the expanded form."""

    value: str

    def __post_init__(self) -> None:
        if not self.value:
            raise ValueError("empty IRI")
        if not self.local:
            raise ValueError(f"IRI has an empty local name: {self.value!r}")

    @property
    def local(self) -> str:
        for sep in ("#", "/", ":"):
            if sep in self.value:
                return self.value.rsplit(sep, 1)[1]
        return self.value

    @property
    def namespace(self) -> str:
        return self.value[: len(self.value) - len(self.local)]

    def __str__(self) -> str:
        return self.value

    def __repr__(self) -> str:
        return f"Iri({self.value!r})"


@dataclass(frozen=True, order=True)
class BNode:
    label: str

    def __str__(self) -> str:
        return f"_:{self.label}"


@dataclass(frozen=True)
class Literal:
    value: int | str
    datatype: Iri

    def __str__(self) -> str:
        return f'"{self.value}"^^<{self.datatype}>'


Term = Union[Iri, BNode, Literal]
Triple = tuple[Term, Term, Term]


def term_key(term: Term) -> tuple:
    if isinstance(term, Iri):
        return (0, term.value, "", "")
    if isinstance(term, BNode):
        return (1, term.label, "", "")
    return (2, term.datatype.value, type(term.value).__name__, str(term.value))


def triple_key(triple: Triple) -> tuple:
    return tuple(term_key(t) for t in triple)


def rdf(local: str) -> Iri:
    return Iri(RDF_NS + local)


def rdfs(local: str) -> Iri:
    return Iri(RDFS_NS + local)


def owl(local: str) -> Iri:
    return Iri(OWL_NS + local)


def xsd(local: str) -> Iri:
    return Iri(XSD_NS + local)


def nis(local: str) -> Iri:
    return Iri(NIS_NS + local)


RDF_TYPE = rdf("type")
RDF_FIRST = rdf("first")
RDF_REST = rdf("rest")
RDF_NIL = rdf("nil")
RDFS_SUBCLASSOF = rdfs("subClassOf")
RDFS_SUBPROPERTYOF = rdfs("subPropertyOf")
OWL_CLASS = owl("Class")
OWL_OBJECT_PROPERTY = owl("ObjectProperty")
OWL_DATATYPE_PROPERTY = owl("DatatypeProperty")
OWL_NAMED_INDIVIDUAL = owl("NamedIndividual")
OWL_RESTRICTION = owl("Restriction")
OWL_EQUIVALENTCLASS = owl("equivalentClass")
OWL_INTERSECTIONOF = owl("intersectionOf")
OWL_ONPROPERTY = owl("onProperty")
OWL_SOMEVALUESFROM = owl("someValuesFrom")
OWL_HASVALUE = owl("hasValue")
XSD_INT = xsd("int")
XSD_MAXINCLUSIVE = xsd("maxInclusive")
XSD_MININCLUSIVE = xsd("minInclusive")


# --------------------------------------------------------------------------
# Class expressions
# --------------------------------------------------------------------------


class Facet(str, Enum):
    MAX_INCLUSIVE = "MaxInclusive"
    MIN_INCLUSIVE = "MinInclusive"
    EXACT = "Exact"

    @property
    def token(self) -> str:
        return _FACET_TOKENS[self]

    @classmethod
    def from_token(cls, token: str) -> Facet:
        for facet, tok in _FACET_TOKENS.items():
            if tok == token:
                return facet
        raise ValueError(f"unknown facet {token!r}; expected max, min or exact")

    def admits(self, value: int, bound: int) -> bool:
        if self is Facet.MAX_INCLUSIVE:
            return value <= bound
        if self is Facet.MIN_INCLUSIVE:
            return value >= bound
        return value == bound


_FACET_TOKENS = {Facet.MAX_INCLUSIVE: "max", Facet.MIN_INCLUSIVE: "min", Facet.EXACT: "exact"}
_FACET_ORDER = {Facet.MAX_INCLUSIVE: 0, Facet.MIN_INCLUSIVE: 1, Facet.EXACT: 2}

FACET_PREDICATES: dict[Facet, Iri] = {
    Facet.MAX_INCLUSIVE: XSD_MAXINCLUSIVE,
    Facet.MIN_INCLUSIVE: XSD_MININCLUSIVE,
    Facet.EXACT: OWL_HASVALUE,
}


@dataclass(frozen=True)
class Named:
    cls: Iri

    def __str__(self) -> str:
        return self.cls.local


@dataclass(frozen=True)
class Intersection:
    conjuncts: tuple[ClassExpression, ...]

    def __init__(self, conjuncts: Iterable[ClassExpression]):
        conjuncts = tuple(conjuncts)
        if not conjuncts:
            raise ValueError("an intersection needs at least one conjunct")
        object.__setattr__(self, "conjuncts", conjuncts)

    def __str__(self) -> str:
        return "(" + " and ".join(str(c) for c in self.conjuncts) + ")"


@dataclass(frozen=True)
class ObjectSome:
    property: Iri
    filler: ClassExpression

    def __str__(self) -> str:
        return f"({self.property.local} some {self.filler})"


@dataclass(frozen=True)
class DataFacet:
    property: Iri
    facet: Facet
    bound: int

    def __str__(self) -> str:
        return f"({self.property.local} {self.facet.token} {self.bound})"


ClassExpression = Union[Named, Intersection, ObjectSome, DataFacet]


def expr_key(expr: ClassExpression) -> tuple:
    """Sort key: head IRI (class name, or property name for restrictions) first."""
    if isinstance(expr, Named):
        return (expr.cls.value, 0, ())
    if isinstance(expr, ObjectSome):
        return (expr.property.value, 1, (expr_key(expr.filler),))
    if isinstance(expr, DataFacet):
        return (expr.property.value, 2, (_FACET_ORDER[expr.facet], expr.bound))
    return ("", 3, tuple(expr_key(c) for c in expr.conjuncts))


def normalize(expr: ClassExpression) -> ClassExpression:
    """Flatten nested intersections, drop duplicate conjuncts, sort, collapse singletons."""
    if isinstance(expr, Named | DataFacet):
        return expr
    if isinstance(expr, ObjectSome):
        return ObjectSome(expr.property, normalize(expr.filler))
    flat: dict[ClassExpression, None] = {}
    for conjunct in expr.conjuncts:
        conjunct = normalize(conjunct)
        for part in conjunct.conjuncts if isinstance(conjunct, Intersection) else (conjunct,):
            flat[part] = None
    parts = sorted(flat, key=expr_key)
    if len(parts) == 1:
        return parts[0]
    return Intersection(parts)


def conjuncts(expr: ClassExpression) -> tuple[ClassExpression, ...]:
    return expr.conjuncts if isinstance(expr, Intersection) else (expr,)


def expression_depth(expr: ClassExpression) -> int:
    if isinstance(expr, Intersection):
        return 1 + max(expression_depth(c) for c in expr.conjuncts)
    if isinstance(expr, ObjectSome):
        return 1 + expression_depth(expr.filler)
    return 1


def _signature(expr: ClassExpression) -> Iterator[tuple[DeclKind, Iri]]:
    if isinstance(expr, Named):
        yield DeclKind.CLASS, expr.cls
    elif isinstance(expr, ObjectSome):
        yield DeclKind.OBJECT_PROPERTY, expr.property
        yield from _signature(expr.filler)
    elif isinstance(expr, DataFacet):
        yield DeclKind.DATA_PROPERTY, expr.property
    else:
        for c in expr.conjuncts:
            yield from _signature(c)


# --------------------------------------------------------------------------
# Axioms and assertions
# --------------------------------------------------------------------------


class DeclKind(str, Enum):
    CLASS = "Class"
    OBJECT_PROPERTY = "ObjectProperty"
    DATA_PROPERTY = "DataProperty"
    INDIVIDUAL = "Individual"


DECLARATION_TYPES: dict[DeclKind, Iri] = {
    DeclKind.CLASS: OWL_CLASS,
    DeclKind.OBJECT_PROPERTY: OWL_OBJECT_PROPERTY,
    DeclKind.DATA_PROPERTY: OWL_DATATYPE_PROPERTY,
    DeclKind.INDIVIDUAL: OWL_NAMED_INDIVIDUAL,
}
_DECL_ORDER = {kind: i for i, kind in enumerate(DeclKind)}


@dataclass(frozen=True)
class SubClassOf:
    sub: Iri
    sup: ClassExpression


@dataclass(frozen=True)
class EquivalentClasses:
    named: Iri
    definition: ClassExpression


@dataclass(frozen=True)
class SubPropertyOf:
    sub: Iri
    sup: Iri


@dataclass(frozen=True)
class Declaration:
    kind: DeclKind
    iri: Iri


@dataclass(frozen=True)
class ClassAssertion:
    cls: Iri
    individual: Iri


@dataclass(frozen=True)
class ObjectPropertyAssertion:
    property: Iri
    subject: Iri
    object: Iri


@dataclass(frozen=True)
class DataPropertyAssertion:
    property: Iri
    subject: Iri
    value: int


Axiom = Union[SubClassOf, EquivalentClasses, SubPropertyOf, Declaration]
Assertion = Union[ClassAssertion, ObjectPropertyAssertion, DataPropertyAssertion]


def axiom_key(ax: Axiom | Assertion) -> tuple:
    if isinstance(ax, Declaration):
        return (0, ax.iri.value, (_DECL_ORDER[ax.kind],))
    if isinstance(ax, SubClassOf):
        return (1, ax.sub.value, expr_key(ax.sup))
    if isinstance(ax, EquivalentClasses):
        return (2, ax.named.value, expr_key(ax.definition))
    if isinstance(ax, SubPropertyOf):
        return (3, ax.sub.value, (ax.sup.value,))
    if isinstance(ax, ClassAssertion):
        return (4, ax.individual.value, (ax.cls.value,))
    if isinstance(ax, ObjectPropertyAssertion):
        return (5, ax.subject.value, (ax.property.value, ax.object.value))
    return (6, ax.subject.value, (ax.property.value, ax.value))


def assertion_subject(a: Assertion) -> Iri:
    return a.individual if isinstance(a, ClassAssertion) else a.subject


def assertion_property(a: Assertion) -> Iri:
    return RDF_TYPE if isinstance(a, ClassAssertion) else a.property


# --------------------------------------------------------------------------
# Knowledge base
# --------------------------------------------------------------------------


class KnowledgeBase:
    """TBox + ABox with lookup indexes.

    Built by a single writer through :meth:`add_axiom` / :meth:`add_assertion`,
    then optionally :meth:`freeze`-d. Two knowledge bases compare equal when
    their axiom and assertion sets are equal; prefixes are presentation only.
    """

    __hash__ = None  # type: ignore[assignment]

    def __init__(self, prefixes: Mapping[str, str] | None = None):
        self.prefixes: dict[str, str] = dict(DEFAULT_PREFIXES)
        if prefixes:
            self.prefixes.update(prefixes)
        self.tbox: set[Axiom] = set()
        self.abox: set[Assertion] = set()
        self.index_by_subject: dict[Iri, set[Assertion]] = defaultdict(set)
        self.index_by_property: dict[Iri, set[Assertion]] = defaultdict(set)
        self._declared: dict[DeclKind, set[Iri]] = {kind: set() for kind in DeclKind}
        self._definitions: dict[Iri, ClassExpression] = {}
        self._told_super_properties: dict[Iri, set[Iri]] = defaultdict(set)
        self._frozen = False

    # -- construction ------------------------------------------------------

    def _check_mutable(self) -> None:
        if self._frozen:
            raise FrozenKnowledgeBase("knowledge base is frozen")

    def freeze(self) -> KnowledgeBase:
        self._frozen = True
        return self

    @property
    def frozen(self) -> bool:
        return self._frozen

    def declare(self, kind: DeclKind, iri: Iri) -> KnowledgeBase:
        return self.add_axiom(Declaration(kind, iri))

    def _declare(self, kind: DeclKind, iri: Iri) -> None:
        if iri not in self._declared[kind]:
            self._declared[kind].add(iri)
            self.tbox.add(Declaration(kind, iri))

    def add_axiom(self, ax: Axiom) -> KnowledgeBase:
        self._check_mutable()
        if isinstance(ax, SubClassOf):
            ax = SubClassOf(ax.sub, normalize(ax.sup))
            if ax in self.tbox:
                return self
            self._declare(DeclKind.CLASS, ax.sub)
            for kind, iri in _signature(ax.sup):
                self._declare(kind, iri)
        elif isinstance(ax, EquivalentClasses):
            ax = EquivalentClasses(ax.named, normalize(ax.definition))
            existing = self._definitions.get(ax.named)
            if existing is not None:
                if existing == ax.definition:
                    return self
                raise DuplicateDefinition(
                    f"{ax.named} already has a definition: {existing}"
                )
            self._definitions[ax.named] = ax.definition
            self._declare(DeclKind.CLASS, ax.named)
            for kind, iri in _signature(ax.definition):
                self._declare(kind, iri)
        elif isinstance(ax, SubPropertyOf):
            if ax in self.tbox:
                return self
            if ax.sub != ax.sup and ax.sub in self.super_properties(ax.sup):
                raise CyclicPropertyHierarchy(f"{ax.sup} is already a sub-property of {ax.sub}")
            data = self._declared[DeclKind.DATA_PROPERTY]
            kind = DeclKind.DATA_PROPERTY if ax.sub in data or ax.sup in data else DeclKind.OBJECT_PROPERTY
            self._declare(kind, ax.sub)
            self._declare(kind, ax.sup)
            self._told_super_properties[ax.sub].add(ax.sup)
        elif isinstance(ax, Declaration):
            self._declare(ax.kind, ax.iri)
            return self
        else:
            raise TypeError(f"not an axiom: {ax!r}")
        self.tbox.add(ax)
        return self

    def add_assertion(self, a: Assertion) -> KnowledgeBase:
        self._check_mutable()
        if a in self.abox:
            return self
        if isinstance(a, ClassAssertion):
            self._declare(DeclKind.CLASS, a.cls)
            self._declare(DeclKind.INDIVIDUAL, a.individual)
        elif isinstance(a, ObjectPropertyAssertion):
            self._declare(DeclKind.OBJECT_PROPERTY, a.property)
            self._declare(DeclKind.INDIVIDUAL, a.subject)
            self._declare(DeclKind.INDIVIDUAL, a.object)
        elif isinstance(a, DataPropertyAssertion):
            if isinstance(a.value, bool) or not isinstance(a.value, int):
                raise TypeError(f"data values must be integers, got {a.value!r}")
            self._declare(DeclKind.DATA_PROPERTY, a.property)
            self._declare(DeclKind.INDIVIDUAL, a.subject)
        else:
            raise TypeError(f"not an assertion: {a!r}")
        self.abox.add(a)
        self.index_by_subject[assertion_subject(a)].add(a)
        self.index_by_property[assertion_property(a)].add(a)
        return self

    def add(self, item: Axiom | Assertion) -> KnowledgeBase:
        if isinstance(item, ClassAssertion | ObjectPropertyAssertion | DataPropertyAssertion):
            return self.add_assertion(item)
        return self.add_axiom(item)

    def update(self, items: Iterable[Axiom | Assertion]) -> KnowledgeBase:
        for item in items:
            self.add(item)
        return self

    def merge(self, other: KnowledgeBase) -> KnowledgeBase:
        """Union another KB into this one (other's prefixes never override ours)."""
        for label, ns in other.prefixes.items():
            self.prefixes.setdefault(label, ns)
        return self.update(sorted(other.tbox, key=axiom_key)).update(
            sorted(other.abox, key=axiom_key)
        )

    def copy(self) -> KnowledgeBase:
        return KnowledgeBase(self.prefixes).merge(self)

    # -- reads ---------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, KnowledgeBase):
            return NotImplemented
        return self.tbox == other.tbox and self.abox == other.abox

    def __contains__(self, item: object) -> bool:
        return item in self.tbox or item in self.abox

    def __repr__(self) -> str:
        return f"<KnowledgeBase {len(self.tbox)} axioms, {len(self.abox)} assertions>"

    def declared(self, kind: DeclKind) -> list[Iri]:
        return sorted(self._declared[kind])

    def is_declared(self, iri: Iri, kind: DeclKind) -> bool:
        return iri in self._declared[kind]

    @property
    def classes(self) -> list[Iri]:
        return self.declared(DeclKind.CLASS)

    @property
    def object_properties(self) -> list[Iri]:
        return self.declared(DeclKind.OBJECT_PROPERTY)

    @property
    def data_properties(self) -> list[Iri]:
        return self.declared(DeclKind.DATA_PROPERTY)

    @property
    def individuals(self) -> list[Iri]:
        return self.declared(DeclKind.INDIVIDUAL)

    def axioms(self, *, declarations: bool = True) -> list[Axiom]:
        items = self.tbox if declarations else (a for a in self.tbox if not isinstance(a, Declaration))
        return sorted(items, key=axiom_key)

    def assertions(self) -> list[Assertion]:
        return sorted(self.abox, key=axiom_key)

    def definition(self, cls: Iri) -> ClassExpression | None:
        return self._definitions.get(cls)

    def definitions(self) -> dict[Iri, ClassExpression]:
        return {cls: self._definitions[cls] for cls in sorted(self._definitions)}

    def subclass_axioms(self) -> list[SubClassOf]:
        return [a for a in self.axioms() if isinstance(a, SubClassOf)]

    def told_super_properties(self, prop: Iri) -> list[Iri]:
        return sorted(self._told_super_properties.get(prop, ()))

    def super_properties(self, prop: Iri) -> set[Iri]:
        """Reflexive-transitive closure of the asserted sub-property relation."""
        seen = {prop}
        stack = [prop]
        while stack:
            for sup in self._told_super_properties.get(stack.pop(), ()):
                if sup not in seen:
                    seen.add(sup)
                    stack.append(sup)
        return seen

    def assertions_about(self, subject: Iri) -> list[Assertion]:
        return sorted(self.index_by_subject.get(subject, ()), key=axiom_key)

    def assertions_with(self, prop: Iri) -> list[Assertion]:
        return sorted(self.index_by_property.get(prop, ()), key=axiom_key)

    # -- prefixed names ----------------------------------------------------------

    def resolve(self, name: str) -> Iri:
        return resolve_name(name, self.prefixes)

    def compact(self, iri: Iri) -> str:
        return compact_iri(iri, self.prefixes)

    def check_invariants(self) -> list[str]:
        """Return a description of every violated structural invariant (empty when valid)."""
        problems = []
        by_subject: dict[Iri, set[Assertion]] = defaultdict(set)
        by_property: dict[Iri, set[Assertion]] = defaultdict(set)
        for a in self.abox:
            by_subject[assertion_subject(a)].add(a)
            by_property[assertion_property(a)].add(a)
        if {k: v for k, v in self.index_by_subject.items() if v} != by_subject:
            problems.append("subject index disagrees with the ABox")
        if {k: v for k, v in self.index_by_property.items() if v} != by_property:
            problems.append("property index disagrees with the ABox")
        for ax in self.axioms(declarations=False):
            expr = ax.sup if isinstance(ax, SubClassOf) else getattr(ax, "definition", None)
            if expr is not None:
                if normalize(expr) != expr:
                    problems.append(f"expression not normalized in {ax}")
                for kind, iri in _signature(expr):
                    if iri not in self._declared[kind]:
                        problems.append(f"{iri} used as {kind.value} without declaration")
        for prop in self._told_super_properties:
            for sup in self._told_super_properties[prop]:
                if sup != prop and prop in self.super_properties(sup):
                    problems.append(f"cyclic property hierarchy through {prop}")
        return problems


def resolve_name(name: str, prefixes: Mapping[str, str]) -> Iri:
    """Expand ``prefix:local`` or ``<absolute-iri>`` text."""
    name = name.strip()
    if name.startswith("<") and name.endswith(">"):
        return Iri(name[1:-1])
    label, sep, local = name.partition(":")
    if not sep:
        raise ValueError(f"not a prefixed name: {name!r}")
    if label not in prefixes:
        raise ValueError(f"unknown prefix {label!r} in {name!r}")
    return Iri(prefixes[label] + local)


def compact_iri(iri: Iri, prefixes: Mapping[str, str]) -> str:
    best: tuple[int, str] | None = None
    for label, ns in prefixes.items():
        if ns and iri.value.startswith(ns):
            rest = iri.value[len(ns):]
            if _LOCAL_RE.match(rest):
                cand = (-len(ns), label)
                if best is None or cand < best:
                    best = cand
    if best is None:
        return f"<{iri.value}>"
    ns = prefixes[best[1]]
    return f"{best[1]}:{iri.value[len(ns):]}"


# --------------------------------------------------------------------------
# RDF lowering
# --------------------------------------------------------------------------


class _Lowering:
    def __init__(self) -> None:
        self.triples: list[Triple] = []
        self._counter = 0

    def fresh(self) -> BNode:
        node = BNode(f"b{self._counter}")
        self._counter += 1
        return node

    def node(self, expr: ClassExpression) -> Term:
        if isinstance(expr, Named):
            return expr.cls
        out = self.triples
        b = self.fresh()
        if isinstance(expr, Intersection):
            out.append((b, RDF_TYPE, OWL_CLASS))
            out.append((b, OWL_INTERSECTIONOF, self.collection([self.node(c) for c in expr.conjuncts])))
        elif isinstance(expr, ObjectSome):
            out.append((b, RDF_TYPE, OWL_RESTRICTION))
            out.append((b, OWL_ONPROPERTY, expr.property))
            out.append((b, OWL_SOMEVALUESFROM, self.node(expr.filler)))
        else:
            out.append((b, RDF_TYPE, OWL_RESTRICTION))
            out.append((b, OWL_ONPROPERTY, expr.property))
            out.append((b, FACET_PREDICATES[expr.facet], Literal(expr.bound, XSD_INT)))
        return b

    def collection(self, items: list[Term]) -> Term:
        cells = [self.fresh() for _ in items]
        for i, (cell, item) in enumerate(zip(cells, items)):
            self.triples.append((cell, RDF_FIRST, item))
            self.triples.append((cell, RDF_REST, cells[i + 1] if i + 1 < len(cells) else RDF_NIL))
        return cells[0] if cells else RDF_NIL


def definition_form(expr: ClassExpression) -> Intersection:
    """Definitions are always written as an intersection list, even with one conjunct.

    This keeps every definition reachable by list-walking queries
    (``owl:intersectionOf`` / ``rdf:rest*``); parsing collapses it again.
    """
    return expr if isinstance(expr, Intersection) else Intersection([expr])


def lower_expression(expr: ClassExpression) -> tuple[Term, list[Triple]]:
    """Lower one class expression; returns its root node and the generated triples."""
    lowering = _Lowering()
    root = lowering.node(expr)
    return root, lowering.triples


def rdf_view(kb: KnowledgeBase) -> set[Triple]:
    """The KB as RDF triples, restrictions and list cells as blank nodes.

    Blank-node labels follow the sorted-axiom traversal, so repeated calls give
    identical sets.
    """
    low = _Lowering()
    out = low.triples
    for ax in kb.axioms():
        if isinstance(ax, Declaration):
            out.append((ax.iri, RDF_TYPE, DECLARATION_TYPES[ax.kind]))
        elif isinstance(ax, SubClassOf):
            out.append((ax.sub, RDFS_SUBCLASSOF, low.node(ax.sup)))
        elif isinstance(ax, EquivalentClasses):
            out.append((ax.named, OWL_EQUIVALENTCLASS, low.node(definition_form(ax.definition))))
        else:
            out.append((ax.sub, RDFS_SUBPROPERTYOF, ax.sup))
    for a in kb.assertions():
        if isinstance(a, ClassAssertion):
            out.append((a.individual, RDF_TYPE, a.cls))
        elif isinstance(a, ObjectPropertyAssertion):
            out.append((a.subject, a.property, a.object))
        else:
            out.append((a.subject, a.property, Literal(a.value, XSD_INT)))
    return set(out)


def sorted_triples(triples: Iterable[Triple]) -> list[Triple]:
    return sorted(triples, key=triple_key)
