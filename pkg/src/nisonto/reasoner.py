"""Classification and realization by saturation.

Classification computes, for every named class, the set of named classes that
subsume it. Each class carries the *told* structure of its definition and of
its asserted superclass expressions; a defined class D subsumes C as soon as
C (through its current subsumers) satisfies every conjunct of D's definition.
Complex fillers of told restrictions are treated as anonymous nodes of their
own so that filler subsumption is decided by the same fixpoint.

Realization types individuals from their asserted classes and asserted role
edges only: an existential restriction is met by an explicit edge to an
individual meeting the filler, never by an invented witness. A data facet is
met when at least one asserted value of the property falls inside the bound.
Individual types advance in synchronized rounds until nothing changes.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from typing import Hashable, Iterable, Iterator, Mapping

from .errors import UnknownIndividual
from .kb import (
    ClassAssertion,
    ClassExpression,
    DataFacet,
    DataPropertyAssertion,
    DeclKind,
    Facet,
    Iri,
    KnowledgeBase,
    Named,
    ObjectPropertyAssertion,
    ObjectSome,
    conjuncts,
    normalize,
)

Node = Hashable  # an Iri for named classes, a ClassExpression for anonymous fillers


def facet_implies(held: DataFacet, required: DataFacet) -> bool:
    """Whether a told facet guarantees a required one on the same property."""
    if held.property != required.property:
        return False
    if held.facet is Facet.EXACT:
        return required.facet.admits(held.bound, required.bound)
    return held.facet is required.facet and required.facet.admits(held.bound, required.bound)


class SubsumptionMap:
    """Reflexive, transitive subsumption over named classes."""

    def __init__(self, supers: Mapping[Iri, Iterable[Iri]]):
        self._supers = {c: frozenset(s) for c, s in sorted(supers.items())}
        subs: dict[Iri, set[Iri]] = defaultdict(set)
        for c, sups in self._supers.items():
            for d in sups:
                subs[d].add(c)
        self._subs = {d: frozenset(s) for d, s in subs.items()}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SubsumptionMap):
            return NotImplemented
        return self._supers == other._supers

    __hash__ = None  # type: ignore[assignment]

    def __iter__(self) -> Iterator[tuple[Iri, Iri]]:
        return iter(self.pairs)

    def __len__(self) -> int:
        return sum(len(s) for s in self._supers.values())

    def __contains__(self, pair: object) -> bool:
        return isinstance(pair, tuple) and len(pair) == 2 and self.is_subclass(*pair)

    @property
    def pairs(self) -> list[tuple[Iri, Iri]]:
        return [(c, d) for c in self._supers for d in sorted(self._supers[c])]

    @property
    def classes(self) -> list[Iri]:
        return list(self._supers)

    def is_subclass(self, sub: Iri, sup: Iri) -> bool:
        return sup in self._supers.get(sub, ())

    def supers(self, cls: Iri) -> frozenset[Iri]:
        return self._supers.get(cls, frozenset((cls,)))

    def superclasses(self, cls: Iri) -> list[Iri]:
        return sorted(self.supers(cls))

    def subclasses(self, cls: Iri) -> list[Iri]:
        return sorted(self._subs.get(cls, (cls,)))

    def equivalents(self, cls: Iri) -> list[Iri]:
        return sorted(d for d in self.supers(cls) if self.is_subclass(d, cls))

    def direct_superclasses(self, cls: Iri) -> list[Iri]:
        """Strict subsumers with no other strict subsumer in between."""
        strict = {d for d in self.supers(cls) if not self.is_subclass(d, cls)}
        return sorted(
            d for d in strict
            if not any(e != d and self.is_subclass(e, d) and not self.is_subclass(d, e) for e in strict)
        )


class TypeMap:
    """Individual -> named classes it belongs to."""

    def __init__(self, entries: Mapping[Iri, Iterable[Iri]]):
        self._entries = {a: frozenset(t) for a, t in sorted(entries.items())}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TypeMap):
            return NotImplemented
        return self._entries == other._entries

    __hash__ = None  # type: ignore[assignment]

    def __iter__(self) -> Iterator[Iri]:
        return iter(self._entries)

    def __getitem__(self, individual: Iri) -> frozenset[Iri]:
        return self._entries[individual]

    def __contains__(self, individual: object) -> bool:
        return individual in self._entries

    def types(self, individual: Iri) -> list[Iri]:
        return sorted(self._entries.get(individual, ()))

    def has_type(self, individual: Iri, cls: Iri) -> bool:
        return cls in self._entries.get(individual, ())

    def items(self) -> list[tuple[Iri, frozenset[Iri]]]:
        return list(self._entries.items())

    @property
    def pairs(self) -> list[tuple[Iri, Iri]]:
        return [(a, c) for a, ts in self._entries.items() for c in sorted(ts)]

    def assertions(self) -> list[ClassAssertion]:
        return [ClassAssertion(c, a) for a, c in self.pairs]


# --------------------------------------------------------------------------
# shared structure
# --------------------------------------------------------------------------


def _key(conj: ClassExpression) -> tuple:
    if isinstance(conj, Named):
        return ("N", conj.cls)
    if isinstance(conj, ObjectSome):
        if isinstance(conj.filler, Named):
            return ("S", conj.property, conj.filler.cls)
        return ("S", conj.property)
    if isinstance(conj, DataFacet):
        return ("F", conj.property)
    raise TypeError(f"not a conjunct: {conj!r}")


class _Tbox:
    """Definitions indexed for candidate lookup, plus the property closure."""

    def __init__(self, kb: KnowledgeBase):
        self.kb = kb
        self.definitions = kb.definitions()
        self._prop_supers: dict[Iri, frozenset[Iri]] = {}
        freq = Counter(_key(c) for d in self.definitions.values() for c in conjuncts(d))
        self.index: dict[tuple, list[Iri]] = defaultdict(list)
        for cls, definition in self.definitions.items():
            trigger = min((_key(c) for c in conjuncts(definition)), key=lambda k: (freq[k], repr(k)))
            self.index[trigger].append(cls)

    def prop_supers(self, prop: Iri) -> frozenset[Iri]:
        found = self._prop_supers.get(prop)
        if found is None:
            found = self._prop_supers[prop] = frozenset(self.kb.super_properties(prop))
        return found

    def candidates(self, keys: Iterable[tuple]) -> list[Iri]:
        out: set[Iri] = set()
        for k in keys:
            out.update(self.index.get(k, ()))
        return sorted(out)


# --------------------------------------------------------------------------
# classification
# --------------------------------------------------------------------------


class _Classifier:
    def __init__(self, kb: KnowledgeBase):
        self.t = _Tbox(kb)
        self.told: dict[Node, list[ClassExpression]] = defaultdict(list)
        self.nodes: list[Node] = list(kb.classes)
        for cls, definition in self.t.definitions.items():
            self._tell(cls, definition)
        for ax in kb.subclass_axioms():
            self._tell(ax.sub, ax.sup)
        self.sups: dict[Node, set[Node]] = {}
        for node in self.nodes:
            self.sups[node] = {node} | {c.cls for c in self.told[node] if isinstance(c, Named)}

    def _tell(self, node: Node, expr: ClassExpression) -> None:
        for c in conjuncts(expr):
            if c not in self.told[node]:
                self.told[node].append(c)
            if isinstance(c, ObjectSome):
                self._filler_node(c.filler)

    def _filler_node(self, filler: ClassExpression) -> None:
        if isinstance(filler, Named) or filler in self.told:
            return
        self.nodes.append(filler)
        self.told[filler] = []
        self._tell(filler, filler)

    @staticmethod
    def node_of(expr: ClassExpression) -> Node:
        return expr.cls if isinstance(expr, Named) else expr

    def atoms(self, node: Node) -> Iterator[ClassExpression]:
        for d in self.sups[node]:
            for c in self.told[d]:
                if not isinstance(c, Named):
                    yield c

    def keys(self, node: Node) -> set[tuple]:
        keys = {("N", d) for d in self.sups[node] if isinstance(d, Iri)}
        for atom in self.atoms(node):
            if isinstance(atom, ObjectSome):
                filler_sups = self.sups[self.node_of(atom.filler)]
                for q in self.t.prop_supers(atom.property):
                    keys.add(("S", q))
                    keys.update(("S", q, b) for b in filler_sups if isinstance(b, Iri))
            else:
                keys.add(("F", atom.property))
        return keys

    def satisfies(self, node: Node, required: ClassExpression) -> bool:
        for req in conjuncts(required):
            if isinstance(req, Named):
                if req.cls not in self.sups[node]:
                    return False
            elif isinstance(req, ObjectSome):
                if not any(
                    isinstance(a, ObjectSome)
                    and req.property in self.t.prop_supers(a.property)
                    and self.satisfies(self.node_of(a.filler), req.filler)
                    for a in self.atoms(node)
                ):
                    return False
            elif isinstance(req, DataFacet):
                if not any(isinstance(a, DataFacet) and facet_implies(a, req) for a in self.atoms(node)):
                    return False
            else:
                raise TypeError(req)
        return True

    def run(self) -> SubsumptionMap:
        changed = True
        while changed:
            changed = False
            for node in self.nodes:
                sups = self.sups[node]
                before = len(sups)
                while True:
                    size = len(sups)
                    for d in list(sups):
                        if d != node:
                            sups |= self.sups[d]
                    for d in self.t.candidates(self.keys(node)):
                        if d not in sups and self.satisfies(node, self.t.definitions[d]):
                            sups.add(d)
                            sups |= self.sups[d]
                    if len(sups) == size:
                        break
                if len(sups) != before:
                    changed = True
        return SubsumptionMap(
            {n: {d for d in self.sups[n] if isinstance(d, Iri)} for n in self.nodes if isinstance(n, Iri)}
        )


def classify(kb: KnowledgeBase) -> SubsumptionMap:
    return _Classifier(kb).run()


# --------------------------------------------------------------------------
# realization
# --------------------------------------------------------------------------


class _Abox:
    def __init__(self, kb: KnowledgeBase):
        self.edges: dict[Iri, list[tuple[Iri, Iri]]] = defaultdict(list)
        self.values: dict[Iri, dict[Iri, list[int]]] = defaultdict(lambda: defaultdict(list))
        self.asserted: dict[Iri, set[Iri]] = {a: set() for a in kb.individuals}
        for a in kb.assertions():
            if isinstance(a, ClassAssertion):
                self.asserted[a.individual].add(a.cls)
            elif isinstance(a, ObjectPropertyAssertion):
                self.edges[a.subject].append((a.property, a.object))
            elif isinstance(a, DataPropertyAssertion):
                self.values[a.subject][a.property].append(a.value)


def _satisfies(
    individual: Iri,
    required: ClassExpression,
    types: Mapping[Iri, frozenset[Iri] | set[Iri]],
    abox: _Abox,
    t: _Tbox,
) -> bool:
    for req in conjuncts(required):
        if isinstance(req, Named):
            if req.cls not in types.get(individual, ()):
                return False
        elif isinstance(req, ObjectSome):
            if not any(
                req.property in t.prop_supers(p) and _satisfies(b, req.filler, types, abox, t)
                for p, b in abox.edges.get(individual, ())
            ):
                return False
        elif isinstance(req, DataFacet):
            held = abox.values.get(individual, {}).get(req.property, ())
            if not any(req.facet.admits(v, req.bound) for v in held):
                return False
        else:
            raise TypeError(req)
    return True


def _individual_keys(individual: Iri, types: Mapping[Iri, set[Iri]], abox: _Abox, t: _Tbox) -> set[tuple]:
    keys = {("N", c) for c in types[individual]}
    for p, b in abox.edges.get(individual, ()):
        for q in t.prop_supers(p):
            keys.add(("S", q))
            keys.update(("S", q, c) for c in types.get(b, ()))
    for d in abox.values.get(individual, {}):
        keys.add(("F", d))
    return keys


def realize(kb: KnowledgeBase, subs: SubsumptionMap) -> TypeMap:
    t = _Tbox(kb)
    abox = _Abox(kb)
    types: dict[Iri, set[Iri]] = {}
    for a, asserted in abox.asserted.items():
        types[a] = set()
        for c in asserted:
            types[a] |= subs.supers(c)
    while True:
        additions: dict[Iri, set[Iri]] = {}
        for a in sorted(types):
            for d in t.candidates(_individual_keys(a, types, abox, t)):
                if d not in types[a] and _satisfies(a, t.definitions[d], types, abox, t):
                    additions.setdefault(a, set()).update(subs.supers(d))
        if not any(additions[a] - types[a] for a in additions):
            break
        for a, new in additions.items():
            types[a] |= new
    return TypeMap(types)


class InstanceChecker:
    """Answers "does this individual meet this expression" against a fixed TypeMap."""

    def __init__(self, kb: KnowledgeBase, types: TypeMap):
        self.kb = kb
        self._entries = {a: types[a] for a in types}
        self._abox = _Abox(kb)
        self._tbox = _Tbox(kb)

    def __call__(self, individual: Iri, expr: ClassExpression) -> bool:
        if not self.kb.is_declared(individual, DeclKind.INDIVIDUAL):
            raise UnknownIndividual(str(individual))
        return _satisfies(individual, normalize(expr), self._entries, self._abox, self._tbox)


def entails_instance(
    kb: KnowledgeBase,
    subs: SubsumptionMap,
    individual: Iri,
    expr: ClassExpression,
    types: TypeMap | None = None,
) -> bool:
    """Whether ``individual`` meets ``expr`` under the realization rules."""
    if not kb.is_declared(individual, DeclKind.INDIVIDUAL):
        raise UnknownIndividual(str(individual))
    if types is None:
        types = realize(kb, subs)
    return InstanceChecker(kb, types)(individual, expr)


class Reasoner:
    """Classify and realize once; answer instance questions from the cached result."""

    def __init__(self, kb: KnowledgeBase):
        self.kb = kb
        self.subsumption = classify(kb)
        self.types = realize(kb, self.subsumption)
        self.entails = InstanceChecker(kb, self.types)
