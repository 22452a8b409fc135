"""Measure DSL: a line-oriented text form of interpreted directive measures.

Grammar (``#`` starts a comment)::

    entity <Agent|System|Object> <Name>
    relation <verb>
    article <ArticleName> for <AgentName>:
        <verb> <ObjectName>
        ...
    clause <Subject> <verb> <Object>
    qualify <Class> <property> <max|min|exact> <integer>

Bare names live in the ``nis:`` namespace; ``owl:Thing``-style prefixed names
may use any default prefix. Article agents must be declared ``Agent``
entities. Objects of measures, clauses and qualifiers may be left undeclared,
in which case the compiler declares them as plain classes.
"""

from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass, field
from pathlib import Path

from .errors import DslSyntaxError, DuplicateArticleBlock, DuplicateEntity, UndeclaredEntity
from .kb import (
    DEFAULT_PREFIXES,
    NIS_NS,
    DataFacet,
    DeclKind,
    EquivalentClasses,
    Facet,
    Intersection,
    Iri,
    KnowledgeBase,
    Named,
    ObjectSome,
    SubClassOf,
    nis,
)

ENTITY_KINDS = ("Agent", "System", "Object")

ACTOR = nis("Actor")
AGENT = nis("Agent")
SYSTEM = nis("System")
NIS_ARTICLES = nis("NisArticles")
SCAFFOLD_CLASSES = (ACTOR, AGENT, SYSTEM, NIS_ARTICLES)

_NAME_RE = re.compile(r"(?:[A-Za-z][\w\-]*:)?[A-Za-z_][\w\-]*\Z")
_ARTICLE_RE = re.compile(r"article\s+(\S+)\s+for\s+(\S+?)\s*:\Z")
_INT_RE = re.compile(r"[+-]?\d+\Z")


@dataclass(frozen=True)
class Measure:
    task: Iri
    object: Iri


@dataclass(frozen=True)
class ArticleBlock:
    article: Iri
    agent: Iri
    measures: tuple[Measure, ...]

    @property
    def cls(self) -> Iri:
        """The article-agent class, e.g. ``nis:Article10-MemberState``."""
        return article_class(self.article, self.agent)


@dataclass(frozen=True)
class Clause:
    subject: Iri
    verb: Iri
    object: Iri


@dataclass(frozen=True)
class Qualifier:
    cls: Iri
    property: Iri
    facet: Facet
    bound: int


@dataclass
class MeasureSet:
    entities: list[tuple[str, Iri]] = field(default_factory=list)
    articles: list[ArticleBlock] = field(default_factory=list)
    clauses: list[Clause] = field(default_factory=list)
    qualifiers: list[Qualifier] = field(default_factory=list)
    relations: list[Iri] = field(default_factory=list)

    def entity_kind(self, iri: Iri) -> str | None:
        for kind, name in self.entities:
            if name == iri:
                return kind
        return None

    def validate(self) -> None:
        kinds: dict[Iri, str] = {}
        for kind, name in self.entities:
            if kind not in ENTITY_KINDS:
                raise DslSyntaxError(f"unknown entity kind {kind!r}")
            if name in kinds:
                raise DuplicateEntity(f"entity {name.local} declared twice")
            kinds[name] = kind
        seen = set()
        for block in self.articles:
            if kinds.get(block.agent) != "Agent":
                raise UndeclaredEntity(f"no Agent entity named {block.agent.local}")
            if (block.article, block.agent) in seen:
                raise DuplicateArticleBlock(f"{block.article.local} for {block.agent.local} given twice")
            if not block.measures:
                raise DslSyntaxError(f"article {block.article.local} for {block.agent.local} has no measures")
            seen.add((block.article, block.agent))


def article_class(article: Iri, agent: Iri) -> Iri:
    return Iri(f"{article.namespace}{article.local}-{agent.local}")


def _name(token: str, lineno: int) -> Iri:
    if not _NAME_RE.match(token):
        raise DslSyntaxError(f"invalid name {token!r}", lineno)
    label, sep, local = token.partition(":")
    if not sep:
        return Iri(NIS_NS + token)
    if label not in DEFAULT_PREFIXES:
        raise DslSyntaxError(f"unknown prefix {label!r}", lineno)
    return Iri(DEFAULT_PREFIXES[label] + local)


def parse_measures(text: str) -> MeasureSet:
    ms = MeasureSet()
    entity_lines: dict[Iri, int] = {}
    block_lines: dict[tuple[Iri, Iri], int] = {}
    relations: dict[Iri, None] = {}
    current: tuple[Iri, Iri, list[Measure], int] | None = None

    def close() -> None:
        nonlocal current
        if current is None:
            return
        article, agent, measures, header = current
        if not measures:
            raise DslSyntaxError(f"article {article.local} for {agent.local} has no measures", header)
        if (article, agent) in block_lines:
            raise DuplicateArticleBlock(f"{article.local} for {agent.local} already given", header)
        block_lines[(article, agent)] = header
        ms.articles.append(ArticleBlock(article, agent, tuple(measures)))
        current = None

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        tokens = line.split()
        if line[0] in " \t":
            if current is None:
                raise DslSyntaxError("indented line outside an article block", lineno)
            if len(tokens) != 2:
                raise DslSyntaxError("measure lines take the form '<verb> <Object>'", lineno)
            current[2].append(Measure(_name(tokens[0], lineno), _name(tokens[1], lineno)))
            continue
        close()
        keyword = tokens[0]
        if keyword == "entity":
            if len(tokens) != 3 or tokens[1] not in ENTITY_KINDS:
                raise DslSyntaxError("expected 'entity <Agent|System|Object> <Name>'", lineno)
            iri = _name(tokens[2], lineno)
            if iri in entity_lines:
                raise DuplicateEntity(
                    f"entity {tokens[2]} already declared on line {entity_lines[iri]}", lineno
                )
            entity_lines[iri] = lineno
            ms.entities.append((tokens[1], iri))
        elif keyword == "relation":
            if len(tokens) != 2:
                raise DslSyntaxError("expected 'relation <verb>'", lineno)
            relations[_name(tokens[1], lineno)] = None
        elif keyword == "article":
            m = _ARTICLE_RE.match(" ".join(tokens))
            if not m:
                raise DslSyntaxError("expected 'article <ArticleName> for <AgentName>:'", lineno)
            current = (_name(m.group(1), lineno), _name(m.group(2), lineno), [], lineno)
        elif keyword == "clause":
            if len(tokens) != 4:
                raise DslSyntaxError("expected 'clause <Subject> <verb> <Object>'", lineno)
            s, v, o = (_name(t, lineno) for t in tokens[1:])
            ms.clauses.append(Clause(s, v, o))
        elif keyword == "qualify":
            if len(tokens) != 5 or not _INT_RE.match(tokens[4]):
                raise DslSyntaxError("expected 'qualify <Class> <property> <max|min|exact> <integer>'", lineno)
            try:
                facet = Facet.from_token(tokens[3])
            except ValueError as exc:
                raise DslSyntaxError(str(exc), lineno) from None
            ms.qualifiers.append(
                Qualifier(_name(tokens[1], lineno), _name(tokens[2], lineno), facet, int(tokens[4]))
            )
        else:
            raise DslSyntaxError(f"unknown statement {keyword!r}", lineno)
    close()
    ms.relations = list(relations)

    for block in ms.articles:
        if ms.entity_kind(block.agent) != "Agent":
            raise UndeclaredEntity(
                f"no Agent entity named {block.agent.local}", block_lines[(block.article, block.agent)]
            )
    return ms


def load_measures(path: str | Path) -> MeasureSet:
    return parse_measures(Path(path).read_text(encoding="utf-8"))


def scaffold() -> KnowledgeBase:
    kb = KnowledgeBase()
    for cls in SCAFFOLD_CLASSES:
        kb.declare(DeclKind.CLASS, cls)
    kb.add_axiom(SubClassOf(AGENT, Named(ACTOR)))
    kb.add_axiom(SubClassOf(SYSTEM, Named(ACTOR)))
    return kb


def compile_measures(ms: MeasureSet) -> KnowledgeBase:
    """Compile a measure set into a TBox.

    Each article block becomes an article-agent class defined by the
    intersection of its ``task some Object`` restrictions; each agent with
    blocks is defined as ``Agent`` intersected with its article-agent classes.
    """
    ms.validate()
    kb = scaffold()
    for verb in ms.relations:
        kb.declare(DeclKind.OBJECT_PROPERTY, verb)

    blocks_by_agent: dict[Iri, list[ArticleBlock]] = defaultdict(list)
    for block in ms.articles:
        blocks_by_agent[block.agent].append(block)

    for kind, iri in ms.entities:
        kb.declare(DeclKind.CLASS, iri)
        if kind == "System":
            kb.add_axiom(SubClassOf(iri, Named(SYSTEM)))
        elif kind == "Agent" and iri not in blocks_by_agent:
            kb.add_axiom(SubClassOf(iri, Named(AGENT)))

    for block in ms.articles:
        restrictions = [ObjectSome(m.task, Named(m.object)) for m in block.measures]
        kb.add_axiom(EquivalentClasses(block.cls, Intersection(restrictions)))
        kb.add_axiom(SubClassOf(block.cls, Named(block.article)))
        kb.add_axiom(SubClassOf(block.article, Named(NIS_ARTICLES)))

    for agent, blocks in blocks_by_agent.items():
        parts = [Named(AGENT)] + [Named(b.cls) for b in blocks]
        kb.add_axiom(EquivalentClasses(agent, Intersection(parts)))

    for clause in ms.clauses:
        kb.add_axiom(SubClassOf(clause.subject, ObjectSome(clause.verb, Named(clause.object))))
    for q in ms.qualifiers:
        kb.add_axiom(SubClassOf(q.cls, DataFacet(q.property, q.facet, q.bound)))
    return kb
