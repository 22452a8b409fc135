"""Turtle subset reader and writer.

Reading happens in two steps. The tokenizer and recursive-descent parser
produce plain triples with source positions. The lifter then recognises the
OWL patterns the engine understands (declarations, subclass and equivalence
axioms, intersections as RDF collections, someValuesFrom and integer-facet
restrictions, individual assertions) and turns them into axioms. Triples the
lifter cannot place are reported as warnings rather than dropped.

Supported syntax: ``@prefix``/``PREFIX``, ``;`` and ``,`` abbreviations,
``a``, labelled and anonymous blank nodes, collections, short strings,
integers and ``"n"^^datatype`` literals. Base IRIs, long strings, language
tags and decimals are rejected.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from pathlib import Path

from .errors import LiftError, ParseDiagnostic, Severity, TurtleSyntaxError
from .kb import (
    DECLARATION_TYPES,
    FACET_PREDICATES,
    OWL_EQUIVALENTCLASS,
    OWL_INTERSECTIONOF,
    OWL_NS,
    OWL_ONPROPERTY,
    OWL_RESTRICTION,
    OWL_SOMEVALUESFROM,
    RDF_FIRST,
    RDF_NIL,
    RDF_NS,
    RDF_REST,
    RDF_TYPE,
    RDFS_NS,
    RDFS_SUBCLASSOF,
    RDFS_SUBPROPERTYOF,
    XSD_INT,
    XSD_NS,
    Assertion,
    Axiom,
    DEFAULT_PREFIXES,
    BNode,
    ClassAssertion,
    ClassExpression,
    DataFacet,
    DataPropertyAssertion,
    Declaration,
    DeclKind,
    EquivalentClasses,
    Intersection,
    Iri,
    KnowledgeBase,
    Literal,
    Named,
    ObjectPropertyAssertion,
    ObjectSome,
    SubClassOf,
    SubPropertyOf,
    Term,
    Triple,
    compact_iri,
    definition_form,
    expr_key,
    rdfs,
    xsd,
)

log = logging.getLogger(__name__)

INTEGER_DATATYPES = frozenset(
    xsd(name)
    for name in (
        "int", "integer", "long", "short", "byte", "nonNegativeInteger",
        "positiveInteger", "negativeInteger", "nonPositiveInteger",
        "unsignedInt", "unsignedLong", "unsignedShort", "unsignedByte",
    )
)
XSD_STRING = xsd("string")
XSD_INTEGER = xsd("integer")
XSD_BOOLEAN = xsd("boolean")

_RESERVED_NAMESPACES = (RDF_NS, RDFS_NS, OWL_NS, XSD_NS)
_DECLARATION_BY_TYPE = {iri: kind for kind, iri in DECLARATION_TYPES.items()}
_DECLARATION_BY_TYPE[rdfs("Class")] = DeclKind.CLASS
_FACET_BY_PREDICATE = {iri: facet for facet, iri in FACET_PREDICATES.items()}


def _reserved(iri: Iri) -> bool:
    return iri.value.startswith(_RESERVED_NAMESPACES)


# --------------------------------------------------------------------------
# Tokenizer
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    offset: int
    line: int
    column: int


_TOKEN_SPEC = [
    ("WS", r"[ \t\r\n]+"),
    ("COMMENT", r"#[^\n]*"),
    ("IRIREF", r"<[^<>\"{}|^`\\\s]*>"),
    ("BADIRI", r"<[^>\n]*>?"),
    ("PREFIX_DIR", r"@prefix\b"),
    ("BASE_DIR", r"@base\b"),
    ("LANGTAG", r"@[A-Za-z]+(?:-[A-Za-z0-9]+)*"),
    ("LONGSTRING", r'"""|\'\'\''),
    ("STRING", r'"(?:[^"\\\n]|\\.)*"|\'(?:[^\'\\\n]|\\.)*\''),
    ("BADSTRING", r'["\'][^\n]*'),
    ("BNODE", r"_:[A-Za-z0-9_](?:[\w\-.]*[\w\-])?"),
    ("DECIMAL", r"[+-]?\d*\.\d+(?:[eE][+-]?\d+)?|[+-]?\d+[eE][+-]?\d+"),
    ("INTEGER", r"[+-]?\d+"),
    ("DTYPE", r"\^\^"),
    ("PNAME", r"(?:[A-Za-z](?:[\w\-.]*[\w\-])?)?:(?:[\w\-](?:[\w.\-]*[\w\-])?)?"),
    ("KEYWORD", r"(?:a|PREFIX|BASE|true|false)(?![\w\-:])"),
    ("PUNCT", r"[.;,\[\]()]"),
    ("OTHER", r"\S+"),
]
_TOKEN_RE = re.compile("|".join(f"(?P<{name}>{pattern})" for name, pattern in _TOKEN_SPEC))


def tokenize(text: str) -> list[Token]:
    line_starts = [0] + [m.end() for m in re.finditer("\n", text)]
    tokens = []
    line = 0
    for m in _TOKEN_RE.finditer(text):
        kind = m.lastgroup
        assert kind is not None
        if kind in ("WS", "COMMENT"):
            continue
        while line + 1 < len(line_starts) and line_starts[line + 1] <= m.start():
            line += 1
        tok = Token(kind, m.group(), m.start(), line + 1, m.start() - line_starts[line] + 1)
        if kind in ("BADIRI", "BADSTRING", "OTHER"):
            what = {"BADIRI": "malformed IRI", "BADSTRING": "unterminated string"}.get(kind, "unexpected text")
            raise _error(tok, f"{what} {tok.text!r}")
        if kind == "BASE_DIR" or tok.text == "BASE":
            raise _error(tok, "base IRIs are not supported")
        if kind == "LANGTAG":
            raise _error(tok, "language-tagged literals are not supported")
        if kind == "LONGSTRING":
            raise _error(tok, "multi-line strings are not supported")
        if kind == "DECIMAL":
            raise _error(tok, "only integer literals are supported")
        tokens.append(tok)
    return tokens


def _error(tok: Token, message: str) -> TurtleSyntaxError:
    return TurtleSyntaxError(ParseDiagnostic(tok.line, tok.column, message, Severity.ERROR))


_ESCAPES = {"t": "\t", "n": "\n", "r": "\r", "b": "\b", "f": "\f", '"': '"', "'": "'", "\\": "\\"}


def _unescape(body: str, tok: Token) -> str:
    out = []
    i = 0
    while i < len(body):
        ch = body[i]
        if ch != "\\":
            out.append(ch)
            i += 1
            continue
        nxt = body[i + 1]
        if nxt in _ESCAPES:
            out.append(_ESCAPES[nxt])
            i += 2
        elif nxt in "uU":
            width = 4 if nxt == "u" else 8
            digits = body[i + 2:i + 2 + width]
            if len(digits) != width or not all(c in "0123456789abcdefABCDEF" for c in digits):
                raise _error(tok, "bad unicode escape")
            out.append(chr(int(digits, 16)))
            i += 2 + width
        else:
            raise _error(tok, f"unknown escape \\{nxt}")
    return "".join(out)


# --------------------------------------------------------------------------
# Parser
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class LocatedTriple:
    triple: Triple
    line: int
    column: int


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0
        self.prefixes: dict[str, str] = dict(DEFAULT_PREFIXES)  # predeclared; @prefix overrides
        self.triples: list[LocatedTriple] = []
        self._anon = 0

    # token helpers
    def peek(self) -> Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def last(self) -> Token:
        return self.tokens[self.pos - 1]

    def next(self, expected: str) -> Token:
        tok = self.peek()
        if tok is None:
            raise _error(self.last(), f"unexpected end of input, expected {expected}")
        self.pos += 1
        return tok

    def at(self, text: str) -> bool:
        tok = self.peek()
        return tok is not None and tok.kind in ("PUNCT", "DTYPE") and tok.text == text

    def fresh(self) -> BNode:
        self._anon += 1
        return BNode(f"anon{self._anon}")

    def emit(self, s: Term, p: Term, o: Term, tok: Token) -> None:
        self.triples.append(LocatedTriple((s, p, o), tok.line, tok.column))

    # grammar
    def parse(self) -> None:
        while self.peek() is not None:
            self.statement()

    def statement(self) -> None:
        tok = self.peek()
        assert tok is not None
        if tok.kind == "PREFIX_DIR" or tok.text == "PREFIX":
            self.pos += 1
            self.prefix_decl()
            if tok.kind == "PREFIX_DIR":
                self.terminator()
            return
        self.triples_block()
        self.terminator()

    def terminator(self) -> None:
        tok = self.peek()
        if tok is None:
            raise _error(self.last(), "statement is not terminated with '.'")
        if not self.at("."):
            raise _error(tok, f"expected '.' before {tok.text!r}")
        self.pos += 1

    def prefix_decl(self) -> None:
        name = self.next("a prefix name")
        if name.kind != "PNAME" or not name.text.endswith(":") or name.text.count(":") != 1:
            raise _error(name, f"expected a prefix label like 'nis:', got {name.text!r}")
        iri = self.next("an IRI")
        if iri.kind != "IRIREF":
            raise _error(iri, f"expected an <IRI>, got {iri.text!r}")
        namespace = iri.text[1:-1]
        if ":" not in namespace:
            raise _error(iri, f"relative IRI {iri.text} needs a base, which is unsupported")
        self.prefixes[name.text[:-1]] = namespace

    def iriref(self, tok: Token) -> Iri:
        value = tok.text[1:-1]
        if ":" not in value:
            raise _error(tok, f"relative IRI {tok.text} needs a base, which is unsupported")
        try:
            return Iri(value)
        except ValueError as exc:
            raise _error(tok, str(exc)) from None

    def iri(self, tok: Token) -> Iri:
        if tok.kind == "IRIREF":
            return self.iriref(tok)
        if tok.kind == "PNAME":
            label, _, local = tok.text.partition(":")
            if label not in self.prefixes:
                raise _error(tok, f"unknown prefix {label!r}")
            try:
                return Iri(self.prefixes[label] + local)
            except ValueError as exc:
                raise _error(tok, str(exc)) from None
        raise _error(tok, f"expected an IRI, got {tok.text!r}")

    def triples_block(self) -> None:
        tok = self.next("a subject")
        if tok.kind == "PUNCT" and tok.text == "[":
            subject = self.property_list(tok)
            nxt = self.peek()
            if nxt is not None and not self.at("."):
                self.predicate_object_list(subject)
            return
        if tok.kind == "PUNCT" and tok.text == "(":
            subject = self.collection(tok)
        elif tok.kind == "BNODE":
            subject = BNode("_" + tok.text[2:])
        elif tok.kind in ("IRIREF", "PNAME"):
            subject = self.iri(tok)
        else:
            raise _error(tok, f"expected a subject, got {tok.text!r}")
        self.predicate_object_list(subject)

    def predicate_object_list(self, subject: Term) -> None:
        while True:
            ptok = self.next("a predicate")
            if ptok.kind == "KEYWORD" and ptok.text == "a":
                predicate = RDF_TYPE
            elif ptok.kind in ("IRIREF", "PNAME"):
                predicate = self.iri(ptok)
            else:
                raise _error(ptok, f"expected a predicate, got {ptok.text!r}")
            while True:
                self.emit(subject, predicate, self.object(), ptok)
                if not self.at(","):
                    break
                self.pos += 1
            if not self.at(";"):
                return
            while self.at(";"):
                self.pos += 1
            if self.peek() is None or self.at(".") or self.at("]"):
                return

    def object(self) -> Term:
        tok = self.next("an object")
        if tok.kind in ("IRIREF", "PNAME"):
            return self.iri(tok)
        if tok.kind == "BNODE":
            return BNode("_" + tok.text[2:])
        if tok.kind == "PUNCT" and tok.text == "[":
            return self.property_list(tok)
        if tok.kind == "PUNCT" and tok.text == "(":
            return self.collection(tok)
        if tok.kind == "INTEGER":
            return Literal(int(tok.text), XSD_INTEGER)
        if tok.kind == "KEYWORD" and tok.text in ("true", "false"):
            return Literal(tok.text, XSD_BOOLEAN)
        if tok.kind == "STRING":
            lexical = _unescape(tok.text[1:-1], tok)
            datatype = XSD_STRING
            if self.at("^^"):
                self.pos += 1
                datatype = self.iri(self.next("a datatype IRI"))
            if datatype in INTEGER_DATATYPES:
                try:
                    return Literal(int(lexical.strip()), datatype)
                except ValueError:
                    raise _error(tok, f"invalid integer literal {tok.text}") from None
            return Literal(lexical, datatype)
        raise _error(tok, f"expected an object, got {tok.text!r}")

    def property_list(self, open_tok: Token) -> BNode:
        node = self.fresh()
        if self.peek() is None:
            raise _error(open_tok, "unterminated '['")
        if not self.at("]"):
            self.predicate_object_list(node)
        tok = self.peek()
        if tok is None:
            raise _error(open_tok, "unterminated '['")
        if not self.at("]"):
            raise _error(tok, f"expected ']' before {tok.text!r}")
        self.pos += 1
        return node

    def collection(self, open_tok: Token) -> Term:
        items: list[Term] = []
        while not self.at(")"):
            tok = self.peek()
            if tok is None:
                raise _error(open_tok, "malformed list: missing ')'")
            if tok.kind == "PUNCT" and tok.text in ".;,]":
                raise _error(tok, f"malformed list: unexpected {tok.text!r}")
            items.append(self.object())
        self.pos += 1
        if not items:
            return RDF_NIL
        cells = [self.fresh() for _ in items]
        for i, (cell, item) in enumerate(zip(cells, items)):
            self.emit(cell, RDF_FIRST, item, open_tok)
            self.emit(cell, RDF_REST, cells[i + 1] if i + 1 < len(cells) else RDF_NIL, open_tok)
        return cells[0]


def parse_triples(text: str) -> tuple[dict[str, str], list[LocatedTriple]]:
    """Syntax-level parse: the prefix map and the located triples in document order."""
    parser = _Parser(text)
    parser.parse()
    return parser.prefixes, parser.triples


# --------------------------------------------------------------------------
# Lifting triples to axioms
# --------------------------------------------------------------------------


class _Lifter:
    def __init__(self, triples: list[LocatedTriple]):
        self.triples = triples
        self.consumed = [False] * len(triples)
        self.by_subject: dict[Term, list[int]] = {}
        for i, lt in enumerate(triples):
            self.by_subject.setdefault(lt.triple[0], []).append(i)

    def where(self, i: int) -> str:
        lt = self.triples[i]
        return f"{lt.line}:{lt.column}"

    def lift(self, kb: KnowledgeBase) -> list[ParseDiagnostic]:
        items: list[Axiom | Assertion] = []
        declared: dict[DeclKind, set[Iri]] = {kind: set() for kind in DeclKind}
        for i, lt in enumerate(self.triples):
            s, p, o = lt.triple
            if p == RDF_TYPE and isinstance(s, Iri) and o in _DECLARATION_BY_TYPE:
                kind = _DECLARATION_BY_TYPE[o]
                declared[kind].add(s)
                items.append(Declaration(kind, s))
                self.consumed[i] = True
            elif p == RDF_TYPE and isinstance(s, Iri) and isinstance(o, Iri) and not _reserved(o):
                declared[DeclKind.INDIVIDUAL].add(s)
        individuals = declared[DeclKind.INDIVIDUAL]

        for i, lt in enumerate(self.triples):
            if self.consumed[i]:
                continue
            s, p, o = lt.triple
            if not isinstance(s, Iri):
                continue
            if p == RDFS_SUBCLASSOF:
                self.consumed[i] = True
                items.append(SubClassOf(s, self.expression(o, i)))
            elif p == OWL_EQUIVALENTCLASS:
                self.consumed[i] = True
                items.append(EquivalentClasses(s, self.expression(o, i)))
            elif p == RDFS_SUBPROPERTYOF and isinstance(o, Iri):
                self.consumed[i] = True
                items.append(SubPropertyOf(s, o))
            elif p == RDF_TYPE:
                if isinstance(o, Iri) and not _reserved(o):
                    self.consumed[i] = True
                    items.append(ClassAssertion(o, s))
            elif isinstance(p, Iri) and not _reserved(p):
                if isinstance(o, Iri) and (
                    (s in individuals and o in individuals) or p in declared[DeclKind.OBJECT_PROPERTY]
                ):
                    self.consumed[i] = True
                    items.append(ObjectPropertyAssertion(p, s, o))
                elif (
                    isinstance(o, Literal)
                    and isinstance(o.value, int)
                    and (s in individuals or p in declared[DeclKind.DATA_PROPERTY])
                ):
                    self.consumed[i] = True
                    items.append(DataPropertyAssertion(p, s, o.value))

        kb.update(items)
        warnings = []
        for i, lt in enumerate(self.triples):
            if not self.consumed[i]:
                s, p, o = lt.triple
                warnings.append(
                    ParseDiagnostic(
                        lt.line,
                        lt.column,
                        f"triple not understood, ignored: {_show(s)} {_show(p)} {_show(o)}",
                        Severity.WARNING,
                    )
                )
        return warnings

    def _only(self, node: BNode, predicate: Iri, origin: int) -> tuple[int, Term] | None:
        found = [
            (i, self.triples[i].triple[2])
            for i in self.by_subject.get(node, ())
            if self.triples[i].triple[1] == predicate
        ]
        if len(found) > 1:
            raise LiftError(f"{self.where(found[1][0])}: {_show(node)} has several {_show(predicate)} values")
        return found[0] if found else None

    def expression(self, node: Term, origin: int, stack: tuple[Term, ...] = ()) -> ClassExpression:
        if isinstance(node, Iri):
            return Named(node)
        if isinstance(node, Literal):
            raise LiftError(f"{self.where(origin)}: literal {node} used where a class is expected")
        if node in stack:
            raise LiftError(f"{self.where(origin)}: cyclic blank-node class expression")
        stack = stack + (node,)
        indices = self.by_subject.get(node, [])
        at = indices[0] if indices else origin
        types = {self.triples[i].triple[2]: i for i in indices if self.triples[i].triple[1] == RDF_TYPE}

        inter = self._only(node, OWL_INTERSECTIONOF, origin)
        if inter is not None:
            i, head = inter
            self.consumed[i] = True
            if OWL_RESTRICTION in types:
                raise LiftError(f"{self.where(i)}: a restriction cannot also be an intersection")
            if rdfs("Class") in types or DECLARATION_TYPES[DeclKind.CLASS] in types:
                for t in (rdfs("Class"), DECLARATION_TYPES[DeclKind.CLASS]):
                    if t in types:
                        self.consumed[types[t]] = True
            items = self.collection(head, i)
            if not items:
                raise LiftError(f"{self.where(i)}: empty owl:intersectionOf")
            return Intersection(self.expression(item, i, stack) for item in items)

        on_property = self._only(node, OWL_ONPROPERTY, origin)
        if on_property is None:
            if OWL_RESTRICTION in types:
                raise LiftError(f"{self.where(types[OWL_RESTRICTION])}: owl:Restriction lacks owl:onProperty")
            raise LiftError(f"{self.where(at)}: blank node {_show(node)} is not a supported class expression")
        if OWL_RESTRICTION in types:
            self.consumed[types[OWL_RESTRICTION]] = True
        i, prop = on_property
        if not isinstance(prop, Iri):
            raise LiftError(f"{self.where(i)}: owl:onProperty must name a property")
        self.consumed[i] = True

        some = self._only(node, OWL_SOMEVALUESFROM, origin)
        if some is not None:
            j, filler = some
            self.consumed[j] = True
            return ObjectSome(prop, self.expression(filler, j, stack))
        for predicate, facet in _FACET_BY_PREDICATE.items():
            found = self._only(node, predicate, origin)
            if found is None:
                continue
            j, value = found
            if not isinstance(value, Literal) or not isinstance(value.value, int):
                raise LiftError(f"{self.where(j)}: {_show(predicate)} needs an integer literal")
            self.consumed[j] = True
            return DataFacet(prop, facet, value.value)
        raise LiftError(f"{self.where(i)}: unsupported restriction on {_show(prop)}")

    def collection(self, head: Term, origin: int) -> list[Term]:
        items = []
        seen = set()
        node = head
        while node != RDF_NIL:
            if not isinstance(node, BNode) or node in seen:
                raise LiftError(f"{self.where(origin)}: malformed RDF list")
            seen.add(node)
            first = self._only(node, RDF_FIRST, origin)
            rest = self._only(node, RDF_REST, origin)
            if first is None or rest is None:
                raise LiftError(f"{self.where(origin)}: malformed RDF list cell {_show(node)}")
            self.consumed[first[0]] = self.consumed[rest[0]] = True
            items.append(first[1])
            node = rest[1]
        return items


def _show(term: Term) -> str:
    return f"<{term.value}>" if isinstance(term, Iri) else str(term)


def parse_turtle_with_diagnostics(
    text: str, kb: KnowledgeBase | None = None
) -> tuple[KnowledgeBase, list[ParseDiagnostic]]:
    """Parse and lift ``text``; returns the KB and the warning diagnostics.

    Raises :class:`TurtleSyntaxError` on syntax errors and :class:`LiftError`
    on malformed OWL structures.
    """
    prefixes, triples = parse_triples(text)
    if kb is None:
        kb = KnowledgeBase()
    kb.prefixes.update(prefixes)
    warnings = _Lifter(triples).lift(kb)
    for w in warnings:
        log.warning("%s", w)
    return kb, warnings


def parse_turtle(text: str) -> KnowledgeBase:
    return parse_turtle_with_diagnostics(text)[0]


def load_turtle(path: str | Path) -> KnowledgeBase:
    return parse_turtle(Path(path).read_text(encoding="utf-8"))


# --------------------------------------------------------------------------
# Serializer
# --------------------------------------------------------------------------

_INDENT = "    "
_PREDICATE_RANK = {RDF_TYPE: 0, RDFS_SUBCLASSOF: 1, OWL_EQUIVALENTCLASS: 2, RDFS_SUBPROPERTYOF: 3}


class _Writer:
    def __init__(self, prefixes: dict[str, str]):
        self.prefixes = prefixes

    def name(self, iri: Iri) -> str:
        return compact_iri(iri, self.prefixes)

    def literal(self, value: int) -> str:
        return f'"{value}"^^{self.name(XSD_INT)}'

    def expression(self, expr: ClassExpression, depth: int) -> str:
        if isinstance(expr, Named):
            return self.name(expr.cls)
        pad = _INDENT * (depth + 1)
        end = _INDENT * depth
        restriction = f"{self.name(RDF_TYPE)} {self.name(OWL_RESTRICTION)}"
        if isinstance(expr, DataFacet):
            return (
                f"[ {restriction} ; {self.name(OWL_ONPROPERTY)} {self.name(expr.property)} ; "
                f"{self.name(FACET_PREDICATES[expr.facet])} {self.literal(expr.bound)} ]"
            )
        if isinstance(expr, ObjectSome):
            if isinstance(expr.filler, Named):
                return (
                    f"[ {restriction} ; {self.name(OWL_ONPROPERTY)} {self.name(expr.property)} ; "
                    f"{self.name(OWL_SOMEVALUESFROM)} {self.name(expr.filler.cls)} ]"
                )
            return (
                f"[\n{pad}{restriction} ;\n"
                f"{pad}{self.name(OWL_ONPROPERTY)} {self.name(expr.property)} ;\n"
                f"{pad}{self.name(OWL_SOMEVALUESFROM)} {self.expression(expr.filler, depth + 1)}\n{end}]"
            )
        inner = _INDENT * (depth + 2)
        items = "".join(f"{inner}{self.expression(c, depth + 2)}\n" for c in expr.conjuncts)
        return (
            f"[\n{pad}{self.name(RDF_TYPE)} {self.name(DECLARATION_TYPES[DeclKind.CLASS])} ;\n"
            f"{pad}{self.name(OWL_INTERSECTIONOF)} (\n{items}{pad})\n{end}]"
        )


def serialize(kb: KnowledgeBase) -> str:
    """Deterministic Turtle text for ``kb``; re-parses to an equal KB."""
    prefixes = dict(sorted(kb.prefixes.items()))
    w = _Writer(prefixes)
    lines = [f"@prefix {label}: <{ns}> ." for label, ns in prefixes.items()]

    rows: dict[Iri, list[tuple[tuple, Iri, tuple, str]]] = {}

    def add(subject: Iri, predicate: Iri, sort_key: tuple, rendered: str) -> None:
        rank = (_PREDICATE_RANK.get(predicate, 4), predicate.value)
        rows.setdefault(subject, []).append((rank, predicate, sort_key, rendered))

    for ax in kb.axioms():
        if isinstance(ax, Declaration):
            t = DECLARATION_TYPES[ax.kind]
            add(ax.iri, RDF_TYPE, (0, t.value), w.name(t))
        elif isinstance(ax, SubClassOf):
            add(ax.sub, RDFS_SUBCLASSOF, expr_key(ax.sup), w.expression(ax.sup, 1))
        elif isinstance(ax, EquivalentClasses):
            add(ax.named, OWL_EQUIVALENTCLASS, expr_key(ax.definition), w.expression(definition_form(ax.definition), 1))
        else:
            add(ax.sub, RDFS_SUBPROPERTYOF, (ax.sup.value,), w.name(ax.sup))
    for a in kb.assertions():
        if isinstance(a, ClassAssertion):
            add(a.individual, RDF_TYPE, (1, a.cls.value), w.name(a.cls))
        elif isinstance(a, ObjectPropertyAssertion):
            add(a.subject, a.property, (0, a.object.value), w.name(a.object))
        else:
            add(a.subject, a.property, (1, a.value), w.literal(a.value))

    for subject in sorted(rows):
        lines.append("")
        entries = sorted(rows[subject], key=lambda r: (r[0], r[2]))
        groups: list[tuple[Iri, list[str]]] = []
        for _, predicate, _, rendered in entries:
            if groups and groups[-1][0] == predicate:
                groups[-1][1].append(rendered)
            else:
                groups.append((predicate, [rendered]))
        lines.append(w.name(subject))
        for n, (predicate, objects) in enumerate(groups):
            sep = " ." if n == len(groups) - 1 else " ;"
            joined = (" ,\n" + _INDENT * 2).join(objects)
            lines.append(f"{_INDENT}{w.name(predicate)} {joined}{sep}")
    return "\n".join(lines) + "\n"


def write_turtle(kb: KnowledgeBase, path: str | Path) -> None:
    Path(path).write_text(serialize(kb), encoding="utf-8")


def lifted_items(kb: KnowledgeBase) -> tuple[frozenset, frozenset]:
    """The (axioms, assertions) pair used to compare KBs up to blank-node naming."""
    return frozenset(kb.tbox), frozenset(kb.abox)

