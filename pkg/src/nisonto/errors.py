"""Exception hierarchy shared by every nisonto module."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class NisOntoError(Exception):
    """Base class for all errors raised by the engine."""


# knowledge base


class DuplicateDefinition(NisOntoError):
    pass


class CyclicPropertyHierarchy(NisOntoError):
    pass


class FrozenKnowledgeBase(NisOntoError):
    pass


# parsing


class Severity(str, Enum):
    ERROR = "Error"
    WARNING = "Warning"


@dataclass(frozen=True)
class ParseDiagnostic:
    line: int
    column: int
    message: str
    severity: Severity = Severity.ERROR

    def __str__(self) -> str:
        return f"{self.line}:{self.column}: {self.severity.value.lower()}: {self.message}"


class TurtleSyntaxError(NisOntoError):
    def __init__(self, diagnostic: ParseDiagnostic):
        super().__init__(str(diagnostic))
        self.diagnostic = diagnostic


class LiftError(NisOntoError):
    """A triple pattern looks like OWL but cannot be turned into an axiom."""


# measure DSL


class DslError(NisOntoError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {message}" if line is not None else message)


class DslSyntaxError(DslError):
    pass


class UndeclaredEntity(DslError):
    pass


class DuplicateArticleBlock(DslError):
    pass


class DuplicateEntity(DslError):
    pass


# querying


class UnknownIndividual(NisOntoError):
    pass


class UndefinedTarget(NisOntoError):
    pass


class UnsupportedFeature(NisOntoError):
    pass
