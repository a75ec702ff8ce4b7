"""Exception types shared across the pipeline stages."""

from __future__ import annotations


class JavaFlowError(Exception):
    """Base class for all errors raised by this package."""


class SourceError(JavaFlowError):
    """An error tied to a position in a Java source file."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class LexError(SourceError):
    """Unknown character or malformed lexeme."""


class ParseError(SourceError):
    """Token sequence does not match the grammar."""


class SubsetError(ParseError):
    """Valid Java, but outside the supported subset."""


class BindingError(SourceError):
    """Unbound variable reference or duplicate declaration."""


class GraphError(JavaFlowError):
    """Structure-graph construction or link-synthesis failure."""


class SpecError(JavaFlowError):
    """Malformed link-specification file."""

    def __init__(self, message: str, line: int):
        super().__init__(f"spec line {line}: {message}")
        self.message = message
        self.line = line


class InterchangeError(JavaFlowError):
    """Malformed, mis-versioned, or inconsistent graph document."""


class ValidationError(JavaFlowError):
    """Graph cannot be checked or emitted (txt lookup failures and the like)."""


class UnresolvedTxtError(ValidationError):
    """No item carries the requested txt."""

    def __init__(self, txt: str):
        super().__init__(f'no item with txt "{txt}"')
        self.txt = txt


class AmbiguousTxtError(ValidationError):
    """More than one item carries the requested txt."""

    def __init__(self, txt: str, count: int):
        super().__init__(f'txt "{txt}" matches {count} items')
        self.txt = txt
        self.count = count
