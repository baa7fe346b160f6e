from __future__ import annotations

from pathlib import Path
from typing import Sequence


class QcanonError(Exception):
    """Base class for errors raised by qcanon."""


class SingularFunctionError(QcanonError):
    """The function is not injective, so f(q) = r has no unique solution."""


class NoConvergenceError(QcanonError):
    """The Jacobi SVD reached its sweep cap with off-diagonals above threshold."""


class DocumentError(QcanonError):
    """
    A function document failed to parse or validate.

    `diagnostics` holds one "location: message" string per problem found.
    """

    def __init__(self, source: str | Path, diagnostics: Sequence[str]) -> None:
        self.source = str(source)
        self.diagnostics = list(diagnostics)
        super().__init__(f"{self.source}: " + "; ".join(self.diagnostics))
