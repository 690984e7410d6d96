"""Fixpoint iteration plumbing shared by all engines.

Every operator in this package is monotone on a finite lattice, so Kleene
iteration from the empty interpretation reaches the least fixpoint within
``|universe| + 1`` applications.  Exceeding the cap signals an
implementation bug, not an input property.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, TypeVar

from .syntax import Interpretation, Literal

__all__ = [
    "FixpointTrace",
    "FixpointDivergence",
    "kleene",
    "kleene_trace",
    "iterate_union",
]

T = TypeVar("T")


class FixpointDivergence(RuntimeError):
    """Iteration did not converge within the structural bound."""


@dataclass(frozen=True)
class FixpointTrace:
    """The iterates of a fixpoint computation, ending in a repeated value."""

    steps: tuple[tuple[int, Interpretation], ...]
    converged_at: int

    def values(self) -> tuple[Interpretation, ...]:
        return tuple(v for _, v in self.steps)


def kleene(
    step: Callable[[T], T],
    start: T,
    cap: int,
    what: str = "fixpoint",
) -> tuple[T, list[T]]:
    """Iterate ``step`` from ``start`` until it repeats; raise past ``cap``."""
    values = [start]
    current = start
    for _ in range(cap + 1):
        nxt = step(current)
        values.append(nxt)
        if nxt == current:
            return current, values
        current = nxt
    raise FixpointDivergence(
        f"{what} did not converge within {cap + 1} applications"
    )


def kleene_trace(
    step: Callable[[Interpretation], Interpretation],
    universe: frozenset[Literal],
    what: str = "fixpoint",
) -> tuple[Interpretation, FixpointTrace]:
    """Least fixpoint of a monotone step from the empty interpretation."""
    value, values = kleene(step, Interpretation.empty(), len(universe) + 1, what)
    steps = tuple(enumerate(values))
    return value, FixpointTrace(steps, converged_at=len(values) - 1)


def iterate_union(
    step: Callable[[Interpretation], Interpretation],
    universe: frozenset[Literal],
    what: str = "consequence closure",
) -> Interpretation:
    """Union of the iterates of ``step`` from the empty interpretation.

    The step operators used here are monotone and inflationary from the
    empty set, so the union equals the final iterate.
    """
    value, _ = kleene(step, Interpretation.empty(), len(universe) + 1, what)
    return value
