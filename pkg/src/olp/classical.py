"""Classical semantics for extended logic programs (no preferences).

Implements the reduct, the consequence closure of basic programs, the
immediate consequence operator with a blocking context, answer sets by
exhaustive candidate enumeration, and the well-founded model as the least
fixpoint of the alternating operator ``a_op = c_op . c_op``.

The enumerators here are desk-scale tools, deliberately direct; they are
not solvers.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .fixpoint import FixpointTrace, iterate_union, kleene_trace
from .syntax import (
    Interpretation,
    Literal,
    PartialModel,
    ProgramError,
    Rule,
    is_consistent,
)

__all__ = [
    "is_active",
    "reduct",
    "cn",
    "t_step",
    "c_op",
    "a_op",
    "answer_sets",
    "head_candidates",
    "well_founded_fixpoint",
    "well_founded_model",
]

MAX_ENUM_HEADS = 20


def _literals(x: Interpretation | frozenset[Literal]) -> frozenset[Literal]:
    return x.literals if isinstance(x, Interpretation) else x


def is_active(
    r: Rule,
    x: Interpretation | frozenset[Literal],
    y: Interpretation | frozenset[Literal],
) -> bool:
    """True iff pbody(r) is contained in x and nbody(r) misses y."""
    xs, ys = _literals(x), _literals(y)
    return r.pbody <= xs and not (r.nbody & ys)


def reduct(
    rules: Iterable[Rule], x: Interpretation | frozenset[Literal]
) -> tuple[Rule, ...]:
    """Drop rules whose negative body meets x; strip the rest to basic rules."""
    xs = _literals(x)
    return tuple(
        r.reduct_rule() for r in rules if not (r.nbody & xs)
    )


def cn(rules: Sequence[Rule], universe: frozenset[Literal]) -> Interpretation:
    """Smallest logically closed set closed under a basic program.

    Collapses to the full universe as soon as a complementary pair is
    derivable.
    """
    for r in rules:
        if r.nbody:
            raise ProgramError(f"cn requires a basic program, got {r}")
    derived: set[Literal] = set()
    changed = True
    while changed:
        changed = False
        for r in rules:
            if r.head not in derived and r.pbody <= derived:
                derived.add(r.head)
                changed = True
    if not is_consistent(derived):
        return Interpretation.lit(universe)
    return Interpretation.of(derived)


def t_step(
    rules: Iterable[Rule],
    y: Interpretation,
    x: Interpretation,
    universe: frozenset[Literal],
) -> Interpretation:
    """Heads of the rules active wrt (x, y); the whole universe if x is not
    consistent."""
    if x.is_lit:
        return Interpretation.lit(universe)
    heads = frozenset(r.head for r in rules if is_active(r, x, y))
    if not is_consistent(heads):
        return Interpretation.lit(universe)
    return Interpretation(heads)


def c_op(
    rules: Sequence[Rule], x: Interpretation, universe: frozenset[Literal]
) -> Interpretation:
    """Consequences of the reduct relative to x."""
    result = cn(reduct(rules, x), universe)
    if __debug__:
        # The reduct-free route must agree: iterate the blocking-context
        # step with x as the context.
        alt = iterate_union(
            lambda cur: t_step(rules, x, cur, universe), universe
        )
        assert alt == result, f"consequence routes disagree: {alt} vs {result}"
    return result


def a_op(
    rules: Sequence[Rule], x: Interpretation, universe: frozenset[Literal]
) -> Interpretation:
    """The alternating operator: two consequence applications."""
    return c_op(rules, c_op(rules, x, universe), universe)


def head_candidates(
    rules: Sequence[Rule], universe: frozenset[Literal]
) -> Iterator[Interpretation]:
    """All consistent subsets of the head literals, then the full universe.

    Any fixpoint of the consequence operators contains only rule heads or
    equals the universe, so this space is exhaustive for fixpoint searches.
    """
    heads = sorted({r.head for r in rules}, key=str)
    if len(heads) > MAX_ENUM_HEADS:
        raise ProgramError(
            f"candidate enumeration over {len(heads)} heads is not desk-scale"
        )
    for size in range(len(heads) + 1):
        for combo in combinations(heads, size):
            if is_consistent(combo):
                yield Interpretation.of(combo)
    if universe:
        yield Interpretation.lit(universe)


def answer_sets(
    rules: Sequence[Rule], universe: frozenset[Literal]
) -> frozenset[Interpretation]:
    """All x with cn(reduct(rules, x)) = x, by candidate enumeration."""
    return frozenset(
        x for x in head_candidates(rules, universe)
        if c_op(rules, x, universe) == x
    )


def well_founded_fixpoint(
    rules: Sequence[Rule], universe: frozenset[Literal]
) -> tuple[Interpretation, FixpointTrace]:
    """Least fixpoint of the alternating operator, with its trace."""
    return kleene_trace(
        lambda x: a_op(rules, x, universe), universe, "well-founded fixpoint"
    )


def well_founded_model(
    rules: Sequence[Rule], universe: frozenset[Literal]
) -> PartialModel:
    """(lfp, universe minus the consequences of the lfp)."""
    lfp, _ = well_founded_fixpoint(rules, universe)
    false = universe - c_op(rules, lfp, universe).literals
    return PartialModel(lfp.literals, false)
