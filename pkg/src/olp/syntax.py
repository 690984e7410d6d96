"""Core syntax: literals, rules, ordered programs, interpretations.

All types are immutable values; they can be shared freely across threads.
An ordered program couples a finite rule set with a strict partial order on
rule names (``r1 < r2`` meaning r2 has higher priority).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

__all__ = [
    "Atom",
    "Literal",
    "Rule",
    "PreferenceOrder",
    "OrderedProgram",
    "Interpretation",
    "PartialModel",
    "ProgramError",
    "CycleError",
    "UnknownRuleError",
    "DuplicateRuleError",
    "complement",
    "literal_universe",
    "mentioned_literals",
    "validate_order",
    "is_consistent",
    "pos",
    "neg",
    "rule",
    "program",
]

IDENT_RE = re.compile(r"[a-z][A-Za-z0-9_]*$")


class ProgramError(Exception):
    """A structurally invalid program component."""


class CycleError(ProgramError):
    """The transitive closure of the preference pairs is reflexive."""

    def __init__(self, name: str):
        super().__init__(f"cyclic preference through rule {name!r}")
        self.name = name


class UnknownRuleError(ProgramError):
    """A preference pair mentions a rule name with no rule."""

    def __init__(self, name: str):
        super().__init__(f"preference mentions unknown rule {name!r}")
        self.name = name


class DuplicateRuleError(ProgramError):
    """Two rules share a name."""

    def __init__(self, name: str):
        super().__init__(f"duplicate rule name {name!r}")
        self.name = name


@dataclass(frozen=True, order=True)
class Atom:
    """A propositional atom; names follow the identifier lexical class."""

    name: str

    def __post_init__(self):
        if not IDENT_RE.match(self.name):
            raise ProgramError(f"invalid atom name {self.name!r}")

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True, order=True)
class Literal:
    """An atom or its classical negation."""

    atom: Atom
    negated: bool = False

    def complement(self) -> "Literal":
        return Literal(self.atom, not self.negated)

    def __str__(self) -> str:
        return f"-{self.atom}" if self.negated else str(self.atom)


def pos(name: str) -> Literal:
    return Literal(Atom(name))


def neg(name: str) -> Literal:
    return Literal(Atom(name), negated=True)


def complement(lit: Literal) -> Literal:
    """The classical complement; involutive."""
    return lit.complement()


@dataclass(frozen=True)
class Rule:
    """A named rule ``head :- pbody, not nbody``; empty bodies make a fact."""

    name: str
    head: Literal
    pbody: frozenset[Literal] = frozenset()
    nbody: frozenset[Literal] = frozenset()

    def __post_init__(self):
        if not IDENT_RE.match(self.name):
            raise ProgramError(f"invalid rule name {self.name!r}")

    @property
    def basic(self) -> bool:
        return not self.nbody

    def reduct_rule(self) -> "Rule":
        """This rule with its negative body stripped (same name)."""
        return Rule(self.name, self.head, self.pbody)

    def literals(self) -> Iterator[Literal]:
        yield self.head
        yield from self.pbody
        yield from self.nbody

    def __str__(self) -> str:
        parts = [str(l) for l in sorted(self.pbody, key=str)]
        parts += [f"not {l}" for l in sorted(self.nbody, key=str)]
        if parts:
            return f"{self.name}: {self.head} :- {', '.join(parts)}."
        return f"{self.name}: {self.head}."


def rule(
    name: str,
    head: Literal,
    pbody: Iterable[Literal] = (),
    nbody: Iterable[Literal] = (),
) -> Rule:
    """Convenience constructor collapsing duplicate body literals."""
    return Rule(name, head, frozenset(pbody), frozenset(nbody))


@dataclass(frozen=True)
class PreferenceOrder:
    """A strict partial order on rule names, stored transitively closed.

    ``(a, b) in pairs`` means rule b has higher priority than rule a.
    ``generators`` keeps the pairs as originally declared so that a program
    can be rendered back without materialising the closure.
    """

    pairs: frozenset[tuple[str, str]] = frozenset()
    generators: frozenset[tuple[str, str]] = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        if self.generators is None:
            object.__setattr__(self, "generators", self.pairs)
        for a, b in self.pairs:
            if a == b:
                raise CycleError(a)
        closed = _transitive_closure(self.pairs)
        if closed != self.pairs:
            raise ProgramError("preference pairs are not transitively closed")

    @classmethod
    def empty(cls) -> "PreferenceOrder":
        return cls(frozenset(), frozenset())

    def prefers(self, lower: str, higher: str) -> bool:
        return (lower, higher) in self.pairs

    def names(self) -> frozenset[str]:
        return frozenset(n for pair in self.pairs for n in pair)

    def __bool__(self) -> bool:
        return bool(self.pairs)


def _transitive_closure(
    pairs: Iterable[tuple[str, str]],
) -> frozenset[tuple[str, str]]:
    above: dict[str, set[str]] = {}
    for a, b in pairs:
        above.setdefault(a, set()).add(b)
    closed: dict[str, frozenset[str]] = {}

    def reach(name: str, pending: tuple[str, ...]) -> frozenset[str]:
        if name in closed:
            return closed[name]
        if name in pending:
            # A cycle; report it through the reflexive pair instead.
            return frozenset(above.get(name, ()))
        acc: set[str] = set()
        for nxt in above.get(name, ()):
            acc.add(nxt)
            acc |= reach(nxt, pending + (name,))
        result = frozenset(acc)
        if name not in pending:
            closed[name] = result
        return result

    return frozenset((a, b) for a in above for b in reach(a, ()))


def validate_order(
    pairs: Iterable[tuple[str, str]], rules: Iterable[Rule]
) -> PreferenceOrder:
    """Close ``pairs`` transitively and reject cycles and unknown names.

    Raises CycleError if the closure contains a reflexive pair and
    UnknownRuleError if a pair names a rule that does not exist.
    """
    pairs = frozenset(pairs)
    known = {r.name for r in rules}
    for pair in pairs:
        for name in pair:
            if name not in known:
                raise UnknownRuleError(name)
    closed = _transitive_closure(pairs)
    for a, b in closed:
        if a == b:
            raise CycleError(a)
    return PreferenceOrder(closed, pairs)


@dataclass(frozen=True)
class OrderedProgram:
    """A finite rule sequence plus a validated preference order."""

    rules: tuple[Rule, ...] = ()
    order: PreferenceOrder = field(default_factory=PreferenceOrder.empty)

    def __post_init__(self):
        seen: set[str] = set()
        for r in self.rules:
            if r.name in seen:
                raise DuplicateRuleError(r.name)
            seen.add(r.name)
        for name in self.order.names():
            if name not in seen:
                raise UnknownRuleError(name)

    @cached_property
    def by_name(self) -> dict[str, Rule]:
        return {r.name: r for r in self.rules}

    @cached_property
    def universe(self) -> frozenset[Literal]:
        return literal_universe(self)

    @cached_property
    def rules_above(self) -> dict[str, tuple[Rule, ...]]:
        """For each rule name, the rules of strictly higher priority."""
        return {
            r.name: tuple(
                r2 for r2 in self.rules if self.order.prefers(r.name, r2.name)
            )
            for r in self.rules
        }

    @cached_property
    def rules_below(self) -> dict[str, tuple[Rule, ...]]:
        """For each rule name, the rules of strictly lower priority."""
        return {
            r.name: tuple(
                r2 for r2 in self.rules if self.order.prefers(r2.name, r.name)
            )
            for r in self.rules
        }

    @cached_property
    def generators_of(self) -> dict[Literal, tuple[Rule, ...]]:
        """Rules indexed by head literal."""
        acc: dict[Literal, list[Rule]] = {}
        for r in self.rules:
            acc.setdefault(r.head, []).append(r)
        return {head: tuple(rs) for head, rs in acc.items()}

    def strip_order(self) -> "OrderedProgram":
        return OrderedProgram(self.rules, PreferenceOrder.empty())

    def __str__(self) -> str:
        lines = [str(r) for r in self.rules]
        lines += [f"{a} < {b}." for a, b in sorted(self.order.generators)]
        return "\n".join(lines)


def program(
    rules: Iterable[Rule], pairs: Iterable[tuple[str, str]] = ()
) -> OrderedProgram:
    """Build a validated program from rules and raw preference pairs."""
    rules = tuple(rules)
    return OrderedProgram(rules, validate_order(pairs, rules))


def literal_universe(source: OrderedProgram | Iterable[Rule]) -> frozenset[Literal]:
    """Both polarities of every atom occurring anywhere in the program."""
    rules = source.rules if isinstance(source, OrderedProgram) else source
    atoms = {lit.atom for r in rules for lit in r.literals()}
    return frozenset(
        Literal(a, negated) for a in atoms for negated in (False, True)
    )


def mentioned_literals(
    source: OrderedProgram | Iterable[Rule],
) -> frozenset[Literal]:
    """Literals that occur verbatim in the program text."""
    rules = source.rules if isinstance(source, OrderedProgram) else source
    return frozenset(lit for r in rules for lit in r.literals())


def is_consistent(literals: Iterable[Literal]) -> bool:
    literals = frozenset(literals)
    return not any(lit.complement() in literals for lit in literals)


@dataclass(frozen=True)
class Interpretation:
    """A consistent literal set, or the whole universe (``is_lit``).

    The inconsistent case is always represented by the flag together with
    the full universe, never by a raw contradictory set.
    """

    literals: frozenset[Literal] = frozenset()
    is_lit: bool = False

    def __post_init__(self):
        if self.is_lit and not self.literals:
            # The universe of an atom-free program is empty and consistent.
            object.__setattr__(self, "is_lit", False)
        elif not self.is_lit and not is_consistent(self.literals):
            raise ProgramError(
                "inconsistent interpretation must be flagged as Lit"
            )

    @classmethod
    def empty(cls) -> "Interpretation":
        return cls(frozenset())

    @classmethod
    def of(cls, literals: Iterable[Literal]) -> "Interpretation":
        return cls(frozenset(literals))

    @classmethod
    def lit(cls, universe: Iterable[Literal]) -> "Interpretation":
        return cls(frozenset(universe), is_lit=True)

    @property
    def consistent(self) -> bool:
        return not self.is_lit

    def __contains__(self, lit: Literal) -> bool:
        return lit in self.literals

    def __iter__(self) -> Iterator[Literal]:
        return iter(self.literals)

    def __len__(self) -> int:
        return len(self.literals)

    def issubset(self, other: "Interpretation") -> bool:
        return self.literals <= other.literals

    def __str__(self) -> str:
        if self.is_lit:
            return "Lit"
        return "{" + ", ".join(sorted(map(str, self.literals))) + "}"


@dataclass(frozen=True)
class PartialModel:
    """Disjoint true/false literal sets; the rest of the universe is unknown."""

    true_set: frozenset[Literal]
    false_set: frozenset[Literal]

    def __post_init__(self):
        overlap = self.true_set & self.false_set
        if overlap:
            raise ProgramError(
                f"partial model overlap: {sorted(map(str, overlap))}"
            )

    def unknown(self, universe: Iterable[Literal]) -> frozenset[Literal]:
        return frozenset(universe) - self.true_set - self.false_set

    def __str__(self) -> str:
        fmt = lambda s: "{" + ", ".join(sorted(map(str, s))) + "}"
        return f"({fmt(self.true_set)}, {fmt(self.false_set)})"
