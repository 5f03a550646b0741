"""Depth-3 monotone formulas (an AND of ORs of ANDs of variables).

Such a formula is the predicate view of a red/blue instance: one clause
per red edge, one term per vertex of that edge, the term being the
vertex's blue star. The two directions below convert between views while
preserving the truth table, and minimal model enumeration rides on the
B-set machinery of the instance view.

Text syntax: variables are ``c1, c2, ...``, operators ``&`` and ``|``
(``&`` binds tighter), parentheses group, whitespace is free, and ``()``
is the empty term (constant true). Nesting deeper than and-or-and is
rejected after parsing.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import (
    BitSet,
    BiInstance,
    InvalidSolutionError,
    ParseError,
    SolutionSet,
    blue_star,
)
from .biobj import minimal_bsets
from .dualize import DEFAULT_MAX_PARTIALS


@dataclass(frozen=True)
class Formula3:
    """An AND of clauses, each an OR of terms, each term an AND of variables.

    Terms are variable sets; a term may be empty (constant true) and a
    clause may have no terms (constant false). Construction collapses
    duplicate terms within a clause and duplicate clauses, neither of
    which changes the truth table.
    """

    variable_count: int
    clauses: tuple[tuple[BitSet, ...], ...] = ()

    def __post_init__(self):
        if self.variable_count < 0:
            raise ValueError("variable_count must be non-negative")
        universe = (1 << self.variable_count) - 1
        clauses = []
        seen_clauses = set()
        for clause in self.clauses:
            terms = []
            seen = set()
            for term in clause:
                t = term if isinstance(term, BitSet) else BitSet(term)
                if t.mask & ~universe:
                    raise ValueError(
                        f"term {t} uses variables outside c1..c{self.variable_count}"
                    )
                if t.mask not in seen:
                    seen.add(t.mask)
                    terms.append(t)
            key = frozenset(seen)
            if key not in seen_clauses:
                seen_clauses.add(key)
                clauses.append(tuple(terms))
        object.__setattr__(self, "clauses", tuple(clauses))

    def evaluate(self, assignment: Sequence[bool | int]) -> bool:
        return evaluate(self, assignment)

    def normalized(self) -> "Formula3":
        """Copy with absorbed terms removed and constant-true clauses dropped.

        Within a clause, a term that strictly contains another term is
        redundant; a clause reduced to the empty term is constant true and
        contributes nothing to the conjunction.
        """
        clauses = []
        for clause in self.clauses:
            kept = tuple(
                t
                for t in clause
                if not any(u.mask != t.mask and u.mask & ~t.mask == 0 for u in clause)
            )
            if any(t.mask == 0 for t in kept):
                continue
            clauses.append(kept)
        return Formula3(self.variable_count, tuple(clauses))


def _satisfied(phi: Formula3, mask: int) -> bool:
    return all(any(t.mask & ~mask == 0 for t in clause) for clause in phi.clauses)


def evaluate(phi: Formula3, assignment: Sequence[bool | int]) -> bool:
    """Truth value of ``phi`` on a bit vector, one entry per variable."""
    values = list(assignment)
    if len(values) != phi.variable_count:
        raise ValueError(
            f"assignment has {len(values)} entries, formula has {phi.variable_count} variables"
        )
    mask = 0
    for i, v in enumerate(values):
        if v:
            mask |= 1 << i
    return _satisfied(phi, mask)


def instance_to_formula(inst: BiInstance) -> Formula3:
    """The predicate f of an instance as a depth-3 formula.

    One clause per red edge, one term per vertex of the edge (its blue
    star, which is empty for a blue-free vertex). Evaluating the result
    on the characteristic vector of a blue subset B gives f(B).
    """
    clauses = tuple(
        tuple(blue_star(x, inst) for x in a) for a in inst.red.edges
    )
    return Formula3(len(inst.blue.edges), clauses)


def formula_to_instance(phi: Formula3) -> BiInstance:
    """The inverse view: one vertex per (clause, term) occurrence.

    Red edges collect the term vertices of each clause; the blue edge of
    variable i collects the vertices whose term contains i (possibly
    nobody, giving an empty blue edge). The truth table of the result's
    predicate equals the formula's.
    """
    vertex_terms: list[BitSet] = []
    red = []
    for clause in phi.clauses:
        members = []
        for term in clause:
            members.append(len(vertex_terms))
            vertex_terms.append(term)
        red.append(BitSet(members))
    blue = [
        BitSet(v for v, t in enumerate(vertex_terms) if i in t)
        for i in range(phi.variable_count)
    ]
    return BiInstance.from_edges(len(vertex_terms), red, blue)


def minimal_models(phi: Formula3, *, max_partials: int = DEFAULT_MAX_PARTIALS) -> SolutionSet:
    """All inclusion-minimal satisfying variable sets of ``phi``.

    The formula is normalized, converted to an instance, and its minimal
    B-sets are the minimal models. A constant-false formula (some clause
    has no terms) has no models at all.
    """
    norm = phi.normalized()
    if any(len(clause) == 0 for clause in norm.clauses):
        return SolutionSet()
    return minimal_bsets(formula_to_instance(norm), max_partials=max_partials)


def gen_check(
    phi: Formula3,
    claimed: Iterable[BitSet],
    *,
    max_partials: int = DEFAULT_MAX_PARTIALS,
) -> BitSet | None:
    """Check whether ``claimed`` is all minimal models of ``phi``.

    Every member must be a minimal model; a member that is not raises
    :class:`InvalidSolutionError` naming it and the violated condition.
    Returns None when the claim is complete, otherwise the canonically
    smallest missing minimal model.
    """
    claimed = list(claimed)
    universe = (1 << phi.variable_count) - 1
    for b in claimed:
        if b.mask & ~universe:
            raise InvalidSolutionError(b, "uses variables outside the formula")
        if not _satisfied(phi, b.mask):
            raise InvalidSolutionError(b, "not a model")
        for v in b:
            if _satisfied(phi, b.mask ^ (1 << v)):
                raise InvalidSolutionError(b, f"not minimal, variable c{v + 1} is redundant")
    have = {b.mask for b in claimed}
    for b in minimal_models(phi, max_partials=max_partials):
        if b.mask not in have:
            return b
    return None


_TOKEN_RE = re.compile(r"\s*(c\d+|[&|()])")


def _tokenize(text: str) -> list[str]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            if text[pos:].strip() == "":
                break
            bad = text[pos:].lstrip()[0]
            raise ParseError(f"unexpected character {bad!r} in formula")
        tokens.append(m.group(1))
        pos = m.end()
    return tokens


class _Tokens:
    def __init__(self, tokens: list[str]):
        self.tokens = tokens
        self.i = 0

    def peek(self) -> str | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self) -> str | None:
        tok = self.peek()
        if tok is not None:
            self.i += 1
        return tok


def _node(kind: str, children: list) -> tuple:
    if len(children) == 1:
        return children[0]
    flat = []
    for ch in children:
        if ch[0] == kind:
            flat.extend(ch[1])
        else:
            flat.append(ch)
    return (kind, tuple(flat))


def _parse_or(p: _Tokens) -> tuple:
    children = [_parse_and(p)]
    while p.peek() == "|":
        p.take()
        children.append(_parse_and(p))
    return _node("or", children)


def _parse_and(p: _Tokens) -> tuple:
    children = [_parse_atom(p)]
    while p.peek() == "&":
        p.take()
        children.append(_parse_atom(p))
    return _node("and", children)


def _parse_atom(p: _Tokens) -> tuple:
    tok = p.take()
    if tok is None:
        raise ParseError("unexpected end of formula")
    if tok == "(":
        if p.peek() == ")":
            p.take()
            return ("and", ())
        node = _parse_or(p)
        if p.take() != ")":
            raise ParseError("missing closing parenthesis")
        return node
    if tok.startswith("c"):
        idx = int(tok[1:])
        if idx < 1:
            raise ParseError("variables are numbered from c1")
        return ("var", idx - 1)
    raise ParseError(f"unexpected token {tok!r}")


def _term_of(node: tuple) -> BitSet:
    if node[0] == "var":
        return BitSet([node[1]])
    if node[0] == "and":
        out = []
        for ch in node[1]:
            if ch[0] != "var":
                raise ParseError("nesting deeper than and-or-and")
            out.append(ch[1])
        return BitSet(out)
    raise ParseError("nesting deeper than and-or-and")


def _clause_of(node: tuple) -> tuple[BitSet, ...]:
    if node[0] == "or":
        return tuple(_term_of(ch) for ch in node[1])
    return (_term_of(node),)


def parse_formula(text: str, variable_count: int | None = None) -> Formula3:
    """Parse the text syntax described in the module docstring.

    ``variable_count`` defaults to the highest variable mentioned; pass it
    to pad the formula with trailing unused variables.
    """
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty formula")
    p = _Tokens(tokens)
    root = _parse_or(p)
    if p.peek() is not None:
        raise ParseError(f"unexpected token {p.peek()!r} after formula")
    clause_nodes = root[1] if root[0] == "and" else (root,)
    clauses = tuple(_clause_of(node) for node in clause_nodes)
    used = 0
    for clause in clauses:
        for term in clause:
            used = max(used, term.mask.bit_length())
    if variable_count is None:
        variable_count = used
    elif variable_count < used:
        raise ParseError(
            f"formula mentions c{used} but variable_count is {variable_count}"
        )
    return Formula3(variable_count, clauses)


def format_formula(phi: Formula3) -> str:
    """Render ``phi`` in the text syntax; parsing the result round-trips."""

    def term_str(t: BitSet) -> str:
        if t.mask == 0:
            return "()"
        if len(t) == 1:
            return f"c{t.members[0] + 1}"
        return "(" + " & ".join(f"c{v + 1}" for v in t) + ")"

    parts = []
    wrap = len(phi.clauses) > 1
    for clause in phi.clauses:
        if not clause:
            raise ValueError("a clause with no terms (constant false) is not serializable")
        body = " | ".join(term_str(t) for t in clause)
        parts.append(f"({body})" if wrap and len(clause) > 1 else body)
    if not parts:
        return "()"
    return " & ".join(parts)
