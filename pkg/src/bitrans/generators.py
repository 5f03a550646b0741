"""Instance generators: 3-SAT reduction gadgets and random corpora.

The two gadgets translate a 3-SAT instance into a red/blue pair whose
bi-objective solution set has a known seed X of one solution per
variable; a solution beyond X exists exactly when the formula is
satisfiable, and any such solution reads back as a satisfying
assignment. The first gadget keeps every blue edge of size 2, the second
keeps every vertex in exactly 3 hyperedges overall.

Both gadgets require the side condition that no variable is touched, in
either polarity, by every clause; without it a spurious solution of the
form {x_i, nx_i} can appear and break the satisfiability equivalence.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .core import (
    BiInstance,
    BitSet,
    Error,
    InvalidSolutionError,
    ParseError,
    SideConditionError,
    SolutionSet,
    VertexSet,
)
from .biobj import BiSolution


@dataclass(frozen=True)
class SatInstance:
    """A 3-SAT instance: clauses of at most three literals.

    Literals are DIMACS-style nonzero ints, positive for a variable and
    negative for its negation, variables numbered 1..variable_count. A
    clause never contains both polarities of one variable.
    """

    variable_count: int
    clauses: tuple[frozenset[int], ...]

    def __post_init__(self):
        if self.variable_count < 1:
            raise ValueError("variable_count must be positive")
        clauses = tuple(frozenset(c) for c in self.clauses)
        object.__setattr__(self, "clauses", clauses)
        if not clauses:
            raise ValueError("at least one clause is required")
        for c in clauses:
            if not 1 <= len(c) <= 3:
                raise ValueError(f"clause {sorted(c)} must have 1 to 3 literals")
            for lit in c:
                if lit == 0 or abs(lit) > self.variable_count:
                    raise ValueError(f"literal {lit} outside variables 1..{self.variable_count}")
            if any(-lit in c for lit in c):
                raise ValueError(f"clause {sorted(c)} contains both polarities of a variable")

    def satisfied_by(self, assignment: Sequence[bool]) -> bool:
        if len(assignment) != self.variable_count:
            raise ValueError("assignment length mismatch")
        return all(
            any((lit > 0) == bool(assignment[abs(lit) - 1]) for lit in c)
            for c in self.clauses
        )


def side_condition_holds(sat: SatInstance) -> bool:
    """True iff every variable is absent, in both polarities, from some clause."""
    for i in range(1, sat.variable_count + 1):
        if all(i in c or -i in c for c in sat.clauses):
            return False
    return True


def _require_side_condition(sat: SatInstance) -> None:
    if not side_condition_holds(sat):
        raise SideConditionError(
            "some variable is touched by every clause; the gadget needs a clause avoiding each variable"
        )


def reduce_dim2(sat: SatInstance) -> tuple[BiInstance, SolutionSet]:
    """Gadget with all blue edges of size 2.

    Vertices are x1..xn, nx1..nxn, y1..yn. Each clause becomes a red edge
    holding its literal vertices plus every y vertex; the blue edges are
    B_i = {x_i, y_i} followed by B'_i = {nx_i, y_i}. Returns the instance
    and the seed solutions X = {{y_i}}, whose footprints are exactly
    {B_i, B'_i}.
    """
    _require_side_condition(sat)
    n, m = sat.variable_count, len(sat.clauses)

    def x(i: int) -> int:
        return i - 1

    def nx(i: int) -> int:
        return n + i - 1

    def y(i: int) -> int:
        return 2 * n + i - 1

    labels = (
        [f"x{i}" for i in range(1, n + 1)]
        + [f"nx{i}" for i in range(1, n + 1)]
        + [f"y{i}" for i in range(1, n + 1)]
    )
    ys = [y(i) for i in range(1, n + 1)]
    red = [
        BitSet([x(lit) if lit > 0 else nx(-lit) for lit in clause] + ys)
        for clause in sat.clauses
    ]
    blue = [BitSet([x(i), y(i)]) for i in range(1, n + 1)] + [
        BitSet([nx(i), y(i)]) for i in range(1, n + 1)
    ]
    inst = BiInstance.from_edges(3 * n, red, blue, labels=labels)
    seeds = SolutionSet(BitSet([y(i)]) for i in range(1, n + 1))
    return inst, seeds


def _deg3_layout(sat: SatInstance):
    """Vertex layout shared by the generator and the assignment extractor.

    Returns (labels, kinds, pos, neg, yv) where kinds[v] is ("pos", i),
    ("neg", i) or ("y", i), and pos/neg/yv map (i, clause index j) to the
    vertex index of that copy.
    """
    n, m = sat.variable_count, len(sat.clauses)
    labels: list[str] = []
    kinds: list[tuple[str, int]] = []
    pos: dict[tuple[int, int], int] = {}
    neg: dict[tuple[int, int], int] = {}
    yv: dict[tuple[int, int], int] = {}
    for i in range(1, n + 1):
        for j in range(m):
            if i in sat.clauses[j]:
                pos[(i, j)] = len(labels)
                labels.append(f"x{i}_{j + 1}")
                kinds.append(("pos", i))
    for i in range(1, n + 1):
        for j in range(m):
            if -i in sat.clauses[j]:
                neg[(i, j)] = len(labels)
                labels.append(f"nx{i}_{j + 1}")
                kinds.append(("neg", i))
    for i in range(1, n + 1):
        for j in range(m):
            yv[(i, j)] = len(labels)
            labels.append(f"y{i}_{j + 1}")
            kinds.append(("y", i))
    return labels, kinds, pos, neg, yv


def reduce_deg3(sat: SatInstance) -> tuple[BiInstance, SolutionSet]:
    """Gadget with every vertex in exactly 3 hyperedges overall.

    Each y_i is split into one copy per clause and each literal into one
    copy per clause containing it. Clause j's red edge holds the literal
    copies for j plus every y copy with index j. Blue edges are B_i (the
    positive copies plus y copies of i), B'_i (negative copies plus y
    copies), then B''_i (all literal copies of i). Returns the instance
    and X = {{y_i^1..y_i^m}}, whose footprints are exactly {B_i, B'_i}.
    """
    _require_side_condition(sat)
    n, m = sat.variable_count, len(sat.clauses)
    labels, kinds, pos, neg, yv = _deg3_layout(sat)
    red = []
    for j in range(m):
        members = [yv[(i, j)] for i in range(1, n + 1)]
        members += [pos[(i, j)] for i in range(1, n + 1) if (i, j) in pos]
        members += [neg[(i, j)] for i in range(1, n + 1) if (i, j) in neg]
        red.append(BitSet(members))
    pos_of = {i: [v for (k, j), v in pos.items() if k == i] for i in range(1, n + 1)}
    neg_of = {i: [v for (k, j), v in neg.items() if k == i] for i in range(1, n + 1)}
    y_of = {i: [yv[(i, j)] for j in range(m)] for i in range(1, n + 1)}
    blue = (
        [BitSet(pos_of[i] + y_of[i]) for i in range(1, n + 1)]
        + [BitSet(neg_of[i] + y_of[i]) for i in range(1, n + 1)]
        + [BitSet(pos_of[i] + neg_of[i]) for i in range(1, n + 1)]
    )
    inst = BiInstance.from_edges(len(labels), red, blue, labels=labels)
    for v in range(len(labels)):
        d = inst.red.degree(v) + inst.blue.degree(v)
        if d != 3:
            raise Error(f"internal: vertex {labels[v]} has degree {d}, expected 3")
    seeds = SolutionSet(BitSet(y_of[i]) for i in range(1, n + 1))
    return inst, seeds


def extract_assignment(
    witness: BiSolution | VertexSet, sat: SatInstance, variant: str
) -> tuple[bool, ...]:
    """Read a satisfying assignment off a gadget witness.

    ``variant`` is "dim2" or "deg3". The witness must touch no helper y
    vertex and at most one polarity per variable; variables it leaves
    untouched default to False. The result is asserted to satisfy every
    clause before it is returned.
    """
    s = witness.s if isinstance(witness, BiSolution) else witness
    n = sat.variable_count
    if variant == "dim2":
        def kind_of(v: int) -> tuple[str, int]:
            if v < n:
                return ("pos", v + 1)
            if v < 2 * n:
                return ("neg", v - n + 1)
            return ("y", v - 2 * n + 1)
        universe = 3 * n
    elif variant == "deg3":
        _, kinds, _, _, _ = _deg3_layout(sat)
        def kind_of(v: int) -> tuple[str, int]:
            return kinds[v]
        universe = len(kinds)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    if any(v >= universe for v in s):
        raise InvalidSolutionError(witness, "vertex outside the gadget universe")
    polarity: dict[int, bool] = {}
    for v in s:
        kind, i = kind_of(v)
        if kind == "y":
            raise InvalidSolutionError(witness, f"malformed witness: contains helper vertex y{i}")
        value = kind == "pos"
        if polarity.get(i, value) != value:
            raise InvalidSolutionError(
                witness, f"malformed witness: contains both polarities of variable {i}"
            )
        polarity[i] = value
    assignment = tuple(polarity.get(i, False) for i in range(1, n + 1))
    if not sat.satisfied_by(assignment):
        raise Error("internal: extracted assignment does not satisfy every clause")
    return assignment


def random_bi_instance(
    n: int, m_red: int, m_blue: int, density: float, seed: int
) -> BiInstance:
    """Seeded random instance: each vertex joins each edge with probability
    ``density``. Red edges are redrawn until non-empty; blue edges may be
    empty. The generator is pinned (Mersenne Twister via random.Random),
    so a seed names the same instance everywhere.
    """
    if n < 1 or m_red < 1 or m_blue < 1:
        raise ValueError("n, m_red and m_blue must be positive")
    if not 0 < density <= 1:
        raise ValueError("density must be in (0, 1]")
    rng = random.Random(seed)

    def draw() -> int:
        return sum(1 << v for v in range(n) if rng.random() < density)

    red = []
    for _ in range(m_red):
        mask = draw()
        while not mask:
            mask = draw()
        red.append(BitSet.from_mask(mask))
    blue = [BitSet.from_mask(draw()) for _ in range(m_blue)]
    return BiInstance.from_edges(n, red, blue)


def parse_dimacs(text: str) -> SatInstance:
    """Read a DIMACS CNF file body into a :class:`SatInstance`.

    Expects one ``p cnf <variables> <clauses>`` header, ``c`` comment
    lines anywhere, and 0-terminated clauses that may span lines; a ``%``
    line ends the input (SATLIB trailer). Clause sizes beyond 3 are
    rejected by the instance validation.
    """
    header: tuple[int, int] | None = None
    tokens: list[int] = []
    for line in text.splitlines():
        line = line.strip()
        if line.startswith("%"):
            break  # SATLIB end-of-file marker; a bare 0 may follow
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            if header is not None:
                raise ParseError("duplicate DIMACS header")
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ParseError(f"malformed header {line!r}")
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise ParseError(f"malformed header {line!r}") from None
            continue
        if header is None:
            raise ParseError("clause before the DIMACS header")
        try:
            tokens.extend(int(t) for t in line.split())
        except ValueError:
            raise ParseError(f"malformed clause line {line!r}") from None
    if header is None:
        raise ParseError("missing DIMACS header")
    clauses: list[frozenset[int]] = []
    current: list[int] = []
    for t in tokens:
        if t == 0:
            if not current:
                raise ParseError("empty clause in DIMACS input")
            clauses.append(frozenset(current))
            current = []
        else:
            current.append(t)
    if current:
        raise ParseError("last clause is not 0-terminated")
    if len(clauses) != header[1]:
        raise ParseError(f"header promises {header[1]} clauses, found {len(clauses)}")
    try:
        return SatInstance(header[0], tuple(clauses))
    except ValueError as e:
        raise ParseError(str(e)) from None
