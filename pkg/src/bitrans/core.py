"""Hypergraphs over dense integer vertices, with bitmask-backed set types.

Vertices are indices 0..n-1; optional string labels are carried only for
I/O. Every type is immutable once built and every operation is a pure
function of its inputs, so values can be shared freely.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class Error(Exception):
    """Base class for all errors raised by this package."""


class UnsatisfiableError(Error):
    """The input contains an empty red edge, so no transversal exists."""


class ResourceLimitError(Error):
    """An enumeration exceeded a configured size guard."""


class ParseError(Error):
    """Malformed input text (instance file, formula, or DIMACS)."""


class SideConditionError(Error):
    """A SAT instance has some variable touched by every clause, which the
    reduction gadgets do not accept."""


class InvalidSolutionError(Error):
    """A claimed solution failed validation against its defining conditions."""

    def __init__(self, member, reason: str):
        super().__init__(f"invalid solution {member}: {reason}")
        self.member = member
        self.reason = reason


def bit_indices(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class BitSet:
    """Immutable set of small non-negative integers backed by an int mask.

    Used both for vertex sets and for edge-index subsets; an edge subset is
    always interpreted relative to the edge list of one designated
    hypergraph. Iteration is in ascending order. The comparison operators
    follow frozenset conventions (subset relations), so canonical sorting
    uses :attr:`members` as the key.
    """

    __slots__ = ("mask",)

    def __init__(self, members: Iterable[int] = ()):
        mask = 0
        for v in members:
            if not isinstance(v, int) or v < 0:
                raise ValueError(f"members must be nonnegative ints, got {v!r}")
            mask |= 1 << v
        self.mask = mask

    @classmethod
    def from_mask(cls, mask: int) -> "BitSet":
        if mask < 0:
            raise ValueError("negative mask")
        s = cls.__new__(cls)
        s.mask = mask
        return s

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(bit_indices(self.mask))

    def __iter__(self) -> Iterator[int]:
        return bit_indices(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __contains__(self, v: int) -> bool:
        return v >= 0 and (self.mask >> v) & 1 == 1

    def __eq__(self, other) -> bool:
        if isinstance(other, BitSet):
            return self.mask == other.mask
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.mask)

    def __and__(self, other: "BitSet") -> "BitSet":
        return BitSet.from_mask(self.mask & other.mask)

    def __or__(self, other: "BitSet") -> "BitSet":
        return BitSet.from_mask(self.mask | other.mask)

    def __sub__(self, other: "BitSet") -> "BitSet":
        return BitSet.from_mask(self.mask & ~other.mask)

    def __le__(self, other: "BitSet") -> bool:
        return self.mask & ~other.mask == 0

    def __lt__(self, other: "BitSet") -> bool:
        return self.mask != other.mask and self.mask & ~other.mask == 0

    def __ge__(self, other: "BitSet") -> bool:
        return other <= self

    def __gt__(self, other: "BitSet") -> bool:
        return other < self

    def isdisjoint(self, other: "BitSet") -> bool:
        return self.mask & other.mask == 0

    def __repr__(self) -> str:
        return f"BitSet({list(self)})"


# Both roles share the representation; the aliases document intent.
VertexSet = BitSet
EdgeSubset = BitSet


def _canonical_key(s: BitSet) -> tuple[int, ...]:
    return s.members


class SolutionSet:
    """A canonically ordered antichain of :class:`BitSet` values.

    Canonical order is lexicographic on the ascending index sequences.
    Construction validates that no member contains another and that there
    are no duplicates; use :meth:`minimal` to reduce an arbitrary
    collection to its inclusion-minimal antichain.
    """

    __slots__ = ("sets",)

    def __init__(self, sets: Iterable[BitSet] = ()):
        ordered = sorted(sets, key=_canonical_key)
        for i, s in enumerate(ordered):
            for t in ordered[i + 1:]:
                if s == t:
                    raise ValueError(f"duplicate solution {s}")
                if s <= t or t <= s:
                    raise ValueError(f"not an antichain: {s} and {t} are comparable")
        self.sets = tuple(ordered)

    @classmethod
    def minimal(cls, sets: Iterable[BitSet]) -> "SolutionSet":
        """The inclusion-minimal antichain of ``sets``."""
        kept: list[BitSet] = []
        for s in sorted(set(sets), key=lambda t: (len(t), t.members)):
            if not any(k <= s for k in kept):
                kept.append(s)
        return cls(kept)

    def __iter__(self) -> Iterator[BitSet]:
        return iter(self.sets)

    def __len__(self) -> int:
        return len(self.sets)

    def __getitem__(self, i):
        return self.sets[i]

    def __contains__(self, s: BitSet) -> bool:
        return s in self.sets

    def __eq__(self, other) -> bool:
        if isinstance(other, SolutionSet):
            return self.sets == other.sets
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.sets)

    def __repr__(self) -> str:
        return f"SolutionSet([{', '.join(repr(s) for s in self.sets)}])"


@dataclass(frozen=True)
class Hypergraph:
    """A hypergraph over vertices 0..vertex_count-1.

    Edges may repeat and may be empty at this level; operations that need
    more state their preconditions. ``labels``, when given, is one string
    per vertex and is used only by the I/O layer.
    """

    vertex_count: int
    edges: tuple[BitSet, ...] = ()
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        edges = tuple(e if isinstance(e, BitSet) else BitSet(e) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        universe = (1 << self.vertex_count) - 1
        for i, e in enumerate(edges):
            if e.mask & ~universe:
                raise ValueError(f"edge {i} = {e} is not inside the universe of size {self.vertex_count}")
        if self.labels is not None:
            labels = tuple(self.labels)
            object.__setattr__(self, "labels", labels)
            if len(labels) != self.vertex_count:
                raise ValueError("labels must have one entry per vertex")
            if len(set(labels)) != len(labels):
                raise ValueError("labels must be distinct")

    def dimension(self) -> int:
        """Size of the largest edge (0 for an edge-less hypergraph)."""
        return max((len(e) for e in self.edges), default=0)

    def degree(self, x: int) -> int:
        """Number of edges containing vertex ``x``."""
        self._check_vertex(x)
        return sum(1 for e in self.edges if x in e)

    def star(self, x: int) -> EdgeSubset:
        """Indices of the edges containing vertex ``x``."""
        self._check_vertex(x)
        mask = 0
        for i, e in enumerate(self.edges):
            if x in e:
                mask |= 1 << i
        return BitSet.from_mask(mask)

    def has_empty_edge(self) -> bool:
        return any(e.mask == 0 for e in self.edges)

    def normalized(self) -> "Hypergraph":
        """Copy with duplicate edges collapsed (first occurrence kept)."""
        seen: set[int] = set()
        edges = []
        for e in self.edges:
            if e.mask not in seen:
                seen.add(e.mask)
                edges.append(e)
        return Hypergraph(self.vertex_count, tuple(edges), self.labels)

    def minimal_edges(self) -> SolutionSet:
        """The inclusion-minimal distinct edges, in canonical order."""
        return SolutionSet.minimal(self.edges)

    def _check_vertex(self, x: int) -> None:
        if not 0 <= x < self.vertex_count:
            raise ValueError(f"vertex {x} outside universe of size {self.vertex_count}")


@dataclass(frozen=True)
class BiInstance:
    """A red and a blue hypergraph sharing one vertex universe."""

    red: Hypergraph
    blue: Hypergraph
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.red.vertex_count != self.blue.vertex_count:
            raise ValueError("red and blue hypergraphs must share the vertex universe")
        if self.labels is not None:
            labels = tuple(self.labels)
            object.__setattr__(self, "labels", labels)
            if len(labels) != self.red.vertex_count:
                raise ValueError("labels must have one entry per vertex")
            if len(set(labels)) != len(labels):
                raise ValueError("labels must be distinct")

    @property
    def vertex_count(self) -> int:
        return self.red.vertex_count

    @classmethod
    def from_edges(
        cls,
        vertex_count: int,
        red_edges: Iterable[Iterable[int]],
        blue_edges: Iterable[Iterable[int]],
        labels: Iterable[str] | None = None,
    ) -> "BiInstance":
        red = Hypergraph(vertex_count, tuple(BitSet(e) if not isinstance(e, BitSet) else e for e in red_edges))
        blue = Hypergraph(vertex_count, tuple(BitSet(e) if not isinstance(e, BitSet) else e for e in blue_edges))
        return cls(red, blue, None if labels is None else tuple(labels))


def is_transversal(s: VertexSet, h: Hypergraph) -> bool:
    """True iff ``s`` intersects every edge of ``h``.

    Any hypergraph with an empty edge has no transversal, and an edge-less
    hypergraph is hit by every set including the empty one.
    """
    m = s.mask
    return all(m & e.mask for e in h.edges)


def hit_edges(s: VertexSet, h: Hypergraph) -> EdgeSubset:
    """Indices of the edges of ``h`` that ``s`` intersects."""
    _check_subset(s, h.vertex_count)
    mask = 0
    for i, e in enumerate(h.edges):
        if e.mask & s.mask:
            mask |= 1 << i
    return BitSet.from_mask(mask)


def blue_star(x: int, inst: BiInstance) -> EdgeSubset:
    """Indices of the blue edges containing vertex ``x``."""
    return inst.blue.star(x)


def s_of_b(b: EdgeSubset, inst: BiInstance) -> VertexSet:
    """The vertices whose blue star is contained in ``b``.

    This is the largest vertex set whose hit blue edges all lie in ``b``;
    it is monotone in ``b``.
    """
    _check_subset(b, len(inst.blue.edges))
    mask = 0
    for x in range(inst.vertex_count):
        if inst.blue.star(x).mask & ~b.mask == 0:
            mask |= 1 << x
    return BitSet.from_mask(mask)


def f_predicate(b: EdgeSubset, inst: BiInstance) -> bool:
    """True iff ``s_of_b(b, inst)`` is a transversal of the red hypergraph."""
    return is_transversal(s_of_b(b, inst), inst.red)


def minimize_within(s: VertexSet, h: Hypergraph) -> VertexSet:
    """Shrink the transversal ``s`` to a minimal transversal of ``h``.

    Removal candidates are tried from the highest index down, so vertices
    with low indices are preferentially kept and the result is
    deterministic. Rejects ``s`` that is not a transversal.
    """
    if not is_transversal(s, h):
        raise ValueError(f"{s} is not a transversal")
    cur = s.mask
    edge_masks = [e.mask for e in h.edges]
    for v in sorted(s, reverse=True):
        cand = cur ^ (1 << v)
        if all(cand & e for e in edge_masks):
            cur = cand
    return BitSet.from_mask(cur)


def _check_subset(s: BitSet, size: int) -> None:
    if s.mask & ~((1 << size) - 1):
        raise ValueError(f"{s} is not inside a universe of size {size}")
