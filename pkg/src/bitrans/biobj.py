"""Bi-objective minimal transversals of a red/blue hypergraph pair.

A solution is a minimal transversal S of the red hypergraph whose blue
footprint (the set of blue edges S hits) is not a strict superset of
another minimal transversal's footprint. Enumeration runs in two phases:
first the minimal B-sets, the inclusion-minimal blue subsets B whose
induced vertex set s_of_b(B) is a red transversal, then for each B the
minimal red transversals inside s_of_b(B). Each phase is a transversal
computation, so the whole pipeline reduces to dualization.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .core import (
    BitSet,
    BiInstance,
    EdgeSubset,
    Error,
    Hypergraph,
    InvalidSolutionError,
    ResourceLimitError,
    SolutionSet,
    UnsatisfiableError,
    VertexSet,
    blue_star,
    hit_edges,
    is_transversal,
    s_of_b,
)
from .dualize import (
    DEFAULT_MAX_PARTIALS,
    berge_dualize,
    brute_force_dualize,
    transversals_allowing_empty,
)

BRUTE_FORCE_VERTEX_LIMIT = 20
BRUTE_FORCE_BLUE_LIMIT = 16

Dualizer = Callable[[Hypergraph], SolutionSet]


@dataclass(frozen=True)
class BiSolution:
    """A minimal red transversal ``s`` together with its blue footprint ``b``."""

    s: VertexSet
    b: EdgeSubset

    def sort_key(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return (self.b.members, self.s.members)


def build_ha(a: VertexSet, inst: BiInstance) -> Hypergraph:
    """The hypergraph H_A over blue edge indices for a red edge ``a``.

    Its edges are the blue stars of the vertices of ``a``, in ascending
    vertex order; a blue-free vertex contributes an empty edge. A blue
    subset B is a transversal of tr(H_A) exactly when s_of_b(B) hits
    ``a``.
    """
    if not any(e == a for e in inst.red.edges):
        raise ValueError(f"{a} is not an edge of the red hypergraph")
    return Hypergraph(len(inst.blue.edges), tuple(blue_star(x, inst) for x in a))


def _resolve_dualizer(dualizer: Dualizer | None, max_partials: int) -> Dualizer:
    if dualizer is not None:
        return dualizer
    return lambda h: berge_dualize(h, max_partials=max_partials)


def _tr_allowing_empty(h: Hypergraph, dualizer: Dualizer) -> SolutionSet:
    if h.has_empty_edge():
        return SolutionSet()
    return dualizer(h)


def minimal_bsets(
    inst: BiInstance,
    *,
    max_partials: int = DEFAULT_MAX_PARTIALS,
    dualizer: Dualizer | None = None,
) -> SolutionSet:
    """The inclusion-minimal blue subsets B with f(B) true.

    Computed as tr of the union over red edges A of tr(H_A). An H_A that
    contains an empty edge has no transversal and contributes nothing (the
    red edge is covered through its blue-free vertex for every B), and an
    edge-less union dualizes to the single empty B-set.
    """
    if inst.red.has_empty_edge():
        raise UnsatisfiableError("red hypergraph contains an empty edge")
    dualize = _resolve_dualizer(dualizer, max_partials)
    union: list[BitSet] = []
    for a in inst.red.edges:
        union.extend(_tr_allowing_empty(build_ha(a, inst), dualize))
    u = Hypergraph(len(inst.blue.edges), tuple(union)).normalized()
    return _tr_allowing_empty(u, dualize)


def lemma2_check(b: EdgeSubset, a: VertexSet, inst: BiInstance) -> bool:
    """Both sides of the H_A correspondence, asserted equal.

    Left side: ``b`` is a transversal of tr(H_A). Right side: s_of_b(b)
    intersects ``a``. Raises on disagreement (an implementation bug) and
    returns the shared value otherwise.
    """
    ha = build_ha(a, inst)
    tr_ha = transversals_allowing_empty(ha)
    left = is_transversal(b, Hypergraph(len(inst.blue.edges), tr_ha.sets))
    right = not s_of_b(b, inst).isdisjoint(a)
    if left != right:
        raise Error(f"H_A correspondence violated for B={b}, A={a}")
    return left


def bi_transversals(
    inst: BiInstance,
    *,
    max_partials: int = DEFAULT_MAX_PARTIALS,
    dualizer: Dualizer | None = None,
) -> list[BiSolution]:
    """All bi-objective minimal transversals, as (S, footprint) pairs.

    Groups are emitted per minimal B-set in canonical order; inside a
    group the transversals are in canonical order. For each minimal B-set
    B, the red edges are restricted to s_of_b(B) and dualized; every S
    found that way has footprint exactly B, which is asserted, and no S
    repeats across groups.
    """
    dualize = _resolve_dualizer(dualizer, max_partials)
    out: list[BiSolution] = []
    for b in minimal_bsets(inst, max_partials=max_partials, dualizer=dualizer):
        sb = s_of_b(b, inst)
        restricted = []
        for a in inst.red.edges:
            r = a & sb
            if not r:
                raise Error(f"internal: minimal B-set {b} does not cover red edge {a}")
            restricted.append(r)
        for s in dualize(Hypergraph(inst.vertex_count, tuple(restricted))):
            footprint = hit_edges(s, inst.blue)
            if footprint != b:
                raise Error(f"internal: footprint {footprint} of {s} differs from its B-set {b}")
            out.append(BiSolution(s, b))
    return out


def brute_force_btr(inst: BiInstance) -> list[BiSolution]:
    """Bi-objective minimal transversals straight from the definition.

    Enumerates all minimal red transversals by brute force, computes every
    footprint, and drops each solution whose footprint strictly contains
    another's. Guarded at 20 vertices.
    """
    if inst.vertex_count > BRUTE_FORCE_VERTEX_LIMIT:
        raise ResourceLimitError(
            f"brute-force enumeration is guarded at {BRUTE_FORCE_VERTEX_LIMIT} vertices, got {inst.vertex_count}"
        )
    candidates = [
        BiSolution(s, hit_edges(s, inst.blue)) for s in brute_force_dualize(inst.red)
    ]
    kept = [
        c
        for c in candidates
        if not any(other.b < c.b for other in candidates)
    ]
    return sorted(kept, key=BiSolution.sort_key)


def brute_force_minimal_bsets(inst: BiInstance) -> SolutionSet:
    """Minimal true sets of f by sweeping all 2^m blue subsets.

    Independent of the H_A construction: uses only s_of_b and the red
    transversal test. Guarded at 16 blue edges.
    """
    if inst.red.has_empty_edge():
        raise UnsatisfiableError("red hypergraph contains an empty edge")
    m = len(inst.blue.edges)
    if m > BRUTE_FORCE_BLUE_LIMIT:
        raise ResourceLimitError(
            f"brute-force B-set search is guarded at {BRUTE_FORCE_BLUE_LIMIT} blue edges, got {m}"
        )
    true_masks = [
        b
        for b in range(1 << m)
        if is_transversal(s_of_b(BitSet.from_mask(b), inst), inst.red)
    ]
    tset = set(true_masks)
    minimal = []
    for b in true_masks:
        rest = b
        while rest:
            low = rest & -rest
            if (b ^ low) in tset:
                break
            rest ^= low
        else:
            minimal.append(b)
    return SolutionSet(BitSet.from_mask(b) for b in minimal)


def bidual_check(
    inst: BiInstance,
    claimed: Iterable[BiSolution | VertexSet],
    *,
    max_partials: int = DEFAULT_MAX_PARTIALS,
) -> BiSolution | None:
    """Check whether ``claimed`` is the complete bi-objective solution set.

    Members may be bare vertex sets (footprints are computed) or
    :class:`BiSolution` values (stored footprints are verified). A member
    that is not a bi-objective minimal transversal raises
    :class:`InvalidSolutionError` naming it and the violated condition.
    Returns None when complete, otherwise the canonically smallest
    missing solution.
    """
    full = bi_transversals(inst, max_partials=max_partials)
    full_keys = {(c.s.mask, c.b.mask) for c in full}
    have = set()
    for member in claimed:
        if isinstance(member, BiSolution):
            s, b = member.s, member.b
            if hit_edges(s, inst.blue) != b:
                raise InvalidSolutionError(
                    member, "stored footprint differs from the blue edges actually hit"
                )
        else:
            s = member
            b = hit_edges(s, inst.blue)
        if (s.mask, b.mask) not in full_keys:
            if not is_transversal(s, inst.red):
                raise InvalidSolutionError(member, "condition 1: not a red transversal")
            if any(is_transversal(s - BitSet([v]), inst.red) for v in s):
                raise InvalidSolutionError(member, "condition 1: not a minimal red transversal")
            raise InvalidSolutionError(
                member, "condition 2: blue footprint strictly contains another solution's"
            )
        have.add((s.mask, b.mask))
    for c in full:
        if (c.s.mask, c.b.mask) not in have:
            return c
    return None
