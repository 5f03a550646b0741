"""Minimal transversal enumeration and completeness checking.

Two engines are provided: an exhaustive subset sweep used as the oracle,
and the incremental edge-by-edge crossing algorithm used everywhere else.
Both return the full transversal hypergraph tr(H) in canonical order.
"""

from __future__ import annotations

from typing import Iterable

from .core import (
    BitSet,
    Hypergraph,
    InvalidSolutionError,
    ResourceLimitError,
    SolutionSet,
    UnsatisfiableError,
    VertexSet,
    bit_indices,
    is_transversal,
)

DEFAULT_MAX_PARTIALS = 10**6
BRUTE_FORCE_VERTEX_LIMIT = 24


def _require_no_empty_edge(h: Hypergraph) -> None:
    if h.has_empty_edge():
        raise UnsatisfiableError("hypergraph contains an empty edge, no transversal exists")


def _minimal_masks(masks: Iterable[int]) -> list[int]:
    # Popcount-ascending insertion: a superset can only appear after one of
    # its subsets, so one containment scan against the kept list suffices.
    kept: list[int] = []
    for m in sorted(set(masks), key=lambda x: (x.bit_count(), x)):
        if not any(k & m == k for k in kept):
            kept.append(m)
    return kept


def brute_force_dualize(h: Hypergraph) -> SolutionSet:
    """tr(H) by sweeping all 2^n vertex subsets.

    Guarded at 24 vertices; meant as the reference oracle, not as an
    engine. Rejects hypergraphs with an empty edge.
    """
    if h.vertex_count > BRUTE_FORCE_VERTEX_LIMIT:
        raise ResourceLimitError(
            f"brute-force dualization is guarded at {BRUTE_FORCE_VERTEX_LIMIT} vertices, got {h.vertex_count}"
        )
    _require_no_empty_edge(h)
    edge_masks = [e.mask for e in h.edges]
    transversals = [m for m in range(1 << h.vertex_count) if all(m & e for e in edge_masks)]
    tset = set(transversals)
    minimal = []
    for m in transversals:
        rest = m
        while rest:
            low = rest & -rest
            if (m ^ low) in tset:
                break
            rest ^= low
        else:
            minimal.append(m)
    return SolutionSet(BitSet.from_mask(m) for m in minimal)


def berge_dualize(h: Hypergraph, *, max_partials: int = DEFAULT_MAX_PARTIALS) -> SolutionSet:
    """tr(H) by crossing partial solutions with one edge at a time.

    Duplicate edges are collapsed first and edges are processed in
    ascending size order. After each edge the candidate batch is reduced
    to its inclusion-minimal antichain, which keeps exactly the minimal
    transversals of the prefix processed so far. A batch larger than
    ``max_partials`` aborts with :class:`ResourceLimitError`.
    """
    _require_no_empty_edge(h)
    edge_masks = sorted(
        (e.mask for e in h.normalized().edges), key=lambda m: (m.bit_count(), m)
    )
    partials = [0]
    for e in edge_masks:
        hit = []
        extended = []
        for s in partials:
            if s & e:
                hit.append(s)
            else:
                extended.extend(s | (1 << v) for v in bit_indices(e))
        if len(hit) + len(extended) > max_partials:
            raise ResourceLimitError(
                f"partial solution count {len(hit) + len(extended)} exceeds the cap of {max_partials}"
            )
        partials = _minimal_masks(hit + extended)
    return SolutionSet(BitSet.from_mask(m) for m in partials)


def transversals_allowing_empty(
    h: Hypergraph, *, max_partials: int = DEFAULT_MAX_PARTIALS
) -> SolutionSet:
    """tr(H) under the convention that an empty edge kills every solution.

    A hypergraph containing the empty edge has no transversal at all, so
    its tr is the empty solution set rather than an error. Used where tr
    is taken of derived hypergraphs that may legitimately contain empty
    edges.
    """
    if h.has_empty_edge():
        return SolutionSet()
    return berge_dualize(h, max_partials=max_partials)


def dual_check(
    h: Hypergraph,
    claimed: Iterable[VertexSet],
    *,
    max_partials: int = DEFAULT_MAX_PARTIALS,
) -> VertexSet | None:
    """Check whether ``claimed`` is all of tr(H).

    Every member of ``claimed`` must be a minimal transversal of ``h``;
    a member that is not raises :class:`InvalidSolutionError` naming it
    and the violated condition. Returns None when the claim is complete,
    otherwise the lexicographically smallest missing minimal transversal.
    """
    claimed = list(claimed)
    for s in claimed:
        if not is_transversal(s, h):
            raise InvalidSolutionError(s, "not a transversal")
        for v in s:
            if is_transversal(s - BitSet([v]), h):
                raise InvalidSolutionError(s, f"not minimal, vertex {v} is redundant")
    have = {s.mask for s in claimed}
    for s in berge_dualize(h, max_partials=max_partials):
        if s.mask not in have:
            return s
    return None


def self_duality_check(h: Hypergraph, *, max_partials: int = DEFAULT_MAX_PARTIALS) -> bool:
    """True iff tr(tr(H)) equals the inclusion-minimal edges of H."""
    _require_no_empty_edge(h)
    tr1 = berge_dualize(h, max_partials=max_partials)
    tr2 = transversals_allowing_empty(
        Hypergraph(h.vertex_count, tr1.sets), max_partials=max_partials
    )
    return tr2 == h.minimal_edges()
