"""Exhaustive generation of small graphs, one representative per isomorphism class.

Connected graphs are grown one vertex at a time: every connected graph
on k+1 vertices contains a vertex whose removal leaves a connected graph
(any leaf of a spanning tree), so augmenting each k-vertex representative
with a new vertex attached to every non-empty neighbourhood subset
reaches everything.  Unicyclic graphs are grown from their cycle by
pendant additions for the same reason.  Duplicates are removed by
canonical form, and the output stream is sorted by that form, so two
runs emit byte-identical sequences.
"""

from __future__ import annotations

from typing import Iterator

from .canon import canonical_pair
from .families import cycle_graph
from .graphs import Graph, add_leaf

__all__ = [
    "enumerate_connected",
    "enumerate_unicyclic_nonbipartite",
    "CONNECTED_MAX_N",
    "UNICYCLIC_MAX_N",
    "UNICYCLIC_EXTENDED_MAX_N",
]

CONNECTED_MAX_N = 10
UNICYCLIC_MAX_N = 14
UNICYCLIC_EXTENDED_MAX_N = 18


def enumerate_connected(n: int) -> Iterator[Graph]:
    """All connected graphs of order n up to isomorphism, canonically labelled.

    Deterministic order (sorted canonical keys).  Orders up to 8 are
    quick; 9 and 10 are supported but take correspondingly longer.
    """
    if not 1 <= n <= CONNECTED_MAX_N:
        raise ValueError(f"connected enumeration supports 1 <= n <= {CONNECTED_MAX_N}, got {n}")
    k1 = Graph(1, (0,))
    level: dict[bytes, Graph] = {canonical_pair(k1)[0]: k1}
    for k in range(1, n):
        grown: dict[bytes, Graph] = {}
        for parent in level.values():
            rows = parent.rows
            for mask in range(1, 1 << k):
                child_rows = tuple(
                    r | ((mask >> u & 1) << k) for u, r in enumerate(rows)
                ) + (mask,)
                key, canon = canonical_pair(Graph(k + 1, child_rows))
                if key not in grown:
                    grown[key] = canon
        level = grown
    for key in sorted(level):
        yield level[key]


def enumerate_unicyclic_nonbipartite(n: int, allow_large: bool = False) -> Iterator[Graph]:
    """Connected unicyclic graphs of order n with an odd cycle, up to isomorphism.

    Grown per cycle length: start from the odd cycle and attach pendant
    vertices every possible way, deduplicating canonically at each step.
    Emitted by cycle length, then sorted canonical key.  Orders above 14
    take long enough that they sit behind ``allow_large``.
    """
    if n < 3:
        raise ValueError(f"unicyclic enumeration needs n >= 3, got {n}")
    cap = UNICYCLIC_EXTENDED_MAX_N if allow_large else UNICYCLIC_MAX_N
    if n > cap:
        hint = "" if allow_large else " (pass allow_large=True for 15..18)"
        raise ValueError(f"unicyclic enumeration capped at n <= {cap}{hint}")
    for c in range(3, n + 1, 2):
        key, base = canonical_pair(cycle_graph(c))
        level: dict[bytes, Graph] = {key: base}
        for k in range(c, n):
            grown: dict[bytes, Graph] = {}
            for parent in level.values():
                for v in range(k):
                    key, canon = canonical_pair(add_leaf(parent, v))
                    if key not in grown:
                        grown[key] = canon
            level = grown
        for key in sorted(level):
            yield level[key]
