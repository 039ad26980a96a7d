"""Named graph families used throughout the workbench."""

from __future__ import annotations

from .graphs import Graph, from_edges, join

__all__ = [
    "path_graph",
    "cycle_graph",
    "star_graph",
    "complete_graph",
    "complete_bipartite_graph",
    "barbell_graph",
    "extended_barbell_graph",
    "u_n3_graph",
    "h_kn_graph",
    "threshold_graph",
    "generate_family",
    "FAMILIES",
]


def path_graph(n: int) -> Graph:
    """Path on n >= 1 vertices, edges i ~ i+1."""
    if n < 1:
        raise ValueError(f"path needs n >= 1, got {n}")
    return from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    """Cycle on n >= 3 vertices."""
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    """Star K_{1,n-1}: centre 0, leaves 1..n-1."""
    if n < 1:
        raise ValueError(f"star needs n >= 1, got {n}")
    return from_edges(n, ((0, i) for i in range(1, n)))


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"complete graph needs n >= 1, got {n}")
    return from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def complete_bipartite_graph(r: int, s: int) -> Graph:
    """K_{r,s} with side A = 0..r-1 and side B = r..r+s-1."""
    if r < 1 or s < 1:
        raise ValueError(f"complete bipartite needs r, s >= 1, got ({r}, {s})")
    return from_edges(r + s, ((u, r + v) for u in range(r) for v in range(s)))


def barbell_graph(k: int) -> Graph:
    """Two K_k's joined by a single edge (order 2k)."""
    if k < 2:
        raise ValueError(f"barbell needs k >= 2, got {k}")
    edges = [(u, v) for u in range(k) for v in range(u + 1, k)]
    edges += [(k + u, k + v) for u in range(k) for v in range(u + 1, k)]
    edges.append((k - 1, k))
    return from_edges(2 * k, edges)


def extended_barbell_graph(k: int) -> Graph:
    """Two K_k's whose bridge is subdivided by a midpoint vertex.

    Order n = 2k + 1.  Cliques occupy 0..k-1 and k..2k-1; the degree-2
    midpoint is vertex 2k, adjacent to k-1 and k.
    """
    if k < 3:
        raise ValueError(f"extended barbell needs k >= 3, got {k}")
    edges = [(u, v) for u in range(k) for v in range(u + 1, k)]
    edges += [(k + u, k + v) for u in range(k) for v in range(u + 1, k)]
    edges += [(k - 1, 2 * k), (2 * k, k)]
    return from_edges(2 * k + 1, edges)


def u_n3_graph(n: int) -> Graph:
    """Star K_{1,n-1} plus one edge between the leaves 1 and 2.

    The unique unicyclic graph with a triangle and n-3 extra pendants at
    one triangle vertex (the centre 0, which has degree n-1).
    """
    if n < 3:
        raise ValueError(f"u_n3 needs n >= 3, got {n}")
    edges = [(0, i) for i in range(1, n)]
    edges.append((1, 2))
    return from_edges(n, edges)


def h_kn_graph(n: int, k: int) -> Graph:
    """Cycle C_k with a star K_{1,n-k} glued on by one of its leaves.

    Cycle vertices are 0..k-1 (the glued vertex is k-1), the star centre
    is k, and the remaining leaves are k+1..n-1.  Needs k >= 3 and
    n >= k + 2 so that at least one pendant leaf survives.
    """
    if k < 3:
        raise ValueError(f"h_kn needs cycle length k >= 3, got {k}")
    if n < k + 2:
        raise ValueError(f"h_kn needs n >= k + 2, got n={n}, k={k}")
    edges = [(i, (i + 1) % k) for i in range(k)]
    edges.append((k - 1, k))
    edges += [(k, j) for j in range(k + 1, n)]
    return from_edges(n, edges)


def threshold_graph(sequence: str) -> Graph:
    """Threshold graph grown from K_1 by a creation string over {i, d}.

    Each character appends a vertex: 'i' isolated, 'd' dominating (joined
    to everything present).  The result is connected iff the string is
    empty or ends in 'd'.
    """
    g = from_edges(1, ())
    for ch in sequence:
        if ch == "i":
            g = Graph(g.n + 1, g.rows + (0,))
        elif ch == "d":
            g = join(g, from_edges(1, ()))
        else:
            raise ValueError(f"threshold creation string must use 'i'/'d', got {ch!r}")
    return g


FAMILIES = {
    "path": (path_graph, 1),
    "cycle": (cycle_graph, 1),
    "star": (star_graph, 1),
    "complete": (complete_graph, 1),
    "complete_bipartite": (complete_bipartite_graph, 2),
    "barbell": (barbell_graph, 1),
    "extended_barbell": (extended_barbell_graph, 1),
    "u_n3": (u_n3_graph, 1),
    "h_kn": (h_kn_graph, 2),
    "threshold": (threshold_graph, 1),
}


def generate_family(family: str, *params) -> Graph:
    """Dispatch to a named family generator.

    Integer families take their parameters positionally; ``threshold``
    takes the creation string.  Unknown names and bad parameter counts
    raise ValueError listing what is available.
    """
    if family not in FAMILIES:
        raise ValueError(
            f"unknown family {family!r}; available: {', '.join(sorted(FAMILIES))}"
        )
    fn, arity = FAMILIES[family]
    if len(params) != arity:
        raise ValueError(f"family {family!r} takes {arity} parameter(s), got {len(params)}")
    if family == "threshold":
        seq = params[0]
        if not isinstance(seq, str):
            raise ValueError("threshold expects its creation string")
        return fn(seq)
    try:
        ints = [int(p) for p in params]
    except (TypeError, ValueError):
        raise ValueError(f"family {family!r} expects integer parameters, got {params!r}") from None
    return fn(*ints)
