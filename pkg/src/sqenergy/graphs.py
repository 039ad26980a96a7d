"""Simple undirected graphs on vertex set 0..n-1.

Adjacency is stored as one Python int per vertex (bit v of ``rows[u]`` is
set iff u ~ v).  Ints double as packed bitsets of any width, so the same
representation covers both small and large orders.  Graphs are immutable;
every operation returns a new value.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

__all__ = [
    "Graph",
    "GraphStats",
    "CactusProfile",
    "Graph6Error",
    "from_graph6",
    "to_graph6",
    "read_graph6_lines",
    "from_edges",
    "complement",
    "component_masks",
    "join",
    "kronecker",
    "delete_edge",
    "add_leaf",
    "move_neighbors",
    "induced_subgraph",
    "relabel",
    "stats",
    "cactus_profile",
]

_G6_MAX_N = 1 << 18


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph; ``rows[u]`` is the neighbour bitset of u.

    The constructor trusts its arguments.  Build graphs through
    :func:`from_edges`, :func:`from_graph6` or the family generators,
    which validate symmetry and the absence of self-loops.
    """

    n: int
    rows: tuple[int, ...]

    @property
    def m(self) -> int:
        """Number of edges."""
        return sum(r.bit_count() for r in self.rows) // 2

    def degree(self, u: int) -> int:
        return self.rows[u].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, u: int) -> Iterator[int]:
        return bits(self.rows[u])

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, lexicographic."""
        for u in range(self.n):
            for v in bits(self.rows[u] >> (u + 1) << (u + 1)):
                yield u, v

    def adjacency_matrix(self) -> np.ndarray:
        """Dense 0/1 float adjacency matrix."""
        a = np.zeros((self.n, self.n))
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1.0
        return a


def bits(mask: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list, validating the input."""
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


class Graph6Error(ValueError):
    """Malformed graph6 text; the message names the byte offset."""


def _g6_header(text: str) -> tuple[int, int]:
    """Decode the order; return (n, index of first payload char)."""
    if not text:
        raise Graph6Error("empty graph6 string (byte 0)")
    c = ord(text[0])
    if c == 126:  # '~': extended order
        if len(text) >= 2 and ord(text[1]) == 126:
            k, start = 6, 2
        else:
            k, start = 3, 1
        if len(text) < start + k:
            raise Graph6Error(
                f"truncated graph6 order field (byte {len(text)})"
            )
        n = 0
        for i in range(start, start + k):
            d = ord(text[i])
            if not 63 <= d <= 126:
                raise Graph6Error(f"invalid graph6 byte {d} (byte {i})")
            n = n << 6 | (d - 63)
        return n, start + k
    if not 63 <= c <= 126:
        raise Graph6Error(f"invalid graph6 byte {c} (byte 0)")
    return c - 63, 1


def from_graph6(text: str) -> Graph:
    """Decode one graph6 line (a trailing newline is tolerated).

    Bits of the upper triangle are read column by column: (0,1), (0,2),
    (1,2), (0,3), ...  Raises :class:`Graph6Error` naming the byte offset
    of the first problem.
    """
    if text.startswith(">>graph6<<"):
        text = text[10:]
    text = text.rstrip("\n")
    n, pos = _g6_header(text)
    if n > _G6_MAX_N:
        raise Graph6Error(f"order {n} exceeds the supported cap {_G6_MAX_N}")
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    if len(text) - pos < nchars:
        raise Graph6Error(
            f"truncated graph6 payload: need {nchars} bytes, "
            f"got {len(text) - pos} (byte {len(text)})"
        )
    if len(text) - pos > nchars:
        raise Graph6Error(f"trailing garbage after graph6 payload (byte {pos + nchars})")
    rows = [0] * n
    k = 0  # bit cursor over the upper triangle
    v, u = 1, 0
    for i in range(pos, pos + nchars):
        d = ord(text[i])
        if not 63 <= d <= 126:
            raise Graph6Error(f"invalid graph6 byte {d} (byte {i})")
        group = d - 63
        for shift in range(5, -1, -1):
            if k >= nbits:
                if group >> shift & 1:
                    raise Graph6Error(f"nonzero padding bit (byte {i})")
                continue
            if group >> shift & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            k += 1
            u += 1
            if u == v:
                v += 1
                u = 0
    return Graph(n, tuple(rows))


def to_graph6(g: Graph) -> str:
    """Encode in graph6 (no trailing newline)."""
    n = g.n
    if n > _G6_MAX_N:
        raise ValueError(f"order {n} exceeds the supported cap {_G6_MAX_N}")
    if n <= 62:
        head = chr(n + 63)
    elif n <= 258047:
        head = "~" + "".join(chr((n >> s & 63) + 63) for s in (12, 6, 0))
    else:
        head = "~~" + "".join(chr((n >> s & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    chunks = []
    group, filled = 0, 0
    for v in range(1, n):
        rv = g.rows[v]
        for u in range(v):
            group = group << 1 | (rv >> u & 1)
            filled += 1
            if filled == 6:
                chunks.append(chr(group + 63))
                group, filled = 0, 0
    if filled:
        chunks.append(chr((group << (6 - filled)) + 63))
    return head + "".join(chunks)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Decode an iterable of graph6 lines, skipping blank ones."""
    for line in lines:
        line = line.strip()
        if line:
            yield from_graph6(line)


# ---------------------------------------------------------------------------
# operations


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple((full ^ r) & ~(1 << u) for u, r in enumerate(g.rows)))


def component_masks(g: Graph) -> list[int]:
    """Connected components as vertex bitsets, ordered by smallest member."""
    todo = (1 << g.n) - 1
    out = []
    while todo:
        seed = todo & -todo
        reach = seed
        frontier = seed
        while frontier:
            grow = 0
            for u in bits(frontier):
                grow |= g.rows[u]
            frontier = grow & ~reach
            reach |= grow
        out.append(reach)
        todo &= ~reach
    return out


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus all edges between the two sides.

    Vertices of ``g`` keep their labels; vertices of ``h`` are shifted up
    by ``g.n``.  Empty operands are allowed.
    """
    n = g.n + h.n
    gmask = (1 << g.n) - 1
    hmask = ((1 << h.n) - 1) << g.n
    rows = [r | hmask for r in g.rows]
    rows += [(r << g.n) | gmask for r in h.rows]
    return Graph(n, tuple(rows))


def kronecker(g: Graph, h: Graph) -> Graph:
    """Tensor (categorical) product; vertex (i, j) gets label i*h.n + j."""
    hn = h.n
    rows = []
    for i in range(g.n):
        gi = g.rows[i]
        for j in range(hn):
            mask = 0
            for a in bits(gi):
                mask |= h.rows[j] << (a * hn)
            rows.append(mask)
    return Graph(g.n * hn, tuple(rows))


def delete_edge(g: Graph, e: tuple[int, int]) -> Graph:
    u, v = e
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise ValueError(f"edge ({u}, {v}) not present")
    rows = list(g.rows)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph(g.n, tuple(rows))


def add_leaf(g: Graph, v: int) -> Graph:
    """Append a new degree-1 vertex attached to v."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    rows = list(g.rows)
    rows[v] |= 1 << g.n
    rows.append(1 << v)
    return Graph(g.n + 1, tuple(rows))


def move_neighbors(g: Graph, u: int, v: int, w_set: Iterable[int]) -> Graph:
    """Detach each w in w_set from v and attach it to u instead.

    Requires w_set to be a subset of N(v) outside N(u) and distinct from
    u, so the move never creates a parallel edge or loop and is undone by
    moving the same set back from u to v.
    """
    ws = sorted(set(w_set))
    if u == v or not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError(f"invalid vertex pair ({u}, {v})")
    rows = list(g.rows)
    for w in ws:
        if not 0 <= w < g.n or w == u or w == v:
            raise ValueError(f"moved vertex {w} must be distinct from u and v")
        if not g.has_edge(v, w):
            raise ValueError(f"moved vertex {w} is not a neighbour of {v}")
        if g.has_edge(u, w):
            raise ValueError(f"moved vertex {w} is already a neighbour of {u}")
        rows[v] &= ~(1 << w)
        rows[w] &= ~(1 << v)
        rows[u] |= 1 << w
        rows[w] |= 1 << u
    return Graph(g.n, tuple(rows))


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """Subgraph induced by s, relabelled 0..|s|-1 in ascending old order.

    New label i corresponds to ``sorted(s)[i]``; certificates that need
    original names recover them from that sorted list.
    """
    keep = sorted(set(s))
    if keep and not (0 <= keep[0] and keep[-1] < g.n):
        raise ValueError(f"vertex set {keep} out of range for n={g.n}")
    pos = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        mask = 0
        for w in bits(g.rows[v]):
            if w in pos:
                mask |= 1 << pos[w]
        rows.append(mask)
    return Graph(len(keep), tuple(rows))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Relabel so that new vertex i is old vertex perm[i]."""
    inv = [0] * g.n
    for i, v in enumerate(perm):
        inv[v] = i
    rows = [0] * g.n
    for i, v in enumerate(perm):
        mask = 0
        for w in bits(g.rows[v]):
            mask |= 1 << inv[w]
        rows[i] = mask
    return Graph(g.n, tuple(rows))


# ---------------------------------------------------------------------------
# structure reports


@dataclass(frozen=True)
class GraphStats:
    n: int
    m: int
    avg_degree: float
    max_degree: int
    connected: bool
    bipartite: bool
    bipartition: tuple[int, ...] | None  # 2-colouring when bipartite


@dataclass(frozen=True)
class CactusProfile:
    is_cactus: bool
    # cyclic vertex walks, each from its smallest vertex toward its
    # smaller neighbour, sorted by (length, walk)
    cycles: tuple[tuple[int, ...], ...]
    odd_count: int
    even_count: int


def stats(g: Graph) -> GraphStats:
    """Order, size, degree summary, connectivity and bipartiteness."""
    n = g.n
    m = g.m
    color = [-1] * n
    connected = True
    bipartite = True
    if n:
        comp = 0
        for s in range(n):
            if color[s] >= 0:
                continue
            comp += 1
            color[s] = 0
            stack = [s]
            while stack:
                u = stack.pop()
                for w in bits(g.rows[u]):
                    if color[w] < 0:
                        color[w] = color[u] ^ 1
                        stack.append(w)
                    elif color[w] == color[u]:
                        bipartite = False
        connected = comp <= 1
    return GraphStats(
        n=n,
        m=m,
        avg_degree=2.0 * m / n if n else 0.0,
        max_degree=max((r.bit_count() for r in g.rows), default=0),
        connected=connected,
        bipartite=bipartite,
        bipartition=tuple(color) if bipartite and n else (() if bipartite else None),
    )


def cactus_profile(g: Graph) -> CactusProfile:
    """Decide whether g is a cactus and list its cycles.

    A connected graph is a cactus iff every block (biconnected component)
    is a single edge or a simple cycle.  Raises on disconnected input.
    """
    st = stats(g)
    if g.n == 0 or not st.connected:
        raise ValueError("cactus profile requires a connected graph")
    blocks = _blocks(g)
    cycles: list[tuple[int, ...]] = []
    for edge_list in blocks:
        if len(edge_list) == 1:
            continue
        verts = sorted({x for e in edge_list for x in e})
        deg: dict[int, int] = {v: 0 for v in verts}
        adj: dict[int, list[int]] = {v: [] for v in verts}
        for a, b in edge_list:
            deg[a] += 1
            deg[b] += 1
            adj[a].append(b)
            adj[b].append(a)
        if len(edge_list) != len(verts) or any(d != 2 for d in deg.values()):
            return CactusProfile(False, (), 0, 0)
        # walk the cycle from its smallest vertex toward its smaller neighbour
        start = verts[0]
        walk = [start]
        prev, cur = start, min(adj[start])
        while cur != start:
            walk.append(cur)
            nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
            prev, cur = cur, nxt
        cycles.append(tuple(walk))
    cycles.sort(key=lambda c: (len(c), c))
    odd = sum(1 for c in cycles if len(c) % 2)
    return CactusProfile(True, tuple(cycles), odd, len(cycles) - odd)


def _blocks(g: Graph) -> list[list[tuple[int, int]]]:
    """Biconnected components as edge lists (iterative Hopcroft–Tarjan)."""
    n = g.n
    num = [0] * n  # DFS numbers, 1-based; 0 = unvisited
    low = [0] * n
    parent = [-1] * n
    counter = 0
    estack: list[tuple[int, int]] = []
    out: list[list[tuple[int, int]]] = []
    for root in range(n):
        if num[root]:
            continue
        counter += 1
        num[root] = low[root] = counter
        work = [(root, iter(bits(g.rows[root])))]
        while work:
            u, it = work[-1]
            advanced = False
            for w in it:
                if not num[w]:
                    estack.append((u, w))
                    counter += 1
                    num[w] = low[w] = counter
                    parent[w] = u
                    work.append((w, iter(bits(g.rows[w]))))
                    advanced = True
                    break
                if w != parent[u] and num[w] < num[u]:
                    estack.append((u, w))
                    low[u] = min(low[u], num[w])
            if advanced:
                continue
            work.pop()
            if work:
                p = work[-1][0]
                low[p] = min(low[p], low[u])
                if low[u] >= num[p]:
                    comp = []
                    while True:
                        e = estack.pop()
                        comp.append(e)
                        if e == (p, u):
                            break
                    out.append(comp)
    return out
