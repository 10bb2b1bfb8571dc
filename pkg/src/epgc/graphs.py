"""Undirected simple graphs on indexed vertices, with the exact small-graph
algorithms used throughout the workbench.

Adjacency rows are Python integers used as bitsets, which keeps the
polynomial algorithms (components, girth, bipartiteness, Euler test) and the
exponential searches in :mod:`epgc.subgraphs` fast enough for graphs of a few
dozen vertices.
"""

from __future__ import annotations

import math

INFINITY = math.inf


class GraphError(ValueError):
    """Invalid graph construction or out-of-range vertex."""


class SimpleGraph:
    """Immutable undirected simple graph.

    ``adjacency_row(i)`` exposes the neighbor set of vertex i as a bitmask.
    Optional ``tags`` carry display strings (group-element labels).
    """

    __slots__ = ("n", "_rows", "tags")

    def __init__(self, n, edges=(), tags=None, rows=None):
        if n < 0:
            raise GraphError(f"vertex count must be >= 0, got {n}")
        self.n = n
        if rows is not None:
            rows = tuple(rows)
            if len(rows) != n:
                raise GraphError(f"expected {n} adjacency rows, got {len(rows)}")
            full = (1 << n) - 1
            for i, r in enumerate(rows):
                if r & ~full:
                    raise GraphError(f"row {i} mentions vertices outside [0, {n})")
                if r >> i & 1:
                    raise GraphError(f"vertex {i} is adjacent to itself")
            for i in range(n):
                for j in _bits(rows[i]):
                    if not rows[j] >> i & 1:
                        raise GraphError(f"adjacency not symmetric at ({i}, {j})")
            self._rows = rows
        else:
            mut = [0] * n
            for u, v in edges:
                if not (0 <= u < n and 0 <= v < n):
                    raise GraphError(f"edge ({u}, {v}) outside vertex range [0, {n})")
                if u == v:
                    raise GraphError(f"loop at vertex {u} not allowed")
                mut[u] |= 1 << v
                mut[v] |= 1 << u
            self._rows = tuple(mut)
        if tags is not None:
            tags = tuple(str(t) for t in tags)
            if len(tags) != n:
                raise GraphError(f"expected {n} tags, got {len(tags)}")
        self.tags = tags

    def adjacency_row(self, i):
        return self._rows[i]

    def has_edge(self, u, v):
        return bool(self._rows[u] >> v & 1)

    def degree(self, v):
        return self._rows[v].bit_count()

    def neighbors(self, v):
        return list(_bits(self._rows[v]))

    @property
    def edge_count(self):
        return sum(r.bit_count() for r in self._rows) // 2

    def edges(self):
        out = []
        for u in range(self.n):
            for v in _bits(self._rows[u]):
                if v > u:
                    out.append((u, v))
        return out

    def __eq__(self, other):
        return (
            isinstance(other, SimpleGraph)
            and self.n == other.n
            and self._rows == other._rows
        )

    def __hash__(self):
        return hash((self.n, self._rows))

    def __repr__(self):
        return f"SimpleGraph(n={self.n}, m={self.edge_count})"


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def complete_graph(n, tags=None):
    full = (1 << n) - 1
    return SimpleGraph(n, rows=[full & ~(1 << i) for i in range(n)], tags=tags)


def complete_bipartite(a, b):
    n = a + b
    amask = (1 << a) - 1
    bmask = ((1 << n) - 1) ^ amask
    rows = [bmask] * a + [amask] * b
    return SimpleGraph(n, rows=rows)


def cycle_graph(n):
    return SimpleGraph(n, edges=[(i, (i + 1) % n) for i in range(n)])


def complement(g: SimpleGraph) -> SimpleGraph:
    """Complement on the same vertex set (distinct vertices adjacent iff
    they were not adjacent)."""
    full = (1 << g.n) - 1
    rows = [full & ~g.adjacency_row(i) & ~(1 << i) for i in range(g.n)]
    return SimpleGraph(g.n, rows=rows, tags=g.tags)


def induced_subgraph(g: SimpleGraph, vertices) -> SimpleGraph:
    """Subgraph induced by a vertex set, relabeled to 0..k-1 in ascending
    order of the original indices; tags are carried over."""
    vs = sorted(set(vertices))
    for v in vs:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range [0, {g.n})")
    pos = {v: i for i, v in enumerate(vs)}
    rows = []
    for v in vs:
        r = 0
        for w in _bits(g.adjacency_row(v)):
            if w in pos:
                r |= 1 << pos[w]
        rows.append(r)
    tags = None if g.tags is None else [g.tags[v] for v in vs]
    return SimpleGraph(len(vs), rows=rows, tags=tags)


def connected_components(g: SimpleGraph) -> list[tuple[int, ...]]:
    """Partition into maximal connected vertex sets, sorted by least vertex."""
    unseen = (1 << g.n) - 1
    comps = []
    while unseen:
        seed = unseen & -unseen
        comp = seed
        frontier = seed
        while frontier:
            reach = 0
            for v in _bits(frontier):
                reach |= g.adjacency_row(v)
            frontier = reach & ~comp
            comp |= frontier
        comps.append(tuple(_bits(comp)))
        unseen &= ~comp
    return comps


def girth(g: SimpleGraph):
    """Length of a shortest cycle; INFINITY for acyclic graphs.

    BFS from every vertex; the first non-tree edge seen from root r closes a
    cycle of length dist[u] + dist[w] + 1.
    """
    best = INFINITY
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = [root]
        qi = 0
        while qi < len(queue):
            u = queue[qi]
            qi += 1
            if best != INFINITY and dist[u] * 2 >= best:
                break
            for w in _bits(g.adjacency_row(u)):
                if dist[w] == -1:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    length = dist[u] + dist[w] + 1
                    if length < best:
                        best = length
    return best


def is_bipartite(g: SimpleGraph):
    """Two-colorability with a verifiable witness.

    Returns ``(True, coloring)`` where coloring is a 0/1 list, or
    ``(False, cycle)`` with an odd cycle given as a vertex list.
    """
    color = [-1] * g.n
    parent = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = [root]
        qi = 0
        while qi < len(queue):
            u = queue[qi]
            qi += 1
            for w in _bits(g.adjacency_row(u)):
                if color[w] == -1:
                    color[w] = color[u] ^ 1
                    parent[w] = u
                    queue.append(w)
                elif color[w] == color[u]:
                    return False, _odd_cycle(parent, u, w)
    return True, color


def _odd_cycle(parent, u, w):
    anc_u = [u]
    while parent[anc_u[-1]] != -1:
        anc_u.append(parent[anc_u[-1]])
    anc_w = [w]
    while parent[anc_w[-1]] != -1:
        anc_w.append(parent[anc_w[-1]])
    in_u = set(anc_u)
    meet = next(x for x in anc_w if x in in_u)
    path_u = anc_u[: anc_u.index(meet) + 1]
    path_w = anc_w[: anc_w.index(meet)]
    return path_u + list(reversed(path_w))


def is_eulerian(g: SimpleGraph, ignore_isolated: bool = True) -> bool:
    """Closed-trail-through-every-edge test.

    True iff every degree is even and the positive-degree vertices form one
    component.  With ``ignore_isolated=False`` the whole graph must be
    connected instead.  An edgeless graph is vacuously Eulerian.
    """
    if any(g.degree(v) % 2 for v in range(g.n)):
        return False
    if g.edge_count == 0:
        return True
    comps = connected_components(g)
    if ignore_isolated:
        nontrivial = [c for c in comps if any(g.degree(v) > 0 for v in c)]
        return len(nontrivial) == 1
    return len(comps) == 1


def cyclomatic_number(g: SimpleGraph) -> int:
    """Cycle-space dimension m - n + 1 of a connected graph."""
    if g.n == 0:
        raise GraphError("cyclomatic number needs a nonempty connected graph")
    if len(connected_components(g)) != 1:
        raise GraphError("cyclomatic number is defined for connected graphs only")
    return g.edge_count - g.n + 1


def to_dot(g: SimpleGraph, name: str = "G") -> str:
    """Deterministic DOT serialization; tags become vertex labels."""
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        label = g.tags[v] if g.tags is not None else str(v)
        lines.append(f'  {v} [label="{label}"];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_adjacency_text(g: SimpleGraph) -> str:
    """Compact adjacency-list text: first line n, then one `v: ...` line per
    vertex listing its neighbors in ascending order."""
    lines = [str(g.n)]
    for v in range(g.n):
        nbrs = " ".join(str(w) for w in g.neighbors(v))
        lines.append(f"{v}: {nbrs}".rstrip())
    return "\n".join(lines) + "\n"


def from_adjacency_text(text: str) -> SimpleGraph:
    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln]
    if not lines:
        raise GraphError("empty adjacency text")
    try:
        n = int(lines[0])
    except ValueError:
        raise GraphError(f"first line must be the vertex count, got {lines[0]!r}")
    edges = set()
    for ln in lines[1:]:
        head, _, rest = ln.partition(":")
        try:
            v = int(head)
        except ValueError:
            raise GraphError(f"bad vertex line {ln!r}")
        for tok in rest.split():
            w = int(tok)
            if w == v:
                raise GraphError(f"loop at vertex {v} not allowed")
            edges.add((min(v, w), max(v, w)))
    return SimpleGraph(n, edges=sorted(edges))
