"""Surface embeddings: exact outerplanarity/planarity, genus and crosscap
bounds from forbidden subgraphs plus closed-form formulas, and rotation-system
certificates for upper bounds.

A rotation system lists the neighbors of each vertex in cyclic order; an
optional edge signing (+1 flat, -1 twisted) turns it into a certificate for an
embedding in a non-orientable surface.  Faces are traced combinatorially and
the Euler relation V - E + F = 2 - 2*genus (orientable) or 2 - crosscap
(non-orientable) yields the surface.

Two non-orientable facts are pinned as published constants rather than
recomputed: the crosscap of K_{2,2,2,2} is 3 (Jungerman 1979) and the crosscap
of K_{3,3,3} is 3 (Ellingham, Stephens and Zha 2006, Theorem 10).
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from .epg import EpgBundle
from .graphs import (
    GraphError,
    SimpleGraph,
    INFINITY,
    connected_components,
    girth,
    complement as graph_complement,
)
from .subgraphs import (
    contains_complete,
    contains_complete_bipartite,
    contains_subdivision,
    _is_clique,
)

DEFAULT_BUDGET = 10**8

SEARCH_MAX_VERTICES = 12

PINNED_CROSSCAP = {
    (2, 2, 2, 2): (3, "pinned: crosscap(K_{2,2,2,2}) = 3 [Jungerman 1979]"),
    (3, 3, 3): (3, "pinned: crosscap(K_{3,3,3}) = 3 [Ellingham-Stephens-Zha 2006, Thm 10]"),
}

OBSTRUCTION_COMPLETE = (5, 7, 8)
OBSTRUCTION_BIPARTITE = ((3, 3), (4, 4), (4, 5), (4, 6), (5, 6), (4, 8))


class EmbeddingError(ValueError):
    """Malformed rotation system or inconsistent face tracing."""


class SearchBudgetExceeded(RuntimeError):
    """Embedding search ran out of its node budget (inconclusive)."""

    def __init__(self, nodes: int):
        super().__init__(f"embedding search budget exceeded after {nodes} nodes")
        self.nodes = nodes


def _edge_key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class RotationSystem:
    """Per-vertex cyclic neighbor orders, optionally with edge signs."""

    graph: SimpleGraph
    rotations: tuple[tuple[int, ...], ...]
    edge_signs: tuple[tuple[tuple[int, int], int], ...] | None = None

    def __post_init__(self) -> None:
        g = self.graph
        if len(self.rotations) != g.n:
            raise EmbeddingError(
                f"expected {g.n} rotation lists, got {len(self.rotations)}"
            )
        for v, rot in enumerate(self.rotations):
            if sorted(rot) != g.neighbors(v):
                raise EmbeddingError(
                    f"rotation at vertex {v} is not a permutation of its neighbors"
                )
        if self.edge_signs is not None:
            keys = {k for k, _ in self.edge_signs}
            expected = set(g.edges())
            if keys != expected:
                raise EmbeddingError("edge signs do not cover exactly the edge set")
            if any(s not in (-1, 1) for _, s in self.edge_signs):
                raise EmbeddingError("edge signs must be +1 or -1")

    def sign_map(self) -> dict[tuple[int, int], int]:
        if self.edge_signs is None:
            return {}
        return dict(self.edge_signs)


def _position_maps(rotations):
    return [
        {u: i for i, u in enumerate(rot)} for rot in rotations
    ]


def _trace_oriented(g: SimpleGraph, rotations) -> list[list[tuple[int, int]]]:
    """Face walks of an unsigned rotation system (lists of directed edges)."""
    pos = _position_maps(rotations)
    used: set[tuple[int, int]] = set()
    faces = []
    for a in range(g.n):
        for b in g.neighbors(a):
            if (a, b) in used:
                continue
            walk = []
            u, v = a, b
            while (u, v) not in used:
                used.add((u, v))
                walk.append((u, v))
                i = pos[v][u]
                w = rotations[v][(i + 1) % len(rotations[v])]
                u, v = v, w
            if (u, v) != (a, b):
                raise EmbeddingError("face tracing did not close at its start dart")
            faces.append(walk)
    if len(used) != 2 * g.edge_count:
        raise EmbeddingError("face tracing did not cover every directed edge")
    return faces


def _count_faces_signed(g: SimpleGraph, rotations, signs) -> int:
    """Face count of a signed rotation system.

    States are (directed edge, local orientation); the next-state map is a
    permutation whose orbit count is exactly twice the face count.
    """
    pos = _position_maps(rotations)
    used: set[tuple[int, int, int]] = set()
    orbits = 0
    for a in range(g.n):
        for b in g.neighbors(a):
            for o0 in (0, 1):
                if (a, b, o0) in used:
                    continue
                orbits += 1
                u, v, o = a, b, o0
                while (u, v, o) not in used:
                    used.add((u, v, o))
                    f = o ^ (1 if signs[_edge_key(u, v)] < 0 else 0)
                    rot = rotations[v]
                    i = pos[v][u]
                    w = rot[(i + 1) % len(rot)] if f == 0 else rot[(i - 1) % len(rot)]
                    u, v, o = v, w, f
                if (u, v, o) != (a, b, o0):
                    raise EmbeddingError("signed face tracing did not close at its start")
    if len(used) != 4 * g.edge_count:
        raise EmbeddingError("signed face tracing did not cover every edge side")
    if orbits % 2:
        raise EmbeddingError("signed face tracing produced an odd orbit count")
    return orbits // 2


def _signature_orientable(g: SimpleGraph, signs) -> bool:
    """True when every cycle has positive sign product (vertex-flip check)."""
    orient = [-1] * g.n
    for root in range(g.n):
        if orient[root] != -1:
            continue
        orient[root] = 0
        stack = [root]
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                t = 1 if signs[_edge_key(u, w)] < 0 else 0
                expect = orient[u] ^ t
                if orient[w] == -1:
                    orient[w] = expect
                    stack.append(w)
                elif orient[w] != expect:
                    return False
    return True


def verify_embedding(cert: RotationSystem) -> tuple[str, int]:
    """Trace the faces of a certificate and return its surface.

    Returns ``("orientable", genus)`` or ``("nonorientable", crosscap)``.
    The graph must be connected.
    """
    g = cert.graph
    if g.n == 0:
        raise EmbeddingError("empty graph has no embedding certificate")
    if len(connected_components(g)) != 1:
        raise EmbeddingError("embedding verification needs a connected graph")
    n, m = g.n, g.edge_count
    if m == 0:
        # a single vertex sits on the sphere with one face
        return "orientable", 0
    if cert.edge_signs is None:
        faces = len(_trace_oriented(g, cert.rotations))
        chi = n - m + faces
        if chi > 2 or (2 - chi) % 2:
            raise EmbeddingError(f"impossible Euler characteristic {chi} for an orientable surface")
        return "orientable", (2 - chi) // 2
    signs = cert.sign_map()
    faces = _count_faces_signed(g, cert.rotations, signs)
    chi = n - m + faces
    if _signature_orientable(g, signs):
        if chi > 2 or (2 - chi) % 2:
            raise EmbeddingError(f"impossible Euler characteristic {chi} for an orientable surface")
        return "orientable", (2 - chi) // 2
    if chi > 1:
        raise EmbeddingError(f"impossible Euler characteristic {chi} for a non-orientable surface")
    return "nonorientable", 2 - chi


def face_walks(cert: RotationSystem) -> list[list[tuple[int, int]]]:
    """Face boundary walks of an unsigned certificate (for reports/tests)."""
    if cert.edge_signs is not None:
        raise EmbeddingError("face walks are reported for unsigned certificates only")
    return _trace_oriented(cert.graph, cert.rotations)


def _face_min_length(g: SimpleGraph) -> int:
    if g.n == 0 or g.edge_count == 0:
        return 1
    if min(g.degree(v) for v in range(g.n)) < 2:
        return 2
    gi = girth(g)
    return 3 if gi == INFINITY else max(3, int(gi))


def search_embedding(
    g: SimpleGraph,
    target_genus: int,
    orientable: bool = True,
    budget: int = DEFAULT_BUDGET,
) -> RotationSystem | None:
    """Exhaustive rotation-system search for an embedding at an exact target.

    Orientable searches look for a system with exactly the face count of
    genus ``target_genus``; non-orientable searches additionally branch on
    edge signs (spanning-tree edges normalized to +1) and require a twisted
    signature.  Returns a verified certificate, or None when the search space
    is exhausted; raises :class:`SearchBudgetExceeded` when the node budget
    runs out first.  None is treated as inconclusive by callers, not as a
    lower bound.
    """
    if g.n > SEARCH_MAX_VERTICES:
        raise GraphError(
            f"embedding search capped at {SEARCH_MAX_VERTICES} vertices, got {g.n}"
        )
    if target_genus < 0 or target_genus > 1:
        raise GraphError(f"embedding search supports target genus 0 or 1, got {target_genus}")
    if g.n == 0:
        raise GraphError("embedding search needs a nonempty graph")
    if len(connected_components(g)) != 1:
        raise GraphError("embedding search needs a connected graph")
    m = g.edge_count
    if m == 0:
        if target_genus == 0 and orientable:
            return RotationSystem(g, ((),))
        return None
    if orientable:
        faces_target = m - g.n + 2 - 2 * target_genus
    else:
        if target_genus != 1:
            return None
        faces_target = m - g.n + 2 - 1
    if faces_target < 1:
        return None
    face_min = _face_min_length(g)
    if orientable:
        found = _search_oriented(g, faces_target, face_min, budget)
        if found is None:
            return None
        cert = RotationSystem(g, found)
        kind, value = verify_embedding(cert)
        if kind != "orientable" or value != target_genus:
            raise EmbeddingError("search produced a certificate at the wrong surface")
        return cert
    found = _search_signed(g, 2 * faces_target, face_min, budget)
    if found is None:
        return None
    rotations, signs = found
    cert = RotationSystem(g, rotations, tuple(sorted(signs.items())))
    kind, value = verify_embedding(cert)
    if kind != "nonorientable" or value != target_genus:
        raise EmbeddingError("search produced a certificate at the wrong surface")
    return cert


def _search_oriented(g: SimpleGraph, faces_target: int, face_min: int, budget: int):
    n = g.n
    nbrs = [g.neighbors(v) for v in range(n)]
    deg = [len(x) for x in nbrs]
    total_darts = 2 * g.edge_count
    succ: list[dict[int, int]] = [dict() for _ in range(n)]
    pred: list[dict[int, int]] = [dict() for _ in range(n)]
    used: set[tuple[int, int]] = set()
    nodes = 0
    all_darts = [(u, v) for u in range(n) for v in nbrs[u]]

    def can_link(v, u, w):
        if u == w:
            return deg[v] == 1
        size = 2
        cur = w
        while cur in succ[v]:
            cur = succ[v][cur]
            if cur == u:
                return size == deg[v]
            size += 1
        return True

    def bound_ok(faces_closed, walk_len):
        d_rem = total_darts - len(used)
        need = max(0, face_min - walk_len)
        if d_rem < need:
            return False
        return faces_closed + 1 + (d_rem - need) // face_min >= faces_target

    def start_face(faces_closed):
        if len(used) == total_darts:
            return faces_closed == faces_target
        if faces_closed >= faces_target:
            return False
        for d0 in all_darts:
            if d0 not in used:
                used.add(d0)
                ok = advance(d0, d0[0], d0[1], 1, faces_closed)
                if not ok:
                    used.discard(d0)
                return ok
        return False

    def advance(start, u, v, walk_len, faces_closed):
        nonlocal nodes
        if not bound_ok(faces_closed, walk_len):
            return False
        w_known = succ[v].get(u)
        if w_known is not None:
            return step(start, u, v, w_known, walk_len, faces_closed)
        for w in nbrs[v]:
            if w in pred[v]:
                continue
            if not can_link(v, u, w):
                continue
            nodes += 1
            if nodes > budget:
                raise SearchBudgetExceeded(nodes)
            succ[v][u] = w
            pred[v][w] = u
            if step(start, u, v, w, walk_len, faces_closed):
                return True
            del succ[v][u]
            del pred[v][w]
        return False

    def step(start, u, v, w, walk_len, faces_closed):
        nd = (v, w)
        if nd == start:
            if walk_len < face_min:
                return False
            return start_face(faces_closed + 1)
        if nd in used:
            return False
        used.add(nd)
        if advance(start, v, w, walk_len + 1, faces_closed):
            return True
        used.discard(nd)
        return False

    if start_face(0):
        return tuple(_rotation_from_links(nbrs[v], succ[v], v) for v in range(n))
    return None


def _rotation_from_links(neighbors, links, v):
    if not neighbors:
        return ()
    start = neighbors[0]
    out = [start]
    cur = links[start]
    while cur != start:
        out.append(cur)
        cur = links[cur]
    if len(out) != len(neighbors):
        raise EmbeddingError(f"rotation at vertex {v} did not close into one cycle")
    return tuple(out)


def _search_signed(g: SimpleGraph, walks_target: int, face_min: int, budget: int):
    """Search rotations plus edge signs reaching ``walks_target`` state orbits.

    Tree edges are normalized to +1; at least one co-tree edge must end up
    negative so the signature is genuinely non-orientable.
    """
    n = g.n
    nbrs = [g.neighbors(v) for v in range(n)]
    deg = [len(x) for x in nbrs]
    total_states = 4 * g.edge_count
    succ: list[dict[int, int]] = [dict() for _ in range(n)]
    pred: list[dict[int, int]] = [dict() for _ in range(n)]
    used: set[tuple[int, int, int]] = set()
    signs: dict[tuple[int, int], int] = {}
    nodes = 0

    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in nbrs[u]:
            if w not in seen:
                seen.add(w)
                signs[_edge_key(u, w)] = 1
                stack.append(w)
    all_states = [
        (u, v, o) for u in range(n) for v in nbrs[u] for o in (0, 1)
    ]

    def can_link(v, u, w):
        if u == w:
            return deg[v] == 1
        size = 2
        cur = w
        while cur in succ[v]:
            cur = succ[v][cur]
            if cur == u:
                return size == deg[v]
            size += 1
        return True

    def bound_ok(faces_closed, walk_len):
        d_rem = total_states - len(used)
        need = max(0, face_min - walk_len)
        if d_rem < need:
            return False
        return faces_closed + 1 + (d_rem - need) // face_min >= walks_target

    def start_face(faces_closed):
        if len(used) == total_states:
            if faces_closed != walks_target:
                return False
            return any(s < 0 for s in signs.values())
        if faces_closed >= walks_target:
            return False
        for s0 in all_states:
            if s0 not in used:
                used.add(s0)
                ok = advance(s0, s0[0], s0[1], s0[2], 1, faces_closed)
                if not ok:
                    used.discard(s0)
                return ok
        return False

    def advance(start, u, v, o, walk_len, faces_closed):
        nonlocal nodes
        if not bound_ok(faces_closed, walk_len):
            return False
        key = _edge_key(u, v)
        s = signs.get(key)
        if s is None:
            for s_try in (1, -1):
                nodes += 1
                if nodes > budget:
                    raise SearchBudgetExceeded(nodes)
                signs[key] = s_try
                if after_sign(start, u, v, o, s_try, walk_len, faces_closed):
                    return True
                del signs[key]
            return False
        return after_sign(start, u, v, o, s, walk_len, faces_closed)

    def after_sign(start, u, v, o, s, walk_len, faces_closed):
        nonlocal nodes
        f = o ^ (1 if s < 0 else 0)
        if f == 0:
            w_known = succ[v].get(u)
            if w_known is not None:
                return step(start, v, w_known, f, walk_len, faces_closed)
            for w in nbrs[v]:
                if w in pred[v]:
                    continue
                if not can_link(v, u, w):
                    continue
                nodes += 1
                if nodes > budget:
                    raise SearchBudgetExceeded(nodes)
                succ[v][u] = w
                pred[v][w] = u
                if step(start, v, w, f, walk_len, faces_closed):
                    return True
                del succ[v][u]
                del pred[v][w]
            return False
        w_known = pred[v].get(u)
        if w_known is not None:
            return step(start, v, w_known, f, walk_len, faces_closed)
        for w in nbrs[v]:
            if w in succ[v]:
                continue
            if not can_link(v, w, u):
                continue
            nodes += 1
            if nodes > budget:
                raise SearchBudgetExceeded(nodes)
            succ[v][w] = u
            pred[v][u] = w
            if step(start, v, w, f, walk_len, faces_closed):
                return True
            del succ[v][w]
            del pred[v][u]
        return False

    def step(start, v, w, f, walk_len, faces_closed):
        ns = (v, w, f)
        if ns == start:
            if walk_len < face_min:
                return False
            return start_face(faces_closed + 1)
        if ns in used:
            return False
        used.add(ns)
        if advance(start, v, w, f, walk_len + 1, faces_closed):
            return True
        used.discard(ns)
        return False

    if start_face(0):
        rotations = tuple(_rotation_from_links(nbrs[v], succ[v], v) for v in range(n))
        return rotations, dict(signs)
    return None


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def genus_complete(n: int) -> int:
    """Genus of the complete graph on n vertices (n >= 3)."""
    if n < 3:
        raise GraphError(f"complete-graph genus formula needs n >= 3, got {n}")
    return _ceil_div((n - 3) * (n - 4), 12)


def genus_complete_bipartite(m: int, n: int) -> int:
    """Genus of K_{m,n} (m, n >= 2)."""
    if m < 2 or n < 2:
        raise GraphError(f"complete-bipartite genus formula needs m, n >= 2, got ({m}, {n})")
    return _ceil_div((m - 2) * (n - 2), 4)


def crosscap_complete(n: int) -> int:
    """Crosscap of the complete graph on n vertices (n >= 3); K7 is the
    exceptional case with crosscap 3."""
    if n < 3:
        raise GraphError(f"complete-graph crosscap formula needs n >= 3, got {n}")
    if n == 7:
        return 3
    return _ceil_div((n - 3) * (n - 4), 6)


def crosscap_complete_bipartite(m: int, n: int) -> int:
    """Crosscap of K_{m,n} (m, n >= 2)."""
    if m < 2 or n < 2:
        raise GraphError(f"complete-bipartite crosscap formula needs m, n >= 2, got ({m}, {n})")
    return _ceil_div((m - 2) * (n - 2), 2)


def obstruction_lower_bounds(g: SimpleGraph):
    """Scan the fixed obstruction menu and return (genus_lb, crosscap_lb,
    evidence).  Bounds are 0 when no obstruction from the menu is present."""
    genus_lb = 0
    crosscap_lb = 0
    evidence: list[str] = []
    for r in OBSTRUCTION_COMPLETE:
        if g.n < r:
            continue
        ok, witness = contains_complete(g, r)
        if ok:
            gb, cb = genus_complete(r), crosscap_complete(r)
            genus_lb = max(genus_lb, gb)
            crosscap_lb = max(crosscap_lb, cb)
            evidence.append(
                f"K{r} subgraph on vertices {list(witness)}: genus >= {gb}, crosscap >= {cb}"
            )
    for a, b in OBSTRUCTION_BIPARTITE:
        if g.n < a + b:
            continue
        ok, witness = contains_complete_bipartite(g, a, b)
        if ok:
            gb, cb = genus_complete_bipartite(a, b), crosscap_complete_bipartite(a, b)
            genus_lb = max(genus_lb, gb)
            crosscap_lb = max(crosscap_lb, cb)
            aa, bb = witness
            evidence.append(
                f"K_{{{a},{b}}} subgraph on parts {list(aa)} / {list(bb)}: "
                f"genus >= {gb}, crosscap >= {cb}"
            )
    return genus_lb, crosscap_lb, evidence


def is_outerplanar(g: SimpleGraph):
    """True iff the graph has no K4 and no K_{2,3} subdivision."""
    ok4, w4 = contains_subdivision(g, "K4")
    if ok4:
        return False, {"target": "K4", **w4}
    ok23, w23 = contains_subdivision(g, "K23")
    if ok23:
        return False, {"target": "K23", **w23}
    return True, "no K4 or K2,3 subdivision (exhaustive search)"


def is_planar(g: SimpleGraph):
    """True iff the graph has no K5 and no K_{3,3} subdivision.

    Graphs with more than 3n - 6 edges are rejected by the edge bound before
    any search.
    """
    if g.n >= 3 and g.edge_count > 3 * g.n - 6:
        return False, {"edge_bound": f"{g.edge_count} edges > 3n-6 = {3 * g.n - 6}"}
    ok5, w5 = contains_subdivision(g, "K5")
    if ok5:
        return False, {"target": "K5", **w5}
    ok33, w33 = contains_subdivision(g, "K33")
    if ok33:
        return False, {"target": "K33", **w33}
    return True, "no K5 or K3,3 subdivision (exhaustive search)"


def complete_multipartite_parts(g: SimpleGraph) -> tuple[int, ...] | None:
    """Part sizes (ascending) when the graph is complete multipartite, else
    None.  Detected via the complement being a disjoint union of cliques."""
    if g.n == 0:
        return None
    comp = graph_complement(g)
    parts = []
    for component in connected_components(comp):
        if not _is_clique(comp, component):
            return None
        parts.append(len(component))
    return tuple(sorted(parts))


@dataclass
class SurfaceVerdict:
    """Interval-style surface classification with its supporting evidence."""

    group_name: str
    outerplanar: bool
    planar: bool
    genus_lower: int
    genus_upper: int | None
    crosscap_lower: int
    crosscap_upper: int | None
    evidence: list[str] = field(default_factory=list)
    certificates: dict[str, RotationSystem] = field(default_factory=dict)
    vacuous: bool = False
    pinned: bool = False
    budget_limited: bool = False

    def __post_init__(self) -> None:
        if self.genus_upper is not None and self.genus_lower > self.genus_upper:
            raise EmbeddingError("genus lower bound exceeds upper bound")
        if self.crosscap_upper is not None and self.crosscap_lower > self.crosscap_upper:
            raise EmbeddingError("crosscap lower bound exceeds upper bound")
        if self.planar and (self.genus_lower != 0 or self.crosscap_lower != 0):
            raise EmbeddingError("planar verdict must have zero lower bounds")

    @property
    def toroidal(self) -> bool:
        return self.genus_lower == 1 and self.genus_upper == 1

    @property
    def projective(self) -> bool:
        return self.crosscap_lower == 1 and self.crosscap_upper == 1


def rotation_to_text(cert: RotationSystem) -> str:
    lines = []
    for v, rot in enumerate(cert.rotations):
        lines.append(f"{v}: " + " ".join(str(w) for w in rot) if rot else f"{v}:")
    if cert.edge_signs is not None:
        negative = [k for k, s in cert.edge_signs if s < 0]
        lines.append("signs: " + " ".join(f"{u}-{v}" for u, v in negative))
    return "\n".join(lines) + "\n"


def rotation_from_text(text: str, graph: SimpleGraph) -> RotationSystem:
    rotations: dict[int, tuple[int, ...]] = {}
    signed = None
    for ln in (s.strip() for s in text.splitlines()):
        if not ln:
            continue
        if ln.startswith("signs:"):
            negatives = set()
            for tok in ln[len("signs:"):].split():
                a, _, b = tok.partition("-")
                negatives.add(_edge_key(int(a), int(b)))
            signed = tuple(
                (e, -1 if e in negatives else 1) for e in sorted(graph.edges())
            )
            continue
        head, _, rest = ln.partition(":")
        rotations[int(head)] = tuple(int(t) for t in rest.split())
    rot = tuple(rotations.get(v, ()) for v in range(graph.n))
    return RotationSystem(graph, rot, signed)


def _cached_search(
    g: SimpleGraph,
    target: int,
    orientable: bool,
    budget: int,
    cache_dir: str | None,
    cache_key: str | None,
):
    path = None
    if cache_dir and cache_key:
        kind = "genus" if orientable else "crosscap"
        path = os.path.join(cache_dir, f"{cache_key}_{kind}{target}.cert")
        if os.path.exists(path):
            try:
                with open(path, "r", encoding="utf-8") as fh:
                    cert = rotation_from_text(fh.read(), g)
                kind_found, value = verify_embedding(cert)
                if value == target and (kind_found == "orientable") == orientable:
                    return cert
            except (EmbeddingError, ValueError):
                pass
    cert = search_embedding(g, target, orientable=orientable, budget=budget)
    if cert is not None and path is not None:
        os.makedirs(cache_dir, exist_ok=True)
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(rotation_to_text(cert))
    return cert


def classify_surface(
    bundle: EpgBundle,
    budget: int = DEFAULT_BUDGET,
    cache_dir: str | None = None,
) -> SurfaceVerdict:
    """Full surface classification of the reduced complement of a group.

    Combines exact forbidden-subdivision tests, formula lower bounds from the
    obstruction menu, embedding certificates found by search, and the two
    pinned literature constants.  For cyclic groups the reduced graph is
    empty and the verdict is vacuous.
    """
    if cache_dir is None:
        cache_dir = os.environ.get("EPGC_CERT_DIR") or None
    name = bundle.group.name
    reduced = bundle.reduced
    if reduced.n == 0:
        return SurfaceVerdict(
            group_name=name,
            outerplanar=True,
            planar=True,
            genus_lower=0,
            genus_upper=0,
            crosscap_lower=0,
            crosscap_upper=0,
            evidence=["vacuous: reduced graph is empty (cyclic group)"],
            vacuous=True,
        )
    evidence: list[str] = []
    certificates: dict[str, RotationSystem] = {}
    pinned = False
    budget_limited = False

    outer, outer_witness = is_outerplanar(reduced)
    if outer:
        evidence.append(f"outerplanar: {outer_witness}")
    else:
        evidence.append(
            f"not outerplanar: {outer_witness['target']} subdivision on branch "
            f"vertices {list(outer_witness['branch_vertices'])}"
        )

    has_k5, w5 = contains_subdivision(reduced, "K5")
    has_k33, w33 = contains_subdivision(reduced, "K33")
    planar = not (has_k5 or has_k33)
    if planar:
        evidence.append("planar: no K5 or K3,3 subdivision (exhaustive search)")
        try:
            cert0 = _cached_search(reduced, 0, True, budget, cache_dir, name)
        except SearchBudgetExceeded:
            cert0 = None
        if cert0 is None:
            raise EmbeddingError(
                f"{name}: planar by subdivision search but no genus-0 certificate found"
            )
        certificates["genus0"] = cert0
        evidence.append(
            f"genus-0 rotation certificate verified ({len(face_walks(cert0))} faces)"
        )
        return SurfaceVerdict(
            group_name=name,
            outerplanar=outer,
            planar=True,
            genus_lower=0,
            genus_upper=0,
            crosscap_lower=0,
            crosscap_upper=0,
            evidence=evidence,
            certificates=certificates,
        )

    if has_k5:
        evidence.append(
            f"not planar: K5 subdivision on branch vertices {list(w5['branch_vertices'])}"
        )
    if has_k33:
        evidence.append(
            f"not planar: K3,3 subdivision on branch vertices {list(w33['branch_vertices'])}"
        )
    genus_lower, crosscap_lower = 1, 1
    scan_g, scan_c, scan_ev = obstruction_lower_bounds(reduced)
    genus_lower = max(genus_lower, scan_g)
    crosscap_lower = max(crosscap_lower, scan_c)
    evidence.extend(scan_ev)

    genus_upper: int | None = None
    crosscap_upper: int | None = None

    parts = complete_multipartite_parts(reduced)
    if parts is not None:
        if all(p == 1 for p in parts):
            r = len(parts)
            genus_lower = genus_upper = genus_complete(r)
            crosscap_lower = crosscap_upper = crosscap_complete(r)
            evidence.append(
                f"reduced graph is K{r}: genus = {genus_lower}, crosscap = {crosscap_lower}"
                " by the complete-graph formulas"
                + (" (K7 exceptional value)" if r == 7 else "")
            )
        elif parts in PINNED_CROSSCAP:
            value, citation = PINNED_CROSSCAP[parts]
            crosscap_lower = crosscap_upper = value
            sig = ",".join(str(p) for p in parts)
            evidence.append(f"reduced graph is K_{{{sig}}}: {citation}")
            pinned = True

    if genus_lower == 1 and (genus_upper is None or genus_upper == 1) and reduced.n <= SEARCH_MAX_VERTICES:
        try:
            cert1 = _cached_search(reduced, 1, True, budget, cache_dir, name)
        except SearchBudgetExceeded:
            cert1 = None
            budget_limited = True
            evidence.append("genus-1 certificate search: budget exhausted (inconclusive)")
        else:
            if cert1 is not None:
                genus_upper = 1
                certificates["genus1"] = cert1
                evidence.append("toroidal: genus-1 rotation certificate verified")
            elif genus_upper is None:
                evidence.append(
                    "genus-1 certificate search exhausted without a certificate"
                )

    if crosscap_upper is None and crosscap_lower == 1 and reduced.n <= SEARCH_MAX_VERTICES:
        try:
            certn = _cached_search(reduced, 1, False, budget, cache_dir, name)
        except SearchBudgetExceeded:
            certn = None
            budget_limited = True
            evidence.append("crosscap-1 certificate search: budget exhausted (inconclusive)")
        else:
            if certn is not None:
                crosscap_upper = 1
                certificates["crosscap1"] = certn
                evidence.append(
                    "projective-planar: crosscap-1 signed rotation certificate verified"
                )
            else:
                evidence.append(
                    "crosscap-1 certificate search exhausted without a certificate"
                )

    return SurfaceVerdict(
        group_name=name,
        outerplanar=outer,
        planar=False,
        genus_lower=genus_lower,
        genus_upper=genus_upper,
        crosscap_lower=crosscap_lower,
        crosscap_upper=crosscap_upper,
        evidence=evidence,
        certificates=certificates,
        pinned=pinned,
        budget_limited=budget_limited,
    )


def verdict_to_dict(v: SurfaceVerdict) -> dict:
    return {
        "group": v.group_name,
        "outerplanar": v.outerplanar,
        "planar": v.planar,
        "genus_lower": v.genus_lower,
        "genus_upper": v.genus_upper,
        "crosscap_lower": v.crosscap_lower,
        "crosscap_upper": v.crosscap_upper,
        "toroidal": v.toroidal,
        "projective": v.projective,
        "vacuous": v.vacuous,
        "pinned": v.pinned,
        "budget_limited": v.budget_limited,
        "evidence": list(v.evidence),
        "certificates": {k: rotation_to_text(c) for k, c in sorted(v.certificates.items())},
    }
