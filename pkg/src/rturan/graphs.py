"""Immutable simple graphs, the named tree families, and embedding enumeration.

Vertices are dense integers 0..n-1.  The edge list is sorted lexicographically
with each pair's endpoints sorted, which fixes a canonical edge index space
that colorings and certificates refer to.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

DEFAULT_VERTEX_CAP = 64


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with canonical (lexicographic) edge indexing."""

    n: int
    edges: tuple[tuple[int, int], ...]
    labels: Optional[tuple[str, ...]] = None
    adjacency: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)
    edge_index: dict[tuple[int, int], int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("negative vertex count")
        seen = set()
        prev = None
        for (u, v) in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u},{v}) out of range")
            if u >= v:
                raise GraphError(f"edge ({u},{v}) endpoints not sorted / self-loop")
            if (u, v) in seen:
                raise GraphError(f"duplicate edge ({u},{v})")
            if prev is not None and (u, v) <= prev:
                raise GraphError("edge list not sorted lexicographically")
            seen.add((u, v))
            prev = (u, v)
        if self.labels is not None and len(self.labels) != self.n:
            raise GraphError("labels length mismatch")
        adj = [set() for _ in range(self.n)]
        for (u, v) in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "adjacency", tuple(frozenset(a) for a in adj))
        object.__setattr__(self, "edge_index", {e: i for i, e in enumerate(self.edges)})

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edge_index

    def to_json(self) -> dict:
        out = {"n": self.n, "edges": [list(e) for e in self.edges]}
        if self.labels is not None:
            out["labels"] = list(self.labels)
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "Graph":
        labels = tuple(obj["labels"]) if obj.get("labels") else None
        return graph_from_edges(obj["n"], [tuple(e) for e in obj["edges"]], labels)


def graph_from_edges(n: int, edges: Sequence[tuple[int, int]],
                     labels: Optional[Sequence[str]] = None) -> Graph:
    """Normalize an edge list (sort endpoints, sort and dedup edges) into a Graph."""
    norm = sorted({(min(u, v), max(u, v)) for (u, v) in edges})
    for (u, v) in norm:
        if u == v:
            raise GraphError(f"self-loop at {u}")
    return Graph(n, tuple(norm), tuple(labels) if labels is not None else None)


def _check_cap(n: int, cap: int):
    if n > cap:
        raise GraphError(f"vertex count {n} exceeds cap {cap}")


def make_path(k: int, cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    """Path P_k with k edges and k+1 vertices (indexed by length)."""
    if k < 1:
        raise GraphError("path length must be >= 1")
    _check_cap(k + 1, cap)
    return graph_from_edges(k + 1, [(i, i + 1) for i in range(k)])


def make_cycle(k: int, cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    """Cycle C_k on k vertices, k >= 3."""
    if k < 3:
        raise GraphError("cycle needs at least 3 vertices")
    _check_cap(k, cap)
    return graph_from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def make_complete(n: int, cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs at least 1 vertex")
    _check_cap(n, cap)
    return graph_from_edges(n, list(itertools.combinations(range(n), 2)))


def make_double_star(r: int, s: int, cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    """Double star DS_{r,s}: edge yx with r pendants at y and s pendants at x.

    Vertex 0 is y, vertex 1 is x, then y_1..y_r, then x_1..x_s.
    """
    if r < 0 or s < 0:
        raise GraphError("pendant counts must be nonnegative")
    _check_cap(r + s + 2, cap)
    labels = ["y", "x"] + [f"y_{i + 1}" for i in range(r)] + [f"x_{i + 1}" for i in range(s)]
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(r)]
    edges += [(1, 2 + r + i) for i in range(s)]
    return graph_from_edges(r + s + 2, edges, labels)


def make_caterpillar(pendants: Sequence[int], cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    """Caterpillar: spine x_1..x_k with pendants[i] leaves at x_{i+1}."""
    if len(pendants) == 0:
        raise GraphError("caterpillar needs a nonempty spine")
    if any(c < 0 for c in pendants):
        raise GraphError("pendant counts must be nonnegative")
    k = len(pendants)
    n = k + sum(pendants)
    _check_cap(n, cap)
    labels = [f"x_{i + 1}" for i in range(k)]
    edges = [(i, i + 1) for i in range(k - 1)]
    nxt = k
    for i, c in enumerate(pendants):
        for j in range(c):
            edges.append((i, nxt))
            labels.append(f"y_{i + 1},{j + 1}")
            nxt += 1
    return graph_from_edges(n, edges, labels)


def make_broom(k: int, r: int, cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    """Broom B_{k,r}: path on k vertices with r leaves at the last vertex."""
    if k < 1:
        raise GraphError("broom spine needs at least 1 vertex")
    return make_caterpillar([0] * (k - 1) + [r], cap=cap)


def make_perfect_kary(k: int, d: int, cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    """Perfect k-ary tree T(k,d): every internal vertex has k children, leaves at depth d."""
    if k < 2 or d < 1:
        raise GraphError("need arity >= 2 and depth >= 1")
    n = (k ** (d + 1) - 1) // (k - 1)
    _check_cap(n, cap)
    labels = ["v_{0,1}"]
    edges = []
    # breadth-first ids: level i starts at (k^i - 1)//(k - 1)
    for i in range(1, d + 1):
        start = (k ** i - 1) // (k - 1)
        parent_start = (k ** (i - 1) - 1) // (k - 1)
        for j in range(k ** i):
            child = start + j
            parent = parent_start + j // k
            edges.append((parent, child))
            labels.append(f"v_{{{i},{j + 1}}}")
    return graph_from_edges(n, edges, labels)


def make_near_regular(n: int, d: int, cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    """d-regular graph on n vertices, or with one vertex of degree d-1 when d*n is odd.

    Fixed circulant scheme (offsets 1..floor(d/2), plus an antipodal matching for
    odd d) so lower-bound certificates are byte-for-byte reproducible.
    """
    if d >= n:
        raise GraphError("degree must be below vertex count")
    if d < 0:
        raise GraphError("degree must be nonnegative")
    _check_cap(n, cap)
    edges = []
    half = d // 2
    for off in range(1, half + 1):
        for i in range(n):
            edges.append((i, (i + off) % n))
    if d % 2 == 1:
        m = n // 2
        if n % 2 == 0:
            edges += [(i, i + m) for i in range(m)]
        else:
            # near-perfect matching at offset floor(n/2); vertex n-1 stays deficient
            edges += [(i, i + m) for i in range((n - 1) // 2)]
    return graph_from_edges(n, edges)


def is_tree(g: Graph) -> bool:
    if g.n == 0:
        return False
    if g.num_edges != g.n - 1:
        return False
    return _component_size(g, 0) == g.n


def _component_size(g: Graph, start: int) -> int:
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in g.adjacency[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen)


def diameter(g: Graph) -> Optional[int]:
    """Longest shortest path; None if disconnected or empty."""
    if g.n == 0:
        return None
    best = 0
    for src in range(g.n):
        dist = {src: 0}
        frontier = [src]
        while frontier:
            nxt = []
            for v in frontier:
                for w in g.adjacency[v]:
                    if w not in dist:
                        dist[w] = dist[v] + 1
                        nxt.append(w)
            frontier = nxt
        if len(dist) < g.n:
            return None
        best = max(best, max(dist.values()))
    return best


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Brute-force isomorphism test, intended for graphs with <= 10 vertices."""
    if g.n != h.n or g.num_edges != h.num_edges:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    if g.n > 10:
        raise GraphError("brute-force isomorphism is capped at 10 vertices")
    hedges = set(h.edges)
    for perm in itertools.permutations(range(g.n)):
        if all(perm[u] != perm[v] and
               (min(perm[u], perm[v]), max(perm[u], perm[v])) in hedges
               for (u, v) in g.edges):
            return True
    return False


@dataclass(frozen=True)
class Embedding:
    """Injective vertex map of a pattern into a host, with the induced edge map."""

    vertex_map: tuple[int, ...]
    edge_map: tuple[int, ...]

    @classmethod
    def from_vertex_map(cls, pattern: Graph, host: Graph,
                        vertex_map: Sequence[int]) -> "Embedding":
        vm = tuple(vertex_map)
        if len(vm) != pattern.n or len(set(vm)) != len(vm):
            raise GraphError("vertex map must be injective and total")
        emap = []
        for (u, v) in pattern.edges:
            a, b = vm[u], vm[v]
            key = (min(a, b), max(a, b))
            if key not in host.edge_index:
                raise GraphError(f"pattern edge ({u},{v}) not preserved")
            emap.append(host.edge_index[key])
        return cls(vm, tuple(emap))

    def to_json(self) -> dict:
        return {"vertex_map": list(self.vertex_map), "edge_map": list(self.edge_map)}


def _search_order(pattern: Graph) -> list[int]:
    """Degree-descending DFS order over pattern vertices (early pruning)."""
    remaining = set(range(pattern.n))
    order: list[int] = []
    while remaining:
        root = max(remaining, key=lambda v: (pattern.degree(v), -v))
        stack = [root]
        while stack:
            v = stack.pop()
            if v not in remaining:
                continue
            remaining.discard(v)
            order.append(v)
            nbrs = sorted(pattern.adjacency[v] & remaining,
                          key=lambda w: (pattern.degree(w), -w))
            stack.extend(nbrs)
    return order


def enumerate_embeddings(pattern: Graph, host: Graph) -> Iterator[Embedding]:
    """Yield every labeled embedding (injective homomorphism) of pattern into host.

    Embeddings related by pattern automorphisms are all yielded; the order is
    deterministic.  Empty stream when no copy exists.
    """
    if pattern.n > host.n or pattern.n == 0:
        return
    order = _search_order(pattern)
    pos = {v: i for i, v in enumerate(order)}
    # for each step, pattern neighbors already placed
    placed_nbrs = [[w for w in pattern.adjacency[v] if pos[w] < pos[v]] for v in order]
    vmap = [-1] * pattern.n
    used = [False] * host.n

    def extend(i: int) -> Iterator[Embedding]:
        if i == len(order):
            yield Embedding.from_vertex_map(pattern, host, vmap)
            return
        v = order[i]
        nbrs = placed_nbrs[i]
        if nbrs:
            candidates = sorted(host.adjacency[vmap[nbrs[0]]])
        else:
            candidates = range(host.n)
        for c in candidates:
            if used[c]:
                continue
            if any(c not in host.adjacency[vmap[w]] for w in nbrs):
                continue
            vmap[v] = c
            used[c] = True
            yield from extend(i + 1)
            used[c] = False
            vmap[v] = -1

    yield from extend(0)


def canonical_key(g: Graph) -> tuple:
    """Isomorphism-invariant canonical form: lexicographically smallest edge list
    over degree-compatible vertex permutations.  Desk-scale only (n <= 8)."""
    degs = g.degrees()
    by_deg: dict[int, list[int]] = {}
    for v, dg in enumerate(degs):
        by_deg.setdefault(dg, []).append(v)
    # permute only within degree classes: images grouped by target degree
    classes = sorted(by_deg.items())
    slots: dict[int, list[int]] = {}
    start = 0
    for dg, verts in classes:
        slots[dg] = list(range(start, start + len(verts)))
        start += len(verts)
    best = None
    perms_per_class = [itertools.permutations(slots[dg]) for dg, _ in classes]
    for assignment in itertools.product(*[list(p) for p in perms_per_class]):
        perm = [0] * g.n
        for (dg, verts), images in zip(classes, assignment):
            for v, img in zip(verts, images):
                perm[v] = img
        key = tuple(sorted((min(perm[u], perm[v]), max(perm[u], perm[v]))
                           for (u, v) in g.edges))
        if best is None or key < best:
            best = key
    return (g.n, best)
