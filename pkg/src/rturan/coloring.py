"""Proper edge colorings: validation, canonical exhaustive enumeration,
the circle-method 1-factorization of K_{2m}, and a Delta+1 coloring."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional, Sequence

from .graphs import Graph, make_complete


class ColoringError(ValueError):
    pass


class BudgetExhausted(Exception):
    """Raised when a node-count budget trips; a distinguished non-error outcome."""

    def __init__(self, nodes_visited: int):
        super().__init__(f"search budget exhausted after {nodes_visited} nodes")
        self.nodes_visited = nodes_visited


def graph_hash(g: Graph) -> str:
    payload = json.dumps({"n": g.n, "edges": [list(e) for e in g.edges]},
                         separators=(",", ":"))
    return hashlib.sha256(payload.encode()).hexdigest()[:16]


@dataclass(frozen=True)
class EdgeColoring:
    """Total color assignment edge-index -> color id on a fixed graph."""

    graph: Graph
    colors: tuple[int, ...]
    canonical: bool = field(default=False, compare=False)

    def __post_init__(self):
        if len(self.colors) != self.graph.num_edges:
            raise ColoringError("coloring length does not match edge count")
        if any(c < 0 for c in self.colors):
            raise ColoringError("color ids must be nonnegative")

    @property
    def num_colors(self) -> int:
        return len(set(self.colors))

    def is_rainbow(self) -> bool:
        return self.num_colors == len(self.colors)

    def to_json(self) -> dict:
        return {"graph_hash": graph_hash(self.graph), "colors": list(self.colors)}

    @classmethod
    def from_json(cls, obj: dict, graph: Graph) -> "EdgeColoring":
        if obj.get("graph_hash") not in (None, graph_hash(graph)):
            raise ColoringError("coloring belongs to a different graph")
        return cls(graph, tuple(obj["colors"]))


def is_proper(g: Graph, coloring: EdgeColoring | Sequence[int]) -> bool:
    """True iff no two edges sharing a vertex have the same color."""
    colors = coloring.colors if isinstance(coloring, EdgeColoring) else tuple(coloring)
    if len(colors) != g.num_edges:
        raise ColoringError("coloring length does not match edge count")
    seen: dict[tuple[int, int], bool] = {}
    for (u, v), c in zip(g.edges, colors):
        for x in (u, v):
            if (x, c) in seen:
                return False
            seen[(x, c)] = True
    return True


def proper_coloring(g: Graph, colors: Sequence[int], canonical: bool = False) -> EdgeColoring:
    c = EdgeColoring(g, tuple(colors), canonical=canonical)
    if not is_proper(g, c):
        raise ColoringError("coloring is not proper")
    return c


def is_canonical(colors: Sequence[int]) -> bool:
    """First-occurrence canonical form: color of edge i <= 1 + max color before i."""
    top = -1
    for c in colors:
        if c > top + 1:
            return False
        top = max(top, c)
    return True


def canonicalize(colors: Sequence[int]) -> tuple[int, ...]:
    relabel: dict[int, int] = {}
    out = []
    for c in colors:
        if c not in relabel:
            relabel[c] = len(relabel)
        out.append(relabel[c])
    return tuple(out)


def conflict_lists(g: Graph) -> list[list[int]]:
    """For each edge index, the earlier edge indices sharing a vertex."""
    out: list[list[int]] = []
    for i, (u, v) in enumerate(g.edges):
        out.append([j for j in range(i) if set(g.edges[j]) & {u, v}])
    return out


PrunePredicate = Callable[[list[int], int], bool]


def enumerate_proper_colorings(g: Graph, max_colors: int,
                               budget: Optional[int] = None,
                               prune: Optional[PrunePredicate] = None,
                               ) -> Iterator[EdgeColoring]:
    """Depth-first canonical enumeration of proper colorings with <= max_colors colors.

    Yields exactly one representative per color-permutation class (first-occurrence
    canonical form).  `prune(partial, i)` is consulted after edge i is assigned;
    returning True cuts the subtree.  Raises BudgetExhausted when the node budget
    (number of edge assignments) trips.
    """
    if max_colors < 1:
        raise ColoringError("need at least one color")
    m = g.num_edges
    if m == 0:
        yield EdgeColoring(g, (), canonical=True)
        return
    conf = conflict_lists(g)
    partial = [-1] * m
    nodes = 0

    def walk(i: int) -> Iterator[EdgeColoring]:
        nonlocal nodes
        if i == m:
            yield EdgeColoring(g, tuple(partial), canonical=True)
            return
        used = max(partial[:i], default=-1) + 1
        forbidden = {partial[j] for j in conf[i]}
        for c in range(min(used + 1, max_colors)):
            if c in forbidden:
                continue
            partial[i] = c
            nodes += 1
            if budget is not None and nodes > budget:
                raise BudgetExhausted(nodes)
            if prune is None or not prune(partial, i):
                yield from walk(i + 1)
            partial[i] = -1

    yield from walk(0)


def one_factorization(m: int) -> EdgeColoring:
    """Circle-method 1-factorization of K_{2m}: 2m-1 colors, each class a
    perfect matching, every vertex meeting every color exactly once."""
    if m < 1:
        raise ColoringError("need m >= 1")
    n = 2 * m
    g = make_complete(n)
    colors = [-1] * g.num_edges
    mod = n - 1
    for rnd in range(mod):
        pairs = [(rnd, mod)]
        for i in range(1, m):
            pairs.append(((rnd + i) % mod, (rnd - i) % mod))
        for (u, v) in pairs:
            colors[g.edge_index[(min(u, v), max(u, v))]] = rnd
    return proper_coloring(g, colors)


def greedy_delta_plus_one(g: Graph) -> EdgeColoring:
    """Proper coloring with at most Delta+1 colors.

    Backtracking over the Delta+1 palette, smallest color first; completeness
    of the search plus Vizing's theorem gives the guarantee.
    """
    m = g.num_edges
    if m == 0:
        return EdgeColoring(g, ())
    palette = g.max_degree() + 1
    conf = conflict_lists(g)
    colors = [-1] * m

    def walk(i: int) -> bool:
        if i == m:
            return True
        forbidden = {colors[j] for j in conf[i]}
        for c in range(palette):
            if c in forbidden:
                continue
            colors[i] = c
            if walk(i + 1):
                return True
        colors[i] = -1
        return False

    if not walk(0):  # unreachable for simple graphs by Vizing
        raise ColoringError("no Delta+1 coloring found")
    return proper_coloring(g, colors)


@dataclass(frozen=True)
class ColorClassProfile:
    """Color class sizes sorted descending."""

    sizes: tuple[int, ...]

    def qualifies_full_spectrum(self) -> bool:
        return bool(self.sizes) and self.sizes[0] >= 3 and self.sizes[-1] >= 2


def color_class_profile(c: EdgeColoring) -> ColorClassProfile:
    counts: dict[int, int] = {}
    for col in c.colors:
        counts[col] = counts.get(col, 0) + 1
    return ColorClassProfile(tuple(sorted(counts.values(), reverse=True)))


def color_classes(c: EdgeColoring) -> list[list[int]]:
    """Edge indices per color, classes sorted by descending size (ties by color id)."""
    by_color: dict[int, list[int]] = {}
    for i, col in enumerate(c.colors):
        by_color.setdefault(col, []).append(i)
    return [cls for _, cls in sorted(by_color.items(),
                                     key=lambda kv: (-len(kv[1]), kv[0]))]
