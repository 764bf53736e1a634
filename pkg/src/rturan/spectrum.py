"""Exact k-spectra: canonical enumeration, the closed-form double-star
spectrum, the full-spectrum criterion with its witness procedure, and the
k -> k' rounding rule.

Spec(F) is a property of proper colorings of F itself; unique counts are
taken over the identity embedding.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Optional

from .coloring import (BudgetExhausted, ColorClassProfile, ColoringError,
                       EdgeColoring, color_classes, color_class_profile,
                       enumerate_proper_colorings, proper_coloring)
from .graphs import Graph, GraphError, make_double_star

DEFAULT_EDGE_CAP = 12


def self_unique_count(c: EdgeColoring) -> int:
    counts = Counter(c.colors)
    return sum(1 for col in c.colors if counts[col] == 1)


@dataclass
class KSpectrum:
    graph: Graph
    values: tuple[int, ...]
    witnesses: dict[int, EdgeColoring] = field(repr=False)
    exhaustive: bool = True
    nodes_visited: int = 0

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "graph": self.graph.to_json(),
            "values": list(self.values),
            "witnesses": {str(v): list(w.colors) for v, w in self.witnesses.items()},
            "exhaustive": self.exhaustive,
            "nodes_visited": self.nodes_visited,
        }


def compute_spectrum(f: Graph, budget: Optional[int] = None,
                     edge_cap: int = DEFAULT_EDGE_CAP) -> KSpectrum:
    """Exact spectrum by canonical proper-coloring enumeration.

    Colors are capped at ||F|| (more are never needed).  On budget exhaustion
    the partial spectrum is returned flagged non-exhaustive.
    """
    m = f.num_edges
    if m > edge_cap:
        raise GraphError(f"graph has {m} edges, above the spectrum cap {edge_cap}")
    witnesses: dict[int, EdgeColoring] = {}
    nodes = 0
    exhaustive = True
    gen = enumerate_proper_colorings(f, max_colors=max(m, 1), budget=budget)
    try:
        for c in gen:
            v = self_unique_count(c)
            if v not in witnesses:
                witnesses[v] = c
    except BudgetExhausted as exc:
        nodes = exc.nodes_visited
        exhaustive = False
    return KSpectrum(f, tuple(sorted(witnesses)), witnesses,
                     exhaustive=exhaustive, nodes_visited=nodes)


def ds_spectrum_closed_form(r: int, s: int) -> KSpectrum:
    """Spec(DS_{r,s}) = {j + 2l : 0 <= l <= r} with j = s - r + 1 (sides swapped
    so r <= s).  Witness for j+2l pairs r-l of y's pendant colors with x-pendant
    colors and gives everything else a fresh color."""
    if r > s:
        r, s = s, r
    g = make_double_star(r, s)
    j = s - r + 1
    witnesses: dict[int, EdgeColoring] = {}
    for l in range(r + 1):
        # edge order: (y,x), r y-pendant edges, s x-pendant edges
        colors = [0]
        paired = r - l
        colors += [1 + i for i in range(paired)] + [0] * l
        fresh = 1 + paired
        for i in range(l):
            colors[1 + paired + i] = fresh
            fresh += 1
        xcols = [1 + i for i in range(paired)]
        for _ in range(s - paired):
            xcols.append(fresh)
            fresh += 1
        colors += xcols
        witnesses[j + 2 * l] = proper_coloring(g, colors)
    return KSpectrum(g, tuple(sorted(witnesses)), witnesses)


def full_spectrum_criterion(profile: ColorClassProfile) -> bool:
    """Sufficient condition: largest class >= 3 and smallest class >= 2."""
    return profile.qualifies_full_spectrum()


def find_qualifying_coloring(f: Graph,
                             budget: Optional[int] = None) -> Optional[EdgeColoring]:
    """Lexicographically least canonical proper coloring whose class profile
    satisfies the full-spectrum criterion, or None."""
    for c in enumerate_proper_colorings(f, max_colors=max(f.num_edges, 1),
                                        budget=budget):
        if full_spectrum_criterion(color_class_profile(c)):
            return c
    return None


def witness_family(f: Graph, coloring: EdgeColoring) -> dict[int, EdgeColoring]:
    """Color-switching procedure: from a qualifying proper coloring, emit one
    proper coloring per spectrum value 0..||F||-2 plus the rainbow ||F||.

    Classes L_1..L_r are collapsed onto their own color one edge at a time,
    starting from a rainbow recoloring; the largest class's last edge is
    switched back and forth to fill the parity gaps.
    """
    profile = color_class_profile(coloring)
    if not full_spectrum_criterion(profile):
        raise ColoringError("coloring does not satisfy the full-spectrum criterion")
    m = f.num_edges
    classes = color_classes(coloring)  # descending size
    rcount = len(classes)
    # rainbow base: class representative e_{i,1} gets color i, the rest fresh
    phi_r = [-1] * m
    for i, cls in enumerate(classes):
        phi_r[cls[0]] = i
    nxt = rcount
    for e in range(m):
        if phi_r[e] == -1:
            phi_r[e] = nxt
            nxt += 1

    out: dict[int, EdgeColoring] = {}

    def emit(expected: int, colors: list[int]):
        c = proper_coloring(f, list(colors))
        got = self_unique_count(c)
        if got != expected:
            raise ColoringError(
                f"switch procedure produced {got}-unique, expected {expected}")
        out.setdefault(expected, c)

    cur = list(phi_r)
    emit(m, cur)
    l1 = len(classes[0])
    e1 = classes[0]
    # collapse L_1 sequentially: ||F||-2 down to ||F||-l1
    for t in range(1, l1):
        cur[e1[t]] = 0
        emit(m - t - 1, cur)
    collapsed = l1
    for i in range(1, rcount):
        cls = classes[i]
        li = len(cls)
        # switch: e_{1,l1} back to its rainbow color while e_{i,2} joins class i
        cur[e1[l1 - 1]] = phi_r[e1[l1 - 1]]
        cur[cls[1]] = i
        emit(m - collapsed - 1, cur)
        cur[e1[l1 - 1]] = 0
        emit(m - collapsed - 2, cur)
        for t in range(2, li):
            cur[cls[t]] = i
            emit(m - collapsed - t - 1, cur)
        collapsed += li
    return out


def round_up_k(f: Graph, k: int, spectrum: Optional[KSpectrum] = None) -> int:
    """Smallest k' >= k lying in Spec(f); equals k when k is achievable."""
    if k > f.num_edges:
        raise ValueError("k exceeds the edge count; the rainbow value is the maximum")
    if spectrum is None:
        spectrum = compute_spectrum(f)
    for v in spectrum.values:
        if v >= k:
            return v
    raise ValueError("spectrum has no value >= k")  # unreachable: ||F|| is achievable
