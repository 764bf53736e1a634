"""Pure-Python kernels for the hot search loops.

Same contracts as the compiled twin in _fast.pyx; results are bit-identical
(including the sampling RNG) so either backend can stand behind certificates.
"""

from __future__ import annotations

from typing import Optional, Sequence

BACKEND = "python"

_MASK = (1 << 64) - 1


class XorShift64Star:
    """Tiny deterministic PRNG shared verbatim with the compiled kernel."""

    def __init__(self, seed: int):
        self.state = (seed & _MASK) or 0x9E3779B97F4A7C15

    def next_u64(self) -> int:
        x = self.state
        x ^= (x >> 12)
        x = (x ^ (x << 25)) & _MASK
        x ^= (x >> 27)
        self.state = x
        return (x * 0x2545F4914F6CDD1D) & _MASK

    def randbelow(self, n: int) -> int:
        return (self.next_u64() >> 33) % n


def _embeddings_by_last_edge(num_edges: int,
                             emb_edges: Sequence[Sequence[int]]) -> list[list[int]]:
    by_last: list[list[int]] = [[] for _ in range(num_edges)]
    for row, edges in enumerate(emb_edges):
        by_last[max(edges)].append(row)
    return by_last


def _copy_satisfied(colors: Sequence[int], edges: Sequence[int],
                    k: int, exactly: bool) -> bool:
    cols = [colors[e] for e in edges]
    uniq = sum(1 for c in cols if cols.count(c) == 1)
    return uniq == k if exactly else uniq >= k


def find_avoiding_coloring(num_edges: int,
                           conflicts: Sequence[Sequence[int]],
                           emb_edges: Sequence[Sequence[int]],
                           k: int, exactly: bool, max_colors: int,
                           budget: Optional[int] = None,
                           ) -> tuple[Optional[list[int]], int, bool]:
    """DFS over canonical proper colorings for one with no satisfied copy.

    A copy is satisfied when its unique-edge count is >= k (== k in exactly
    mode).  Branches are cut as soon as a fully colored copy is satisfied,
    since the copy's count can no longer change.  Returns
    (colors or None, nodes_visited, exhausted).
    """
    by_last = _embeddings_by_last_edge(num_edges, emb_edges)
    colors = [-1] * num_edges
    nodes = 0
    limit = budget if budget is not None else -1

    def walk(i: int):
        nonlocal nodes
        if i == num_edges:
            return list(colors)
        used = max(colors[:i], default=-1) + 1
        forbidden = {colors[j] for j in conflicts[i]}
        for c in range(min(used + 1, max_colors)):
            if c in forbidden:
                continue
            nodes += 1
            if limit >= 0 and nodes > limit:
                raise _Budget
            colors[i] = c
            if not any(_copy_satisfied(colors, emb_edges[r], k, exactly)
                       for r in by_last[i]):
                got = walk(i + 1)
                if got is not None:
                    colors[i] = -1
                    return got
            colors[i] = -1
        return None

    try:
        found = walk(0)
    except _Budget:
        return None, nodes, False
    return found, nodes, True


class _Budget(Exception):
    pass


def unique_counts(colors: Sequence[int],
                  emb_edges: Sequence[Sequence[int]]) -> list[int]:
    out = []
    for edges in emb_edges:
        cols = [colors[e] for e in edges]
        out.append(sum(1 for c in cols if cols.count(c) == 1))
    return out


def random_proper_coloring(num_edges: int, conflicts: Sequence[Sequence[int]],
                           rng: XorShift64Star) -> list[int]:
    """Randomized greedy proper coloring; a fresh color is always an option,
    so generation never fails."""
    colors = [-1] * num_edges
    used = 0
    for i in range(num_edges):
        forbidden = {colors[j] for j in conflicts[i]}
        options = [c for c in range(used) if c not in forbidden]
        options.append(used)  # fresh color
        c = options[rng.randbelow(len(options))]
        colors[i] = c
        if c == used:
            used += 1
    return colors


def sample_and_check(num_edges: int,
                     conflicts: Sequence[Sequence[int]],
                     emb_edges: Sequence[Sequence[int]],
                     k: int, exactly: bool,
                     num_samples: int, seed: int,
                     skip_rainbow: bool = True) -> dict:
    """Draw seeded random proper colorings and check each contains a satisfied
    copy.  Returns counts plus the first counterexample coloring, if any."""
    rng = XorShift64Star(seed)
    checked = 0
    rainbow_skipped = 0
    for s in range(num_samples):
        colors = random_proper_coloring(num_edges, conflicts, rng)
        if skip_rainbow and len(set(colors)) == num_edges:
            rainbow_skipped += 1
            continue
        checked += 1
        if not any(_copy_satisfied(colors, edges, k, exactly)
                   for edges in emb_edges):
            return {"checked": checked, "rainbow_skipped": rainbow_skipped,
                    "counterexample": colors, "sample_index": s}
    return {"checked": checked, "rainbow_skipped": rainbow_skipped,
            "counterexample": None, "sample_index": None}
