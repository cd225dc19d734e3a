"""Brute-force ground truth for H and L via the (n, p, q)-graph.

Positions 0..n-1 of a partial word are vertices; two positions are joined when
their distance is a multiple of p or of q.  A partial word with periods p and
q that lacks period 1 is the same thing as a vertex separator (the holes) of
this graph, so H(n, p, q) is the graph's vertex connectivity.

Two independent routes are provided: unit-capacity max-flow on the
vertex-split digraph, and exhaustive enumeration of hole sets.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components, maximum_flow

from .errors import BudgetExceededError

# Separator size reported for a complete graph, where no separator exists.
COMPLETE = math.inf

EXHAUSTIVE_BUDGET = 2**26


@dataclass(frozen=True)
class PQGraph:
    n: int
    p: int
    q: int

    def __post_init__(self):
        if self.n < 1 or self.p < 1 or self.q < 1:
            raise ValueError("n, p and q must be positive")

    def adjacent(self, i: int, j: int) -> bool:
        d = abs(j - i)
        return d != 0 and (d % self.p == 0 or d % self.q == 0)

    @cached_property
    def neighbors(self) -> tuple[frozenset[int], ...]:
        out = []
        for i in range(self.n):
            nb = set(range(i % self.p, self.n, self.p))
            nb.update(range(i % self.q, self.n, self.q))
            nb.discard(i)
            out.append(frozenset(nb))
        return tuple(out)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << j for j in nb) for nb in self.neighbors)

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in self.neighbors[i] if i < j]

    def p_class(self, i: int) -> list[int]:
        return list(range(i % self.p, self.n, self.p))

    def q_class(self, i: int) -> list[int]:
        return list(range(i % self.q, self.n, self.q))

    def is_connected(self, removed: int = 0) -> bool:
        """Connectivity after deleting the vertices in bitmask ``removed``."""
        alive = ((1 << self.n) - 1) & ~removed
        if alive == 0:
            return True
        start = alive & -alive
        seen = start
        frontier = start
        masks = self.masks
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            fresh = masks[low.bit_length() - 1] & alive & ~seen
            seen |= fresh
            frontier |= fresh
        return seen == alive

    def components(self) -> list[list[int]]:
        ncomp, labels = connected_components(self._adjacency(), directed=False)
        comps: list[list[int]] = [[] for _ in range(ncomp)]
        for v, lab in enumerate(labels):
            comps[lab].append(v)
        return comps

    def _adjacency(self) -> csr_matrix:
        rows, cols = [], []
        for i, nb in enumerate(self.neighbors):
            rows.extend([i] * len(nb))
            cols.extend(nb)
        data = np.ones(len(rows), dtype=np.int32)
        return csr_matrix((data, (rows, cols)), shape=(self.n, self.n))


class _SplitNetwork:
    """Vertex-split digraph: v_in = 2v, v_out = 2v + 1, unit inner arcs."""

    def __init__(self, g: PQGraph):
        self.g = g
        big = g.n + 1
        rows, cols, caps = [], [], []
        for v in range(g.n):
            rows.append(2 * v)
            cols.append(2 * v + 1)
            caps.append(1)
            for u in g.neighbors[v]:
                rows.append(2 * v + 1)
                cols.append(2 * u)
                caps.append(big)
        self.matrix = csr_matrix(
            (np.array(caps, dtype=np.int32), (np.array(rows), np.array(cols))),
            shape=(2 * g.n, 2 * g.n),
        )

    def cut(self, s: int, t: int) -> int:
        return int(maximum_flow(self.matrix, 2 * s + 1, 2 * t).flow_value)

    def cut_witness(self, s: int, t: int) -> set[int]:
        res = maximum_flow(self.matrix, 2 * s + 1, 2 * t)
        # flow is antisymmetric, so reverse arcs appear with residual f
        residual = (self.matrix - res.flow).tocsr()
        seen = {2 * s + 1}
        queue = deque(seen)
        while queue:
            x = queue.popleft()
            start, end = residual.indptr[x], residual.indptr[x + 1]
            for y, cap in zip(residual.indices[start:end], residual.data[start:end]):
                if cap > 0 and y not in seen:
                    seen.add(int(y))
                    queue.append(int(y))
        return {v for v in range(self.g.n) if 2 * v in seen and 2 * v + 1 not in seen}


def _candidate_pairs(g: PQGraph, all_pairs: bool) -> list[tuple[int, int]]:
    if all_pairs:
        return [(s, t) for s in range(g.n) for t in range(s + 1, g.n)
                if not g.adjacent(s, t)]
    # Esfahanian-Hakimi: a minimum-degree vertex v is either outside some
    # minimum separator (then it is cut from a non-neighbour) or inside every
    # one (then two of its neighbours end up on different sides).
    v = min(range(g.n), key=lambda i: len(g.neighbors[i]))
    pairs = [(v, t) for t in range(g.n) if t != v and t not in g.neighbors[v]]
    nb = sorted(g.neighbors[v])
    pairs.extend((x, y) for x, y in itertools.combinations(nb, 2) if not g.adjacent(x, y))
    return pairs


def min_vertex_separator(g: PQGraph, all_pairs: bool = False) -> int | float:
    """Vertex connectivity of ``g``: 0 if disconnected, COMPLETE if complete."""
    if not g.is_connected():
        return 0
    pairs = _candidate_pairs(g, all_pairs)
    if not pairs:
        return COMPLETE
    net = _SplitNetwork(g)
    return min(net.cut(s, t) for s, t in pairs)


def separator_witness(g: PQGraph) -> set[int]:
    """A minimum vertex separator (empty if ``g`` is already disconnected)."""
    if not g.is_connected():
        return set()
    pairs = _candidate_pairs(g, False)
    if not pairs:
        raise ValueError("complete graph has no vertex separator")
    net = _SplitNetwork(g)
    s, t = min(pairs, key=lambda st: net.cut(*st))
    return net.cut_witness(s, t)


def h_oracle(n: int, p: int, q: int) -> int | float:
    if math.gcd(p, q) != 1:
        raise ValueError("p and q must be coprime")
    if n < max(p, q):
        raise ValueError("n must be at least max(p, q)")
    return min_vertex_separator(PQGraph(n, p, q))


def h_oracle_exhaustive(n: int, p: int, q: int, max_h: int,
                        budget: int = EXHAUSTIVE_BUDGET) -> int | None:
    """Smallest hole count <= max_h that disconnects the graph, else None.

    Enumerates vertex subsets by increasing size.
    """
    g = PQGraph(n, p, q)
    total = sum(math.comb(n, k) for k in range(max_h + 1))
    if total > budget:
        raise BudgetExceededError(f"{total} subsets exceed budget {budget}")
    for k in range(max_h + 1):
        if k > n - 2:
            break
        for subset in itertools.combinations(range(n), k):
            if not g.is_connected(sum(1 << v for v in subset)):
                return k
    return None


def l_oracle(h: int, p: int, q: int, n_max: int) -> int:
    """min{n : H(n, p, q) > h}, scanning upward from the Fine-Wilf length."""
    for n in range(max(p + q - 2, p, q), n_max + 1):
        if h_oracle(n, p, q) > h:
            return n
    raise BudgetExceededError(f"H(n, {p}, {q}) <= {h} for every n <= {n_max}")


def q_edge_counts(g: PQGraph) -> list[int]:
    """|E_j| for each p-class j: q-edges (i, i + q) with i = j (mod p)."""
    counts = [0] * g.p
    for i in range(g.n - g.q):
        counts[i % g.p] += 1
    return counts


def separator_to_word(g: PQGraph, separator: set[int]):
    """Partial word whose holes are ``separator`` and whose letters mark one
    connected component of the remaining graph."""
    from .words import HOLE, PartialWord

    alive = [v for v in range(g.n) if v not in separator]
    if not alive:
        raise ValueError("separator removes every vertex")
    # grow the component of the first surviving vertex
    comp = {alive[0]}
    queue = deque(comp)
    while queue:
        v = queue.popleft()
        for u in g.neighbors[v]:
            if u not in separator and u not in comp:
                comp.add(u)
                queue.append(u)
    return PartialWord(tuple(
        HOLE if v in separator else (0 if v in comp else 1) for v in range(g.n)
    ))
