# -*- coding: utf-8 -*-
"""
    Module containing exact clique counting, maximal clique enumeration
    and the clique number.

    All searches work on the bitset rows of `graph_core.Graph`, candidate
    sets are intersected with a single AND per step.
"""

##### IMPORTS #####
# Standard imports
from __future__ import annotations
import logging
import math
from concurrent import futures
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

# Local imports
from . import budgets
from .errors import IncorrectParameterError, ResourceLimitError
from .graph_core import Graph, VertexSet, iter_bits


##### CONSTANTS #####
LOG = logging.getLogger(__name__)


##### CLASSES #####
@dataclass(frozen=True)
class CliqueList:
    """Maximal cliques of a graph in canonical order (size descending, then lexicographic)."""

    cliques: tuple[VertexSet, ...]
    source_n: int

    @property
    def masks(self) -> tuple[int, ...]:
        return tuple(c.mask for c in self.cliques)

    def __len__(self) -> int:
        return len(self.cliques)

    def __iter__(self):
        return iter(self.cliques)

    def to_lines(self) -> str:
        """One line per clique of space-separated sorted vertex indices."""
        return "".join(" ".join(map(str, c.to_list())) + "\n" for c in self.cliques)


@dataclass(frozen=True)
class DensityReport:
    """Number of r-cliques as an exact fraction of C(n, r)."""

    r: int
    count: int
    binom: int

    @property
    def c(self) -> Fraction:
        return Fraction(self.count, self.binom)

    @property
    def c_float(self) -> float:
        return float(self.c)

    def to_dict(self) -> dict:
        return {
            "r": self.r,
            "count": self.count,
            "binom": self.binom,
            "c_num": self.c.numerator,
            "c_den": self.c.denominator,
            "c_float": self.c_float,
        }


##### FUNCTIONS #####
def _count_extensions(adj: tuple[int, ...], candidates: int, remaining: int) -> int:
    """Number of `remaining`-subsets of `candidates` which are cliques.

    Vertices are taken in ascending order so every clique is counted once.
    """
    if remaining == 1:
        return candidates.bit_count()
    total = 0
    while candidates.bit_count() >= remaining:
        low = candidates & -candidates
        candidates ^= low
        total += _count_extensions(adj, candidates & adj[low.bit_length() - 1], remaining - 1)
    return total


def count_r_cliques(g: Graph, r: int, threads: int = 1) -> int:
    """Exact number of r-vertex subsets of `g` which induce a complete graph.

    Parameters
    ----------
    g : Graph
        Graph to count in.
    r : int
        Clique order, r = 0 gives 1 and r > n gives 0.
    threads : int, default 1
        Number of worker threads, the top-level branches are shared out
        between them.
    """
    if r < 0:
        raise IncorrectParameterError(r, "r", ">= 0")
    if r == 0:
        return 1
    if r > g.n:
        return 0
    if r == 1:
        return g.n

    branches = []
    for v in range(g.n):
        later = g.adj[v] >> (v + 1) << (v + 1)
        if later.bit_count() >= r - 1:
            branches.append(later)

    def count(candidates: int) -> int:
        return _count_extensions(g.adj, candidates, r - 1)

    if threads > 1 and len(branches) > 1:
        with futures.ThreadPoolExecutor(max_workers=threads) as executor:
            return sum(executor.map(count, branches))
    return sum(count(b) for b in branches)


def clique_counts(g: Graph) -> list[int]:
    """Number of cliques of every order, index r holds the r-clique count (index 0 is 1)."""
    counts = [1]

    def tally(candidates: int, size: int) -> None:
        while candidates:
            low = candidates & -candidates
            candidates ^= low
            if len(counts) <= size + 1:
                counts.append(0)
            counts[size + 1] += 1
            tally(candidates & g.adj[low.bit_length() - 1], size + 1)

    tally(g.vertices, 0)
    return counts


def clique_density(g: Graph, r: int, threads: int = 1) -> DensityReport:
    """Fraction of r-subsets of `g` which are cliques, kept as an exact rational.

    Raises
    ------
    IncorrectParameterError
        If `r` is negative or larger than the number of vertices.
    """
    if not 0 <= r <= g.n:
        raise IncorrectParameterError(r, "r", f"between 0 and n={g.n}")
    return DensityReport(r, count_r_cliques(g, r, threads), math.comb(g.n, r))


def _choose_pivot(adj: tuple[int, ...], candidates: int, excluded: int) -> int:
    """Vertex of P u X with the most neighbours in P, lowest index on ties."""
    best, best_count = -1, -1
    for u in iter_bits(candidates | excluded):
        count = (candidates & adj[u]).bit_count()
        if count > best_count:
            best, best_count = u, count
    return best


def _bron_kerbosch(
    adj: tuple[int, ...], clique: int, candidates: int, excluded: int, cap: int
) -> list[int]:
    """Iterative pivoting Bron-Kerbosch from the state (R, P, X)."""
    found = []
    stack = [(clique, candidates, excluded)]
    while stack:
        clique, candidates, excluded = stack.pop()
        if not candidates:
            if not excluded:
                found.append(clique)
                if len(found) > cap:
                    raise ResourceLimitError("maximal clique count", cap)
            continue
        pivot = _choose_pivot(adj, candidates, excluded)
        for v in iter_bits(candidates & ~adj[pivot]):
            bit = 1 << v
            stack.append((clique | bit, candidates & adj[v], excluded & adj[v]))
            candidates &= ~bit
            excluded |= bit
    return found


def _canonical_key(mask: int) -> tuple[int, list[int]]:
    return (-mask.bit_count(), list(iter_bits(mask)))


def enumerate_maximal_cliques(
    g: Graph, cap: Optional[int] = None, threads: int = 1
) -> CliqueList:
    """Enumerate every maximal clique of `g` with pivoting Bron-Kerbosch.

    Isolated vertices are maximal cliques of size 1. The output order is
    canonical, size descending then lexicographic, whatever `threads` is.

    Parameters
    ----------
    g : Graph
        Graph to enumerate.
    cap : int, optional
        Maximum number of cliques, by default the configured clique cap.
    threads : int, default 1
        Number of worker threads used for the first-level branches.

    Raises
    ------
    ResourceLimitError
        If more than `cap` maximal cliques exist.
    """
    cap = budgets.resolve("clique_cap", cap)
    if g.n == 0:
        return CliqueList((), 0)

    # First-level branches are independent once P and X are fixed for each
    candidates, excluded = g.vertices, 0
    pivot = _choose_pivot(g.adj, candidates, excluded)
    branches = []
    for v in iter_bits(candidates & ~g.adj[pivot]):
        bit = 1 << v
        branches.append((bit, candidates & g.adj[v], excluded & g.adj[v]))
        candidates &= ~bit
        excluded |= bit

    def run(branch: tuple[int, int, int]) -> list[int]:
        return _bron_kerbosch(g.adj, *branch, cap)

    if threads > 1 and len(branches) > 1:
        with futures.ThreadPoolExecutor(max_workers=threads) as executor:
            results = list(executor.map(run, branches))
    else:
        results = [run(b) for b in branches]

    masks = [mask for result in results for mask in result]
    if len(masks) > cap:
        raise ResourceLimitError("maximal clique count", cap)
    masks.sort(key=_canonical_key)
    LOG.debug("Found %s maximal cliques in %s", len(masks), g)
    return CliqueList(tuple(VertexSet(g.n, m) for m in masks), g.n)


def _colour_sort(adj: tuple[int, ...], candidates: int) -> tuple[list[int], list[int]]:
    """Greedy colouring of `candidates`, returns vertices and their colour numbers.

    The colour of a vertex bounds the size of any clique among it and the
    vertices before it.
    """
    order, colours = [], []
    colour = 0
    remaining = candidates
    while remaining:
        colour += 1
        available = remaining
        while available:
            low = available & -available
            v = low.bit_length() - 1
            order.append(v)
            colours.append(colour)
            remaining &= ~low
            available &= ~low & ~adj[v]
    return order, colours


def max_clique(g: Graph) -> VertexSet:
    """A maximum clique of `g`, found by branch and bound with a colouring bound."""
    best_size, best_bits = 0, 0
    if g.n == 0:
        return VertexSet(0, 0)

    order, colours = _colour_sort(g.adj, g.vertices)
    # Each frame: [size, clique bits, candidates, order, colours, next position]
    stack = [[0, 0, g.vertices, order, colours, len(order) - 1]]
    while stack:
        frame = stack[-1]
        size, bits, candidates, order, colours, i = frame
        if i < 0 or size + colours[i] <= best_size:
            stack.pop()
            continue
        frame[5] -= 1
        v = order[i]
        bit = 1 << v
        new_candidates = candidates & g.adj[v]
        frame[2] = candidates & ~bit
        if not new_candidates:
            if size + 1 > best_size:
                best_size, best_bits = size + 1, bits | bit
            continue
        new_order, new_colours = _colour_sort(g.adj, new_candidates)
        stack.append(
            [size + 1, bits | bit, new_candidates, new_order, new_colours, len(new_order) - 1]
        )
    return VertexSet(g.n, best_bits)


def clique_number(g: Graph) -> int:
    """Order of the largest clique in `g`."""
    return len(max_clique(g))
