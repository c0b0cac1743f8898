# -*- coding: utf-8 -*-
"""
    Module containing the forbidden family of semi-induced 2-blow-ups of
    cliques, containment searches for it and the extraction of a pattern
    witness from a set shattered by the maximal cliques.

    Pattern vertices use template indices ``u_i = i`` and ``u_i' = r + i``.
    Every pair ``u_i u_j``, ``u_i u_j'`` (i != j) is a required edge, every
    pair ``u_i u_i'`` is a required non-edge and the pairs ``u_i' u_j'``
    are free. The free pairs are ordered ``(i, j)``, i < j, lexicographically
    and bit k of a free mask refers to the k-th of them.
"""

##### IMPORTS #####
# Standard imports
from __future__ import annotations
import enum
import itertools
import logging
from dataclasses import dataclass, field
from typing import Collection, Optional

# Local imports
from . import budgets
from .clique_engine import CliqueList, enumerate_maximal_cliques
from .errors import ExtractionFailureError, IncorrectParameterError, NotShatteredError
from .graph_core import Graph, VertexSet, bits_to_mask, iter_bits
from .set_system import SetSystem, SystemLabel, vc_dimension

##### CONSTANTS #####
LOG = logging.getLogger(__name__)
MAX_FAMILY_ORDER = 6
"""Largest r for which `family_members` lists the 2^C(r,2) members."""


##### CLASSES #####
@dataclass(frozen=True)
class PatternSpec:
    """Pair classes of the template on ``2r`` vertices.

    The required, forbidden and free pairs partition all ``C(2r, 2)``
    vertex pairs of the template.
    """

    r: int
    required_edges: tuple[tuple[int, int], ...] = field(init=False)
    forbidden_edges: tuple[tuple[int, int], ...] = field(init=False)
    free_pairs: tuple[tuple[int, int], ...] = field(init=False)

    def __post_init__(self):
        r = self.r
        if r < 2:
            raise IncorrectParameterError(r, "r", ">= 2")
        required = []
        for i, j in itertools.combinations(range(r), 2):
            required.extend([(i, j), (i, r + j), (j, r + i)])
        object.__setattr__(self, "required_edges", tuple(sorted(required)))
        object.__setattr__(self, "forbidden_edges", tuple((i, r + i) for i in range(r)))
        object.__setattr__(
            self,
            "free_pairs",
            tuple((r + i, r + j) for i, j in itertools.combinations(range(r), 2)),
        )

    @property
    def n_free(self) -> int:
        return len(self.free_pairs)

    @property
    def full_mask(self) -> int:
        """Free mask with every ``u_i' u_j'`` pair present, i.e. K_r[2]."""
        return (1 << self.n_free) - 1

    def member(self, free_mask: int) -> Graph:
        """Template graph with the free pairs selected by `free_mask` added."""
        if not 0 <= free_mask <= self.full_mask:
            raise IncorrectParameterError(free_mask, "free_mask", f"0..{self.full_mask}")
        edges = list(self.required_edges)
        edges.extend(p for k, p in enumerate(self.free_pairs) if free_mask >> k & 1)
        return Graph.from_edges(2 * self.r, edges)


@dataclass(frozen=True)
class PatternWitness:
    """Embedding of a family member: ``u[i]`` plays u_i and ``u_prime[i]`` plays u_i'."""

    r: int
    u: tuple[int, ...]
    u_prime: tuple[int, ...]
    free_mask: int

    @property
    def vertices(self) -> tuple[int, ...]:
        """Host vertices in template order."""
        return self.u + self.u_prime

    def to_dict(self) -> dict:
        return {
            "r": self.r,
            "u": list(self.u),
            "u_prime": list(self.u_prime),
            "free_mask": self.free_mask,
        }


class SearchStatus(enum.Enum):
    """Outcome of a containment search."""

    FOUND = "found"
    NONE = "none"
    BUDGET_EXHAUSTED = "budget_exhausted"


@dataclass(frozen=True)
class SearchResult:
    """Result of a containment search along with the number of nodes visited."""

    status: SearchStatus
    witness: Optional[PatternWitness] = None
    nodes: int = 0

    @property
    def found(self) -> bool:
        return self.status == SearchStatus.FOUND

    def to_dict(self) -> dict:
        return {
            "status": self.status.value,
            "witness": None if self.witness is None else self.witness.to_dict(),
            "nodes": self.nodes,
        }


class _BudgetExhausted(Exception):
    """Internal signal to unwind the backtracking search."""


class _PatternSearch:
    """Backtracking search for the lexicographically least pattern embedding.

    The u's are placed first, each one adjacent to all earlier u's. For a
    placed clique the candidates for u_i' are the common neighbours of
    the other u's which aren't u_i or a neighbour of u_i. These sets are
    pairwise disjoint, a vertex in both the i-th and j-th set would be
    adjacent and non-adjacent to u_j, so any choice gives distinct vertices.
    """

    def __init__(
        self,
        g: Graph,
        r: int,
        node_budget: int,
        allowed_masks: Optional[frozenset[int]],
        increasing: bool,
    ):
        self.g = g
        self.r = r
        self.node_budget = node_budget
        self.allowed = allowed_masks
        self.increasing = increasing
        self.pairs = list(itertools.combinations(range(r), 2))
        self.nodes = 0

    def _visit(self) -> None:
        self.nodes += 1
        if self.nodes > self.node_budget:
            raise _BudgetExhausted()

    def run(self) -> Optional[PatternWitness]:
        return self._place_u([], self.g.vertices, [])

    def _place_u(
        self, u: list[int], common: int, prime_candidates: list[int]
    ) -> Optional[PatternWitness]:
        """Extend the clique `u`, `common` holds the vertices adjacent to all of it."""
        if len(u) == self.r:
            return self._place_u_prime(u, prime_candidates, [])

        adj = self.g.adj
        candidates = common
        if self.increasing and u:
            candidates = candidates >> (u[-1] + 1) << (u[-1] + 1)
        for v in iter_bits(candidates):
            self._visit()
            # Candidates for earlier u_i' must also be adjacent to v
            updated = [c & adj[v] for c in prime_candidates]
            if not all(updated):
                continue
            # u_v' is adjacent to all earlier u's but not to v
            updated.append(common & ~adj[v] & ~(1 << v))
            if not updated[-1]:
                continue
            found = self._place_u(u + [v], common & adj[v], updated)
            if found is not None:
                return found
        return None

    def _free_mask(self, u_prime: list[int]) -> int:
        adj = self.g.adj
        return bits_to_mask(
            k for k, (i, j) in enumerate(self.pairs) if adj[u_prime[i]] >> u_prime[j] & 1
        )

    def _place_u_prime(
        self, u: list[int], candidates: list[int], u_prime: list[int]
    ) -> Optional[PatternWitness]:
        if self.allowed is None:
            u_prime = [(c & -c).bit_length() - 1 for c in candidates]
            return PatternWitness(self.r, tuple(u), tuple(u_prime), self._free_mask(u_prime))

        if len(u_prime) == self.r:
            mask = self._free_mask(u_prime)
            if mask in self.allowed:
                return PatternWitness(self.r, tuple(u), tuple(u_prime), mask)
            return None
        for v in iter_bits(candidates[len(u_prime)]):
            self._visit()
            found = self._place_u_prime(u, candidates, u_prime + [v])
            if found is not None:
                return found
        return None


##### FUNCTIONS #####
def family_member(r: int, free_mask: int) -> Graph:
    """Member of the family on ``2r`` template vertices with free pairs `free_mask`."""
    return PatternSpec(r).member(free_mask)


def family_members(r: int) -> list[Graph]:
    """All ``2^C(r,2)`` labelled members of the family, in free mask order.

    Raises
    ------
    IncorrectParameterError
        If `r` isn't between 2 and `MAX_FAMILY_ORDER`.
    """
    if not 2 <= r <= MAX_FAMILY_ORDER:
        raise IncorrectParameterError(r, "r", f"between 2 and {MAX_FAMILY_ORDER}")
    spec = PatternSpec(r)
    return [spec.member(mask) for mask in range(spec.full_mask + 1)]


def _closed_under_relabelling(r: int, masks: frozenset[int]) -> bool:
    """Whether permuting the pattern indices maps `masks` onto itself."""
    pairs = list(itertools.combinations(range(r), 2))
    index = {p: k for k, p in enumerate(pairs)}
    for perm in itertools.permutations(range(r)):
        for mask in masks:
            image = 0
            for k, (i, j) in enumerate(pairs):
                if mask >> k & 1:
                    image |= 1 << index[tuple(sorted((perm[i], perm[j])))]
            if image not in masks:
                return False
    return True


def contains_semi_induced(
    g: Graph,
    r: int,
    node_budget: Optional[int] = None,
    allowed_masks: Optional[Collection[int]] = None,
) -> SearchResult:
    """Search `g` for a semi-induced member of the family.

    Required edges must be present and the r pairs ``u_i u_i'`` absent,
    the ``u_i' u_j'`` pairs are unconstrained unless `allowed_masks`
    restricts which free masks count. The witness returned is the
    lexicographically least in role order ``u_1..u_r, u_1'..u_r'``.

    Parameters
    ----------
    g : Graph
        Host graph.
    r : int
        Pattern order, at least 2.
    node_budget : int, optional
        Maximum backtracking nodes, by default the configured budget.
    allowed_masks : Collection[int], optional
        Free masks which count as a hit, by default all of them.

    Returns
    -------
    SearchResult
        FOUND with the witness, NONE, or BUDGET_EXHAUSTED when the node
        budget ran out before the search finished.

    Raises
    ------
    IncorrectParameterError
        If `r` < 2 or `allowed_masks` contains a value outside the free masks.
    """
    spec = PatternSpec(r)
    node_budget = budgets.resolve("node_budget", node_budget)
    allowed = None
    if allowed_masks is not None:
        allowed = frozenset(allowed_masks)
        bad = [m for m in allowed if not 0 <= m <= spec.full_mask]
        if bad:
            raise IncorrectParameterError(bad, "allowed_masks", f"0..{spec.full_mask}")
        if not allowed:
            return SearchResult(SearchStatus.NONE)
    if 2 * r > g.n:
        return SearchResult(SearchStatus.NONE)

    # Relabelling the indices keeps a hit a hit when the allowed masks are
    # closed under it, so u_1 < ... < u_r loses no lexicographically least witness
    increasing = allowed is None or _closed_under_relabelling(r, allowed)
    search = _PatternSearch(g, r, node_budget, allowed, increasing)
    try:
        witness = search.run()
    except _BudgetExhausted:
        LOG.warning("Pattern search for r=%s stopped after %s nodes", r, node_budget)
        return SearchResult(SearchStatus.BUDGET_EXHAUSTED, None, search.nodes - 1)

    LOG.debug("Pattern search for r=%s visited %s nodes", r, search.nodes)
    if witness is None:
        return SearchResult(SearchStatus.NONE, None, search.nodes)
    return SearchResult(SearchStatus.FOUND, witness, search.nodes)


def contains_induced_blowup(
    g: Graph, r: int, node_budget: Optional[int] = None
) -> SearchResult:
    """Search `g` for an induced K_r[2], the member with every free pair present."""
    return contains_semi_induced(g, r, node_budget, allowed_masks={PatternSpec(r).full_mask})


def verify_witness(g: Graph, w: PatternWitness) -> list[str]:
    """Check `w` pair by pair against the host, returns the problems found (empty if valid)."""
    problems = []
    if len(w.u) != w.r or len(w.u_prime) != w.r:
        return [f"expected {w.r} u and u' vertices, got {len(w.u)} and {len(w.u_prime)}"]
    vertices = w.vertices
    if any(not 0 <= v < g.n for v in vertices):
        return [f"vertices {list(vertices)} not all below n={g.n}"]
    if len(set(vertices)) != len(vertices):
        problems.append(f"vertices {list(vertices)} aren't distinct")

    spec = PatternSpec(w.r)
    for a, b in spec.required_edges:
        if not g.has_edge(vertices[a], vertices[b]):
            problems.append(f"missing required edge {vertices[a]}-{vertices[b]}")
    for a, b in spec.forbidden_edges:
        if g.has_edge(vertices[a], vertices[b]):
            problems.append(f"forbidden edge {vertices[a]}-{vertices[b]} present")
    mask = bits_to_mask(
        k for k, (a, b) in enumerate(spec.free_pairs) if g.has_edge(vertices[a], vertices[b])
    )
    if mask != w.free_mask:
        problems.append(f"free mask {w.free_mask} doesn't match host mask {mask}")
    return problems


def witness_from_shattered(g: Graph, mc: CliqueList, s: VertexSet) -> PatternWitness:
    """Build a pattern witness from a vertex set whose traces the maximal cliques realise.

    With ``s = {u_1 < ... < u_r}`` a maximal clique ``K^i`` with
    ``K^i & s = s - {u_i}`` is needed for each i. Maximality gives a
    vertex of ``K^i - s`` missing u_i which becomes u_i'. For r = 2 the
    cliqueness of `s` doesn't follow from these traces so a clique
    containing all of `s` is needed too.

    Raises
    ------
    IncorrectParameterError
        If `s` has fewer than 2 vertices.
    NotShatteredError
        If a required trace isn't realised by `mc`.
    ExtractionFailureError
        If some ``K^i`` has no vertex missing u_i, or the result fails
        verification (`mc` isn't the maximal cliques of `g`).
    """
    members = s.to_list()
    r = len(members)
    if r < 2:
        raise IncorrectParameterError(members, "s", "at least 2 vertices")
    masks = mc.masks
    traces = {}
    for index, clique in enumerate(masks):
        traces.setdefault(clique & s.mask, []).append(index)

    if r == 2 and s.mask not in traces:
        raise NotShatteredError(members, missing=members)

    u_prime = []
    for u_i in members:
        target = s.mask & ~(1 << u_i)
        if target not in traces:
            raise NotShatteredError(members, missing=list(iter_bits(target)))
        # Candidate sets for different i are disjoint, so the smallest
        # candidate of each is a system of distinct representatives
        candidates = 0
        for index in traces[target]:
            candidates |= masks[index] & ~s.mask & ~g.adj[u_i]
        if not candidates:
            raise ExtractionFailureError(
                f"no clique with trace {list(iter_bits(target))} has a vertex missing {u_i}"
            )
        u_prime.append((candidates & -candidates).bit_length() - 1)

    pairs = itertools.combinations(range(r), 2)
    free_mask = bits_to_mask(
        k for k, (i, j) in enumerate(pairs) if g.has_edge(u_prime[i], u_prime[j])
    )
    witness = PatternWitness(r, tuple(members), tuple(u_prime), free_mask)
    problems = verify_witness(g, witness)
    if problems:
        raise ExtractionFailureError("; ".join(problems))
    return witness


def find_witness(
    g: Graph,
    r: int,
    mc: Optional[CliqueList] = None,
    node_budget: Optional[int] = None,
    threads: int = 1,
) -> SearchResult:
    """Find a pattern witness, extracting it from a shattered set where possible.

    When the maximal cliques shatter an r-set the witness is built with
    `witness_from_shattered`, otherwise (or if extraction fails) the
    backtracking search of `contains_semi_induced` is used.
    """
    if mc is None:
        mc = enumerate_maximal_cliques(g, threads=threads)
    vc = vc_dimension(SetSystem(g.n, mc.masks, SystemLabel.MAXIMAL_CLIQUES))
    if vc.k >= r >= 2:
        # Every subset of a shattered set is shattered
        s = VertexSet.of(g.n, vc.witness.to_list()[:r])
        try:
            return SearchResult(SearchStatus.FOUND, witness_from_shattered(g, mc, s))
        except (NotShatteredError, ExtractionFailureError) as exc:
            LOG.warning("Extraction from %s failed, searching instead: %s", s.to_list(), exc)
    return contains_semi_induced(g, r, node_budget)
