# -*- coding: utf-8 -*-
"""
    Module containing the graph representation, the edge-list format and
    generators for the standard constructions (blow-ups, joins, complete
    split graphs, shatter gadgets and polarity graphs).

    Adjacency is stored as one Python integer per vertex, bit ``u`` of
    ``adj[v]`` is set iff ``uv`` is an edge. Graphs are immutable.
"""

##### IMPORTS #####
# Standard imports
from __future__ import annotations
import enum
import itertools
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, NamedTuple, Optional, Union

# Third party imports
import networkx as nx
import numpy as np

# Local imports
from . import budgets
from .errors import GraphParseError, IncorrectParameterError, ResourceLimitError


##### CONSTANTS #####
LOG = logging.getLogger(__name__)
COMMENT_CHARACTER = "#"
MAX_POLARITY_ORDER = 101
"""Largest prime accepted by `gen_polarity`."""


##### FUNCTIONS #####
def iter_bits(mask: int) -> Iterator[int]:
    """Iterate through the indices of the set bits in `mask`, in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_to_mask(indices: Iterable[int]) -> int:
    """Convert an iterable of indices into a bitset."""
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def mask_to_array(mask: int, n: int) -> np.ndarray:
    """Convert a bitset into a boolean array of length `n`."""
    nbytes = max(1, (n + 7) // 8)
    raw = np.frombuffer(mask.to_bytes(nbytes, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:n].astype(bool)


def array_to_mask(array: np.ndarray) -> int:
    """Convert a 1D boolean array into a bitset."""
    packed = np.packbits(np.asarray(array, dtype=bool), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def as_fraction(value: Union[int, float, str, Fraction]) -> Fraction:
    """Convert `value` to an exact fraction, floats are read from their shortest repr."""
    if isinstance(value, float):
        return Fraction(repr(value))
    return Fraction(value)


##### CLASSES #####
@dataclass(frozen=True)
class VertexSet:
    """Bitset of vertices tied to the vertex count `n` of a graph."""

    n: int
    mask: int = 0

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.n:
            raise IncorrectParameterError(
                sorted(iter_bits(self.mask)), "vertex set", f"vertices below {self.n}"
            )

    @classmethod
    def of(cls, n: int, members: Iterable[int]) -> VertexSet:
        """Create a vertex set from member indices."""
        return cls(n, bits_to_mask(members))

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, v: int) -> bool:
        return v >= 0 and bool(self.mask >> v & 1)

    def to_list(self) -> list[int]:
        """Sorted member indices."""
        return list(iter_bits(self.mask))


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with bitset adjacency rows.

    Parameters
    ----------
    n : int
        Number of vertices, vertices are ``0..n-1``.
    adj : tuple[int, ...]
        Adjacency bit row for each vertex.

    Raises
    ------
    IncorrectParameterError
        If the rows aren't symmetric, contain self-loops or
        reference vertices outside ``0..n-1``.
    """

    n: int
    adj: tuple[int, ...]
    m: int = field(init=False)
    """Number of edges."""

    def __post_init__(self):
        adj = tuple(self.adj)
        object.__setattr__(self, "adj", adj)
        if len(adj) != self.n:
            raise IncorrectParameterError(len(adj), "adjacency rows", f"{self.n} rows")
        degree_sum = 0
        for v, row in enumerate(adj):
            if row < 0 or row >> self.n:
                raise IncorrectParameterError(v, "adjacency row", "neighbours below n")
            if row >> v & 1:
                raise IncorrectParameterError(v, "adjacency row", "no self-loops")
            for u in iter_bits(row):
                if not adj[u] >> v & 1:
                    raise IncorrectParameterError((u, v), "adjacency", "symmetric rows")
            degree_sum += row.bit_count()
        object.__setattr__(self, "m", degree_sum // 2)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """Build a graph from an edge iterable, repeated edges are merged."""
        adj = [0] * n
        for u, v in edges:
            if u == v or not (0 <= u < n and 0 <= v < n):
                raise IncorrectParameterError((u, v), "edge", f"distinct vertices below {n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def from_adjacency_matrix(cls, matrix: np.ndarray) -> Graph:
        """Build a graph from a square symmetric boolean matrix."""
        matrix = np.asarray(matrix, dtype=bool)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise IncorrectParameterError(matrix.shape, "adjacency matrix", "square matrix")
        return cls(matrix.shape[0], tuple(array_to_mask(row) for row in matrix))

    @property
    def vertices(self) -> int:
        """Bitset of all vertices."""
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> int:
        """Bitset of the neighbours of `v`."""
        return self.adj[v]

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def is_clique(self, mask: int) -> bool:
        """Check whether the vertices in `mask` are pairwise adjacent."""
        for v in iter_bits(mask):
            if mask & ~self.adj[v] & ~(1 << v):
                return False
        return True

    def edges(self) -> Iterator[tuple[int, int]]:
        """Iterate through edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, row in enumerate(self.adj):
            yield from ((u, v) for v in iter_bits(row >> (u + 1) << (u + 1)))

    def vertex_set(self, members: Iterable[int] = ()) -> VertexSet:
        return VertexSet.of(self.n, members)

    def to_adjacency_matrix(self) -> np.ndarray:
        """Boolean adjacency matrix."""
        if self.n == 0:
            return np.zeros((0, 0), dtype=bool)
        return np.vstack([mask_to_array(row, self.n) for row in self.adj])

    def to_networkx(self) -> nx.Graph:
        """Convert to a networkx graph with the same vertex labels."""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges())
        return graph

    def __str__(self) -> str:
        return f"{self.__class__.__name__}(n={self.n}, m={self.m})"


class BasicKind(enum.Enum):
    """Standard graphs which can be made with `gen_basic`."""

    COMPLETE = "complete"
    CYCLE = "cycle"
    PATH = "path"
    INDEPENDENT = "independent"


class InnerPolicy(enum.Enum):
    """Edges placed inside the shattered set A of the shatter gadget."""

    EMPTY = "empty"
    COMPLETE_A = "complete_A"
    RANDOM = "random"


class ChordalExtremal(NamedTuple):
    """Complete split graph along with the size `t` of its independent part."""

    graph: Graph
    t: int


class ShatterGadget(NamedTuple):
    """Shatter gadget graph and its shattered set A."""

    graph: Graph
    a_set: VertexSet


def check_vertex_count(n: int, max_vertices: Optional[int]) -> None:
    limit = budgets.resolve("max_vertices", max_vertices)
    if n > limit:
        raise ResourceLimitError(f"vertex count {n:,}", limit)


def parse_edge_list(text: str, max_vertices: Optional[int] = None) -> Graph:
    """Parse the edge-list text format.

    The first non-comment line is the header ``"n m"`` followed by
    ``m`` lines ``"u v"``. Lines starting with '#' and blank lines are
    ignored, duplicate edges are dropped and counted in a warning. The
    header's m is only checked against the edge lines with a warning, the
    graph's m is recomputed from the distinct edges.

    Parameters
    ----------
    text : str
        Contents of the edge-list file.
    max_vertices : int, optional
        Largest vertex count allowed, by default the configured budget.

    Returns
    -------
    Graph
        Graph containing exactly the listed edges.

    Raises
    ------
    GraphParseError
        If the header or an edge line is malformed, a vertex is out of
        range or an edge is a self-loop.
    """
    header = None
    adj: list[int] = []
    edge_lines = duplicates = 0
    line_no = 0
    for line_no, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if line == "" or line.startswith(COMMENT_CHARACTER):
            continue
        parts = line.split()
        try:
            values = [int(p) for p in parts]
        except ValueError:
            values = []

        if header is None:
            if len(values) != 2 or min(values) < 0:
                raise GraphParseError(line_no, "malformed header")
            header = tuple(values)
            try:
                check_vertex_count(header[0], max_vertices)
            except ResourceLimitError as exc:
                raise GraphParseError(line_no, str(exc)) from exc
            adj = [0] * header[0]
            continue

        if len(values) != 2:
            raise GraphParseError(line_no, "malformed edge")
        u, v = values
        if not (0 <= u < header[0] and 0 <= v < header[0]):
            raise GraphParseError(line_no, "vertex out of range")
        if u == v:
            raise GraphParseError(line_no, "self-loop")
        edge_lines += 1
        if adj[u] >> v & 1:
            duplicates += 1
            continue
        adj[u] |= 1 << v
        adj[v] |= 1 << u

    if header is None:
        raise GraphParseError(max(line_no, 1), "missing header")
    if edge_lines != header[1]:
        LOG.warning("Header gives %s edges but %s edge lines were read", header[1], edge_lines)
    if duplicates:
        LOG.warning("Ignored %s duplicate edge(s) in edge list", duplicates)
    return Graph(header[0], tuple(adj))


def serialize_edge_list(g: Graph) -> str:
    """Write `g` in the edge-list format, edges sorted so the output is byte-stable."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def gen_basic(kind: Union[BasicKind, str], n: int) -> Graph:
    """Generate a complete graph, cycle, path or independent set on `n` vertices.

    Raises
    ------
    IncorrectParameterError
        If `kind` is unknown, `n` < 1 or a cycle is requested with `n` < 3.
    """
    try:
        kind = BasicKind(kind)
    except ValueError as exc:
        raise IncorrectParameterError(kind, "kind", [k.value for k in BasicKind]) from exc
    if n < 1:
        raise IncorrectParameterError(n, "n", ">= 1")

    if kind == BasicKind.COMPLETE:
        full = (1 << n) - 1
        return Graph(n, tuple(full & ~(1 << v) for v in range(n)))
    if kind == BasicKind.INDEPENDENT:
        return Graph(n, (0,) * n)
    if kind == BasicKind.PATH:
        return Graph.from_edges(n, ((v, v + 1) for v in range(n - 1)))
    if n < 3:
        raise IncorrectParameterError(n, "cycle n", ">= 3")
    return Graph.from_edges(n, ((v, (v + 1) % n) for v in range(n)))


def gen_random(n: int, p: float, seed: int) -> Graph:
    """Binomial random graph G(n, p) drawn with numpy's seeded generator."""
    if not 0 <= p <= 1:
        raise IncorrectParameterError(p, "p", "probability in [0, 1]")
    rng = np.random.default_rng(seed)
    upper = np.triu(rng.random((n, n)) < p, k=1)
    return Graph.from_adjacency_matrix(upper | upper.T)


def blow_up(g: Graph, t: int, max_vertices: Optional[int] = None) -> Graph:
    """Replace every vertex of `g` by an independent set of size `t`.

    Copy ``i`` of vertex ``v`` has index ``v * t + i`` and copies of
    adjacent vertices are adjacent.

    Raises
    ------
    IncorrectParameterError
        If `t` < 1.
    ResourceLimitError
        If ``t * n`` exceeds the vertex budget.
    """
    if t < 1:
        raise IncorrectParameterError(t, "t", ">= 1")
    check_vertex_count(t * g.n, max_vertices)
    block = (1 << t) - 1
    adj = []
    for v in range(g.n):
        row = 0
        for w in iter_bits(g.adj[v]):
            row |= block << (w * t)
        adj.extend([row] * t)
    return Graph(t * g.n, tuple(adj))


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of `g` and `h` with every edge between them.

    Vertices of `g` keep their indices, vertices of `h` are shifted by ``g.n``.
    """
    g_all = g.vertices
    h_all = h.vertices << g.n
    adj = [row | h_all for row in g.adj]
    adj.extend((row << g.n) | g_all for row in h.adj)
    return Graph(g.n + h.n, tuple(adj))


def independent_part_size(n: int, c: Union[float, Fraction]) -> int:
    """Smallest integer t with ``t >= sqrt(1 - c) * n``, computed exactly."""
    target = (1 - as_fraction(c)) * n * n
    t = math.isqrt(math.ceil(target))
    while t * t < target:
        t += 1
    while t > 0 and (t - 1) ** 2 >= target:
        t -= 1
    return t


def gen_chordal_extremal(n: int, c: Union[float, Fraction]) -> ChordalExtremal:
    """Complete split graph showing the chordal clique bound is best possible.

    The independent part has ``t = ceil(sqrt(1 - c) n)`` vertices and is
    joined to a clique on the remaining ``n - t``.

    Raises
    ------
    IncorrectParameterError
        If `c` isn't in (0, 1), `n` < 2 or ``t >= n``.
    """
    c = as_fraction(c)
    if not 0 < c < 1:
        raise IncorrectParameterError(c, "c", "density in (0, 1)")
    if n < 2:
        raise IncorrectParameterError(n, "n", ">= 2")
    t = independent_part_size(n, c)
    if t >= n:
        raise IncorrectParameterError(c, "c", f"larger density, t={t} >= n={n}")
    graph = join(gen_basic(BasicKind.INDEPENDENT, t), gen_basic(BasicKind.COMPLETE, n - t))
    return ChordalExtremal(graph, t)


def build_shatter_gadget(
    t: int,
    inner_policy: Union[InnerPolicy, str] = InnerPolicy.EMPTY,
    seed: Optional[int] = None,
    max_vertices: Optional[int] = None,
) -> ShatterGadget:
    """Build the graph where A (first `t` vertices) is shattered by neighbourhoods.

    Vertex ``t + j`` of B is adjacent to exactly the vertices of A in the
    binary expansion of ``j``, B is independent and edges inside A follow
    `inner_policy`.

    Raises
    ------
    IncorrectParameterError
        If `t` < 1, the policy is unknown or RANDOM is given without a seed.
    ResourceLimitError
        If ``t + 2**t`` exceeds the vertex budget.
    """
    if t < 1:
        raise IncorrectParameterError(t, "t", ">= 1")
    try:
        inner_policy = InnerPolicy(inner_policy)
    except ValueError as exc:
        raise IncorrectParameterError(
            inner_policy, "inner_policy", [p.value for p in InnerPolicy]
        ) from exc
    limit = budgets.resolve("max_vertices", max_vertices)
    if t >= limit.bit_length() or t + 2**t > limit:
        raise ResourceLimitError(f"shatter gadget with t={t}", limit)

    n = t + 2**t
    adj = [0] * n
    for j in range(2**t):
        b = t + j
        adj[b] = j
        for a in iter_bits(j):
            adj[a] |= 1 << b

    if inner_policy == InnerPolicy.COMPLETE_A:
        pairs = list(itertools.combinations(range(t), 2))
    elif inner_policy == InnerPolicy.RANDOM:
        if seed is None:
            raise IncorrectParameterError(seed, "seed", "integer for random policy")
        rng = np.random.default_rng(seed)
        pairs = [p for p in itertools.combinations(range(t), 2) if rng.random() < 0.5]
    else:
        pairs = []
    for a, b in pairs:
        adj[a] |= 1 << b
        adj[b] |= 1 << a

    return ShatterGadget(Graph(n, tuple(adj)), VertexSet(n, (1 << t) - 1))


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    return all(q % d for d in range(2, math.isqrt(q) + 1))


def projective_points(q: int) -> list[tuple[int, int, int]]:
    """Canonical representatives of the points of PG(2, q), first non-zero entry 1."""
    points = [(1, a, b) for a in range(q) for b in range(q)]
    points.extend((0, 1, b) for b in range(q))
    points.append((0, 0, 1))
    return points


def gen_polarity(q: int) -> Graph:
    """Polarity graph of PG(2, q) for a prime `q`.

    Points are adjacent when their dot product is zero modulo `q`, so
    absolute points (self-orthogonal) have degree q and all others q + 1.

    Raises
    ------
    IncorrectParameterError
        If `q` isn't a prime up to `MAX_POLARITY_ORDER`.
    """
    if not _is_prime(q) or q > MAX_POLARITY_ORDER:
        raise IncorrectParameterError(q, "q", f"prime <= {MAX_POLARITY_ORDER}")
    points = projective_points(q)
    vectors = np.array(points, dtype=np.int64)
    orthogonal = (vectors @ vectors.T) % q == 0
    np.fill_diagonal(orthogonal, False)
    return Graph.from_adjacency_matrix(orthogonal)


def induced_subgraph(g: Graph, s: Union[VertexSet, int]) -> Graph:
    """Subgraph induced by `s`, vertices renumbered in ascending original order."""
    mask = s.mask if isinstance(s, VertexSet) else s
    if mask >> g.n:
        raise IncorrectParameterError(sorted(iter_bits(mask)), "s", f"vertices below {g.n}")
    members = list(iter_bits(mask))
    position = {v: i for i, v in enumerate(members)}
    adj = tuple(
        bits_to_mask(position[u] for u in iter_bits(g.adj[v] & mask)) for v in members
    )
    return Graph(len(members), adj)
