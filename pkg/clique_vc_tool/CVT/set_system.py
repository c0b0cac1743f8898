# -*- coding: utf-8 -*-
"""
    Module containing set systems over a vertex ground set, their traces,
    shattering certificates, exact VC-dimension and the Sauer-Shelah bound.
"""

##### IMPORTS #####
# Standard imports
from __future__ import annotations
import enum
import logging
import math
from dataclasses import dataclass, field
from typing import Iterable, Optional, Union

# Local imports
from .clique_engine import enumerate_maximal_cliques
from .errors import IncorrectParameterError
from .graph_core import Graph, VertexSet, bits_to_mask, iter_bits


##### CONSTANTS #####
LOG = logging.getLogger(__name__)
MAX_SHATTER_SIZE = 30
"""Largest set `is_shattered` will build a realiser table for."""


##### CLASSES #####
class SystemLabel(enum.Enum):
    """Where a set system came from."""

    NEIGHBORHOOD = "neighborhood"
    MAXIMAL_CLIQUES = "maximal_cliques"
    CUSTOM = "custom"


SetLike = Union[int, VertexSet, Iterable[int]]


def _to_mask(value: SetLike) -> int:
    if isinstance(value, VertexSet):
        return value.mask
    if isinstance(value, int):
        return value
    return bits_to_mask(value)


@dataclass(frozen=True)
class SetSystem:
    """Family of subsets of ``0..ground_n-1``, stored as bitsets.

    Duplicate sets are removed on construction keeping the first
    occurrence, so set indices follow the order the sets were given.
    """

    ground_n: int
    sets: tuple[int, ...]
    label: SystemLabel = SystemLabel.CUSTOM
    union: int = field(init=False, repr=False)
    intersection: int = field(init=False, repr=False)

    def __post_init__(self):
        sets = tuple(dict.fromkeys(self.sets))
        for s in sets:
            if s < 0 or s >> self.ground_n:
                raise IncorrectParameterError(
                    list(iter_bits(s)), "set", f"elements below {self.ground_n}"
                )
        object.__setattr__(self, "sets", sets)
        union, intersection = 0, (1 << self.ground_n) - 1
        for s in sets:
            union |= s
            intersection &= s
        object.__setattr__(self, "union", union)
        object.__setattr__(self, "intersection", intersection if sets else 0)

    @classmethod
    def from_sets(
        cls, ground_n: int, sets: Iterable[SetLike], label: SystemLabel = SystemLabel.CUSTOM
    ) -> SetSystem:
        """Create a set system from masks, `VertexSet`s or iterables of elements."""
        return cls(ground_n, tuple(_to_mask(s) for s in sets), SystemLabel(label))

    def __len__(self) -> int:
        return len(self.sets)

    def trace_masks(self, s: int) -> set[int]:
        """Distinct intersections ``F & s``, in the original coordinates."""
        return {f & s for f in self.sets}

    def to_lines(self) -> str:
        """One line per set of space-separated sorted indices."""
        return "".join(" ".join(map(str, iter_bits(f))) + "\n" for f in self.sets)


@dataclass(frozen=True)
class ShatterCertificate:
    """Proof that `witness` is shattered: a realising set index for every subset."""

    witness: VertexSet
    realizers: dict[int, int]
    """Subset of the witness (bitset in ground coordinates) to index of a
    set F with ``F & witness == subset``."""

    def verify(self, system: SetSystem) -> bool:
        """Check the realiser table is total and every entry is correct."""
        a = self.witness.mask
        members = list(iter_bits(a))
        for bits in range(2 ** len(members)):
            subset = bits_to_mask(m for j, m in enumerate(members) if bits >> j & 1)
            index = self.realizers.get(subset)
            if index is None or system.sets[index] & a != subset:
                return False
        return True

    def to_dict(self) -> dict:
        return {
            "witness": self.witness.to_list(),
            "realizers": {str(k): v for k, v in sorted(self.realizers.items())},
        }


@dataclass(frozen=True)
class VCResult:
    """VC-dimension and the lexicographically smallest shattered set of that size."""

    k: int
    witness: VertexSet


##### FUNCTIONS #####
def neighborhood_system(g: Graph) -> SetSystem:
    """Family of open neighbourhoods of the vertices of `g`, deduplicated."""
    return SetSystem(g.n, g.adj, SystemLabel.NEIGHBORHOOD)


def maximal_clique_system(
    g: Graph, cap: Optional[int] = None, threads: int = 1
) -> SetSystem:
    """Family of maximal cliques of `g`, in canonical clique order."""
    cliques = enumerate_maximal_cliques(g, cap=cap, threads=threads)
    return SetSystem(g.n, cliques.masks, SystemLabel.MAXIMAL_CLIQUES)


def trace(f: SetSystem, s: Union[VertexSet, int]) -> SetSystem:
    """Trace of `f` on `s`, relabelled so element i is the i-th smallest member of `s`."""
    mask = _to_mask(s)
    if mask >> f.ground_n:
        raise IncorrectParameterError(list(iter_bits(mask)), "s", "subset of the ground set")
    members = list(iter_bits(mask))
    relabelled = []
    for part in sorted(f.trace_masks(mask)):
        relabelled.append(bits_to_mask(j for j, v in enumerate(members) if part >> v & 1))
    return SetSystem(len(members), tuple(relabelled), f.label)


def is_shattered(f: SetSystem, a: Union[VertexSet, int]) -> Optional[ShatterCertificate]:
    """Certificate that `a` is shattered by `f`, or None if it isn't.

    Raises
    ------
    IncorrectParameterError
        If `a` has more than `MAX_SHATTER_SIZE` elements.
    """
    mask = _to_mask(a)
    size = mask.bit_count()
    if size > MAX_SHATTER_SIZE:
        raise IncorrectParameterError(size, "|a|", f"<= {MAX_SHATTER_SIZE}")
    realizers: dict[int, int] = {}
    for index, s in enumerate(f.sets):
        realizers.setdefault(s & mask, index)
    if len(realizers) != 2**size:
        return None
    return ShatterCertificate(VertexSet(f.ground_n, mask), realizers)


def _shatters(sets: tuple[int, ...], mask: int, needed: int) -> bool:
    """Whether the traces of `sets` on `mask` reach `needed` distinct values."""
    seen = set()
    for s in sets:
        seen.add(s & mask)
        if len(seen) == needed:
            return True
    return False


def vc_dimension(f: SetSystem) -> VCResult:
    """Exact VC-dimension of `f` with the lexicographically smallest witness.

    Shattered sets are grown level by level: only elements inside some
    set and outside another can belong to one, every subset of a shattered
    set is shattered so each candidate must extend a shattered set by a
    larger element and have all its other subsets shattered, and no set
    larger than ``log2 |f|`` can be shattered.

    The empty family has dimension -1, any other family at least 0.
    """
    if len(f) == 0:
        return VCResult(-1, VertexSet(f.ground_n, 0))

    elements = list(iter_bits(f.union & ~f.intersection))
    max_size = min(len(elements), len(f).bit_length() - 1)
    shattered = [0]
    size = 0
    while size < max_size:
        level = []
        previous = set(shattered)
        needed = 2 ** (size + 1)
        for base in shattered:
            top = base.bit_length() - 1
            for v in elements:
                if v <= top:
                    continue
                candidate = base | 1 << v
                # All other subsets one smaller must already be shattered
                if any(candidate & ~(1 << u) not in previous for u in iter_bits(base)):
                    continue
                if _shatters(f.sets, candidate, needed):
                    level.append(candidate)
        if not level:
            break
        shattered = level
        size += 1
        LOG.debug("%s shattered sets of size %s", len(level), size)

    witness = min(shattered, key=lambda m: list(iter_bits(m)))
    return VCResult(size, VertexSet(f.ground_n, witness))


def sauer_shelah_bound(m: int, k: int) -> int:
    """Maximum trace size on an m-set for a family of VC-dimension `k`.

    ``sum(C(m, i) for i in 0..min(k, m))``, with k = -1 (empty family) giving 0.
    """
    if m < 0 or k < -1:
        raise IncorrectParameterError((m, k), "(m, k)", "m >= 0 and k >= -1")
    return sum(math.comb(m, i) for i in range(min(k, m) + 1))
