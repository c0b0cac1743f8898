# -*- coding: utf-8 -*-
"""
    Module containing the sampling experiment which compares the traces of
    the maximal cliques on random m-sets with the Sauer-Shelah cap.

    Sample i draws its vertices from its own generator, seeded with
    ``SeedSequence(seed, spawn_key=(i,))``, so results don't depend on
    how samples are shared between threads.
"""

##### IMPORTS #####
# Standard imports
from __future__ import annotations
import logging
import math
from concurrent import futures
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Optional, TextIO, Union

# Third party imports
import numpy as np
import pandas as pd
from scipy import stats

# Local imports
from ..clique_engine import CliqueList, clique_density, enumerate_maximal_cliques
from ..errors import IncorrectParameterError
from ..graph_core import Graph, bits_to_mask, mask_to_array
from ..set_system import sauer_shelah_bound

##### CONSTANTS #####
LOG = logging.getLogger(__name__)
CSV_COLUMNS = ["index", "trace_size", "is_clique_sample"]
CONFIDENCE_LEVEL = 0.95
CODE_MAX_M = 64
"""Largest m whose traces are encoded as uint64 codes, larger m use Python bitsets."""
BINCOUNT_MAX_M = 16
"""Largest m whose distinct codes are counted with `np.bincount`."""


##### CLASSES #####
@dataclass(frozen=True)
class ExperimentStats:
    """Per-sample results of `trace_experiment` and their summaries."""

    samples: int
    seed: int
    m: int
    r: int
    n_cliques: int
    """Number of maximal cliques in the graph."""
    c: Fraction
    """Exact r-clique density of the graph."""
    trace_sizes: tuple[int, ...]
    clique_samples: tuple[bool, ...]
    """Whether the sampled r-set was a clique."""
    pair_hits: tuple[bool, ...]
    """Whether the sampled r-set is the trace of a maximal clique on the m-set."""

    @property
    def max_trace(self) -> int:
        return max(self.trace_sizes)

    @property
    def mean_trace(self) -> float:
        return float(np.mean(self.trace_sizes))

    @property
    def p_clique_hat(self) -> float:
        return sum(self.clique_samples) / self.samples

    @property
    def p_pair_hat(self) -> float:
        return sum(self.pair_hits) / self.samples

    @property
    def p_clique_ci(self) -> tuple[float, float]:
        """Clopper-Pearson interval for the probability a random r-set is a clique."""
        result = stats.binomtest(sum(self.clique_samples), self.samples)
        interval = result.proportion_ci(confidence_level=CONFIDENCE_LEVEL, method="exact")
        return float(interval.low), float(interval.high)

    @property
    def ss_cap(self) -> int:
        return sauer_shelah_bound(self.m, self.r - 1)

    @property
    def paper_cap(self) -> Fraction:
        """``c C(m, r) / 4``."""
        return self.c * math.comb(self.m, self.r) / 4

    @property
    def ss_exceeded(self) -> int:
        """Number of samples whose trace is larger than `ss_cap`."""
        return sum(size > self.ss_cap for size in self.trace_sizes)

    def to_dict(self) -> dict:
        low, high = self.p_clique_ci
        return {
            "samples": self.samples,
            "seed": self.seed,
            "m": self.m,
            "r": self.r,
            "n_cliques": self.n_cliques,
            "c_num": self.c.numerator,
            "c_den": self.c.denominator,
            "max_trace": self.max_trace,
            "mean_trace": self.mean_trace,
            "p_clique_hat": self.p_clique_hat,
            "p_clique_ci": [low, high],
            "p_pair_hat": self.p_pair_hat,
            "ss_cap": self.ss_cap,
            "ss_exceeded": self.ss_exceeded,
            "paper_cap": float(self.paper_cap),
        }

    def to_frame(self) -> pd.DataFrame:
        """One row per sample with the `CSV_COLUMNS`."""
        return pd.DataFrame(
            {
                "index": np.arange(self.samples),
                "trace_size": np.array(self.trace_sizes, dtype=np.int64),
                "is_clique_sample": np.array(self.clique_samples, dtype=bool),
            },
            columns=CSV_COLUMNS,
        )

    def to_csv(self, path_or_buffer: Union[Path, TextIO]) -> None:
        self.to_frame().to_csv(path_or_buffer, index=False, lineterminator="\n")


##### FUNCTIONS #####
def fisher_yates_prefix(rng: np.random.Generator, n: int, k: int) -> np.ndarray:
    """First `k` entries of a Fisher-Yates shuffle of ``0..n-1``.

    The first r entries of the prefix are then a uniform r-subset of
    the uniform k-set.
    """
    values = np.arange(n)
    swaps = rng.integers(np.arange(k), n)
    for i, j in enumerate(swaps.tolist()):
        values[i], values[j] = values[j], values[i]
    return values[:k].copy()


def _sample_generator(seed: int, index: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(index,)))


def _project_codes(membership: np.ndarray, prefix: np.ndarray, r: int) -> tuple[int, bool]:
    """Trace size and pair hit from the cliques' uint64 trace codes.

    Bit j of a clique's code is set when it contains ``prefix[j]``, so
    the trace equal to the sampled r-set has code ``2^r - 1``.
    """
    weights = np.left_shift(np.uint64(1), np.arange(len(prefix), dtype=np.uint64))
    codes = weights @ membership[prefix]
    if len(prefix) <= BINCOUNT_MAX_M:
        trace_size = int(np.count_nonzero(np.bincount(codes.astype(np.int64))))
    else:
        trace_size = len(np.unique(codes))
    pair_hit = bool(np.any(codes == np.uint64((1 << r) - 1)))
    return trace_size, pair_hit


def _project_masks(masks: tuple[int, ...], prefix: np.ndarray, r_set: int) -> tuple[int, bool]:
    """Trace size and pair hit by intersecting the clique bitsets with the m-set."""
    sample = bits_to_mask(prefix.tolist())
    traces = {mask & sample for mask in masks}
    return len(traces), r_set in traces


def _run_samples(
    g: Graph, mc: CliqueList, membership: np.ndarray, r: int, m: int, seed: int, indices: range
) -> list[tuple[int, bool, bool]]:
    """Trace size, clique flag and pair hit for each sample in `indices`.

    `membership` is the vertex by clique boolean matrix, it's only used
    when ``m <= CODE_MAX_M``.
    """
    results = []
    for index in indices:
        prefix = fisher_yates_prefix(_sample_generator(seed, index), g.n, m)
        r_set = bits_to_mask(prefix[:r].tolist())
        if m <= CODE_MAX_M:
            trace_size, pair_hit = _project_codes(membership, prefix, r)
        else:
            trace_size, pair_hit = _project_masks(mc.masks, prefix, r_set)
        results.append((trace_size, g.is_clique(r_set), pair_hit))
    return results


def trace_experiment(
    g: Graph,
    r: int,
    m: int,
    samples: int,
    seed: int = 0,
    threads: int = 1,
    cap: Optional[int] = None,
    mc: Optional[CliqueList] = None,
    c: Optional[Fraction] = None,
) -> ExperimentStats:
    """Sample nested pairs of vertex sets and measure the maximal clique traces.

    Parameters
    ----------
    g : Graph
        Graph to sample from.
    r, m : int
        Sizes of the nested sets, ``1 <= r <= m <= n``.
    samples : int
        Number of sampled pairs.
    seed : int, default 0
        Seed for the per-sample generators.
    threads : int, default 1
        Worker threads, the results don't depend on this.
    cap : int, optional
        Maximum number of maximal cliques to enumerate.
    mc : CliqueList, optional
        Maximal cliques of `g` if they've already been enumerated.
    c : Fraction, optional
        r-clique density of `g`, counted exactly if not given.

    Raises
    ------
    IncorrectParameterError
        If the sizes or sample count are out of range.
    ResourceLimitError
        If `g` has more than `cap` maximal cliques.
    """
    if not 1 <= r <= m <= g.n:
        raise IncorrectParameterError((r, m), "(r, m)", f"1 <= r <= m <= n={g.n}")
    if samples < 1:
        raise IncorrectParameterError(samples, "samples", ">= 1")
    if mc is None:
        mc = enumerate_maximal_cliques(g, cap=cap, threads=threads)
    if c is None:
        c = clique_density(g, r, threads).c

    membership = np.empty((0, 0), dtype=bool)
    if m <= CODE_MAX_M:
        # Vertex by clique, rows of the m-set are gathered per sample
        cliques = np.vstack([mask_to_array(clique.mask, g.n) for clique in mc])
        membership = np.ascontiguousarray(cliques.T)
    LOG.info(
        "Sampling %s pairs with r=%s, m=%s over %s maximal cliques", samples, r, m, len(mc)
    )

    threads = max(1, min(threads, samples))
    edges = np.linspace(0, samples, threads + 1).astype(int)
    chunks = [range(a, b) for a, b in zip(edges[:-1], edges[1:])]
    if threads > 1:
        with futures.ThreadPoolExecutor(max_workers=threads) as executor:
            parts = list(
                executor.map(
                    lambda ch: _run_samples(g, mc, membership, r, m, seed, ch), chunks
                )
            )
    else:
        parts = [_run_samples(g, mc, membership, r, m, seed, chunks[0])]
    rows = [row for part in parts for row in part]

    result = ExperimentStats(
        samples=samples,
        seed=seed,
        m=m,
        r=r,
        n_cliques=len(mc),
        c=c,
        trace_sizes=tuple(row[0] for row in rows),
        clique_samples=tuple(row[1] for row in rows),
        pair_hits=tuple(row[2] for row in rows),
    )
    if result.ss_exceeded:
        LOG.warning(
            "%s sample(s) have traces above the Sauer-Shelah cap %s",
            result.ss_exceeded,
            result.ss_cap,
        )
    return result
