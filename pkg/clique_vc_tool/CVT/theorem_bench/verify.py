# -*- coding: utf-8 -*-
"""
    Module for checking a graph against the clique number bounds.

    `verify_graph` computes everything a bound needs (density, clique
    number, pattern freeness, VC-dimension of the maximal cliques) and
    records a violation whenever a bound's hypotheses hold but its
    conclusion doesn't.
"""

##### IMPORTS #####
# Standard imports
from __future__ import annotations
import dataclasses
import enum
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

# Third party imports
import networkx as nx

# Local imports
from .. import budgets as budgets_
from ..clique_engine import clique_density, enumerate_maximal_cliques, max_clique
from ..errors import IncorrectParameterError, TheoremViolationError
from ..graph_core import Graph
from ..pattern_lab import (
    PatternWitness,
    SearchStatus,
    contains_induced_blowup,
    contains_semi_induced,
)
from ..set_system import SetSystem, SystemLabel, vc_dimension
from . import bounds

##### CONSTANTS #####
LOG = logging.getLogger(__name__)


##### CLASSES #####
class Freeness(enum.Enum):
    """Verdict of the semi-induced pattern search."""

    FREE = "free"
    CONTAINS = "contains"
    UNKNOWN = "unknown"

    @classmethod
    def from_status(cls, status: SearchStatus) -> Freeness:
        return {
            SearchStatus.NONE: cls.FREE,
            SearchStatus.FOUND: cls.CONTAINS,
            SearchStatus.BUDGET_EXHAUSTED: cls.UNKNOWN,
        }[status]


@dataclass(frozen=True)
class BoundReport:
    """Clique number of a graph against every applicable bound.

    The r = 2 only fields (`bound_holmsen`, `bound_chordal`, `k22_free`,
    `chordal`) are None for larger r.
    """

    n: int
    r: int
    count: int
    """Number of r-cliques."""
    c: Fraction
    """Achieved r-clique density."""
    omega: int
    clique: list[int]
    """A maximum clique."""
    freeness: Freeness
    witness: Optional[PatternWitness]
    vc_mc: int
    vc_witness: list[int]
    bound_main: Fraction
    n_min: Optional[int]
    """Smallest n the linear bound applies to, None when c = 0."""
    bound_holmsen: Optional[float] = None
    bound_chordal: Optional[float] = None
    k22_free: Optional[bool] = None
    chordal: Optional[bool] = None
    violations: tuple[str, ...] = field(default=())

    @property
    def free(self) -> Optional[bool]:
        """True / False for a finished pattern search, None if the budget ran out."""
        if self.freeness == Freeness.UNKNOWN:
            return None
        return self.freeness == Freeness.FREE

    @property
    def n_large_enough(self) -> bool:
        return self.n_min is not None and self.n >= self.n_min

    @property
    def main_checked(self) -> bool:
        """Whether the hypotheses of the linear bound hold."""
        return self.free is True and self.n_large_enough

    @property
    def main_holds(self) -> bool:
        return self.omega >= self.bound_main

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "count": self.count,
            "c_num": self.c.numerator,
            "c_den": self.c.denominator,
            "c_float": float(self.c),
            "omega": self.omega,
            "clique": self.clique,
            "free": self.free,
            "freeness": self.freeness.value,
            "witness": None if self.witness is None else self.witness.to_dict(),
            "vc_mc": self.vc_mc,
            "vc_witness": self.vc_witness,
            "bound_main": float(self.bound_main),
            "bound_main_exact": str(self.bound_main),
            "bound_holmsen": self.bound_holmsen,
            "bound_chordal": self.bound_chordal,
            "k22_free": self.k22_free,
            "chordal": self.chordal,
            "n_min": self.n_min,
            "n_large_enough": self.n_large_enough,
            "main_checked": self.main_checked,
            "main_holds": self.main_holds,
            "violations": list(self.violations),
        }


##### FUNCTIONS #####
def induced_k22_free(g: Graph, node_budget: Optional[int] = None) -> Optional[bool]:
    """Whether `g` has no induced K_{2,2}, None if the search budget ran out."""
    result = contains_induced_blowup(g, 2, node_budget)
    if result.status == SearchStatus.BUDGET_EXHAUSTED:
        return None
    return not result.found


def is_chordal(g: Graph) -> bool:
    """Whether every cycle of length 4 or more in `g` has a chord."""
    return nx.is_chordal(g.to_networkx())


def verify_graph(
    g: Graph,
    r: int,
    budgets: Optional[budgets_.Budgets] = None,
    threads: int = 1,
    raise_on_violation: bool = False,
) -> BoundReport:
    """Check `g` against the linear clique bound and, for r = 2, the
    induced K_{2,2}-free and chordal bounds.

    Parameters
    ----------
    g : Graph
        Graph to check.
    r : int
        Clique order, ``2 <= r <= n``.
    budgets : Budgets, optional
        Clique cap and pattern search node budget, by default from the
        environment.
    threads : int, default 1
        Worker threads for counting and enumeration.
    raise_on_violation : bool, default False
        Raise `TheoremViolationError` instead of only recording violations.

    Returns
    -------
    BoundReport
        Report with every violation found. An exhausted pattern search
        leaves freeness unknown and the linear bound unchecked.
    """
    if not 2 <= r <= g.n:
        raise IncorrectParameterError(r, "r", f"between 2 and n={g.n}")
    if budgets is None:
        budgets = budgets_.Budgets.from_environment()

    density = clique_density(g, r, threads)
    clique = max_clique(g)
    search = contains_semi_induced(g, r, budgets.node_budget)
    mc = enumerate_maximal_cliques(g, cap=budgets.clique_cap, threads=threads)
    vc = vc_dimension(SetSystem(g.n, mc.masks, SystemLabel.MAXIMAL_CLIQUES))

    c = density.c
    extra = {}
    if r == 2:
        extra = {
            "bound_holmsen": bounds.bound_holmsen_k22(g.n, c),
            "bound_chordal": bounds.bound_chordal(g.n, c),
            "k22_free": induced_k22_free(g, budgets.node_budget),
            "chordal": is_chordal(g),
        }

    report = BoundReport(
        n=g.n,
        r=r,
        count=density.count,
        c=c,
        omega=len(clique),
        clique=clique.to_list(),
        freeness=Freeness.from_status(search.status),
        witness=search.witness,
        vc_mc=vc.k,
        vc_witness=vc.witness.to_list(),
        bound_main=bounds.bound_main(g.n, c, r),
        n_min=bounds.n_threshold(r, c) if c > 0 else None,
        **extra,
    )

    violations = []
    if report.main_checked and not report.main_holds:
        violations.append(
            f"omega={report.omega} < c n / (18 r) = {float(report.bound_main):.6g}"
        )
    if report.free is True and report.vc_mc >= r:
        violations.append(
            f"pattern free graph has maximal clique VC-dimension {report.vc_mc} >= r={r}"
        )
    slack = bounds.COMPARISON_SLACK
    if report.k22_free and report.omega + slack < report.bound_holmsen:
        violations.append(
            f"induced K22-free graph has omega={report.omega} "
            f"< {report.bound_holmsen:.6g}"
        )
    if report.chordal and report.omega + slack < report.bound_chordal:
        violations.append(
            f"chordal graph has omega={report.omega} < {report.bound_chordal:.6g}"
        )

    if violations:
        report = dataclasses.replace(report, violations=tuple(violations))
        LOG.error("Bound violations for %s: %s", g, "; ".join(violations))
        if raise_on_violation:
            raise TheoremViolationError(violations)
    return report
