# -*- coding: utf-8 -*-
"""
    Module for exploring which sub-families of the forbidden family a
    graph contains, by restricting the free masks the pattern search
    accepts. There are no expected answers, results are only tabulated.
"""

##### IMPORTS #####
# Standard imports
from __future__ import annotations
import logging
from typing import Mapping, Optional

# Third party imports
import pandas as pd

# Local imports
from ..graph_core import Graph
from ..pattern_lab import PatternSpec, contains_semi_induced

##### CONSTANTS #####
LOG = logging.getLogger(__name__)
SWEEP_COLUMNS = ["family", "n_masks", "status", "nodes", "u", "u_prime", "free_mask"]


##### FUNCTIONS #####
def standard_subfamilies(r: int) -> dict[str, frozenset[int]]:
    """Named free mask sets for order `r`.

    - ``all``: the whole family
    - ``independent_prime``: only ``u_i'`` pairwise non-adjacent
    - ``blowup``: only K_r[2], every ``u_i'`` pair adjacent
    - ``sparse_prime``: at most one ``u_i' u_j'`` edge
    - ``dense_prime``: at most one ``u_i' u_j'`` non-edge
    """
    spec = PatternSpec(r)
    masks = range(spec.full_mask + 1)
    return {
        "all": frozenset(masks),
        "independent_prime": frozenset({0}),
        "blowup": frozenset({spec.full_mask}),
        "sparse_prime": frozenset(m for m in masks if m.bit_count() <= 1),
        "dense_prime": frozenset(m for m in masks if spec.n_free - m.bit_count() <= 1),
    }


def sweep_subfamilies(
    g: Graph,
    r: int,
    mask_sets: Optional[Mapping[str, frozenset[int]]] = None,
    node_budget: Optional[int] = None,
) -> pd.DataFrame:
    """Search `g` once for each sub-family, one row per family with `SWEEP_COLUMNS`.

    Parameters
    ----------
    g : Graph
        Host graph.
    r : int
        Pattern order.
    mask_sets : Mapping[str, frozenset[int]], optional
        Allowed free masks for each named sub-family, by default
        `standard_subfamilies`.
    node_budget : int, optional
        Node budget for each search.
    """
    if mask_sets is None:
        mask_sets = standard_subfamilies(r)

    rows = []
    for name, masks in mask_sets.items():
        result = contains_semi_induced(g, r, node_budget, allowed_masks=masks)
        witness = result.witness
        rows.append(
            {
                "family": name,
                "n_masks": len(masks),
                "status": result.status.value,
                "nodes": result.nodes,
                "u": None if witness is None else " ".join(map(str, witness.u)),
                "u_prime": None if witness is None else " ".join(map(str, witness.u_prime)),
                "free_mask": None if witness is None else witness.free_mask,
            }
        )
        LOG.debug("Sub-family %s: %s", name, result.status.value)
    return pd.DataFrame(rows, columns=SWEEP_COLUMNS)
