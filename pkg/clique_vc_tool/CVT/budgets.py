# -*- coding: utf-8 -*-
"""
    Module containing the resource budgets shared by the exact searches.

    Defaults can be overridden with environment variables (see `ENV_VARIABLES`),
    explicit values given to functions or the command line take precedence.
"""

##### IMPORTS #####
# Standard imports
from __future__ import annotations
import os
from typing import Mapping, Optional

# Third party imports
from pydantic import dataclasses, types

# Local imports
from .errors import IncorrectParameterError


##### CONSTANTS #####
DEFAULT_CLIQUE_CAP = 10**7
"""Maximum number of maximal cliques enumerated before giving up."""
DEFAULT_NODE_BUDGET = 10**8
"""Maximum number of backtracking nodes in the pattern searches."""
DEFAULT_MAX_VERTICES = 10**6
"""Largest vertex count any generator is allowed to build."""
ENV_VARIABLES = {
    "clique_cap": "CVT_CLIQUE_CAP",
    "node_budget": "CVT_NODE_BUDGET",
    "max_vertices": "CVT_MAX_VERTICES",
}
"""Environment variables (values) which override the default budgets (keys)."""


##### CLASSES #####
@dataclasses.dataclass(frozen=True)
class Budgets:
    """Resource limits for clique enumeration, pattern search and generators.

    Parameters
    ----------
    clique_cap : int
        Maximum number of maximal cliques to enumerate.
    node_budget : int
        Maximum number of backtracking nodes for pattern searches.
    max_vertices : int
        Maximum vertex count for generated graphs.
    """

    clique_cap: types.PositiveInt = DEFAULT_CLIQUE_CAP
    node_budget: types.PositiveInt = DEFAULT_NODE_BUDGET
    max_vertices: types.PositiveInt = DEFAULT_MAX_VERTICES

    @classmethod
    def from_environment(cls, environ: Optional[Mapping[str, str]] = None) -> Budgets:
        """Create budgets using any overrides set in the environment.

        Parameters
        ----------
        environ : Mapping[str, str], optional
            Environment to read, by default `os.environ`.

        Raises
        ------
        IncorrectParameterError
            If an environment variable isn't an integer.
        """
        environ = os.environ if environ is None else environ
        values = {}
        for name, variable in ENV_VARIABLES.items():
            raw = environ.get(variable)
            if raw is None or raw.strip() == "":
                continue
            try:
                values[name] = int(raw.replace("_", ""))
            except ValueError as exc:
                raise IncorrectParameterError(raw, variable, "positive integer") from exc
        return cls(**values)


##### FUNCTIONS #####
def resolve(name: str, value: Optional[int]) -> int:
    """Return `value` or, if it's None, the environment / default budget `name`."""
    if value is not None:
        return value
    return getattr(Budgets.from_environment(), name)
