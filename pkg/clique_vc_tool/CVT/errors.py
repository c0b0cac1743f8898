"""
    Module containing custom error classes to be used in this tool.
"""

##### IMPORTS #####
from typing import Any, Iterable


##### ERRORS #####
class BaseCliqueToolError(Exception):
    """Base error for the Clique VC Tool."""


class IncorrectParameterError(BaseCliqueToolError):
    """Raised when parameter given is an unaccepted value."""

    def __init__(self, value, parameter=None, expected=None, *args, **kwargs):
        self.value = value
        self.parameter = parameter
        msg = f"Incorrect value(s) of {value!r}"
        if parameter is not None:
            msg += f" for parameter {parameter}"
        if expected is not None:
            msg += f" expected value(s) {expected}"
        super().__init__(msg, *args, **kwargs)


class GraphParseError(BaseCliqueToolError):
    """Raised when an edge-list file can't be parsed, names the offending line."""

    def __init__(self, line_no: int, reason: str, *args, **kwargs):
        self.line_no = line_no
        self.reason = reason
        super().__init__(f"{reason} at line {line_no}", *args, **kwargs)


class ResourceLimitError(BaseCliqueToolError):
    """Raised when a configured resource cap (vertices, cliques) is exceeded."""

    def __init__(self, resource: str, limit: int, *args, **kwargs):
        self.resource = resource
        self.limit = limit
        msg = f"{resource} exceeds the configured limit of {limit:,}"
        super().__init__(msg, *args, **kwargs)


class NotShatteredError(BaseCliqueToolError):
    """Raised when a vertex set isn't shattered enough to extract a pattern witness."""

    def __init__(self, subset: Iterable[int], missing: Any = None, *args, **kwargs):
        self.subset = sorted(subset)
        msg = f"{self.subset} is not shattered by the maximal cliques"
        if missing is not None:
            msg += f", no maximal clique has trace {missing}"
        super().__init__(msg, *args, **kwargs)


class ExtractionFailureError(BaseCliqueToolError):
    """Raised when no distinct u' representatives can be chosen from the cliques."""

    def __init__(self, reason: str, *args, **kwargs):
        super().__init__(f"Witness extraction failed: {reason}", *args, **kwargs)


class TheoremViolationError(BaseCliqueToolError):
    """Raised when a clique number bound fails although its hypotheses hold."""

    def __init__(self, violations: Iterable[str], *args, **kwargs):
        self.violations = list(violations)
        msg = "Bound violated: " + "; ".join(self.violations)
        super().__init__(msg, *args, **kwargs)
