# -*- coding: utf-8 -*-
"""
    Module containing the clique number lower bounds and the exact
    arithmetic behind the linear bound: parameter choice, the trace cap
    chain and the probability chain for avoiding a small maximal clique.

    Everything is kept as `fractions.Fraction` apart from the square
    roots and the exponential term, which are floats compared with
    `COMPARISON_SLACK`.
"""

##### IMPORTS #####
# Standard imports
from __future__ import annotations
import enum
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

# Local imports
from ..errors import IncorrectParameterError, TheoremViolationError
from ..graph_core import as_fraction
from ..set_system import sauer_shelah_bound

##### CONSTANTS #####
LOG = logging.getLogger(__name__)
COMPARISON_SLACK = 1e-12
"""Tolerance used whenever a float bound is compared with an integer."""
QUARTER = Fraction(1, 4)

Number = Union[int, float, str, Fraction]


##### CLASSES #####
@dataclass(frozen=True)
class ParamSet:
    """Parameters of the linear clique bound for order `r` and density `c`."""

    r: int
    c: Fraction
    m: int
    """Sample size ``floor(9r / c)``."""
    c_prime: Fraction
    """Clique fraction ``c / (18r)``."""
    ss_sum: int
    """Sauer-Shelah cap ``sum(C(m, i) for i < r)``."""
    two_binom: int
    """``2 C(m, r - 1)``, the middle of the cap chain."""
    cap: Fraction
    """``c C(m, r) / 4``."""
    n_min: int
    """Smallest n with ``c' n >= m``."""

    def to_dict(self) -> dict:
        return {
            "r": self.r,
            "c": str(self.c),
            "m": self.m,
            "c_prime": str(self.c_prime),
            "ss_sum": self.ss_sum,
            "two_binom": self.two_binom,
            "cap": str(self.cap),
            "cap_float": float(self.cap),
            "n_min": self.n_min,
        }


class ChainStatus(enum.Enum):
    """Whether the probability chain's preconditions are met."""

    OK = "ok"
    N_TOO_SMALL = "n_too_small"
    C_PRIME_TOO_LARGE = "c_prime_too_large"


@dataclass(frozen=True)
class ChainReport:
    """Every term of the lower bound chain on the probability that a random
    m-set containing a fixed r-clique avoids the rest of its maximal clique.

    Terms are None when the preconditions aren't met. `holds` covers the
    exact links ``ratio >= product >= power >= linear >= 1/4``, the float
    exponential term is reported with its own links because
    ``(1 - x)^m <= e^(-xm)`` so that link can't hold for ``c' > 0``.
    """

    n: int
    m: int
    r: int
    c_prime: Fraction
    status: ChainStatus
    ratio: Optional[Fraction] = None
    product: Optional[Fraction] = None
    power: Optional[Fraction] = None
    linear: Optional[Fraction] = None
    exp_term: Optional[float] = None
    links: Optional[dict[str, bool]] = None

    @property
    def holds(self) -> bool:
        if self.status != ChainStatus.OK:
            return False
        exact = (
            "ratio_ge_product",
            "product_ge_power",
            "power_ge_linear",
            "linear_ge_quarter",
        )
        return all(self.links[k] for k in exact)

    @property
    def value(self) -> Optional[float]:
        return None if self.ratio is None else float(self.ratio)

    def to_dict(self) -> dict:
        def number(x):
            return None if x is None else float(x)

        return {
            "n": self.n,
            "m": self.m,
            "r": self.r,
            "c_prime": str(self.c_prime),
            "status": self.status.value,
            "ratio": number(self.ratio),
            "product": number(self.product),
            "power": number(self.power),
            "linear": number(self.linear),
            "exp_term": self.exp_term,
            "quarter": 0.25,
            "links": self.links,
            "holds": self.holds,
        }


##### FUNCTIONS #####
def _check_density(c: Number, lower_open: bool = False) -> Fraction:
    c = as_fraction(c)
    if c > 1 or c < 0 or (lower_open and c == 0):
        raise IncorrectParameterError(c, "c", "density in (0, 1]" if lower_open else "[0, 1]")
    return c


def bound_main(n: int, c: Number, r: int) -> Fraction:
    """Linear clique bound ``c n / (18 r)`` as an exact fraction."""
    if r < 2:
        raise IncorrectParameterError(r, "r", ">= 2")
    c = _check_density(c)
    return c * n / (18 * r)


def bound_holmsen_k22(n: int, c: Number) -> float:
    """Clique bound ``(1 - sqrt(1 - c))^2 n`` for graphs without an induced K_{2,2}."""
    c = _check_density(c)
    return (1 - math.sqrt(1 - c)) ** 2 * n


def bound_chordal(n: int, c: Number) -> float:
    """Clique bound ``(1 - sqrt(1 - c)) n`` for chordal graphs."""
    c = _check_density(c)
    return (1 - math.sqrt(1 - c)) * n


def sample_size(r: int, c: Number) -> int:
    """``floor(9r / c)``, the size of the sampled vertex set."""
    c = _check_density(c, lower_open=True)
    return 9 * r * c.denominator // c.numerator


def n_threshold(r: int, c: Number) -> int:
    """Smallest n with ``c' n >= m``, the vertex count the linear bound needs."""
    c = _check_density(c, lower_open=True)
    m = sample_size(r, c)
    return math.ceil(m / (c / (18 * r)))


def make_params(r: int, c: Number) -> ParamSet:
    """Parameters of the linear bound, with the cap chain checked exactly.

    Raises
    ------
    IncorrectParameterError
        If `r` < 2 or `c` isn't in (0, 1).
    TheoremViolationError
        If ``sum(C(m, i) for i < r) <= 2 C(m, r-1) < c C(m, r) / 4`` fails.
    """
    if r < 2:
        raise IncorrectParameterError(r, "r", ">= 2")
    c = as_fraction(c)
    if not 0 < c < 1:
        raise IncorrectParameterError(c, "c", "density in (0, 1)")

    m = sample_size(r, c)
    params = ParamSet(
        r=r,
        c=c,
        m=m,
        c_prime=c / (18 * r),
        ss_sum=sauer_shelah_bound(m, r - 1),
        two_binom=2 * math.comb(m, r - 1),
        cap=c * math.comb(m, r) / 4,
        n_min=n_threshold(r, c),
    )
    if not params.ss_sum <= params.two_binom < params.cap:
        raise TheoremViolationError(
            [
                f"cap chain {params.ss_sum} <= {params.two_binom} < {params.cap} "
                f"fails for r={r}, c={c}"
            ]
        )
    LOG.debug("Parameters for r=%s, c=%s: %s", r, c, params)
    return params


def eq2_chain(n: int, m: int, c_prime: Number, r: int) -> ChainReport:
    """Evaluate the chain bounding the chance a sampled m-set avoids a small clique.

    Terms, for ``k = ceil(c' n)``:

    - ratio ``C(n - k, m - r) / C(n - r, m - r)``
    - product ``prod((n - c'n - i) / (n - i) for i < m - r)``
    - power ``((n - c'n - m) / (n - m))^m``
    - linear ``(1 - 2c')^m``
    - exp ``e^(-2c'm)``

    Parameters
    ----------
    n, m, r : int
        Vertex count, sample size and clique order.
    c_prime : Number
        Fraction of n a maximal clique is assumed to stay below.

    Returns
    -------
    ChainReport
        Status N_TOO_SMALL when ``c' n < m`` (or ``n <= m``), status
        C_PRIME_TOO_LARGE when ``c' > 1 / (2m)``, otherwise all terms.
    """
    c_prime = as_fraction(c_prime)
    if not 0 <= r <= m or c_prime < 0:
        raise IncorrectParameterError((r, m, c_prime), "(r, m, c')", "0 <= r <= m, c' >= 0")
    # c' = 0 is degenerate, every clique may be skipped
    if n <= m or (c_prime > 0 and c_prime * n < m):
        return ChainReport(n, m, r, c_prime, ChainStatus.N_TOO_SMALL)
    if m > 0 and c_prime > Fraction(1, 2 * m):
        return ChainReport(n, m, r, c_prime, ChainStatus.C_PRIME_TOO_LARGE)

    k = math.ceil(c_prime * n)
    ratio = Fraction(math.comb(n - k, m - r), math.comb(n - r, m - r))
    # (n - c'n - i) / (n - i) with c' = p / q is (q(n - i) - pn) / (q(n - i))
    p, q = c_prime.numerator, c_prime.denominator
    product = Fraction(
        math.prod(q * (n - i) - p * n for i in range(m - r)),
        math.prod(q * (n - i) for i in range(m - r)),
    )
    power = Fraction(q * (n - m) - p * n, q * (n - m)) ** m
    linear = (1 - 2 * c_prime) ** m
    exp_term = math.exp(-2 * c_prime * m)

    links = {
        "ratio_ge_product": ratio >= product,
        "product_ge_power": product >= power,
        "power_ge_linear": power >= linear,
        "linear_ge_exp": float(linear) + COMPARISON_SLACK >= exp_term,
        "exp_ge_quarter": exp_term + COMPARISON_SLACK >= 0.25,
        "linear_ge_quarter": linear >= QUARTER,
    }
    return ChainReport(
        n, m, r, c_prime, ChainStatus.OK, ratio, product, power, linear, exp_term, links
    )
