"""Exact solvers for the four location/domination parameters.

Each solver scans subset cardinalities k = 1, 2, ... and, within a
cardinality, enumerates k-subsets in lexicographic order, returning the
first satisfying subset.  The exhaustive pass over all smaller subsets is
the optimality certificate, and the lexicographically least witness makes
results reproducible.  There is no ILP/SAT backend by design: this search
is the oracle every other component is measured against.

``full_report`` seeds the eta search at max(gamma, beta) and the lambda
search at eta (both are valid lower bounds by the inequality chain
max(gamma, beta) <= eta <= min(gamma + beta, lambda)), then asserts the
chain on the computed values; a violation raises
:class:`InvariantViolation`, which signals a solver bug and is never
silently swallowed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Callable, Optional

from .graph import DisconnectedGraphError, Graph
from .predicates import Code, _dominates, _ld_ok, _locates

__all__ = [
    "InvariantViolation",
    "ParameterReport",
    "PARAMETERS",
    "minimum_code",
    "parameter_satisfies",
    "domination_number",
    "metric_dimension",
    "mld_number",
    "ld_number",
    "full_report",
]

#: Names accepted by :func:`minimum_code` and the CLI filter grammar.
PARAMETERS = ("gamma", "beta", "eta", "lambda")


class InvariantViolation(RuntimeError):
    """An internal consistency check failed (a bug, not a user error)."""


@dataclass(frozen=True)
class ParameterReport:
    """The four parameters of a connected graph plus one optimal witness each."""

    n: int
    diameter: int
    gamma: int
    beta: int
    eta: int
    lambda_: int
    witness_gamma: Code
    witness_beta: Code
    witness_eta: Code
    witness_lambda: Code

    def value(self, param: str) -> int:
        return getattr(self, "lambda_" if param == "lambda" else param)

    def witness(self, param: str) -> Code:
        return getattr(self, f"witness_{param.rstrip('_')}")


def _accept_fn(g: Graph, param: str) -> Callable[[tuple[int, ...]], bool]:
    rows = g._rows
    n = g.n
    full = (1 << n) - 1
    if param == "gamma":
        return lambda combo: _dominates(rows, full, combo)
    if param == "lambda":
        def ld(combo):
            mask = 0
            for v in combo:
                mask |= 1 << v
            return _ld_ok(rows, n, mask)
        return ld
    dist = g.distance_matrix().rows
    shift = max(1, (n - 1).bit_length())
    if param == "beta":
        def loc(combo):
            mask = 0
            for v in combo:
                mask |= 1 << v
            return _locates(dist, n, mask, combo, shift)
        return loc
    if param == "eta":
        def mld(combo):
            mask = cov = 0
            for v in combo:
                mask |= 1 << v
                cov |= rows[v]
            if (cov | mask) != full:
                return False
            return _locates(dist, n, mask, combo, shift)
        return mld
    raise ValueError(f"unknown parameter {param!r}; expected one of {PARAMETERS}")


def _require_connected(g: Graph, param: str) -> None:
    if not g.is_connected():
        raise DisconnectedGraphError(f"{param} is only computed for connected graphs")


def minimum_code(
    g: Graph,
    param: str,
    *,
    k_min: int = 1,
    k_max: Optional[int] = None,
) -> Optional[tuple[int, Code]]:
    """Smallest code for ``param`` with cardinality in [k_min, k_max].

    Returns (k, witness) with the lexicographically least witness of the
    minimum size, or None when no code of size <= k_max exists.  With the
    default k_max (the whole vertex set) a result is guaranteed: V itself
    is dominating, locating and locating-dominating.
    """
    _require_connected(g, param)
    accept = _accept_fn(g, param)
    n = g.n
    hi = n if k_max is None else min(k_max, n)
    for k in range(max(k_min, 1), hi + 1):
        for combo in combinations(range(n), k):
            if accept(combo):
                return k, combo
    if k_max is None:
        raise InvariantViolation(
            f"no {param} code found up to k = {n}; the full vertex set must qualify"
        )
    return None


def parameter_satisfies(g: Graph, param: str, op: str, value: int) -> bool:
    """Compare a parameter against a constant, searching only as far as the
    comparison requires.

    Deciding ``eta == 2`` on a large graph scans subsets of size <= 2 only;
    the parameter itself is never computed when a bounded search settles
    the comparison.
    """
    if op in ("=", "=="):
        found = minimum_code(g, param, k_max=value)
        return found is not None and found[0] == value
    if op == "!=":
        return not parameter_satisfies(g, param, "==", value)
    if op == "<=":
        return minimum_code(g, param, k_max=value) is not None
    if op == "<":
        return value > 1 and minimum_code(g, param, k_max=value - 1) is not None
    if op == ">=":
        return value <= 1 or minimum_code(g, param, k_max=value - 1) is None
    if op == ">":
        return minimum_code(g, param, k_max=value) is None
    raise ValueError(f"unknown comparison operator {op!r}")


def _solve(g: Graph, param: str, n_min: int, k_min: int = 1) -> tuple[int, Code]:
    if g.n < n_min:
        raise ValueError(f"{param} requires n >= {n_min}, got n = {g.n}")
    result = minimum_code(g, param, k_min=k_min)
    assert result is not None
    return result


def domination_number(g: Graph) -> tuple[int, Code]:
    """gamma(G) with the lexicographically least optimal dominating set."""
    return _solve(g, "gamma", 1)


def metric_dimension(g: Graph) -> tuple[int, Code]:
    """beta(G) with the lexicographically least optimal locating set."""
    return _solve(g, "beta", 2)


def mld_number(g: Graph) -> tuple[int, Code]:
    """eta(G) with the lexicographically least optimal metric-locating-dominating set."""
    return _solve(g, "eta", 2)


def ld_number(g: Graph) -> tuple[int, Code]:
    """lambda(G) with the lexicographically least optimal locating-dominating set."""
    return _solve(g, "lambda", 2)


@lru_cache(maxsize=None)
def full_report(g: Graph) -> ParameterReport:
    """All four parameters with witnesses; results are memoised per graph.

    The inequality chain max(gamma, beta) <= eta <= min(gamma + beta,
    lambda) is asserted before returning.
    """
    if g.n < 2:
        raise ValueError(f"full_report requires n >= 2, got n = {g.n}")
    _require_connected(g, "full_report")
    diameter = g.diameter()
    gamma, w_gamma = minimum_code(g, "gamma")
    beta, w_beta = minimum_code(g, "beta")
    eta, w_eta = minimum_code(g, "eta", k_min=max(gamma, beta))
    lam, w_lambda = minimum_code(g, "lambda", k_min=eta)
    if not (max(gamma, beta) <= eta <= min(gamma + beta, lam)):
        raise InvariantViolation(
            f"inequality chain violated: gamma={gamma} beta={beta} "
            f"eta={eta} lambda={lam}"
        )
    return ParameterReport(
        n=g.n,
        diameter=diameter,
        gamma=gamma,
        beta=beta,
        eta=eta,
        lambda_=lam,
        witness_gamma=w_gamma,
        witness_beta=w_beta,
        witness_eta=w_eta,
        witness_lambda=w_lambda,
    )
