"""Bound-state windows over (D, n) and grid scans across parameter space.

For m = n the window is the open interval (2n, 4n), empty for even n since
the coupling turns repulsive; for m = 1 it is (2, 2(n+1)). The scan walks a
rectangular (D, n) grid, classifies every point and evaluates the general
closed form wherever a bound state exists.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import InvalidParameterError
from .model import (
    EnergyOutcome,
    Formula,
    ScanRecord,
    Scheme,
    SystemParams,
    classify_outcome,
    classify_regime,
    Classification,
)
from .potential import alpha_coefficient
from .refdata import PUBLISHED_MEMBERS_M1, PUBLISHED_MEMBERS_MN, TABLE1_E0_SLR
from .spectrum import EnergyQuery, e0_general

THREADS_ENV_VAR = "DIMSPEC_THREADS"


@dataclass(frozen=True)
class FeasibilityWindow:
    """Open dimension interval admitting bound states for one (n, scheme)."""

    n: int
    scheme: Scheme
    d_min: int  # exclusive
    d_max: int  # exclusive
    members: tuple[int, ...]
    paper_omitted: tuple[int, ...] = ()


def bound_dims(n: int, scheme: Scheme) -> FeasibilityWindow:
    """Enumerate the integer dimensions inside the bound-state window."""
    if n < 1:
        raise InvalidParameterError("bad-power", f"n must be >= 1, got {n}")
    if scheme is Scheme.M_EQUALS_N:
        d_min, d_max = 2 * n, 4 * n
        m = n
        published = PUBLISHED_MEMBERS_MN.get(n)
    elif scheme is Scheme.M_EQUALS_ONE:
        d_min, d_max = 2, 2 * (n + 1)
        m = 1
        published = PUBLISHED_MEMBERS_M1.get(n)
    else:
        raise InvalidParameterError("bad-scheme", "windows exist only for the mn and m1 schemes")
    members = tuple(
        D
        for D in range(d_min + 1, d_max)
        if classify_regime(D, n, m) is Classification.BOUND
    )
    omitted = ()
    if published is not None:
        omitted = tuple(sorted(set(members) - set(published)))
    return FeasibilityWindow(n, scheme, d_min, d_max, members, omitted)


def excluded_dims_universal(max_n: int = 64) -> list[int]:
    """Dimensions 4, 5, 6 admit no bound state for any n in the m = n scheme.

    Verified by exhaustive enumeration of every window up to ``max_n`` before
    the set is returned.
    """
    excluded = {4, 5, 6}
    for n in range(1, max_n + 1):
        window = bound_dims(n, Scheme.M_EQUALS_N)
        overlap = excluded & set(window.members)
        if overlap:  # cannot happen: (2n, 4n) misses {4,5,6} for every odd n
            raise InvalidParameterError(
                "exclusion-violated", f"window for n={n} contains {sorted(overlap)}"
            )
    return sorted(excluded)


def evaluate_point(D: int, n: int, scheme: Scheme) -> ScanRecord:
    """Classify one grid point and evaluate its energy when bound-eligible."""
    params = SystemParams.for_scheme(D, n, scheme)
    m = params.m
    beta = params.beta
    alpha = None
    tag_outcome = classify_outcome(D, n, m)
    if beta >= 0 and D != 2 * m:
        alpha = alpha_coefficient(D, m).alpha
    if tag_outcome is not None and alpha is None:
        outcome = tag_outcome
    else:
        # attractive or repulsive coupling alike: the general evaluator
        # reproduces the classification and adds the energy when bound
        outcome = e0_general(EnergyQuery(alpha, beta, n, D))
    paper = TABLE1_E0_SLR.get((D, n)) if scheme is Scheme.M_EQUALS_N else None
    return ScanRecord(
        params=params,
        beta=beta,
        alpha=alpha,
        outcome=outcome,
        formula=Formula.GENERAL,
        paper_value=paper,
    )


def _worker_count() -> int:
    raw = os.environ.get(THREADS_ENV_VAR)
    if raw is None:
        return 1
    try:
        value = int(raw)
    except ValueError:
        raise InvalidParameterError(
            "bad-threads", f"{THREADS_ENV_VAR} must be a positive integer, got {raw!r}"
        ) from None
    if value < 1:
        raise InvalidParameterError(
            "bad-threads", f"{THREADS_ENV_VAR} must be a positive integer, got {raw!r}"
        )
    return value


def scan(
    D_values: Iterable[int],
    n_values: Iterable[int],
    scheme: Scheme,
    *,
    max_D: int = 64,
    max_n: int = 16,
) -> list[ScanRecord]:
    """Evaluate every point of the (D, n) grid, one record per point.

    Order is deterministic row-major, D outer and n inner. The worker pool
    is capped by the DIMSPEC_THREADS environment variable; output order does
    not depend on the worker count.
    """
    if scheme not in (Scheme.M_EQUALS_N, Scheme.M_EQUALS_ONE):
        raise InvalidParameterError("bad-scheme", "scan supports the mn and m1 schemes")
    Ds = sorted(set(D_values))
    ns = sorted(set(n_values))
    _check_range("D", Ds, 2, max_D)
    _check_range("n", ns, 1, max_n)
    points = [(D, n) for D in Ds for n in ns]
    workers = _worker_count()
    if workers == 1 or len(points) <= 1:
        return [evaluate_point(D, n, scheme) for D, n in points]
    with ThreadPoolExecutor(max_workers=min(workers, len(points))) as pool:
        return list(pool.map(lambda p: evaluate_point(p[0], p[1], scheme), points))


def _check_range(name: str, values: Sequence[int], lo: int, hi: int) -> None:
    if not values:
        raise InvalidParameterError("empty-range", f"{name} range is empty")
    for v in values:
        if not isinstance(v, int) or isinstance(v, bool):
            raise InvalidParameterError("non-integer", f"{name} values must be integers")
    if values[0] < lo or values[-1] > hi:
        raise InvalidParameterError(
            "range-bounds", f"{name} values must lie in [{lo}, {hi}]"
        )
