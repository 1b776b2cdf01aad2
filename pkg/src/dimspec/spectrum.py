"""Closed-form ground-state energy evaluators.

``e0_general`` is the canonical leading-order large-dimension result for an
attractive power-law potential: the exact minimum of the effective potential
(D/2)^(2n) r^(-2n) - alpha r^(-beta). The two scheme-specific variants
reproduce the published algebraic forms verbatim so they can be
cross-checked against it; for m = 1 with n > 1 the published form is not an
algebraic rewriting of the general result, and ``scheme_m1_discrepancies``
makes that visible instead of hiding it.

All exponentiation happens in log space with the rational exponents reduced
exactly before conversion to float, so points like (19, 5) - where an
intermediate reaches 10^115 and the energy sits below 1e-150 - evaluate
without overflow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

from .errors import InvalidParameterError
from .model import Classification, EnergyOutcome, classify_outcome, classify_regime
from .potential import LN_2, alpha_coefficient
from .signedlog import SignedLogReal


@dataclass(frozen=True)
class EnergyQuery:
    """Inputs to the general evaluator: coupling, decay exponent, powers."""

    alpha: SignedLogReal
    beta: int
    n: int
    D: int


def e0_general(q: EnergyQuery) -> EnergyOutcome:
    """Ground-state energy for an attractive coupling with 0 < beta < 2n.

    Outside that window the outcome is the regime tag: beta == 0 is
    logarithmic, a non-positive coupling repulsive, beta == 2n the divergent
    boundary and beta > 2n singular (no minimum of the effective potential).
    """
    if q.beta < 0 or q.n < 1 or q.D < 2:
        return EnergyOutcome.invalid(
            "malformed-query",
            f"need beta >= 0, n >= 1, D >= 2; got beta={q.beta}, n={q.n}, D={q.D}",
        )
    if q.beta == 0:
        return EnergyOutcome.logarithmic()
    if q.alpha.sign <= 0:
        return EnergyOutcome.repulsive()
    two_n = 2 * q.n
    if q.beta == two_n:
        return EnergyOutcome.divergent()
    if q.beta > two_n:
        return EnergyOutcome.singular()

    # |E0| = alpha * (2n-beta)/(2n) * D^(-2n beta/(2n-beta))
    #              * (2n / (2^(2n) alpha beta))^(-beta/(2n-beta))
    x_dim = float(Fraction(two_n * q.beta, two_n - q.beta))
    x_cpl = float(Fraction(q.beta, two_n - q.beta))
    ln_t = math.log(two_n) - two_n * LN_2 - q.alpha.lnmag - math.log(q.beta)
    lnmag = (
        q.alpha.lnmag
        + math.log(two_n - q.beta)
        - math.log(two_n)
        - x_dim * math.log(q.D)
        - x_cpl * ln_t
    )
    return EnergyOutcome.bound(SignedLogReal(-1, lnmag))


def _ln_bracket_base(D: int, n: int) -> float:
    # n (D/2)^(2n) / (D/2 - n), valid only for D > 2n
    return math.log(n) + 2 * n * (math.log(D) - LN_2) - math.log((D - 2 * n) / 2.0)


def e0_scheme_mn(D: int, n: int) -> EnergyOutcome:
    """Published ground-state form for the m = n coupling scheme.

    Evaluated exactly as printed, restricted to the window 2n < D < 4n where
    its bracket base is positive; everywhere else the regime classification
    is returned unchanged (even n is repulsive there, never an error).
    """
    tag_outcome = classify_outcome(D, n, n)
    if tag_outcome is not None:
        return tag_outcome
    # bound-eligible: odd n and 2n < D < 4n
    spec = alpha_coefficient(D, n)
    e_bracket = float(Fraction(D - 2 * n, D - 4 * n))
    e_coupling = float(Fraction(-2 * n, D - 4 * n))
    lnmag = (
        e_bracket * _ln_bracket_base(D, n)
        + e_coupling * spec.alpha.lnmag
        + math.log(4 * n - D)
        - math.log(2 * n)
    )
    return EnergyOutcome.bound(SignedLogReal(-1, lnmag))


def e0_scheme_m1(D: int, n: int) -> EnergyOutcome:
    """Published ground-state form for the m = 1 scheme, evaluated as printed.

    The printed expression keeps the bracket base n (D/2)^(2n) / (D/2 - n)
    of the m = n form, which is non-positive for D <= 2n even though the
    m = 1 bound window 2 < D < 2(n+1) admits such D when n > 1. Those points
    return an invalid outcome tagged ``printed-form-undefined`` rather than
    a guessed value; see ``e0_scheme_m1_rederived`` for the well-defined
    route through the general evaluator.
    """
    tag_outcome = classify_outcome(D, n, 1)
    if tag_outcome is not None:
        return tag_outcome
    if D <= 2 * n:
        return EnergyOutcome.invalid(
            "printed-form-undefined",
            f"printed-form undefined: bracket base n(D/2)^(2n)/(D/2-n) is not positive "
            f"for D={D} <= 2n={2 * n}",
        )
    spec = alpha_coefficient(D, 1)
    e_bracket = float(Fraction(D - 2 * n, D - 2 * n - 2))
    e_coupling = float(Fraction(-2 * n, D - 2 * n - 2))
    lnmag = (
        e_bracket * _ln_bracket_base(D, n)
        + e_coupling * spec.alpha.lnmag
        + math.log(4 * n - D)
        - math.log(2 * n)
    )
    return EnergyOutcome.bound(SignedLogReal(-1, lnmag))


def e0_scheme_m1_rederived(D: int, n: int) -> EnergyOutcome:
    """m = 1 scheme routed through the general evaluator with beta = D - 2.

    Well defined on the whole window 2 < D < 2(n+1), including the D <= 2n
    points where the printed form breaks down.
    """
    if D < 2 or n < 1:
        return EnergyOutcome.invalid(
            "malformed-query", f"need D >= 2, n >= 1; got D={D}, n={n}"
        )
    spec = alpha_coefficient(D, 1)
    if spec.alpha is None:
        return EnergyOutcome.logarithmic()
    return e0_general(EnergyQuery(spec.alpha, D - 2, n, D))


class QuantumNumber(NamedTuple):
    k_star: float
    nearest: int


def effective_quantum_number(energy: SignedLogReal) -> QuantumNumber:
    """Principal quantum number of the ordinary 3-D hydrogen level with this energy.

    Inverts E = -1/(2 k^2) to k* = sqrt(1/(2|E|)); the nearest integer is
    rounded half away from zero.
    """
    if energy.sign != -1:
        raise InvalidParameterError(
            "nonnegative-energy", "effective quantum number needs a negative energy"
        )
    ln_k = -0.5 * (LN_2 + energy.lnmag)
    k_star = math.exp(ln_k) if ln_k < 709.0 else math.inf
    nearest = int(math.floor(k_star + 0.5)) if math.isfinite(k_star) else 0
    return QuantumNumber(k_star, nearest)


@dataclass(frozen=True)
class M1Discrepancy:
    """One window point where the printed m = 1 form and the general route differ."""

    D: int
    n: int
    printed: EnergyOutcome
    rederived: EnergyOutcome
    lnmag_gap: Optional[float]  # ln|E_printed| - ln|E_rederived| when both bound


def scheme_m1_discrepancies(n: int, lnmag_tol: float = 1e-12) -> list[M1Discrepancy]:
    """Compare the printed m = 1 form against the rederived route over its window.

    Empty for n = 1 (the forms coincide there); non-empty for every n > 1,
    which is the point: the printed form is not a rewriting of the general
    result once n exceeds 1.
    """
    if n < 1:
        raise InvalidParameterError("bad-power", f"n must be >= 1, got {n}")
    out: list[M1Discrepancy] = []
    for D in range(3, 2 * (n + 1)):
        if classify_regime(D, n, 1) is not Classification.BOUND:
            continue
        printed = e0_scheme_m1(D, n)
        rederived = e0_scheme_m1_rederived(D, n)
        if printed.is_bound and rederived.is_bound:
            gap = printed.energy.lnmag - rederived.energy.lnmag
            if abs(gap) <= lnmag_tol * max(1.0, abs(rederived.energy.lnmag)):
                continue
            out.append(M1Discrepancy(D, n, printed, rederived, gap))
        elif printed.classification is not rederived.classification:
            out.append(M1Discrepancy(D, n, printed, rederived, None))
    return out
