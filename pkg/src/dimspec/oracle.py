"""Independent numerical checks of the closed-form energies.

Two routes that share no algebra with the spectrum module:

* ``minimize_v_eff`` brackets and golden-section-searches the effective
  potential (D/2)^(2n) r^(-2n) - alpha r^(-beta) in ln r. Near the minimum
  the objective is flat to ~1 part in 1e16 over a window of width ~1e-7 in
  ln r, which double precision cannot resolve to the accuracy demanded
  here, so the objective is evaluated in 60-digit arithmetic while the
  search logic itself stays an ordinary golden section.

* ``radial_ground_state`` solves the n = 1 reduced radial equation by
  Numerov integration with node-counting bisection on the energy. Both the
  full-Laplacian and half-Laplacian kinetic conventions are supported, so
  the -1/4 and -1/2 hartree ground levels of the 3-D Coulomb problem can
  each be pinned.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import mpmath
import numpy as np

from .errors import (
    InvalidParameterError,
    NoConvergenceError,
    NoMinimumError,
    SingularPotentialError,
)
from .potential import LN_2
from .signedlog import SignedLogReal
from .spectrum import EnergyQuery, e0_general


@dataclass(frozen=True)
class EffectivePotential:
    """V_eff(r) = A r^(-2n) - alpha r^(-beta) with A = (D/2)^(2n)."""

    A: SignedLogReal
    alpha: SignedLogReal
    beta: int
    n: int

    @classmethod
    def from_query(cls, q: EnergyQuery) -> "EffectivePotential":
        ln_amp = 2 * q.n * (math.log(q.D) - LN_2)
        return cls(A=SignedLogReal(1, ln_amp), alpha=q.alpha, beta=q.beta, n=q.n)

    def value_at_ln_r(self, ln_r: float) -> SignedLogReal:
        centrifugal = SignedLogReal(1, self.A.lnmag - 2 * self.n * ln_r)
        coupling = SignedLogReal(self.alpha.sign, self.alpha.lnmag - self.beta * ln_r)
        return centrifugal - coupling


@dataclass(frozen=True)
class VeffMinimum:
    r_star: float
    e_min: SignedLogReal
    ln_r_star: float


def minimize_v_eff(
    q: EnergyQuery, *, rel_tol: float = 1e-12, dps: int = 60
) -> VeffMinimum:
    """Locate the interior minimum of the effective potential by search.

    The bracket is centered on the stationarity estimate
    r*^(2n-beta) = 2n (D/2)^(2n) / (alpha beta) and expanded geometrically
    until the minimum is interior; the final minimizer is cross-checked
    against that estimate to 1e-10 relative in ln r. Raises NoMinimumError
    when no interior minimum exists (alpha <= 0 or beta >= 2n).
    """
    if q.alpha.sign != 1 or q.beta <= 0 or q.beta >= 2 * q.n:
        raise NoMinimumError(
            f"no interior minimum for alpha sign {q.alpha.sign}, beta={q.beta}, n={q.n}"
        )
    pot = EffectivePotential.from_query(q)
    two_n = 2 * q.n
    with mpmath.workdps(dps):
        ln_amp = mpmath.mpf(pot.A.lnmag)
        ln_alpha = mpmath.mpf(q.alpha.lnmag)
        beta = q.beta

        def v(x):
            return mpmath.exp(ln_amp - two_n * x) - mpmath.exp(ln_alpha - beta * x)

        x_seed = (mpmath.log(two_n) + ln_amp - ln_alpha - mpmath.log(beta)) / (
            two_n - beta
        )
        v_seed = v(x_seed)
        half = mpmath.mpf(1)
        for _ in range(200):
            a, b = x_seed - half, x_seed + half
            if v(a) > v_seed < v(b):
                break
            half *= 2
        else:
            raise NoMinimumError("failed to bracket an interior minimum")

        inv_phi = (mpmath.sqrt(5) - 1) / 2
        tol = mpmath.mpf(rel_tol) * max(1, abs(x_seed))
        c = b - inv_phi * (b - a)
        d = a + inv_phi * (b - a)
        fc, fd = v(c), v(d)
        while b - a > tol:
            if fc < fd:
                b, d, fd = d, c, fc
                c = b - inv_phi * (b - a)
                fc = v(c)
            else:
                a, c, fc = c, d, fd
                d = a + inv_phi * (b - a)
                fd = v(d)
        x_min = (a + b) / 2
        v_min = v(x_min)
        if v_min >= 0:
            raise NoMinimumError("search ended on a non-negative minimum")
        ln_e = float(mpmath.log(-v_min))
        x_min_f = float(x_min)
        x_seed_f = float(x_seed)

    if abs(x_min_f - x_seed_f) > 1e-10 * max(1.0, abs(x_seed_f)):
        raise NoConvergenceError(
            f"search minimizer ln r = {x_min_f!r} disagrees with the stationarity "
            f"estimate {x_seed_f!r}"
        )
    r_star = math.exp(x_min_f) if x_min_f < 709.0 else math.inf
    return VeffMinimum(r_star=r_star, e_min=SignedLogReal(-1, ln_e), ln_r_star=x_min_f)


class KineticConvention(Enum):
    FULL_LAPLACIAN = "full"
    HALF_LAPLACIAN = "half"


@dataclass(frozen=True)
class RadialSolution:
    grid: np.ndarray
    u: np.ndarray
    energy: float
    nodes: int
    kinetic_convention: KineticConvention
    r_max: float
    h: float


def radial_ground_state(
    D: int,
    alpha: float,
    beta: int = 1,
    convention: KineticConvention = KineticConvention.FULL_LAPLACIAN,
    excitation: int = 0,
    *,
    h: float = 1e-3,
    r_max: float = 40.0,
    box_tol: float = 1e-8,
    bisect_tol: float = 1e-9,
    max_doublings: int = 3,
) -> RadialSolution:
    """Radial eigenstate of -c0 u'' + [c0 (D-1)(D-3)/(4 r^2) - alpha r^-beta] u = E u.

    c0 is 1 (full Laplacian) or 1/2 (half). Only the centrifugal-regular,
    long-range-safe case beta = 1 with D >= 3 is supported; beta >= 2 falls
    to the center and is rejected as singular. The box size doubles until
    the eigenvalue moves by less than ``box_tol``.
    """
    if not isinstance(D, int) or isinstance(D, bool) or D < 3:
        raise InvalidParameterError(
            "centrifugal-irregular", f"radial solver needs integer D >= 3, got {D!r}"
        )
    if not isinstance(beta, int) or isinstance(beta, bool):
        raise InvalidParameterError("non-integer", f"beta must be an integer, got {beta!r}")
    if beta >= 2:
        raise SingularPotentialError(
            f"beta = {beta} >= 2: fall-to-center, no radial ground state"
        )
    if beta < 1:
        raise InvalidParameterError(
            "no-binding", f"beta = {beta} <= 0 gives no power-law binding"
        )
    if alpha <= 0:
        raise InvalidParameterError("repulsive", "radial solver needs alpha > 0")
    if excitation < 0:
        raise InvalidParameterError("bad-excitation", "excitation must be >= 0")

    c0 = 1.0 if convention is KineticConvention.FULL_LAPLACIAN else 0.5
    problem = _RadialProblem(D, alpha, beta, c0, h)

    # magnitude scale for the bisection bracket, from the closed-form estimate
    estimate = e0_general(EnergyQuery(SignedLogReal.from_float(alpha), beta, 1, D))
    wide = (-2e3 * math.exp(estimate.energy.lnmag), -1e-8)

    energy = problem.solve_box(r_max, excitation, wide, wide, bisect_tol)
    box = r_max
    for _ in range(max_doublings):
        box *= 2
        margin = max(1e-6, 10.0 * bisect_tol)
        narrow = (energy - margin, min(energy + margin, -1e-9))
        new_energy = problem.solve_box(box, excitation, wide, narrow, bisect_tol)
        if abs(new_energy - energy) < box_tol:
            energy = new_energy
            break
        energy = new_energy
    else:
        raise NoConvergenceError(
            f"eigenvalue still shifting by >= {box_tol} after {max_doublings} box doublings"
        )

    grid, u, nodes = problem.wavefunction(box, energy)
    if nodes != excitation:
        raise NoConvergenceError(
            f"converged state has {nodes} nodes, expected {excitation}"
        )
    return RadialSolution(
        grid=grid,
        u=u,
        energy=energy,
        nodes=nodes,
        kinetic_convention=convention,
        r_max=box,
        h=h,
    )


class _RadialProblem:
    """Mesh construction and Numerov sweeps for one (D, alpha, beta, c0)."""

    def __init__(self, D: int, alpha: float, beta: int, c0: float, h: float):
        self.alpha = alpha
        self.beta = beta
        self.c0 = c0
        self.h = h
        self.L = (D - 1) * (D - 3) / 4.0
        self.s = (D - 1) / 2.0
        # start far enough out that 1 - (h^2/12) q stays positive at the
        # centrifugal spike; for D = 3 this is simply the first mesh point
        self.i0 = max(1, int(math.sqrt(self.L / 12.0)) + 1)
        self._mesh_cache: dict[float, tuple[np.ndarray, np.ndarray]] = {}

    def _mesh(self, r_max: float) -> tuple[np.ndarray, np.ndarray]:
        cached = self._mesh_cache.get(r_max)
        if cached is not None:
            return cached
        n_pts = int(round(r_max / self.h))
        if n_pts - self.i0 < 16:
            raise InvalidParameterError("bad-mesh", "mesh too short for the centrifugal core")
        rr = np.arange(self.i0, n_pts + 1, dtype=float) * self.h
        v_over_c0 = self.L / rr**2 - (self.alpha / self.c0) * rr ** float(-self.beta)
        base = 1.0 - (self.h * self.h / 12.0) * v_over_c0
        self._mesh_cache[r_max] = (rr, base)
        return rr, base

    def _start_values(self, rr: np.ndarray) -> tuple[float, float]:
        # regular solution u ~ r^s (1 - alpha r / (2 c0 s)) near the origin
        corr = self.alpha / (2.0 * self.c0 * self.s)
        u0 = rr[0] ** self.s * (1.0 - corr * rr[0])
        u1 = rr[1] ** self.s * (1.0 - corr * rr[1])
        return u0, u1

    def _coeffs(self, base: np.ndarray, energy: float) -> tuple[np.ndarray, list]:
        t = base + (self.h * self.h / (12.0 * self.c0)) * energy
        return t, (12.0 / t - 10.0).tolist()

    def nodes_at(self, r_max: float, energy: float, stop_above: Optional[int] = None) -> int:
        """Count sign changes of the outward solution; may stop early once the
        count exceeds ``stop_above`` (enough for the bisection predicate)."""
        rr, base = self._mesh(r_max)
        t, c = self._coeffs(base, energy)
        u0, u1 = self._start_values(rr)
        w0 = t[0] * u0
        w1 = t[1] * u1
        nodes = 0
        limit = -1 if stop_above is None else stop_above
        pos = w1 > 0.0
        for ci in c[1:-1]:
            w2 = ci * w1 - w0
            if w2 > 1e250 or w2 < -1e250:
                w2 *= 1e-250
                w1 *= 1e-250
            w0 = w1
            w1 = w2
            if (w2 > 0.0) != pos and w2 != 0.0:
                nodes += 1
                if nodes > limit >= 0:
                    return nodes
                pos = not pos
        return nodes

    def solve_box(
        self,
        r_max: float,
        excitation: int,
        wide: tuple[float, float],
        bracket: tuple[float, float],
        tol: float,
    ) -> float:
        """Node-insertion bisection: the k-th eigenvalue is where the node
        count first exceeds k. Falls back to the wide bracket when the
        provided one does not straddle."""
        lo, hi = bracket
        if (
            self.nodes_at(r_max, lo, excitation) > excitation
            or self.nodes_at(r_max, hi, excitation) <= excitation
        ):
            lo, hi = wide
            if self.nodes_at(r_max, lo, excitation) > excitation:
                raise NoConvergenceError(
                    f"lower bracket {lo} already has too many nodes"
                )
            if self.nodes_at(r_max, hi, excitation) <= excitation:
                raise NoConvergenceError(
                    f"upper bracket {hi} finds no level with excitation {excitation}"
                )
        while hi - lo > tol:
            mid = 0.5 * (lo + hi)
            if self.nodes_at(r_max, mid, excitation) > excitation:
                hi = mid
            else:
                lo = mid
        return 0.5 * (lo + hi)

    def wavefunction(
        self, r_max: float, energy: float
    ) -> tuple[np.ndarray, np.ndarray, int]:
        """Assemble the eigenfunction by outward/inward Numerov sweeps glued
        at the outer classical turning point.

        A single outward sweep would be contaminated by the exponentially
        growing partner solution over the classically forbidden tail, so the
        tail is integrated inward instead, where the physical branch is the
        stable one, and rescaled to match.
        """
        rr, base = self._mesh(r_max)
        t, c = self._coeffs(base, energy)
        last = len(rr) - 1
        # classically allowed region has t > 1 (local wavenumber real)
        allowed = np.nonzero(t > 1.0)[0]
        i_match = int(allowed[-1]) if allowed.size else last // 2
        i_match = min(max(i_match, 2), last - 2)

        u0, u1 = self._start_values(rr)
        w_out = [t[0] * u0, t[1] * u1]
        w0, w1 = w_out[0], w_out[1]
        for ci in c[1:i_match]:
            w2 = ci * w1 - w0
            if w2 > 1e250 or w2 < -1e250:
                scale = 1e-250
                w_out = [x * scale for x in w_out]
                w1 *= scale
                w2 *= scale
            w0 = w1
            w1 = w2
            w_out.append(w2)

        # inward: seed with a tiny decaying tail at the box edge
        w_in = [0.0] * (last + 1)
        w_in[last] = self.h
        w_in[last - 1] = c[last] * w_in[last]
        wj, wj1 = w_in[last - 1], w_in[last]
        for j in range(last - 1, i_match, -1):
            wjm1 = c[j] * wj - wj1
            if wjm1 > 1e250 or wjm1 < -1e250:
                scale = 1e-250
                for k in range(j, last + 1):
                    w_in[k] *= scale
                wj *= scale
                wjm1 *= scale
            wj1 = wj
            wj = wjm1
            w_in[j - 1] = wjm1

        if w_in[i_match] == 0.0:
            raise NoConvergenceError("inward sweep vanished at the matching point")
        scale = w_out[i_match] / w_in[i_match]
        w = np.empty(last + 1)
        w[: i_match + 1] = w_out
        w[i_match:] = scale * np.asarray(w_in[i_match:])
        u = w / t
        norm = math.sqrt(float(np.trapezoid(u * u, dx=self.h)))
        if norm > 0.0:
            u = u / norm
        if u[1] < 0.0:
            u = -u
        signs = np.sign(u[np.abs(u) > 0.0])
        nodes = int(np.count_nonzero(np.diff(signs)))
        return rr, u, nodes
