"""Far-region amplitudes and the zero-reflection verdict.

The outgoing/incoming far-field amplitudes A_plus/A_minus are extracted at
coefficient level from the large-argument Bessel phases e^(-/+ i pi (p -/+
1/2)/2) applied to the two channel constants C1, C2.  The defining step of
the algorithm is that the Gamma ratios with large complex arguments are
replaced by their leading asymptotic power (gamma_ratio_asymptotic), whose
first correction vanishes identically here (the shift pair sums to one);
with that substitution C2/C1 = -e^(i pi p) exactly and the incoming
amplitude cancels term by term.

An independent check integrates the Schrodinger-form equation with purely
outgoing near-horizon data and decomposes the interior solution into
outgoing/incoming locally-plane-wave channels by least squares; the
incoming contamination it reports bounds the reflection without using any
Gamma-function identity.  The channels carry third-order WKB phases of the
actual potential (not a fixed wave number): with smooth channel dressing
absorbed by polynomial envelopes, the split is ambiguous only at the
integrator-noise level, which is what makes the 1e-6 cross-method
agreement achievable down to interior wave numbers ~10.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .model import (
    HorizonUnitsParams,
    ModelParams,
    effective_potential,
    to_horizon_units,
)
from .oracle import OdeProblem, integrate
from .special import gamma_ratio_asymptotic, log_gamma
from .waves import EvanescentMode, WaveAnsatz, make_ansatz

__all__ = [
    "RegimeError",
    "FarFieldAmplitudes",
    "ReflectionResult",
    "check_regime",
    "far_field_coefficients",
    "reflection_coefficient",
    "horizon_flux_balance",
    "interior_wave_ratio",
]


class RegimeError(ValueError):
    """Parameters violate the validity constraint of the far-field algorithm."""


@dataclass(frozen=True)
class FarFieldAmplitudes:
    """C1/C2 channel constants and the e^(+/- i k r)/(k r) coefficients."""

    C1: complex
    C2: complex
    A_plus: complex
    A_minus: complex


@dataclass(frozen=True)
class ReflectionResult:
    amplitudes: FarFieldAmplitudes
    ratio: float
    coefficient: float
    regime_ok: bool

    def __post_init__(self) -> None:
        if self.coefficient != self.ratio * self.ratio:
            raise ValueError("coefficient must equal ratio**2 exactly")


def check_regime(hp: HorizonUnitsParams, margin: float = 100.0) -> bool:
    """True iff eps^2 - m^2 exceeds margin * j^2 (constraint eps R >> j).

    margin = 100 is the default reading of ">>"; callers needing the hard
    validity floor pass margin = 1.
    """
    if margin < 1.0:
        raise ValueError("margin must be >= 1")
    return (hp.epsilon * hp.epsilon - hp.m * hp.m) > margin * hp.j * hp.j


def far_field_coefficients(
    ans: WaveAnsatz, hp: HorizonUnitsParams, margin: float = 1.0
) -> FarFieldAmplitudes:
    """Channel constants C1, C2 and far-field amplitudes A_plus, A_minus.

    With w = -i(eps-m)/2, v = -i(eps+m)/2, kappa = sqrt(eps^2 - m^2),
    s = (1+p)/2 and g_j = (-1)^j = sin(pi p):

        common = Gamma(1 - i eps) / (Gamma(w+s) Gamma(v+s))
        C1 = -pi g_j * common * 2^p  kappa^(-j)  / (asym_w * asym_v)
        C2 = +pi g_j * common * 2^-p kappa^(j+1)

    where asym_w, asym_v are the order-1 asymptotic Gamma ratios at shifts
    ((1-p)/2, (1+p)/2) — the step that makes C2/C1 = -e^(i pi p) exact.
    The amplitudes attach the large-argument Bessel phases:

        A_plus  = C1 e^(-i pi (p+1/2)/2) + C2 e^(-i pi (-p+1/2)/2)
        A_minus = C1 e^(+i pi (p+1/2)/2) + C2 e^(+i pi (-p+1/2)/2).

    Raises RegimeError below the hard validity floor (margin = 1), where
    the algorithm's defining substitution has no asymptotic backing.
    """
    eps, m, p, j = hp.epsilon, hp.m, hp.p, hp.j
    if eps <= m:
        raise EvanescentMode(f"eps={eps} <= m={m}: no propagating far field")
    if not check_regime(hp, margin):
        raise RegimeError(
            f"far-field algorithm needs eps^2 - m^2 >> j^2 "
            f"(have {eps * eps - m * m:.6g} vs j^2 = {j * j}); "
            f"the amplitudes are undefined outside this regime"
        )
    if ans.family != "regular" or abs((ans.a + ans.b - ans.c) - complex(0, -eps)) > 1e-9 * (
        1.0 + eps
    ):
        raise ValueError("ansatz does not match the regular family of these parameters")
    kappa = math.sqrt(eps * eps - m * m)
    w = complex(0.0, -0.5 * (eps - m))
    v = complex(0.0, -0.5 * (eps + m))
    shift = 0.5 * (1.0 + p)
    asym_w = gamma_ratio_asymptotic(w, 0.5 * (1.0 - p), shift, order=1)
    asym_v = gamma_ratio_asymptotic(v, 0.5 * (1.0 - p), shift, order=1)
    common = cmath.exp(
        log_gamma(complex(1.0, -eps)) - log_gamma(w + shift) - log_gamma(v + shift)
    )
    g_j = -1.0 if j % 2 else 1.0  # sin(pi p) for half-integer p
    c1 = -math.pi * g_j * common * (2.0 ** p) * kappa ** (-j) / (asym_w * asym_v)
    c2 = math.pi * g_j * common * (2.0 ** -p) * kappa ** (j + 1)
    ph_p = 0.25 * math.pi * (2.0 * p + 1.0)  # pi (p + 1/2) / 2
    ph_m = 0.25 * math.pi * (-2.0 * p + 1.0)
    a_plus = c1 * cmath.exp(-1j * ph_p) + c2 * cmath.exp(-1j * ph_m)
    a_minus = c1 * cmath.exp(1j * ph_p) + c2 * cmath.exp(1j * ph_m)
    return FarFieldAmplitudes(C1=c1, C2=c2, A_plus=a_plus, A_minus=a_minus)


def reflection_coefficient(p: ModelParams) -> ReflectionResult:
    """Reflection coefficient |A_minus/A_plus|^2 for physical parameters.

    regime_ok records the default-margin regime check; results with
    regime_ok False are reported but carry no validity claim.
    """
    if p.mu <= 1.0:
        raise EvanescentMode(f"mu={p.mu} <= 1 is evanescent")
    hp = to_horizon_units(p)
    ans = make_ansatz(hp, "regular")
    amps = far_field_coefficients(ans, hp)
    ratio = abs(amps.A_minus) / abs(amps.A_plus)
    return ReflectionResult(
        amplitudes=amps,
        ratio=ratio,
        coefficient=ratio * ratio,
        regime_ok=check_regime(hp),
    )


# --- ODE cross-check --------------------------------------------------------

# Gauss-Legendre 5-point nodes/weights on [-1, 1], for the phase integral.
_GL5_NODES = (
    -0.906179845938664,
    -0.5384693101056831,
    0.0,
    0.5384693101056831,
    0.906179845938664,
)
_GL5_WEIGHTS = (
    0.23692688505618908,
    0.47862867049936647,
    0.5688888888888889,
    0.47862867049936647,
    0.23692688505618908,
)


def interior_wave_ratio(
    u_of_rstar: Callable[[float], float],
    epsilon: float,
    launch_rstar: float,
    window: tuple[float, float] = (1.2, 2.2),
    n_samples: int = 64,
    poly_degree: int = 6,
    tol: float = 1e-11,
    fd_step: float = 5e-4,
) -> tuple[float, float]:
    """Incoming/outgoing channel ratio of a purely-outgoing-at-launch solution.

    Integrates u'' = (U - eps^2) u from launch_rstar (u = e^(i eps r*))
    down into the window, then least-squares fits the samples against
    polynomial-envelope modulations of the locally-plane-wave channel pair

        Q(x)^(-1/4) exp(+/- i integral [sqrt(Q) - S2'] dx),
        Q = eps^2 - U,  S2' = Q''/(8 Q^(3/2)) - 5 Q'^2 / (32 Q^(5/2))

    (third-order WKB; derivatives of Q by central differences with step
    fd_step).  The envelope polynomials absorb the remaining smooth channel
    dressing, so the reported incoming coefficient is a genuine reflection
    measure, not a basis artifact.  Returns (|c_in/c_out|, fit residual),
    both relative, with the coefficients read at the window center.

    Raises ValueError if the window contains a classical turning point
    (Q <= 0); the channel split is meaningless there.
    """
    lo, hi = window
    if not 0.0 < lo < hi < launch_rstar:
        raise ValueError("window must satisfy 0 < lo < hi < launch_rstar")

    def q_fn(rs: float) -> complex:
        return complex(epsilon * epsilon - u_of_rstar(rs))

    u0 = cmath.exp(1j * epsilon * launch_rstar)
    prob = OdeProblem(
        p=None, q=q_fn, r0=launch_rstar, u0=u0, du0=1j * epsilon * u0, direction=-1
    )
    rstars = np.linspace(hi, lo, n_samples)
    sol = integrate(prob, lo, tol, samples=rstars)
    xs = sol.r

    def local_q(x: float) -> float:
        q = epsilon * epsilon - u_of_rstar(x)
        if q <= 0.0:
            raise ValueError(
                f"classical turning point at r*={x:.6g}: move the window"
            )
        return q

    def phase_rate(x: float) -> float:
        q = local_q(x)
        qm = epsilon * epsilon - u_of_rstar(x - fd_step)
        qp = epsilon * epsilon - u_of_rstar(x + fd_step)
        d1 = (qp - qm) / (2.0 * fd_step)
        d2 = (qp - 2.0 * q + qm) / (fd_step * fd_step)
        s2 = 0.125 * d2 / q**1.5 - (5.0 / 32.0) * d1 * d1 / q**2.5
        return math.sqrt(q) - s2

    k_loc = np.array([math.sqrt(local_q(x)) for x in xs])
    phase = np.zeros(len(xs))
    for i in range(1, len(xs)):
        a, b = xs[i - 1], xs[i]
        mid, half = 0.5 * (a + b), 0.5 * (b - a)
        acc = 0.0
        for node, weight in zip(_GL5_NODES, _GL5_WEIGHTS):
            acc += weight * phase_rate(mid + half * node)
        phase[i] = phase[i - 1] + half * acc
    zeta = k_loc**-0.5 * np.exp(1j * phase)
    t = (2.0 * xs - (lo + hi)) / (hi - lo)  # window-normalized poly variable
    cols = [(t**d) * zeta for d in range(poly_degree + 1)]
    cols += [(t**d) * np.conj(zeta) for d in range(poly_degree + 1)]
    design = np.column_stack(cols)
    coef, _, _, _ = np.linalg.lstsq(design, sol.u, rcond=None)
    fitted = design @ coef
    resid = float(np.linalg.norm(fitted - sol.u) / np.linalg.norm(sol.u))
    c_out = coef[0]
    c_in = coef[poly_degree + 1]
    return float(abs(c_in) / abs(c_out)), resid


def horizon_flux_balance(
    ans: WaveAnsatz, hp: HorizonUnitsParams, tol: float = 1e-11
) -> float:
    """ODE-based reflection bound: incoming contamination of the outgoing wave.

    Launches u = e^(i eps r*) where the potential tail is below 1e-9 * eps,
    integrates inward, and decomposes in the interior window into the
    outgoing/incoming WKB channels of the actual potential (see
    interior_wave_ratio).  Agreement of the returned ratio with the
    far-field verdict (zero) is the cross-method acceptance property.
    """
    eps, m, j = hp.epsilon, hp.m, hp.j
    if eps <= m:
        raise EvanescentMode(f"eps={eps} <= m={m}")
    if eps * eps - m * m - 4.0 <= 0.0:
        raise RegimeError("interior channel evanescent: eps^2 - m^2 - 4 <= 0")
    if ans.family != "regular":
        raise ValueError("pass the regular-family ansatz")
    tail_amp = 4.0 * (m * m + j * (j + 1) + 1.0)
    launch = 0.5 * math.log(tail_amp / (eps * 1e-9))

    def u_fn(rs: float) -> float:
        return effective_potential(hp, math.tanh(rs))[0]

    ratio, _resid = interior_wave_ratio(u_fn, eps, launch, tol=tol)
    return ratio
