"""Parameterizations, unit conversions, tortoise coordinate, and the
effective potential of the static-patch wave problem.

Two unit systems appear at the API boundary:

* physical: curvature radius ``R``, Compton length ``lam``, energy ``mu`` in
  rest-energy units, angular momentum ``j``;
* horizon: everything dimensionless with the horizon at r = 1 —
  ``epsilon = mu * R / lam``, ``m = R / lam``, ``p = j + 1/2``.

All internal computation uses horizon units; the metric factor is
Phi(r) = 1 - r**2 and the potential carries units 1/R**2 with that factor
divided out (documented, since the source convention mixes the two).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .rational_ode import FactoredRational

__all__ = [
    "DomainError",
    "ModelParams",
    "HorizonUnitsParams",
    "PotentialProfile",
    "RadialCoefficients",
    "phi",
    "to_horizon_units",
    "to_physical",
    "tortoise",
    "tortoise_inverse",
    "effective_potential",
    "potential_profile",
    "radial_ode_coefficients",
]


class DomainError(ValueError):
    """Radial argument outside the static patch (or at a singular point)."""


def phi(r: float) -> float:
    """Metric factor Phi(r) = 1 - r^2 (horizon units, horizon at r=1)."""
    return 1.0 - r * r


@dataclass(frozen=True)
class ModelParams:
    """Physical parameterization (R and lam carry the same length unit)."""

    R: float
    lam: float
    mu: float
    j: int

    def __post_init__(self) -> None:
        if not (self.R > 0.0 and self.lam > 0.0):
            raise ValueError("R and lam must be positive lengths")
        if self.j < 0 or self.j != int(self.j):
            raise ValueError("j must be a non-negative integer")


@dataclass(frozen=True)
class HorizonUnitsParams:
    """Dimensionless parameters: epsilon = mu R/lam, m = R/lam, p = j + 1/2."""

    epsilon: float
    m: float
    j: int
    p: float = field(default=None)  # type: ignore[assignment]
    Phi: Callable[[float], float] = field(default=phi, repr=False, compare=False)
    _source: "ModelParams | None" = field(default=None, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.j < 0 or self.j != int(self.j):
            raise ValueError("j must be a non-negative integer")
        if self.p is None:
            object.__setattr__(self, "p", self.j + 0.5)
        elif self.p != self.j + 0.5:
            raise ValueError("p must equal j + 1/2")

    @property
    def mu(self) -> float:
        return self.epsilon / self.m


def to_horizon_units(p: ModelParams) -> HorizonUnitsParams:
    m = p.R / p.lam
    return HorizonUnitsParams(epsilon=p.mu * m, m=m, j=p.j, _source=p)


def to_physical(hp: HorizonUnitsParams) -> ModelParams:
    """Inverse of to_horizon_units.

    The horizon-units description fixes only the ratio R/lam; when the
    parameters came from to_horizon_units the original lengths are restored
    exactly, otherwise lam = 1 is chosen as the length unit.
    """
    if hp._source is not None:
        return hp._source
    return ModelParams(R=hp.m, lam=1.0, mu=hp.epsilon / hp.m, j=hp.j)


def tortoise(r: float) -> float:
    """Tortoise coordinate r* = (1/2) ln((1+r)/(1-r)) in units of R."""
    if not 0.0 <= r < 1.0:
        raise DomainError(f"tortoise: r={r} outside [0, 1)")
    return math.atanh(r)


def tortoise_inverse(r_star: float) -> float:
    """Inverse map r = tanh(r*), r* >= 0."""
    if r_star < 0.0:
        raise DomainError(f"tortoise_inverse: r*={r_star} negative")
    return math.tanh(r_star)


def effective_potential(hp: HorizonUnitsParams, r: float) -> tuple[float, float]:
    """Potential U and force F = -dU/dr* of the Schrodinger-form equation.

    U(r) = (1 - r^2) [4(1-r) + r/(1+r) + m^2 + j(j+1)/r^2]   (units 1/R^2)

    and F is the exact closed-form derivative -Phi dU/dr (units 1/R^3).
    r = 0 is allowed only for j = 0, where the centrifugal term is absent.
    """
    if not 0.0 <= r < 1.0:
        raise DomainError(f"effective_potential: r={r} outside [0, 1)")
    j = hp.j
    cent = j * (j + 1)
    if r == 0.0:
        if j > 0:
            raise DomainError("effective_potential: r=0 is singular for j > 0")
        w = 4.0 + hp.m * hp.m
        return w, 3.0  # Phi=1; F = 2rW + Phi(4 - 1/(1+r)^2) -> 3 at r=0
    f = phi(r)
    w = 4.0 * (1.0 - r) + r / (1.0 + r) + hp.m * hp.m + cent / (r * r)
    u = f * w
    dw = 4.0 - 1.0 / ((1.0 + r) ** 2) + 2.0 * cent / (r ** 3)
    force = f * (2.0 * r * w + f * dw)
    return u, force


@dataclass(frozen=True)
class PotentialProfile:
    """Tabulated potential along the tortoise axis.

    G_convention records that the Schrodinger-form unknown is G(r*) with
    G'' + (eps^2 - U) G = 0; it is carried so emitted tables are
    self-describing.
    """

    r_star: np.ndarray
    U: np.ndarray
    F: np.ndarray
    G_convention: str = "G''(r*) + (epsilon^2 - U(r*)) G(r*) = 0"

    def __post_init__(self) -> None:
        if not (len(self.r_star) == len(self.U) == len(self.F)):
            raise ValueError("profile grids must share length")
        if len(self.r_star) > 1 and not np.all(np.diff(self.r_star) > 0):
            raise ValueError("r_star grid must be strictly increasing")


def potential_profile(hp: HorizonUnitsParams, r_grid: Sequence[float]) -> PotentialProfile:
    rs = []
    us = []
    fs = []
    for r in r_grid:
        u, f = effective_potential(hp, r)
        rs.append(tortoise(r))
        us.append(u)
        fs.append(f)
    return PotentialProfile(
        r_star=np.asarray(rs, dtype=float),
        U=np.asarray(us, dtype=float),
        F=np.asarray(fs, dtype=float),
    )


@dataclass(frozen=True)
class RadialCoefficients:
    """Rational data of f'' + p(r) f' + q(r) f = 0, exact in r."""

    p: FactoredRational
    q: FactoredRational


def radial_ode_coefficients(hp: HorizonUnitsParams) -> RadialCoefficients:
    """Coefficients of the radial equation as factored-rational data.

    f'' + (2/r + Phi'/Phi) f' + [eps^2/Phi^2 - (m^2+2)/Phi - j(j+1)/(Phi r^2)] f = 0

    cleared to a common denominator:

        p(r) = (2 - 4 r^2) / (r (1 - r^2))
        q(r) = [eps^2 r^2 - (m^2+2) r^2 (1-r^2) - j(j+1)(1-r^2)]
               / (r^2 (1 - r^2)^2)

    epsilon and m enter as their exact binary-float rationals, so the data
    can feed both the float ODE integrator and the exact classifier.
    """
    e2 = Fraction(hp.epsilon) ** 2
    m2p2 = Fraction(hp.m) ** 2 + 2
    cent = Fraction(hp.j * (hp.j + 1))
    one = Fraction(1)
    p = FactoredRational(
        numerator=(Fraction(2), Fraction(0), Fraction(-4)),
        const=Fraction(-1),
        roots=((Fraction(0), 1), (one, 1), (Fraction(-1), 1)),
    )
    q = FactoredRational(
        numerator=(-cent, Fraction(0), e2 - m2p2 + cent, Fraction(0), m2p2),
        const=one,
        roots=((Fraction(0), 2), (one, 2), (Fraction(-1), 2)),
    )
    return RadialCoefficients(p=p, q=q)
