"""Physical parameters, quantum numbers and the tanh-squared confining well.

The well is V(r) = hbar^2 alpha^2 lam (lam + 1) / (2 mu) * tanh(alpha r)^2,
an even-power, oscillator-like confining potential.  The derived quantities

    Lambda = alpha^2 l (l + 1)        beta = alpha^2 lam (lam + 1)
    gamma  = sqrt(1/16 + beta/4)      zeta = sqrt(1/16 + Lambda/4)

parameterise the closed-form spectrum and wavefunctions, together with the
centrifugal-approximation constant d0 (default 1/12, the value implied by
1/r^2 ~ alpha^2 (4 d0 + 1/sinh(alpha r)^2) near the origin).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "DEFAULT_D0",
    "PotentialParams",
    "QuantumNumbers",
    "DerivedParams",
    "derive_params",
    "potential_value",
    "max_bound_state",
]

DEFAULT_D0 = 1.0 / 12.0


@dataclass(frozen=True)
class PotentialParams:
    """Well parameters; defaults follow the hbar = 2*mu = 1 unit convention."""

    lam: float      # dimensionless depth parameter, > 0
    alpha: float    # inverse-length range parameter, > 0
    hbar: float = 1.0
    mu: float = 0.5

    def __post_init__(self):
        for name in ("lam", "alpha", "hbar", "mu"):
            v = getattr(self, name)
            if not (isinstance(v, (int, float)) and math.isfinite(v) and v > 0):
                raise ValueError(f"{name} must be a positive finite number, got {v!r}")

    @property
    def depth(self) -> float:
        """Asymptotic well height hbar^2 alpha^2 lam(lam+1) / (2 mu)."""
        return self.hbar**2 * self.alpha**2 * self.lam * (self.lam + 1) / (2 * self.mu)


@dataclass(frozen=True)
class QuantumNumbers:
    """State labels (n, l, m); every tabulated state uses m = 0."""

    n: int
    l: int
    m: int = 0

    def __post_init__(self):
        for name in ("n", "l", "m"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, (int, np.integer)):
                raise ValueError(f"{name} must be an integer, got {v!r}")
        if self.n < 0:
            raise ValueError(f"n must be non-negative, got {self.n}")
        if self.l < 0:
            raise ValueError(f"l must be non-negative, got {self.l}")
        if abs(self.m) > self.l:
            raise ValueError(f"|m| <= l required, got m={self.m}, l={self.l}")


@dataclass(frozen=True)
class DerivedParams:
    """The four spectral quantities plus the pass-through constant d0."""

    Lambda: float
    beta: float
    gamma: float
    zeta: float
    d0: float


def derive_params(p: PotentialParams, q: QuantumNumbers, d0: float = DEFAULT_D0) -> DerivedParams:
    """Derived quantities for the state (p, q); d0 is carried through unchanged."""
    if p.lam <= 0 or p.alpha <= 0:
        raise ValueError("lam and alpha must be positive")
    Lambda = p.alpha**2 * q.l * (q.l + 1)
    beta = p.alpha**2 * p.lam * (p.lam + 1)
    gamma = math.sqrt(1.0 / 16.0 + beta / 4.0)
    zeta = math.sqrt(1.0 / 16.0 + Lambda / 4.0)
    return DerivedParams(Lambda=Lambda, beta=beta, gamma=gamma, zeta=zeta, d0=d0)


def potential_value(p: PotentialParams, r):
    """V(r); even in r, increasing in |r|, bounded above by p.depth."""
    return p.depth * np.tanh(p.alpha * np.asarray(r, dtype=float)) ** 2


def max_bound_state(p: PotentialParams) -> int:
    """Largest admissible radial quantum number: the largest integer < lam,
    i.e. floor(lam) except that an integral lam yields lam - 1."""
    f = math.floor(p.lam)
    return f - 1 if f == p.lam else f
