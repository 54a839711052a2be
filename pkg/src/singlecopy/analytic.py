"""Closed-form predictions for critical and near-critical chains.

Conformal scaling of the single-copy entanglement S1 = -ln w1 (w1 the
largest reduced-density-matrix eigenvalue), the power-law Renyi trace
tr(rho^n), the asymptotic linear entanglement spectrum of the XX chain,
and the elliptic-integral closed form for the half-chain S1 of the
transverse-field Ising chain in its disordered phase.

Conventions: all entropies in nats; `c` is the central charge; `a` the
short-distance cutoff in lattice units; elliptic integrals take the
modulus k (NOT the parameter m = k^2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "ConformalParams",
    "InfiniteLineInterval",
    "HalfInfiniteEnd",
    "FiniteChainCut",
    "Geometry",
    "conformal_s1",
    "conformal_renyi_trace",
    "xx_asymptotic_spectrum",
    "elliptic_K",
    "tfim_s1_half",
    "tfim_s1_near_critical",
]


@dataclass(frozen=True)
class ConformalParams:
    """Parameters of the CFT prediction formulas.

    c   : central charge (> 0)
    a   : short-distance cutoff in lattice units (> 0, default 1)
    k1  : non-universal additive constant, nats (default 0)
    b_n : non-universal prefactor of the Renyi trace power law; equals 1
          at n = 1 by normalization of the density matrix
    """

    c: float = 1.0
    a: float = 1.0
    k1: float = 0.0
    b_n: float = 1.0

    def __post_init__(self):
        if self.c <= 0:
            raise ValueError(f"central charge must be positive, got {self.c}")
        if self.a <= 0:
            raise ValueError(f"cutoff a must be positive, got {self.a}")


@dataclass(frozen=True)
class InfiniteLineInterval:
    """Interval of L consecutive sites in an infinite chain."""

    L: float

    def __post_init__(self):
        if self.L <= 0:
            raise ValueError(f"interval length must be positive, got {self.L}")


@dataclass(frozen=True)
class HalfInfiniteEnd:
    """The last L sites of a half-infinite chain (one entangling point)."""

    L: float

    def __post_init__(self):
        if self.L <= 0:
            raise ValueError(f"subsystem length must be positive, got {self.L}")


@dataclass(frozen=True)
class FiniteChainCut:
    """Open chain of L_chain sites divided into pieces of l and L_chain - l."""

    L_chain: float
    l: float

    def __post_init__(self):
        if self.L_chain <= 0 or self.l <= 0:
            raise ValueError("chain and piece lengths must be positive")
        if self.l >= self.L_chain:
            raise ValueError(
                f"piece length {self.l} must be smaller than chain {self.L_chain}"
            )


Geometry = InfiniteLineInterval | HalfInfiniteEnd | FiniteChainCut


def conformal_s1(geom: Geometry, p: ConformalParams = ConformalParams()) -> float:
    """CFT prediction for the single-copy entanglement S1.

    Infinite-line interval:  (c/6) ln(L/a) + k1
    Half-infinite end:       (c/12) ln(L/a) + k1      (prefactor halved)
    Finite chain cut:        (c/12) ln[(2L/pi a) sin(pi l/L)] + k1

    The logarithmic coefficient is half the one of the entanglement
    entropy S in each geometry.
    """
    if isinstance(geom, InfiniteLineInterval):
        arg = geom.L / p.a
        factor = p.c / 6.0
    elif isinstance(geom, HalfInfiniteEnd):
        arg = geom.L / p.a
        factor = p.c / 12.0
    elif isinstance(geom, FiniteChainCut):
        arg = (2.0 * geom.L_chain / (math.pi * p.a)) * math.sin(
            math.pi * geom.l / geom.L_chain
        )
        factor = p.c / 12.0
    else:
        raise TypeError(f"unsupported geometry {type(geom).__name__}")
    if arg <= 0:
        raise ValueError(f"logarithm argument must be positive, got {arg}")
    return factor * math.log(arg) + p.k1


def conformal_renyi_trace(L: float, n: float, p: ConformalParams = ConformalParams()) -> float:
    """Power-law Renyi trace tr(rho^n) = b_n (L/a)^(-(c/6)(n - 1/n)).

    The exponent vanishes at n = 1 where normalization fixes b_1 = 1;
    -(1/n) ln of the result approaches the infinite-interval S1 slope
    as n -> infinity.
    """
    if L <= 0:
        raise ValueError(f"L must be positive, got {L}")
    if n <= 0:
        raise ValueError(f"Renyi index must be positive, got {n}")
    return p.b_n * (L / p.a) ** (-(p.c / 6.0) * (n - 1.0 / n))


def xx_asymptotic_spectrum(L: float, k: int) -> float:
    """Large-L single-particle entanglement energy of a half-filled XX interval.

    The spectrum becomes linear and dense, eps_k = pi^2 (2k+1) / (2 ln L)
    for k = 0, 1, 2, ...; consecutive levels are spaced by pi^2/ln L and
    eps_1/eps_0 = 3.
    """
    if L < 2:
        raise ValueError(f"L must be at least 2, got {L}")
    if k < 0:
        raise ValueError(f"mode index must be nonnegative, got {k}")
    return math.pi**2 * (2 * k + 1) / (2.0 * math.log(L))


def elliptic_K(k: float) -> float:
    """Complete elliptic integral of the first kind, modulus convention.

    K(k) = pi / (2 AGM(1, k')) with k' = sqrt(1 - k^2); the
    arithmetic-geometric mean iteration converges quadratically, at most
    8 iterations on [0, 1). Diverges logarithmically as k -> 1, so k >= 1
    is rejected.
    """
    if k < 0:
        raise ValueError(f"modulus must be nonnegative, got {k}")
    if k >= 1:
        raise ValueError(f"K(k) diverges at k = 1; got {k}")
    a, b = 1.0, math.sqrt((1.0 - k) * (1.0 + k))
    while abs(a - b) > 1e-15 * a:
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return math.pi / (2.0 * a)


def tfim_s1_half(k: float) -> float:
    """Half-chain S1 of the transverse-field Ising chain, disordered phase.

    S1 = (1/24) [ ln(16/(k^2 k'^2)) - pi K(k')/K(k) ],  k' = sqrt(1-k^2),
    for a chain divided into two halves; k in (0,1) measures the coupling
    (Ising bond over transverse field). Vanishes as k -> 0 (product state)
    and diverges logarithmically at the critical point k = 1.
    """
    if not 0.0 < k < 1.0:
        raise ValueError(f"modulus must lie in (0, 1), got {k}")
    kp2 = (1.0 - k) * (1.0 + k)
    kp = math.sqrt(kp2)
    return (math.log(16.0 / (k * k * kp2)) - math.pi * elliptic_K(kp) / elliptic_K(k)) / 24.0


def tfim_s1_near_critical(k: float) -> float:
    """Near-critical expansion of the half-chain Ising S1 for k -> 1.

    S1 = (1/24) [ ln(8/(1-k)) - pi^2 / ln(8/(1-k)) ].

    Follows from the closed form via K(k) -> ln(4/k') = (1/2) ln(8/(1-k))
    and K(k') -> pi/2, so the subleading coefficient over ln(8/(1-k)) is
    pi^2: the term is (pi^2/2) / ln(4/k'). The logarithm tracks the
    correlation length, xi ~ 1/(1-k). The subleading term is specific to
    S1; the analogous expansion of the entanglement entropy S carries no
    such term.
    """
    if not 0.0 < k < 1.0:
        raise ValueError(f"modulus must lie in (0, 1), got {k}")
    lg = math.log(8.0 / (1.0 - k))
    return (lg - math.pi**2 / lg) / 24.0
