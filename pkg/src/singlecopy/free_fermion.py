"""Ground-state correlation matrices and entanglement spectra of free-fermion chains.

Two solvable models are covered:

* the XX chain (particle-conserving hopping; at anisotropy zero it is the
  Jordan-Wigner image of the XXZ chain), either as an interval of the
  infinite chain via the closed-form sine kernel, or as a finite open
  chain via the single-particle hopping matrix;
* the transverse-field Ising chain in its disordered phase (pairing terms
  present), as a finite open chain via the Bogoliubov-de Gennes matrix.

The reduced density matrix of a subsystem of a Gaussian state is itself
Gaussian, rho = exp(-H)/Z with quadratic H = sum_k eps_k f_k^dag f_k.
The single-particle entanglement energies eps_k follow from the
subsystem-restricted correlation matrices: for particle-conserving states
from the eigenvalues zeta of G = <c^dag c> via eps = ln((1-zeta)/zeta),
with pairing from the doubled Nambu correlation matrix.

Numerical policy: occupations are clipped to [1e-12, 1-1e-12] before
logarithms (modes beyond |eps| ~ 27.6 contribute < 1e-12 to any entropy);
|eps| < 1e-8 is treated as an exact zero mode, contributing exactly ln 2
to the entropies downstream. At half filling the restricted G is
particle-hole symmetric and the spectrum is computed from the singular
values of the sublattice block of 2G - 1, which makes the (eps, -eps)
pairing and the odd-length zero mode exact instead of eigensolver-limited.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import eigh, svdvals

__all__ = [
    "OCCUPATION_FLOOR",
    "ZERO_MODE_TOL",
    "FermionModelSpec",
    "CorrelationData",
    "EntanglementSpectrum",
    "xx_correlations_infinite",
    "build_bdg",
    "ground_state_correlations",
    "single_particle_energies",
]

# Occupations within this distance of 0 or 1 are clipped before taking logs.
OCCUPATION_FLOOR = 1e-12
# |eps| below this counts as a zero mode (eigensolver accuracy on <= 4096^2).
ZERO_MODE_TOL = 1e-8
# Largest representable |eps| after clipping, ln((1-floor)/floor).
_EPS_CAP = float(np.log((1.0 - OCCUPATION_FLOOR) / OCCUPATION_FLOOR))
# Particle-hole symmetry of G is detected elementwise at this tolerance.
_PH_DETECT_TOL = 1e-10


@dataclass(frozen=True)
class FermionModelSpec:
    """Which free-fermion chain to solve.

    Parameters
    ----------
    kind : {"xx", "tfim"}
        Model family.
    filling : float
        Fermion filling of the XX chain, in (0, 1); only meaningful for
        the infinite closed form (an open XX chain fills its negative
        modes, which pins the ground state near half filling).
    modulus : float, optional
        Disordered-phase coupling k of the Ising chain, in (0, 1). The
        spin Hamiltonian is H = -k sum sx sx - sum sz, so k < 1 is the
        disordered side and k doubles as the elliptic modulus of the
        closed-form half-chain S1.
    length : int, optional
        Total number of sites of a finite open chain; None selects the
        infinite closed form (XX only).
    """

    kind: str
    filling: float = 0.5
    modulus: float | None = None
    length: int | None = None

    def __post_init__(self):
        if self.kind not in ("xx", "tfim"):
            raise ValueError(f"unknown model kind {self.kind!r}")
        if self.kind == "xx":
            if not 0.0 < self.filling < 1.0:
                raise ValueError(f"filling must lie in (0, 1), got {self.filling}")
        else:
            if self.modulus is None or not 0.0 < self.modulus < 1.0:
                raise ValueError(
                    f"tfim coupling must lie in (0, 1), got {self.modulus}"
                )
            if self.length is None:
                raise ValueError("tfim requires a finite open chain length")
        if self.length is not None and self.length < 2:
            raise ValueError(f"open chain needs at least 2 sites, got {self.length}")


@dataclass(frozen=True)
class CorrelationData:
    """Fermionic two-point functions restricted to a set of sites.

    G[m, n] = <c^dag_m c_n>  (real symmetric, eigenvalues in [0, 1]),
    F[m, n] = <c^dag_m c^dag_n>  (real antisymmetric; identically zero for
    particle-conserving states). Indices refer to positions in `sites`.
    """

    sites: tuple[int, ...]
    G: np.ndarray = field(repr=False)
    F: np.ndarray = field(repr=False)

    def __post_init__(self):
        n = len(self.sites)
        if self.G.shape != (n, n) or self.F.shape != (n, n):
            raise ValueError("G and F must be square with dimension len(sites)")
        if not np.allclose(self.G, self.G.T, atol=1e-10):
            raise ValueError("G must be symmetric")
        if not np.allclose(self.F, -self.F.T, atol=1e-10):
            raise ValueError("F must be antisymmetric")

    @property
    def has_pairing(self) -> bool:
        return bool(np.any(self.F))

    def restrict(self, sites) -> "CorrelationData":
        """Correlations of the sub-collection `sites` (labels, not positions)."""
        pos = {s: i for i, s in enumerate(self.sites)}
        try:
            idx = np.array([pos[s] for s in sites], dtype=int)
        except KeyError as bad:
            raise ValueError(f"site {bad.args[0]} not present in correlation data")
        sel = np.ix_(idx, idx)
        return CorrelationData(tuple(sites), self.G[sel], self.F[sel])


@dataclass(frozen=True)
class EntanglementSpectrum:
    """Single-particle entanglement energies of a Gaussian reduced state.

    epsilons      : sorted ascending; entries snapped to exactly 0 within
                    ZERO_MODE_TOL and capped at +-ln((1-floor)/floor)
    occupations   : zeta_k = 1/(1 + exp(eps_k)), same order
    zero_mode_count : number of exact zero modes
    pair_tolerance: tolerance quoted for the (eps, -eps) pairing check
    """

    epsilons: np.ndarray = field(repr=False)
    occupations: np.ndarray = field(repr=False)
    zero_mode_count: int
    pair_tolerance: float = ZERO_MODE_TOL

    def __len__(self) -> int:
        return len(self.epsilons)

    def pairing_mismatch(self) -> float:
        """max |eps_i + eps_paired(i)| when the sorted spectrum is folded."""
        if len(self.epsilons) == 0:
            return 0.0
        return float(np.max(np.abs(self.epsilons + self.epsilons[::-1])))


def _spectrum_from_epsilons(eps: np.ndarray) -> EntanglementSpectrum:
    eps = np.asarray(eps, dtype=float)
    eps = np.clip(eps, -_EPS_CAP, _EPS_CAP)
    eps[np.abs(eps) < ZERO_MODE_TOL] = 0.0
    eps = np.sort(eps)
    occ = 1.0 / (1.0 + np.exp(eps))
    return EntanglementSpectrum(
        epsilons=eps,
        occupations=occ,
        zero_mode_count=int(np.count_nonzero(eps == 0.0)),
    )


def _epsilons_from_occupations(zeta: np.ndarray) -> np.ndarray:
    zeta = np.clip(zeta, OCCUPATION_FLOOR, 1.0 - OCCUPATION_FLOOR)
    return np.log((1.0 - zeta) / zeta)


def xx_correlations_infinite(L_sub: int, filling: float = 0.5) -> CorrelationData:
    """Correlation matrix of an L_sub-site interval of the infinite XX chain.

    Ground state at fermion filling nu: the standard sine kernel

        G[m, n] = sin(k_F (m-n)) / (pi (m-n)),   k_F = pi nu,

    with G[m, m] = nu; F vanishes identically. At half filling the
    next-nearest-neighbor entries vanish and nearest neighbors equal 1/pi.
    """
    if L_sub < 1:
        raise ValueError(f"subsystem length must be at least 1, got {L_sub}")
    if not 0.0 < filling < 1.0:
        raise ValueError(f"filling must lie in (0, 1), got {filling}")
    m = np.arange(L_sub)
    d = m[:, None] - m[None, :]
    with np.errstate(divide="ignore", invalid="ignore"):
        G = np.where(d == 0, filling, np.sin(np.pi * filling * d) / (np.pi * d))
    G = 0.5 * (G + G.T)
    return CorrelationData(tuple(range(L_sub)), G, np.zeros((L_sub, L_sub)))


def build_bdg(model: FermionModelSpec) -> np.ndarray:
    """Bogoliubov-de Gennes matrix of a finite open chain.

    Returns the 2L x 2L real symmetric matrix [[A, B], [-B, -A]] in the
    Nambu basis (c_1..c_L, c^dag_1..c^dag_L), for the quadratic form
    H = sum A_ij c^dag_i c_j + (1/2) sum (B_ij c^dag_i c^dag_j + h.c.).

    XX chain: A has hopping 1/2 on nearest-neighbor bonds (Jordan-Wigner
    image of the XY exchange), B = 0. Ising chain with coupling k:
    A_ii = 2, A_{i,i+1} = -k, B_{i,i+1} = -k (open ends).
    """
    if model.length is None:
        raise ValueError("build_bdg needs a finite open chain")
    L = model.length
    A = np.zeros((L, L))
    B = np.zeros((L, L))
    if model.kind == "xx":
        hop = 0.5 * np.ones(L - 1)
        A += np.diag(hop, 1) + np.diag(hop, -1)
    else:
        k = model.modulus
        np.fill_diagonal(A, 2.0)
        bond = -k * np.ones(L - 1)
        A += np.diag(bond, 1) + np.diag(bond, -1)
        B += np.diag(bond, 1) - np.diag(bond, -1)
    return np.block([[A, B], [-B, -A]])


def ground_state_correlations(bdg: np.ndarray, zero_mode: str = "half") -> CorrelationData:
    """Correlation matrices of the many-body ground state of a BdG matrix.

    Negative-energy modes are filled. Modes at exactly zero single-particle
    energy (degenerate ground states, e.g. the odd-length XX chain) are
    occupied according to `zero_mode`:

    * "half"   -- occupation 1/2; the resulting Gaussian state is the even
                  mixture of the two degenerate Slater determinants and
                  reproduces the ln 2 zero-mode entropy rule (default);
    * "filled" -- occupy the zero mode: the pure ground state with one
                  extra fermion (spin sector +1/2 after Jordan-Wigner);
    * "empty"  -- leave it empty (sector -1/2).

    The pure-state conventions are the ones that match a spin-chain
    diagonalization in a fixed magnetization sector. Fractional zero-mode
    occupation is only defined for particle-conserving chains; a zero BdG
    energy in the presence of pairing raises LinAlgError.
    """
    if zero_mode not in ("half", "filled", "empty"):
        raise ValueError(f"unknown zero-mode convention {zero_mode!r}")
    n2 = bdg.shape[0]
    if bdg.ndim != 2 or bdg.shape != (n2, n2) or n2 % 2:
        raise ValueError("BdG matrix must be square with even dimension")
    L = n2 // 2
    A = bdg[:L, :L]
    B = bdg[:L, L:]
    if np.any(B):
        evals, evecs = eigh(bdg)
        if np.min(np.abs(evals)) <= 1e-12:
            raise np.linalg.LinAlgError(
                "zero-energy BdG mode with pairing: ground state is degenerate "
                "and its Gaussian correlations are not uniquely defined"
            )
        pos = evals > 0.0
        U = evecs[:L, pos]
        V = evecs[L:, pos]
        G = V @ V.T
        F = V @ U.T  # <c^dag c^dag>, transpose of the pair amplitude <c c>
        G = 0.5 * (G + G.T)
        F = 0.5 * (F - F.T)
    else:
        evals, phi = eigh(A)
        occ = np.where(evals < -1e-12, 1.0, 0.0)
        occ[np.abs(evals) <= 1e-12] = {"half": 0.5, "filled": 1.0, "empty": 0.0}[zero_mode]
        G = (phi * occ) @ phi.T
        G = 0.5 * (G + G.T)
        F = np.zeros((L, L))
    return CorrelationData(tuple(range(L)), G, F)


def _chiral_epsilons(G: np.ndarray, sites: tuple[int, ...]) -> np.ndarray:
    """Spectrum of a particle-hole symmetric G from the sublattice block.

    With S = diag((-1)^site) and S G S = 1 - G, the matrix M = 2G - 1
    anticommutes with S, so in the even/odd-sublattice basis it is purely
    off-diagonal and its eigenvalues are +-(singular values of the block),
    plus | #even - #odd | exact zeros. eps = -2 artanh(eigenvalue of M)
    then pairs exactly, and odd intervals carry an exact zero mode.
    """
    parity = np.asarray(sites, dtype=int) % 2
    even = np.where(parity == 0)[0]
    odd = np.where(parity == 1)[0]
    M = 2.0 * G - np.eye(G.shape[0])
    if len(even) == 0 or len(odd) == 0:
        # single-sublattice subsystem (one site, or every second site)
        return _epsilons_from_occupations(np.linalg.eigvalsh(G))
    sigma = svdvals(M[np.ix_(even, odd)])
    sigma_max = np.tanh(0.5 * _EPS_CAP)
    eps_pos = 2.0 * np.arctanh(np.minimum(sigma, sigma_max))
    zeros = np.zeros(abs(len(even) - len(odd)))
    return np.concatenate([-eps_pos, zeros, eps_pos])


def single_particle_energies(corr: CorrelationData, subsystem=None) -> EntanglementSpectrum:
    """Entanglement spectrum of a subsystem from its correlation matrices.

    Parameters
    ----------
    corr : CorrelationData
        Correlations of the full system (or any superset of the subsystem).
    subsystem : sequence of site labels, optional
        Which sites to keep; defaults to all of `corr.sites`.

    Without pairing the occupations zeta are the eigenvalues of the
    restricted G and eps = ln((1-zeta)/zeta). With pairing the doubled
    Nambu matrix [[G, F], [-F, 1-G^T]] is diagonalized; its eigenvalues
    come in pairs (lambda, 1-lambda) and one member of each pair is kept,
    which fixes eps >= 0 (entropies are insensitive to this gauge).
    Eigenvalues must lie in [-1e-10, 1 + 1e-10].
    """
    sub = corr if subsystem is None else corr.restrict(subsystem)
    n = len(sub.sites)
    if n == 0:
        return _spectrum_from_epsilons(np.empty(0))
    if sub.has_pairing:
        Gamma = np.block([[sub.G, sub.F], [-sub.F, np.eye(n) - sub.G.T]])
        lam = np.linalg.eigvalsh(Gamma)
        _check_occupation_range(lam)
        # fold the (lambda, 1-lambda) pairs onto n occupations <= 1/2
        zeta = 0.5 * (lam[:n] + 1.0 - lam[2 * n - 1 : n - 1 : -1])
        return _spectrum_from_epsilons(_epsilons_from_occupations(zeta))
    S = 1.0 - 2.0 * (np.asarray(sub.sites, dtype=int) % 2)
    ph_defect = np.max(np.abs(S[:, None] * sub.G * S[None, :] + sub.G - np.eye(n)))
    if ph_defect <= _PH_DETECT_TOL:
        return _spectrum_from_epsilons(_chiral_epsilons(sub.G, sub.sites))
    zeta = np.linalg.eigvalsh(sub.G)
    _check_occupation_range(zeta)
    return _spectrum_from_epsilons(_epsilons_from_occupations(zeta))


def _check_occupation_range(zeta: np.ndarray, tol: float = 1e-10) -> None:
    if zeta.size and (zeta.min() < -tol or zeta.max() > 1.0 + tol):
        raise np.linalg.LinAlgError(
            f"correlation eigenvalues outside [0, 1] beyond tolerance {tol}: "
            f"range [{zeta.min()}, {zeta.max()}]"
        )
