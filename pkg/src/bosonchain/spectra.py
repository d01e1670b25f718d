"""Real-space spectra of the finite open chain.

Covers the dynamical (Bogoliubov) eigenvalues of the open chain, the
eigendecomposition of the squeezed-frame hopping matrix S, the closed-form
geometry of the topological edge pair, and dynamical stability of the
dissipative first-moment drift.

For real stable couplings every dynamical eigenvalue is (twice) an eigenvalue
of S, so edge physics reduces to the SSH problem: in the topological phase
(t2' > t1') S has one +-delta pair exponentially close to zero whose
eigenvectors mix a left edge profile on odd sites with its mirror image on
even sites.  The profile decays as l e^{-(j-1) eps} with eps = ln(t2'/t1'),
alternating in sign from cell to cell (for positive couplings the zero-mode
recursion is alpha_{2j+1}/alpha_{2j-1} = -t1'/t2').
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from .chain import (
    ChainParams,
    build_bdg,
    build_coupling_matrix,
    effective_couplings,
    sigma_invariants,
    squeeze_transform,
)
from .errors import NotTopological


@dataclass(eq=False)
class SpectralDecomposition:
    """Eigensystem of the real symmetric coupling matrix S.

    lambdas ascending; vectors[:, j] the orthonormal eigenvector alpha_j,
    gauged so its largest-magnitude component (first such, on ties) is
    positive.  pair_index[j] locates the partner with eigenvalue -lambda_j.
    """
    lambdas: NDArray[np.float64]
    vectors: NDArray[np.float64]
    pair_index: NDArray[np.intp]

    @property
    def J(self) -> NDArray[np.float64]:
        return np.diag(self.lambdas)


@dataclass(eq=False)
class AnalyticEdgeData:
    """Closed-form edge-pair geometry in the topological phase.

    delta: half-splitting of the near-zero pair (from the exact spectrum);
    epsilon = ln(t2'/t1'); l normalizes the truncated profile sum;
    L1, L2 are the (N-1)-term geometric sums with decay rates
    2(eps +- (r_b - r_a)) that enter the stationary edge moments.
    profiles holds the two sign-dressed approximate eigenvectors (columns),
    overlaps their |<exact, approx>|.
    """
    delta: float
    epsilon: float
    l: float
    L1: float
    L2: float
    profiles: NDArray[np.float64]
    overlaps: tuple[float, float]


@dataclass(frozen=True)
class StabilityReport:
    stable: bool
    spectral_abscissa: float


def bdg_eigenvalues(params: ChainParams) -> NDArray[np.complex128]:
    """The 4N eigenvalues of the open-chain dynamical matrix."""
    return np.linalg.eigvals(build_bdg(params).dynamical)


def ssh_eigendecomposition(S: NDArray[np.float64]) -> SpectralDecomposition:
    """Orthonormal eigensystem of S with sign gauge and (lam, -lam) pairing."""
    lam, P = np.linalg.eigh(S)
    n = lam.size
    for j in range(n):
        i = int(np.argmax(np.abs(P[:, j])))
        if P[i, j] < 0:
            P[:, j] = -P[:, j]
    # symmetric spectrum sorted ascending: partner of i is n-1-i
    pair = np.arange(n)[::-1].copy()
    return SpectralDecomposition(lambdas=lam, vectors=P, pair_index=pair)


def _geometric_sum(rate: float, terms: int) -> float:
    """sum_{j=0}^{terms-1} e^{-2 j rate}."""
    x = math.exp(-2.0 * rate)
    if abs(x - 1.0) < 1e-14:
        return float(terms)
    return (1.0 - x ** terms) / (1.0 - x)


def edge_modes(params: ChainParams) -> AnalyticEdgeData:
    """Edge-pair splitting and the closed-form profile data (topological only)."""
    s = sigma_invariants(params)
    if s.sigma1 >= s.sigma2:
        raise NotTopological(
            f"edge modes require sigma1 < sigma2 (got {s.sigma1:g} >= {s.sigma2:g})")
    t1p, t2p = effective_couplings(params)
    sq = squeeze_transform(params)
    N = params.n_cells
    eps = math.log(t2p) - math.log(t1p)
    l = 1.0 / math.sqrt(2.0 * _geometric_sum(eps, N - 1)) if N > 1 else 1.0 / math.sqrt(2.0)
    L1 = _geometric_sum(eps + (sq.r_b - sq.r_a), N - 1) if N > 1 else 1.0
    L2 = _geometric_sum(eps - (sq.r_b - sq.r_a), N - 1) if N > 1 else 1.0

    dec = ssh_eigendecomposition(build_coupling_matrix(params))
    lam = dec.lambdas
    delta = 0.5 * (lam[N] - lam[N - 1])          # +-delta pair straddles zero

    # sign-dressed profiles: odd sites l(-1)^{j-1} e^{-(j-1)eps}, even sites
    # the mirror image; the two modes are the +- combinations
    j = np.arange(1, N + 1)
    odd = l * (-1.0) ** (j - 1) * np.exp(-(j - 1) * eps)
    even = odd[::-1]                             # mirror through the chain center
    prof = np.zeros((2 * N, 2))
    prof[0::2, 0] = odd
    prof[1::2, 0] = even
    prof[0::2, 1] = odd
    prof[1::2, 1] = -even
    prof /= np.linalg.norm(prof, axis=0)

    exact = dec.vectors[:, [N - 1, N]]           # the near-zero pair
    overlaps = []
    used: set[int] = set()
    for c in range(2):
        ov = np.abs(prof[:, c] @ exact)
        for i in used:
            ov[i] = -1.0
        best = int(np.argmax(ov))
        used.add(best)
        overlaps.append(float(ov[best]))
    return AnalyticEdgeData(delta=float(delta), epsilon=eps, l=l, L1=L1, L2=L2,
                            profiles=prof, overlaps=(overlaps[0], overlaps[1]))


def drift_matrix(params: ChainParams) -> NDArray[np.complex128]:
    """First-moment drift: d<A>/dt = W <A> with W = -i tau_z H_M - (kappa/2) I."""
    B = build_bdg(params)
    n = B.matrix.shape[0]
    return -1j * B.dynamical - 0.5 * params.kappa * np.eye(n)


def assess_stability(params: ChainParams) -> StabilityReport:
    """Spectral abscissa of the drift matrix; stable iff strictly negative.

    The zero threshold is scale-aware: |abscissa| below
    1e-12 * (kappa + spectral radius) counts as marginal (unstable).
    """
    W = drift_matrix(params)
    ev = np.linalg.eigvals(W)
    absc = float(np.max(ev.real))
    tol = 1e-12 * (params.kappa + float(np.max(np.abs(ev))))
    return StabilityReport(stable=absc < -tol, spectral_abscissa=absc)
