"""Bloch and non-Bloch band structure, phase classification, skin detection.

Everything here is driven by the three invariants (sigma1, sigma2, sigma3)
of :mod:`bosonchain.chain`:

* Bloch dispersion  xi^2(k) = s1 + s2 + 2 s3 cos k +- 2|sin k| sqrt(s1 s2 - s3^2)
* band edges        (sqrt(s1) -+ sqrt(s2))^2  (shared by Bloch and open chain)
* phase             topological iff s1 < s2 (both positive)
* skin effect       s1 s2 - s3^2 < 0  (complex Bloch loop; GBZ leaves |beta|=1)

The generalized momenta beta solve the analytically continued dispersion
(e^{ik} -> beta).  With X = xi^2 - s1 - s2 the four roots are

    beta = [X +- sqrt(X^2 - 4 s1 s2)] / (2 [s3 -+ sqrt(s3^2 - s1 s2)])

grouped in two pairs by denominator; num+ num- = 4 s1 s2 and den1 den2 = s1 s2
make the multiset exactly closed under beta -> 1/beta, and for xi^2 inside the
band the two roots of a pair share one modulus.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .chain import ChainParams, build_bdg, sigma_invariants
from .errors import UnstableRegime

# relative cutoff below which s1*s2 - s3^2 counts as exactly zero (no skin
# effect); keeps locked-ratio families (Delta2/t2 = Delta1/t1) on the Bloch side
# despite rounding in the products.
_DISC_RTOL = 1e-12


def _skin_discriminant(s1: float, s2: float, s3: float) -> float:
    d = s1 * s2 - s3 * s3
    scale = max(abs(s1 * s2), s3 * s3)
    if abs(d) <= _DISC_RTOL * scale:
        return 0.0
    return d


def _csort(vals) -> tuple[complex, ...]:
    return tuple(sorted((complex(v) for v in vals), key=lambda z: (z.real, z.imag)))


@dataclass(frozen=True)
class BlochSample:
    """Dispersion at one momentum: the four xi^2 values (each branch twice,
    matching the 4x4 eigenproblem) and the four +-xi roots, sorted by (Re, Im)."""
    k: float
    xi_squared: tuple[complex, complex, complex, complex]
    xi: tuple[complex, complex, complex, complex]


@dataclass(frozen=True)
class PhaseDiagnosis:
    phase: str                                # Trivial | Topological | Boundary | Unstable
    skin_effect: bool
    band_edges: tuple[float, float] | None    # None when Unstable


@dataclass(frozen=True)
class BetaRoots:
    """Generalized momenta at fixed xi^2, grouped into denominator pairs.

    degenerate=True marks s3^2 = s1 s2 (both denominators coincide; no skin
    effect and the GBZ is the unit circle) — the roots are still returned.
    """
    xi_squared: complex
    pairs: tuple[tuple[complex, complex], tuple[complex, complex]]
    degenerate: bool = False

    @property
    def roots(self) -> tuple[complex, complex, complex, complex]:
        return self.pairs[0] + self.pairs[1]


@dataclass(eq=False)
class GbzSpectrum:
    """Samples of the non-Bloch band: xi >= 0 and the per-pair |beta|."""
    xi: np.ndarray
    xi_squared: np.ndarray
    abs_beta_pair1: np.ndarray
    abs_beta_pair2: np.ndarray


def bloch_spectrum(params: ChainParams, k: float) -> BlochSample:
    """Dispersion branches at momentum k.

    Uses the closed form at mu = 0 and falls back to diagonalizing the 4x4
    momentum block otherwise, so the result always matches a direct
    eigensolve of the dynamical matrix.
    """
    if params.mu == 0.0:
        s1, s2, s3 = sigma_invariants(params).astuple()
        root = cmath.sqrt(complex(_skin_discriminant(s1, s2, s3)))
        base = s1 + s2 + 2 * s3 * math.cos(k)
        off = 2 * abs(math.sin(k)) * root
        branches = (base + off, base - off)
        xi2 = [branches[0]] * 2 + [branches[1]] * 2
        xi = []
        for b in branches:
            r = cmath.sqrt(b)
            xi += [r, -r]
    else:
        ev = np.linalg.eigvals(build_bdg(params, boundary="periodic_at_k", k=k).dynamical)
        xi = list(ev)
        xi2 = [z * z for z in ev]
    return BlochSample(k=float(k), xi_squared=_csort(xi2), xi=_csort(xi))


def band_edges(params: ChainParams) -> tuple[float, float]:
    """(xi^2_min, xi^2_max) of the bulk band; open and periodic chains share it."""
    s1, s2, _ = sigma_invariants(params).astuple()
    if s1 <= 0 or s2 <= 0:
        raise UnstableRegime(
            f"band edges undefined: sigma1={s1:g}, sigma2={s2:g} (need both > 0)")
    a, b = math.sqrt(s1), math.sqrt(s2)
    return ((a - b) ** 2, (a + b) ** 2)


def classify_phase(params: ChainParams, tol: float | None = None) -> PhaseDiagnosis:
    """Phase label from the sigma inequalities plus skin-effect detection.

    tol is the absolute |sigma1 - sigma2| window counted as Boundary;
    default 1e-9 * max(sigma1, sigma2).
    """
    s1, s2, s3 = sigma_invariants(params).astuple()
    skin = _skin_discriminant(s1, s2, s3) < 0
    if s1 <= 0 or s2 <= 0:
        return PhaseDiagnosis(phase="Unstable", skin_effect=skin, band_edges=None)
    if tol is None:
        tol = 1e-9 * max(s1, s2)
    edges = band_edges(params)
    if abs(s1 - s2) <= tol:
        phase = "Boundary"
    elif s1 < s2:
        phase = "Topological"
    else:
        phase = "Trivial"
    return PhaseDiagnosis(phase=phase, skin_effect=skin, band_edges=edges)


def beta_roots(params: ChainParams, xi_squared: complex) -> BetaRoots:
    """The four generalized momenta at a given xi^2 (closed form).

    When s3^2 = s1 s2 the two denominator branches merge; the (repeated)
    unit-modulus roots are returned with degenerate=True rather than raising,
    since plain Bloch theory is the correct limit there.
    """
    s1, s2, s3 = sigma_invariants(params).astuple()
    xi2 = complex(xi_squared)
    X = xi2 - s1 - s2
    sq_num = cmath.sqrt(X * X - 4 * s1 * s2)
    nums = (X + sq_num, X - sq_num)
    disc = _skin_discriminant(s1, s2, s3)          # s1 s2 - s3^2, snapped to 0
    if disc == 0.0:
        if s3 == 0.0:
            raise UnstableRegime("beta roots undefined: sigma3 = 0 with "
                                 "sigma1*sigma2 = 0 (no dispersive band)")
        pair = (nums[0] / (2 * s3), nums[1] / (2 * s3))
        return BetaRoots(xi_squared=xi2, pairs=(pair, pair), degenerate=True)
    sq_den = cmath.sqrt(complex(-disc))            # sqrt(s3^2 - s1 s2)
    dens = (s3 - sq_den, s3 + sq_den)
    pairs = tuple((nums[0] / (2 * d), nums[1] / (2 * d)) for d in dens)
    return BetaRoots(xi_squared=xi2, pairs=pairs, degenerate=False)


def gbz_spectrum(params: ChainParams, n_samples: int = 201) -> GbzSpectrum:
    """Sample xi^2 uniformly across the band and record the pair moduli.

    Inside the band each denominator pair has one common modulus; without the
    skin effect both moduli are 1, with it they sit at 1/rho and rho.
    """
    lo, hi = band_edges(params)
    xi2 = np.linspace(lo, hi, int(n_samples))
    m1 = np.empty(xi2.size)
    m2 = np.empty(xi2.size)
    for i, v in enumerate(xi2):
        r = beta_roots(params, v)
        (a1, b1), (a2, b2) = r.pairs
        m1[i] = math.sqrt(abs(a1) * abs(b1))       # geometric mean: exact when equal
        m2[i] = math.sqrt(abs(a2) * abs(b2))
    return GbzSpectrum(xi=np.sqrt(np.maximum(xi2, 0.0)), xi_squared=xi2,
                       abs_beta_pair1=m1, abs_beta_pair2=m2)
