"""Two-mode logarithmic negativity and single-mode squeezing diagnostics.

All measures use the vacuum-variance-1/2 convention, so a separable pair has
smallest partially-transposed symplectic eigenvalue eta_minus = 1/2 and
E_N = max(0, -ln 2 eta_minus) = 0.

For the mirror-symmetric edge pair the covariance is parameterized by three
constants K1 = <a~1+ a~1>, K2 = <a~1^2>, K3 = -Im <a~1 a~_2N>, and the
negativity collapses to eta_minus = |sqrt((1/2 + K1)^2 - K2^2) - |K3||.
The sign of K3 is a local phase gauge (a_2N -> -a_2N flips it), hence only
|K3| can enter; the general PPT formula on the 4x4 covariance is the
authority everywhere else.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from .errors import UnphysicalCovariance
from .steady import MomentState, physicality_margin, to_quadrature_covariance

_ENTANGLED_FLOOR = 1e-9   # below this E_N is linear-solver noise


@dataclass(frozen=True)
class EntanglementReport:
    """Pair entanglement summary: moment constants plus the PPT eigenvalue."""
    K1: float
    K2: complex
    K3: float
    eta_minus: float
    E_N: float

    @property
    def entangled(self) -> bool:
        return self.E_N > _ENTANGLED_FLOOR


def _report(K1, K2, K3, eta: float) -> EntanglementReport:
    eta = float(eta)
    return EntanglementReport(K1=float(np.real(K1)), K2=complex(K2),
                              K3=float(np.real(K3)), eta_minus=eta,
                              E_N=max(0.0, -math.log(2.0 * eta)))


def logneg_symmetric(K1: float, K2: complex, K3: float) -> EntanglementReport:
    """Negativity of the mirror-symmetric pair state (see module docstring).

    Complex K2 falls outside the quoted closed form; such input is routed
    through the general covariance formula of the equivalent state
    F = K1*I, G = [[K2, -iK3], [-iK3, K2]].
    """
    K1, K3 = float(K1), float(K3)
    K2 = complex(K2)
    if abs(K2.imag) > 1e-14 * (1.0 + abs(K2)):
        F = np.diag([K1, K1]).astype(complex)
        G = np.array([[K2, -1j * K3], [-1j * K3, K2]])
        return pair_report(MomentState(F=F, G=G, frame="squeezed"), 1, 2)
    k2 = K2.real
    x = (0.5 + K1) ** 2 - k2 * k2
    if x < 0:
        raise UnphysicalCovariance(
            f"(1/2 + K1)^2 = {(0.5 + K1) ** 2:g} < K2^2 = {k2 * k2:g}")
    eta = abs(math.sqrt(x) - abs(K3))
    return _report(K1, k2, K3, eta)


def logneg_general(V: NDArray) -> EntanglementReport:
    """Negativity from a 4x4 two-mode covariance, (x1, p1, x2, p2) ordering.

    Partial transposition flips the sign of mode 2's momentum; eta_minus is
    the smaller symplectic eigenvalue of the flipped covariance,
    eta^2 = (Delta - sqrt(Delta^2 - 4 det V)) / 2 with the seralian
    Delta = det A + det B - 2 det C in the block notation [[A, C], [C^T, B]].
    """
    V = np.asarray(V, dtype=float)
    if V.shape != (4, 4):
        raise ValueError("expected a 4x4 two-mode covariance")
    margin = physicality_margin(V, "interleaved")
    if margin < -1e-10:
        raise UnphysicalCovariance(
            f"V + i Omega/2 has eigenvalue {margin:.3e} < -1e-10")
    A = V[:2, :2]
    B = V[2:, 2:]
    C = V[:2, 2:]
    delta = np.linalg.det(A) + np.linalg.det(B) - 2.0 * np.linalg.det(C)
    det_v = np.linalg.det(V)
    eta2 = (delta - math.sqrt(max(delta * delta - 4.0 * det_v, 0.0))) / 2.0
    eta = math.sqrt(max(eta2, 0.0))
    # fill the moment constants of the (1, 2) pair for the report
    k1 = (V[0, 0] + V[1, 1] - 1.0) / 2.0
    k2 = (V[0, 0] - V[1, 1]) / 2.0 + 1j * V[0, 1]
    k3 = -(V[0, 3] + V[1, 2]) / 2.0
    return _report(k1, k2, k3, eta)


def pair_report(state: MomentState, m: int, m_prime: int) -> EntanglementReport:
    """Negativity between modes m and m' (site labels 1..2N, either frame).

    Local squeezing is a local Gaussian unitary, so the result is identical
    in the original and squeezed frames.
    """
    if m == m_prime:
        raise ValueError("need two distinct modes")
    return logneg_general(to_quadrature_covariance(state, [m, m_prime]))


def squeezing_degree(state: MomentState, m: int) -> tuple[float, float]:
    """(r_eff, theta) of mode m's marginal.

    r_eff = (1/4) ln(V_max / V_min) of the 2x2 covariance (0 for any
    rotation-symmetric state), theta in [0, pi) the angle of the minimal
    variance axis cos(theta) x + sin(theta) p.
    """
    V = to_quadrature_covariance(state, [m])
    vals, vecs = np.linalg.eigh(V)
    r_eff = 0.25 * math.log(vals[1] / vals[0])
    vmin = vecs[:, 0]
    theta = math.atan2(vmin[1], vmin[0]) % math.pi
    return float(r_eff), float(theta)
