"""Exact Gaussian steady states of the dissipative chain.

The master equation

    drho/dt = i[rho, H] + kappa(1+n_th) sum_j D[a_j] rho + kappa n_th sum_j D[a_j+] rho

is quadratic/linear, so the state is Gaussian with zero means and closes on
second moments.  Two equivalent descriptions are used:

* ladder moments F_{mm'} = <a_m+ a_m'>, G_{mm'} = <a_m a_m'>, whose equations
  of motion read (h, D the blocks of H_M)

      dF/dt =  i(h* F + D* G) - i(F h^T + G* D) - kappa F + kappa n_th I
      dG/dt = -i(h G + G h^T + D F + (D F)^T + D) - kappa G

* the real quadrature covariance V over u = (x_1..x_2N, p_1..p_2N) with
  vacuum variance 1/2, which obeys the Lyapunov equation
  dV/dt = W V + V W^T + D_diff, W = Omega M - (kappa/2) I,
  D_diff = kappa(n_th + 1/2) I.

The steady state is solved in the quadrature picture (real linear algebra,
manifest physicality) by dense vectorization with one LU-reused iterative
refinement pass, then converted back to (F, G).  Dimensions are capped at
2N <= 64 modes; the dense solve is O(N^6) and intended for desk-scale chains.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray
from scipy.linalg import expm, lu_factor, lu_solve

from .chain import ChainParams, SqueezeTransform, build_bdg
from .errors import UnstableRegime
from .spectra import assess_stability

_MAX_MODES = 64


@dataclass(frozen=True)
class DiffusionSpec:
    """Input-noise correlator weights of the local thermal baths.

    In the original frame the delta-correlated weights are
    <a_in a_in+> = n_th + 1 and <a_in+ a_in> = n_th.  After the local
    squeezing a~ = cosh(r) a + sinh(r) a+ the noise acquires anomalous
    correlations; squeezed_weights returns the per-mode coefficients

        w_F(k) = ((e^{2r_k} + e^{-2r_k})(2 n_th + 1) - 2) / 4     <a~_in+ a~_in>
        w_G(k) = (e^{2r_k} - e^{-2r_k})(2 n_th + 1) / 4           <a~_in a~_in>

    which reduce to (n_th, 0) at r = 0.
    """
    kappa: float
    n_th: float = 0.0
    r: NDArray | None = None

    def ladder_weights(self) -> tuple[float, float]:
        """(<a_in a_in+>, <a_in+ a_in>) weights of the original frame."""
        return self.n_th + 1.0, self.n_th

    def squeezed_weights(self) -> tuple[NDArray, NDArray]:
        """(w_F, w_G) per mode; requires the squeezing profile r."""
        if self.r is None:
            raise ValueError("squeezed_weights needs the per-mode profile r")
        e2 = np.exp(2.0 * np.asarray(self.r, dtype=float))
        nbar = 2.0 * self.n_th + 1.0
        w_f = ((e2 + 1.0 / e2) * nbar - 2.0) / 4.0
        w_g = (e2 - 1.0 / e2) * nbar / 4.0
        return w_f, w_g


@dataclass(eq=False)
class MomentState:
    """Second moments F = <a+ a>, G = <a a> in a given frame.

    frame is "original" (lab modes) or "squeezed" (tilde modes); the master
    equation above propagates the original frame only.
    """
    F: NDArray[np.complex128]
    G: NDArray[np.complex128]
    frame: str = "original"

    @property
    def n_modes(self) -> int:
        return self.F.shape[0]


def _check_frame(state: MomentState, expected: str, what: str) -> None:
    if state.frame != expected:
        raise ValueError(f"{what} requires a state in the {expected!r} frame, "
                         f"got {state.frame!r}")


def symplectic_form(n_modes: int, ordering: str = "xxpp") -> NDArray[np.float64]:
    """Omega with [u_i, u_j] = i Omega_{ij}."""
    n = n_modes
    if ordering == "xxpp":
        O = np.zeros((2 * n, 2 * n))
        O[:n, n:] = np.eye(n)
        O[n:, :n] = -np.eye(n)
        return O
    if ordering == "interleaved":
        block = np.array([[0.0, 1.0], [-1.0, 0.0]])
        return np.kron(np.eye(n), block)
    raise ValueError(f"unknown ordering {ordering!r}")


def physicality_margin(V: NDArray, ordering: str = "interleaved") -> float:
    """Smallest eigenvalue of V + i Omega/2; >= 0 (up to noise) iff V is a state."""
    n = V.shape[0] // 2
    O = symplectic_form(n, ordering)
    return float(np.min(np.linalg.eigvalsh(V + 0.5j * O)))


def quadrature_drift(params: ChainParams) -> tuple[NDArray, NDArray]:
    """(W, D_diff) of the covariance Lyapunov equation, xxpp ordering.

    W is real also for complex couplings: the Hamiltonian quadratic form
    M = Re(T+ H_M T) is real symmetric by Hermiticity of H_M.
    """
    HM = build_bdg(params).matrix
    n = params.n_modes
    T = np.zeros((2 * n, 2 * n), dtype=complex)
    T[:n, :n] = np.eye(n) / math.sqrt(2)
    T[:n, n:] = 1j * np.eye(n) / math.sqrt(2)
    T[n:, :n] = np.eye(n) / math.sqrt(2)
    T[n:, n:] = -1j * np.eye(n) / math.sqrt(2)
    M = (T.conj().T @ HM @ T).real
    M = 0.5 * (M + M.T)
    W = symplectic_form(n) @ M - 0.5 * params.kappa * np.eye(2 * n)
    D_diff = params.kappa * (params.n_th + 0.5) * np.eye(2 * n)
    return W, D_diff


def _solve_lyapunov(W: NDArray, D: NDArray) -> NDArray:
    """W V + V W^T + D = 0 by dense vectorization + one refinement pass."""
    m = W.shape[0]
    eye = np.eye(m)
    A = np.kron(W, eye) + np.kron(eye, W)
    b = -D.ravel()
    lu = lu_factor(A)
    x = lu_solve(lu, b)
    x += lu_solve(lu, b - A @ x)
    V = x.reshape(m, m)
    return 0.5 * (V + V.T)


def moments_from_quadrature(V: NDArray) -> tuple[NDArray, NDArray]:
    """(F, G) from an xxpp covariance with vacuum variance 1/2."""
    n = V.shape[0] // 2
    Vxx, Vpp, Vxp = V[:n, :n], V[n:, n:], V[:n, n:]
    eye = np.eye(n)
    F = 0.5 * (Vxx + Vpp - eye + 1j * (Vxp - Vxp.T))
    G = 0.5 * (Vxx - Vpp + 1j * (Vxp + Vxp.T))
    return F, G


def quadrature_from_moments(F: NDArray, G: NDArray) -> NDArray:
    """Inverse of moments_from_quadrature (xxpp ordering)."""
    n = F.shape[0]
    eye = np.eye(n)
    Vxx = F.real + G.real + 0.5 * eye
    Vpp = F.real - G.real + 0.5 * eye
    Vxp = F.imag + G.imag
    V = np.zeros((2 * n, 2 * n))
    V[:n, :n] = 0.5 * (Vxx + Vxx.T)
    V[n:, n:] = 0.5 * (Vpp + Vpp.T)
    V[:n, n:] = Vxp
    V[n:, :n] = Vxp.T
    return V


def moment_ode_rhs(params: ChainParams, state: MomentState) -> tuple[NDArray, NDArray]:
    """(dF/dt, dG/dt) of the original-frame moment equations."""
    _check_frame(state, "original", "the moment ODE")
    n = params.n_modes
    HM = build_bdg(params).matrix
    h, D = HM[:n, :n], HM[:n, n:]
    F, G = state.F, state.G
    kap = params.kappa
    dF = (1j * (h.conj() @ F + D.conj() @ G)
          - 1j * (F @ h.T + G.conj() @ D)
          - kap * F + kap * params.n_th * np.eye(n))
    DF = D @ F
    dG = -1j * (h @ G + G @ h.T + DF + DF.T + D) - kap * G
    return dF, dG


def steady_residual(params: ChainParams, state: MomentState) -> float:
    """max |d/dt| of all second moments; ~0 certifies a steady state."""
    dF, dG = moment_ode_rhs(params, state)
    return float(max(np.max(np.abs(dF)), np.max(np.abs(dG))))


def _require_desk_scale(params: ChainParams) -> None:
    if params.n_modes > _MAX_MODES:
        raise ValueError(
            f"dense moment solver capped at {_MAX_MODES} modes "
            f"(got 2N = {params.n_modes}); cost grows as N^6")


def steady_moments(params: ChainParams) -> MomentState:
    """Exact steady second moments (original frame).

    Refuses when the first-moment drift is not strictly stable; warns when
    the spectral abscissa is within 1e-8*kappa of zero (critically slow
    convergence makes the steady state physically fragile there).
    """
    _require_desk_scale(params)
    rep = assess_stability(params)
    if not rep.stable:
        raise UnstableRegime(
            f"no steady state: drift spectral abscissa = {rep.spectral_abscissa:.3e}",
            spectral_abscissa=rep.spectral_abscissa)
    if rep.spectral_abscissa > -1e-8 * params.kappa:
        warnings.warn("critically slow convergence: spectral abscissa "
                      f"{rep.spectral_abscissa:.3e} is within 1e-8*kappa of zero",
                      RuntimeWarning, stacklevel=2)
    W, D_diff = quadrature_drift(params)
    V = _solve_lyapunov(W, D_diff)
    F, G = moments_from_quadrature(V)
    return MomentState(F=F, G=G, frame="original")


def evolve_moments(params: ChainParams, initial: MomentState, t: float) -> MomentState:
    """Propagate the moment ODE for time t >= 0 (exact matrix-exponential form).

    Uses the augmented-exponential identity
    expm([[W, D],[0, -W^T]] t) = [[e^{Wt}, H(t)],[0, e^{-W^T t}]] with
    H(t) e^{W^T t} the accumulated diffusion, valid also for unstable W.
    """
    if t < 0:
        raise ValueError("t must be >= 0")
    _check_frame(initial, "original", "evolve_moments")
    _require_desk_scale(params)
    if t == 0:
        return MomentState(F=initial.F.copy(), G=initial.G.copy(), frame="original")
    W, D_diff = quadrature_drift(params)
    m = W.shape[0]
    B = np.zeros((2 * m, 2 * m))
    B[:m, :m] = W
    B[:m, m:] = D_diff
    B[m:, m:] = -W.T
    E = expm(B * t)
    Ew = E[:m, :m]
    V0 = quadrature_from_moments(initial.F, initial.G)
    V = Ew @ V0 @ Ew.T + E[:m, m:] @ Ew.T
    V = 0.5 * (V + V.T)
    F, G = moments_from_quadrature(V)
    return MomentState(F=F, G=G, frame="original")


def change_frame(state: MomentState, sq: SqueezeTransform, to: str) -> MomentState:
    """Rewrite the moments in the other local-squeezing frame.

    The mode map is a~_m = cosh(r_m) a_m + sinh(r_m) a_m+ (and r -> -r for
    the way back); being local and symplectic it never changes two-mode
    entanglement, only the moment bookkeeping.
    """
    if to not in ("original", "squeezed"):
        raise ValueError(f"unknown frame {to!r}")
    if state.frame == to:
        return MomentState(F=state.F.copy(), G=state.G.copy(), frame=to)
    if len(sq.r) != state.n_modes:
        raise ValueError(f"transform covers {len(sq.r)} modes, state has {state.n_modes}")
    r = sq.r if to == "squeezed" else -sq.r
    C = np.diag(np.cosh(r))
    S = np.diag(np.sinh(r))
    F, G = state.F, state.G
    eye = np.eye(state.n_modes)
    Fn = C @ F @ C + C @ G.conj() @ S + S @ G @ C + S @ (F.T + eye) @ S
    Gn = C @ G @ C + C @ (F.T + eye) @ S + S @ F @ C + S @ G.conj() @ S
    return MomentState(F=Fn, G=Gn, frame=to)


def to_quadrature_covariance(state: MomentState, modes=None) -> NDArray[np.float64]:
    """Covariance of the selected modes, interleaved (x_m, p_m, x_m', p_m', ...).

    modes are the physical labels 1..2N (default: all); vacuum variance 1/2,
    first moments are zero throughout the model.
    """
    n = state.n_modes
    if modes is None:
        modes = range(1, n + 1)
    idx = [int(m) - 1 for m in modes]
    if any(i < 0 or i >= n for i in idx):
        raise ValueError(f"mode labels must be in 1..{n}")
    V = quadrature_from_moments(state.F, state.G)
    k = len(idx)
    out = np.empty((2 * k, 2 * k))
    for a, ia in enumerate(idx):
        for b, ib in enumerate(idx):
            out[2 * a, 2 * b] = V[ia, ib]                # x x
            out[2 * a, 2 * b + 1] = V[ia, n + ib]        # x p
            out[2 * a + 1, 2 * b] = V[n + ia, ib]        # p x
            out[2 * a + 1, 2 * b + 1] = V[n + ia, n + ib]  # p p
    return out
