"""Shared helpers for the test suite."""
import numpy as np
import pytest

from bosonchain.chain import ChainParams


def assert_multiset_close(got, want, tol=1e-9):
    """Order-free comparison of two complex spectra (greedy nearest match)."""
    got = np.asarray(got, dtype=complex).ravel()
    want = list(np.asarray(want, dtype=complex).ravel())
    assert got.size == len(want), f"size mismatch {got.size} vs {len(want)}"
    for g in got:
        dists = [abs(g - w) for w in want]
        i = int(np.argmin(dists))
        assert dists[i] < tol, f"no partner for {g} within {tol} (best {dists[i]:.3e})"
        want.pop(i)


def random_stable_params(rng, n_cells=None, kappa=None, real=True, lockstep=False):
    """Random parameters with both effective couplings well-defined.

    lockstep=True ties delta2/t2 = delta1/t1 (no skin effect, sigma3^2 = s1*s2).
    """
    t1 = rng.uniform(0.3, 1.5)
    d_frac = rng.uniform(0.05, 0.85)     # |Delta1|/t1
    delta1 = d_frac * t1
    q_t = rng.uniform(0.3, 4.0)
    if lockstep:
        q_delta = q_t
    else:
        # |Delta2|/|t2| = u < 1 keeps sigma2 > 0
        u = rng.uniform(0.0, 0.85)
        q_delta = q_t * u / d_frac
    phases = {}
    if real:
        phases["phi_t"] = float(rng.choice([0.0, np.pi]))
        phases["phi_delta"] = phases["phi_t"] if lockstep else float(rng.choice([0.0, np.pi]))
    else:
        phases["phi_t"] = float(rng.uniform(0, 2 * np.pi))
        phases["phi_delta"] = float(rng.uniform(0, 2 * np.pi))
    return ChainParams(
        t1=t1, delta1=delta1, q_t=q_t, q_delta=q_delta,
        n_cells=int(n_cells if n_cells is not None else rng.integers(2, 7)),
        kappa=float(kappa if kappa is not None else rng.uniform(0.01, 1.0)),
        **phases)


def random_analytic_params(rng, n_cells=None, kappa=None, n_th_choices=(0.0, 0.5),
                           max_profile=2.5):
    """Real-coupling stable draw with a bounded squeezing profile.

    max|r_k| <= max_profile keeps the moment magnitudes representable enough
    for absolute cross-route comparisons at the 1e-8 level.
    """
    from bosonchain.chain import squeeze_transform

    while True:
        p = random_stable_params(rng, n_cells=n_cells, kappa=kappa, real=True)
        p = p.replace(n_th=float(rng.choice(list(n_th_choices))))
        if np.max(np.abs(squeeze_transform(p).r)) <= max_profile:
            return p


@pytest.fixture
def rng():
    return np.random.default_rng(20260817)
