"""Open bosonic quadratic chains: spectra, steady states, edge entanglement."""

from .bands import (
    band_edges,
    beta_roots,
    bloch_spectrum,
    classify_phase,
    gbz_spectrum,
)
from .chain import (
    ChainParams,
    build_bdg,
    build_coupling_matrix,
    effective_couplings,
    sigma_invariants,
    squeeze_transform,
    validate,
)
from .entanglement import (
    EntanglementReport,
    logneg_general,
    logneg_symmetric,
    pair_report,
    squeezing_degree,
)
from .errors import (
    AnalyticUnsupported,
    BosonChainError,
    NotTopological,
    UnphysicalCovariance,
    UnstableRegime,
    WrongPhase,
)
from .langevin import (
    edge_moments,
    edge_reduced,
    exact_sums,
    optimal_kappa,
    topo_approx,
    trivial_approx,
    two_mode_closed_form,
)
from .spectra import (
    assess_stability,
    bdg_eigenvalues,
    drift_matrix,
    edge_modes,
    ssh_eigendecomposition,
)
from .steady import (
    DiffusionSpec,
    MomentState,
    change_frame,
    evolve_moments,
    moment_ode_rhs,
    physicality_margin,
    steady_moments,
    steady_residual,
    to_quadrature_covariance,
)
from .sweep import (
    SweepAxis,
    SweepSpec,
    companion_spec,
    preset,
    read_csv,
    render_plot,
    run_sweep,
    spec_from_dict,
    spec_to_dict,
    write_csv,
)

__all__ = [
    "ChainParams",
    "build_bdg",
    "build_coupling_matrix",
    "effective_couplings",
    "sigma_invariants",
    "squeeze_transform",
    "validate",
    "band_edges",
    "beta_roots",
    "bloch_spectrum",
    "classify_phase",
    "gbz_spectrum",
    "assess_stability",
    "bdg_eigenvalues",
    "drift_matrix",
    "edge_modes",
    "ssh_eigendecomposition",
    "DiffusionSpec",
    "MomentState",
    "change_frame",
    "evolve_moments",
    "moment_ode_rhs",
    "physicality_margin",
    "steady_moments",
    "steady_residual",
    "to_quadrature_covariance",
    "edge_moments",
    "edge_reduced",
    "exact_sums",
    "optimal_kappa",
    "topo_approx",
    "trivial_approx",
    "two_mode_closed_form",
    "EntanglementReport",
    "logneg_general",
    "logneg_symmetric",
    "pair_report",
    "squeezing_degree",
    "SweepAxis",
    "SweepSpec",
    "companion_spec",
    "preset",
    "read_csv",
    "render_plot",
    "run_sweep",
    "spec_from_dict",
    "spec_to_dict",
    "write_csv",
    "AnalyticUnsupported",
    "BosonChainError",
    "NotTopological",
    "UnphysicalCovariance",
    "UnstableRegime",
    "WrongPhase",
]
