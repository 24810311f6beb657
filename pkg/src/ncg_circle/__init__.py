"""Aharonov-Bohm modular momentum and theta-quantization on the circle poset lattice."""
from .abmodel import (
    EVANESCENT,
    GratingConfig,
    ModularMomentum,
    SolenoidConfig,
    ab_diffraction_angle,
    ab_transverse_momentum,
    circle_angle,
    diffraction_angle,
    modular_decompose,
    modular_phase,
    transverse_momentum,
    two_path_intensity,
)
from .continuum import (
    SampledWaveFunction,
    ThetaSector,
    circle_to_momentum,
    covering_projection,
    lattice_continuum_convergence,
    momentum_to_circle,
    quasi_periodicity_residual,
    representation_phase,
    twisted_fd_spectrum,
)
from .gauge import (
    ConnectionForm,
    ThetaSpectrumReport,
    build_connection,
    gauged_dirac,
    laplacian,
    laplacian_spectrum,
    pure_gauge_residual,
    spectral_shift_check,
    universal_curvature,
)
from .operators import (
    AlgebraElement,
    GaugeElement,
    LatticeParams,
    build_dirac,
    build_gauge_element,
    exterior_derivative,
    represent,
    shift_part,
)
from .poset import CirclePoset, build_circle_poset, hasse_edges, is_t0, leq, minimal_open_set
from .spectral import circulant_eigenvalues, hermitian_eigenvalues, max_abs_norm
from .weyl import WeylReport, weyl_residual, weyl_sweep

__version__ = "0.1.0"
