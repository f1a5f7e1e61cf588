"""Polarization entropy versus depolarization index of scattering media.

Mueller-matrix analysis through the Hermitian H matrix, the analytic bounds
of the admissible (D, E) domain, Monte Carlo sampling of that domain and a
random-matrix model of multi-mode scattering.
"""
__version__ = "0.1.0"

from .bounds import (
    CUSPS,
    CurveId,
    boundary_lower,
    boundary_upper,
    branch_f,
    contains,
    curve_entropy,
    e13,
    fit_gamma,
    spectrum_for_curve,
)
from .mueller import (
    depolarization_index_from_m,
    depolarization_index_from_spectrum,
    eigenspectrum,
    h_from_mueller,
    is_physical,
    mueller_from_h,
    mueller_from_jones,
    polarization_entropy,
)
from .polarization import (
    apply_mueller,
    coherency_from_stokes,
    degree_of_polarization,
    field_entropy,
    stokes_from_coherency,
)
from .rmt import EnsembleConfig, MediumKind, accumulate_mueller, sweep
from .sampler import SamplerConfig, generate_cloud
