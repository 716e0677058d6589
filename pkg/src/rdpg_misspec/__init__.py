"""Latent-position random graphs, spectral embeddings at misspecified
dimensions, and random-matrix diagnostics."""

from .embedding import Embedding, Spectrum, ase, ase_from_spectrum, full_spectrum, trailing_eigvecs
from .errors import (
    ContractError,
    DegenerateSpectrumError,
    DomainError,
    ModelValidityError,
    ParameterError,
)
from .generators import (
    LatentPositions,
    Network,
    NoiseModel,
    SbmSpec,
    binary_rdpg,
    sample_dirichlet_latents,
    sample_grdpg,
    sample_sbm,
    weighted_rdpg,
)
from .harness import (
    Aggregate,
    DimSweepResult,
    ExperimentConfig,
    RateFit,
    TrialRecord,
    aggregate,
    dim_sweep,
    fit_rate,
    run_experiment,
)
from .metrics import MisspecError, underspecified_lower_bound, misspec_error, procrustes_align, two_inf_norm
from .rmt import (
    DelocProfile,
    RmtScaled,
    SemicircleErrorCurve,
    deloc_profile,
    empirical_stieltjes,
    interlacing_check,
    resolvent,
    rmt_scale,
    semicircle_error_curve,
    semicircle_transform,
    wigner_matrix,
)
from .seeding import derive_seed

__version__ = "0.1.0"
