"""Symmetric and antisymmetric exponential and cosine transforms on triangular grids."""

from .analysis import (
    ErrorTableRow,
    QuadratureSpec,
    continuous_coefficient,
    cosine_norm,
    error_table,
    gaussian_model,
    gibbs_profile,
    integrate_fundamental,
    l2_error,
    laplace_residual,
    ripple_model,
)
from .basis import (
    FAMILIES,
    FrequencyPair,
    eval_cos_anti,
    eval_cos_sym,
    eval_exp_anti,
    eval_exp_sym,
    evaluate,
)
from .cosine import (
    CosineNodeSet,
    CosineSpectrum,
    amdct,
    derive_from_trig,
    eval_cosine_interpolant,
    extend_even,
    extend_R,
    smdct,
)
from .estimators import TriangularInterpolator, TriangularTransform
from .grids import Grid, GridKind, GridPoint, GridSpec, fundamental_domain_contains, make_grid
from .interpolation import (
    InterpCoefficients,
    TrigFormCoefficients,
    antisym_extend,
    beta_to_c,
    eval_interpolant,
    interp_anti,
    interp_full,
    interp_sym,
    interpolate,
    sym_extend,
    trig_form,
)
from .transforms import (
    SampleSet,
    Spectrum,
    adft_forward,
    adft_inverse,
    check_discrete_orthogonality,
    sdft_forward,
    sdft_inverse,
)

__version__ = "0.1.0"
