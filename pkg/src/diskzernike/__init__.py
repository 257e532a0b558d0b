"""Generalized Zernike polynomials on the unit disk, in coefficient space.

The basis ``P[alpha]_{m,n}`` is orthogonal under the weight
``(1 - |x|^2)**alpha``. Polynomials are stored as sparse coefficient
vectors; differentiation, changes of weight parameter, norms and truncation
all act on coefficients directly.
"""

from .basis import (
    WirtingerDirection,
    change_parameter,
    connection_coefficients,
    derivative_coeffs,
    monomial_expansion,
    raise_parameter_one,
    reflect,
    series_expansion,
    to_parameter,
)
from .calculus import (
    SeminormConvention,
    angular_derivative,
    apply_operator_L,
    bernstein_sum,
    cartesian_derivative,
    gradient_norm_sq,
    l2_inner_product,
    multi_derivative,
    norm_sq,
    sobolev_norm_sq,
    sobolev_seminorm_sq,
    wirtinger_derivative,
    wz_norm_sq,
)
from .core import (
    ModeIndex,
    ZernikePoly,
    eigenvalue,
    evaluate,
    linear_combine,
    make_poly,
    mode_norm_sq,
)
from .errors import (
    ArgumentError,
    ConstructionError,
    DomainError,
    ParameterError,
    ParameterMismatchError,
    PreconditionError,
    ZernikeError,
)
from .experiments import (
    RateTable,
    build_t,
    closed_form_R_H1,
    closed_form_R_L2,
    closed_form_t_seminorm_complex,
    l2_rate_sweep,
    markov_sweep,
    rate_table,
    reference_exponent,
    sharpness_residual,
)
from .jacobi import JacobiParams, UnsupportedParameterError, jacobi_connection, jacobi_eval
from .kernels import BACKEND
from .projection import (
    commutator,
    commutator_norm_sq,
    commutator_norm_sq_diagonal,
    expand_function,
    residual,
    tail_norm_sq,
    truncate,
)
from .quadrature import DiskQuadrature, disk_rule, gauss_jacobi, integrate, rule_for_degree
from .special import LogScaled, gamma_ratio, log_gamma_ratio, log_gamma_shift, pochhammer

__version__ = "0.1.0"

__all__ = [
    "WirtingerDirection",
    "change_parameter",
    "connection_coefficients",
    "derivative_coeffs",
    "monomial_expansion",
    "raise_parameter_one",
    "reflect",
    "series_expansion",
    "to_parameter",
    "SeminormConvention",
    "angular_derivative",
    "apply_operator_L",
    "bernstein_sum",
    "cartesian_derivative",
    "gradient_norm_sq",
    "l2_inner_product",
    "multi_derivative",
    "norm_sq",
    "sobolev_norm_sq",
    "sobolev_seminorm_sq",
    "wirtinger_derivative",
    "wz_norm_sq",
    "ModeIndex",
    "ZernikePoly",
    "eigenvalue",
    "evaluate",
    "linear_combine",
    "make_poly",
    "mode_norm_sq",
    "ArgumentError",
    "ConstructionError",
    "DomainError",
    "ParameterError",
    "ParameterMismatchError",
    "PreconditionError",
    "ZernikeError",
    "RateTable",
    "build_t",
    "closed_form_R_H1",
    "closed_form_R_L2",
    "closed_form_t_seminorm_complex",
    "l2_rate_sweep",
    "markov_sweep",
    "rate_table",
    "reference_exponent",
    "sharpness_residual",
    "JacobiParams",
    "UnsupportedParameterError",
    "jacobi_connection",
    "jacobi_eval",
    "BACKEND",
    "commutator",
    "commutator_norm_sq",
    "commutator_norm_sq_diagonal",
    "expand_function",
    "residual",
    "tail_norm_sq",
    "truncate",
    "DiskQuadrature",
    "disk_rule",
    "gauss_jacobi",
    "integrate",
    "rule_for_degree",
    "LogScaled",
    "gamma_ratio",
    "log_gamma_ratio",
    "log_gamma_shift",
    "pochhammer",
]
