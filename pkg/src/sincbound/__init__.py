"""SE- and DE-Sinc approximation on infinite and semi-infinite intervals
with explicit, computable a-priori error bounds."""

from .approximator import Approximant, IntervalTag, build, evaluate, evaluate_many, max_error_on_grid
from .errors import BuildError, DomainError, PreconditionError, SincError
from .sinc_core import CardinalSum, cardinal_sum, sinc_basis
from .theory import (
    CaseTag,
    ErrorBound,
    FunctionClass,
    RateTag,
    SincParams,
    bound_value,
    constant_de,
    constant_se,
    de_min_n,
    envelope,
    error_bound,
    rescale_case3,
    select_params,
    select_params_de,
    select_params_de3,
    select_params_se,
)
from .transforms import TransformKind, forward, inverse

__version__ = "0.1.0"
