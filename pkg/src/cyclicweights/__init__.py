"""Weight distributions of the cyclic codes C(q,m,h,e), by enumeration and in closed form."""

from .closedform import closed_weight_distribution, select_case
from .code import (
    BudgetExceeded,
    CodeParams,
    ParameterError,
    WeightDistribution,
    brute_weight_distribution,
    code_params,
    derive_params,
    format_enumerator,
    parse_enumerator,
)
from .ffield import FieldCtx, make_field

__all__ = [
    "BudgetExceeded",
    "CodeParams",
    "FieldCtx",
    "ParameterError",
    "WeightDistribution",
    "brute_weight_distribution",
    "closed_weight_distribution",
    "code_params",
    "derive_params",
    "format_enumerator",
    "make_field",
    "parse_enumerator",
    "select_case",
]
