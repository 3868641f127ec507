"""Exact Stirling, Lah and binomial convolutions with series transforms."""

from .kernel import (
    Polynomial,
    TriangleCache,
    TriangleKind,
    bell,
    binom_gen,
    binom_int,
    exp_poly,
    exp_poly_eval,
    lah,
    laguerre,
    stirling1_signed,
    stirling1_unsigned,
    stirling2,
)
from .series import (
    Flavor,
    Series,
    TransformKind,
    apply_transform,
    dual_path_check,
    kernel_gf,
    series_compose,
    series_exp,
    series_log1p,
    series_mul,
    series_new,
    series_pow,
)
from .identities import (
    CheckReport,
    ExploreId,
    IdentityId,
    IdentityInstance,
    check_grid,
    check_instance,
    explore,
    positivity_scan,
)

__version__ = "0.1.0"
