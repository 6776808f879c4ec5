"""Hyperelliptic Jacobians: Cantor arithmetic, counting, torsion certificates."""

from .certify import (
    TorsionCertificate,
    certify_torsion_rank,
    verify_torsion_certificate,
)
from .counting import (
    class_order,
    count_points_fq,
    curve_point_counts,
    jacobian_order,
    jacobian_order_bsgs,
    jacobian_order_zeta,
    weil_interval,
    zeta_numerator,
)
from .curve import (
    HyperCurve,
    PointMap,
    bad_primes,
    curve_from_json,
    curve_from_poly,
    curve_to_json,
    is_good_prime,
    move_root_to_infinity,
    reduce_curve_mod,
)
from .enumerate import all_reduced_divisors, group_table
from .functions import divisor_of_function, function_divisor_from_even_model
from .mumford import (
    MumfordDivisor,
    cantor_add,
    cantor_neg,
    divisor_of_point,
    identity_divisor,
    is_identity,
    mumford,
    scalar_mul,
)

__all__ = [
    "HyperCurve",
    "MumfordDivisor",
    "PointMap",
    "TorsionCertificate",
    "all_reduced_divisors",
    "bad_primes",
    "cantor_add",
    "cantor_neg",
    "certify_torsion_rank",
    "class_order",
    "count_points_fq",
    "curve_from_json",
    "curve_from_poly",
    "curve_point_counts",
    "curve_to_json",
    "divisor_of_function",
    "divisor_of_point",
    "function_divisor_from_even_model",
    "group_table",
    "identity_divisor",
    "is_good_prime",
    "is_identity",
    "jacobian_order",
    "jacobian_order_bsgs",
    "jacobian_order_zeta",
    "move_root_to_infinity",
    "mumford",
    "reduce_curve_mod",
    "scalar_mul",
    "verify_torsion_certificate",
    "weil_interval",
    "zeta_numerator",
]
