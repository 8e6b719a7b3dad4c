"""Hall algebras of finite modules: structure constants, Hall polynomials,
symmetric functions, and groupoid-level checks."""

from .errors import BoundExceeded, ConsistencyError, HallforgeError, InterpolationError, InvalidArgument
from .partitions import Composition, Partition, conjugate, dominance_leq, n_stat, partitions_of
from .qpoly import QPoly, QRational, q_binomial, q_factorial, q_int
from .algebra import HallElement, TensorElement
from .fq_linear import (FqModule, enumerate_submodules, extension_groupoid_cardinality, flag_count_direct,
                        frame_fiber_cardinality, hall_constant_direct, hall_polynomial, module_of_type)
from .f1 import F1tModule, f1t_hall_constant, f1_hall_constant, count_zero_one_matrices
from .zelevinsky import RowStrictArray, b_polynomial, d_statistic
from .symfunc import SymFunc, elementary_to_monomial, hall_littlewood_image, phi_image
from .hall import green_compatibility_check, hall_multiply, parse_backend
from .groupoids import (FiniteGroupoid, GroupoidFunction, GroupoidSpan, action_groupoid, compose_spans,
                        groupoid_cardinality, homotopy_cardinality, pullback_fn, pushforward,
                        span_to_linear_map, two_pullback)
from .flags import truncated_flag_groupoid, truncated_hall_span, two_segal_cardinality_check

__version__ = "0.1.0"
