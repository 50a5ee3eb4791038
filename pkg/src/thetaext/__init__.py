"""theta^alpha-closure calculus and continuous extension of maps on finite spaces."""

from .kernels import BACKEND
from .maps import (ConditionVerdict, DenseMapInstance, Extension, brute_force_extensions, check,
                   check_pairwise, check_plus_alpha, check_plusplus_alpha, check_star, check_star_alpha,
                   construct_extension, extension_exists, is_continuous, is_theta_alpha_continuous, phi,
                   x_theta_interior_set)
from .operators import (closure, hull_chain, interior, is_hull, is_theta_closed, min_hull, min_nbhd, shrink,
                        theta_closure, theta_interior)
from .ordinal import OMEGA, parse_alpha
from .separation import (classify, is_regular, is_regular_u_alpha, is_s_n, is_u_alpha, regular_u_alpha_witness,
                         s_n_witness, u_alpha_witness)
from .space import FiniteSpace, PointSet, validate_space

__version__ = "0.1.0"
