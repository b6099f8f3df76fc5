"""Folded subspace codes over GF(q^m): encoding, operator channel, list and
probabilistic unique decoding, and the accompanying counting bounds."""

from .algebra import ExtField, FieldElem, Mat, PrimeField, ext_field_new, frobenius, kernel_basis, rank, rref
from .bounds import avg_list_bound, ball_volume, failure_bound, gaussian_binom, shell_count
from .channel import ChannelParams, ReceivedWord, sample_deletion, sample_error_space, transmit
from .decoder import (DecodeResult, build_interpolation_matrix, build_root_system, build_tuples,
                      decode_list, decode_unique, degree_bound, interpolate_basis, solve_root_system,
                      verify_root_identity)
from .errors import *  # noqa: F401,F403
from .folded import (Codeword, FSCodeParams, encode, list_radius, min_distance, normalized_radii,
                     params_new, unique_radius)
from .kernels import BACKEND
from .linpoly import LinPoly, lp_compose, lp_eval, moore_matrix
from .sim import SimConfig, TrialStats, emit_radius_table, run_trials, trial_seed
from .subspace import SubspaceBasis, canonicalize, direct_sum, intersection_dim, subspace_distance, subspace_sum

__version__ = "0.1.0"
