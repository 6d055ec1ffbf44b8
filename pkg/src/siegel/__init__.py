"""Numerical toolkit for holomorphic function spaces on the Siegel upper
half-space: kernels, projections, transforms, differential operators, and
seeded verification suites for the closed-form identities they satisfy."""

from .errors import DecayError, DimensionMismatch, DomainError
from .geometry import (AffineMap, BallPoint, HeisenbergElement, Point,
                       PointClass, ball_point, base_point, bergman_metric,
                       cayley, cayley_inv, dilate, heis_act, heis_inv,
                       heis_mul, jacobian_phi, jacobian_phi_inv, point, rho,
                       rho2, sigma, sigma_inv)
from .holofun import (HoloFun, MultiIndex, SpaceTag, apply_L, apply_L_alpha,
                      bloch_seminorm_estimate, cauchy_derivative, conj_coord,
                      coord, const, invariant_gradient, kernel_pow,
                      log_kernel, multi_index, standard_catalog, standard_grid,
                      tagged, weighted_derivative_sup)
from .operators import (DiscreteMeasure, KernelSpec, hardy_transfer,
                        hardy_transfer_fn, kernel, measure_embed, pairing,
                        project, reproduce)
from .quadrature import (Engine, IntegralResult, QuadratureSpec,
                         bergman_norm_B, bergman_norm_U, hardy_norm_B,
                         hardy_norm_U, integrate_U, integrate_bU)
from .special import (WeightParams, b_coeff, c_lambda, cpow_principal,
                      gamma_fn, hardy_constant, identity_rhs_boundary,
                      identity_rhs_volume)
from .verify import SuiteConfig, VerificationReport, run_suites

__version__ = "0.1.0"
