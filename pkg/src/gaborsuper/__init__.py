"""Vector-channel Gabor frames on Z_L: Walnut/Janssen operators, dual windows,
weighted amalgam norms and the algebra of weighted shifts."""

from .amalgam import (AmalgamParams, Weight, amalgam_norm, make_weight,
                      moderate_constant)
from .core import as_signal, inner, modulate, rank_one_apply, translate
from .duality import (FrameBounds, dual_window, frame_bounds, inverse_frame_apply,
                      painless_dual, truncation_error_profile)
from .gabor import (GaborCoefficients, GaborLattice, analyze, coeff_norm_spq,
                    frame_operator_direct, synthesize)
from .shiftalg import (ShiftOperator, algebra_norm, extract_coeffs, shift_apply,
                       shift_compose, shift_involution, spectral_invert)
from .walnut import (CorrelationFamily, JanssenTable, correlations, janssen_apply,
                     janssen_coeffs, multiwindow_apply, walnut_apply,
                     wexler_raz_check)

__version__ = "0.1.0"
