"""Graded commutative algebra over F_p: resolutions over hypersurface rings,
socle degrees of Frobenius powers, and alternating matrix factorizations."""

from .errors import *  # noqa: F401,F403
from .field import PrimeField, is_prime
from .poly import Monomial, Polynomial, PolynomialRing, format_polynomial, grevlex_compare
from .parse import parse_polynomial
from .matrix import GradedMatrix
from .groebner import (FreeModuleElement, GroebnerBasis, buchberger, colon, contains,
                       minimal_generators, normal_form, syzygies)
from .resolution import (BettiTable, ResolutionPrefix, detect_periodicity, minimize,
                         resolve_over_P, resolve_over_R, syzygies_over_P, syzygies_over_R)
from .artinian import (GorensteinData, SocleProfile, a_invariant, back_twist, hilbert_function,
                       is_artinian, socle_profile)
from .theorem import (HypothesisVerdict, ShiftReport, TailPrediction, TheoremReport,
                      canonical_generator_degrees, check_hypotheses, frobenius_shift_check,
                      predict_tail, check_pure_socle, pure_socle_shape, colon_tail_compare,
                      verify_theorem)
from .frobenius import bracket_power, run_sweep
from .mf import (AlternatingPair, MatrixFactorization, adjoint_alternating_check,
                 alternating_normalize, determinant, extract_mf, verify_mf)

__version__ = "0.1.0"
