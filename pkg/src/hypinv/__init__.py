"""Exact verification of inverse pairs of hypergeometric sequence transforms.

Everything is computed in the Gaussian rationals, so identities are checked
by exact equality rather than to a tolerance.
"""

from .errors import DegreeExceedsN, DenominatorPole, HypinvError, InvalidParameter, NonTerminating
from .exactnum import GaussianRational, Rational, as_gaussian, binomial, factorial, pochhammer
from .hyper import HypSeriesSpec, classify, eval_terminating, hyp, truncation_index
from .orthopoly import IDENTITIES, FamilySpec, eval_poly, verify_identity
from .report import VerificationReport
from .seqtransform import TransformSpec, apply, binomial_transform, invert, kernel_for
from .sums import SUM_IDENTITIES, rederive, verify_sum

__version__ = "0.1.0"

__all__ = [
    "DegreeExceedsN",
    "DenominatorPole",
    "HypinvError",
    "InvalidParameter",
    "NonTerminating",
    "GaussianRational",
    "Rational",
    "as_gaussian",
    "binomial",
    "factorial",
    "pochhammer",
    "HypSeriesSpec",
    "classify",
    "eval_terminating",
    "hyp",
    "truncation_index",
    "IDENTITIES",
    "FamilySpec",
    "eval_poly",
    "verify_identity",
    "VerificationReport",
    "TransformSpec",
    "apply",
    "binomial_transform",
    "invert",
    "kernel_for",
    "SUM_IDENTITIES",
    "rederive",
    "verify_sum",
]
