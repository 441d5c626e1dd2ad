"""Balanced interleaved sequences built from Legendre-binarized geometric sequences."""

from .complexity import (
    LinearComplexityReport,
    berlekamp_massey,
    g_of,
    lc_report,
    minimal_poly_gcd,
    nu2,
)
from .correlation import (
    CorrelationPrediction,
    CorrelationProfile,
    correlate,
    correlate_packed,
    lemma2_decompose,
    predict_cross_correlation,
    predict_se_autocorrelation,
    predict_t1_autocorrelation,
)
from .errors import (
    FieldConstructionError,
    GeoseqError,
    ParameterError,
    PeriodError,
    VerificationError,
)
from .field import (
    ExtFieldElement,
    FieldContext,
    ext_mul,
    find_irreducible,
    find_primitive,
    legendre,
    trace,
    underline_mod,
)
from .gf2poly import Gf2Poly, gf2_divmod, gf2_gcd, xn_minus_1
from .sequences import BinarySequence, gen_se, gen_t1, gen_t2, interleave, left_shift

__version__ = "0.1.0"
