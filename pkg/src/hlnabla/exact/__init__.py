"""Exact arithmetic in Q(q, t)."""

from .poly import ONE, Q, T, ZERO, LaurentPoly
from .qseries import (IDENTITY_TAGS, IdentityRangeError, binom2, check_identity,
                      identity_grid, poch_lp, poch_mono, pochhammer, tbinomial,
                      tfactorial)
from .ratfunc import RatFunc, canonical, rf_sum

__all__ = [
    "LaurentPoly", "RatFunc", "Q", "T", "ONE", "ZERO", "canonical", "rf_sum",
    "pochhammer", "poch_lp", "poch_mono", "tbinomial", "tfactorial", "binom2",
    "check_identity", "identity_grid", "IDENTITY_TAGS", "IdentityRangeError",
]
