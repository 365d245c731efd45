import os

from hypothesis import HealthCheck, settings, strategies as st

from hlnabla.exact import LaurentPoly

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", deadline=None, max_examples=500,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def laurent_polys(min_exp=-3, max_exp=4, max_terms=5, coeff=20, allow_zero=True):
    mono = st.tuples(st.integers(min_exp, max_exp), st.integers(min_exp, max_exp))
    coeffs = st.integers(-coeff, coeff)
    return st.dictionaries(mono, coeffs, max_size=max_terms,
                           min_size=0 if allow_zero else 1).map(LaurentPoly).filter(
        lambda p: allow_zero or not p.is_zero())


def polys(max_exp=4, max_terms=5, coeff=20):
    """Polynomials in Z[q, t] (nonnegative exponents)."""
    return laurent_polys(0, max_exp, max_terms, coeff)
