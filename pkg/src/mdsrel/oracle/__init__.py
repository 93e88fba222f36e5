"""Ground-truth subsystem: finite fields, real Reed-Solomon codes, a
bounded-distance reproducing decoder, exhaustive censuses, and a Monte
Carlo channel simulator."""
from .census import (ball_words, cauchy_matrix, census_events, census_irwe,
                     census_sphere, census_totally_nonzero)
from .code import (EVENTS, DecodeResult, SystematicCode, bdd_decode,
                   classify_event, repetition_code, rs_systematic,
                   submatrix_regularity)
from .field import MODULI, FiniteField, make_field
from .mc import MonteCarloResult, monte_carlo

__all__ = [
    "ball_words", "cauchy_matrix", "census_events", "census_irwe",
    "census_sphere", "census_totally_nonzero", "EVENTS", "DecodeResult",
    "SystematicCode", "bdd_decode", "classify_event", "repetition_code",
    "rs_systematic", "submatrix_regularity", "MODULI", "FiniteField",
    "make_field",
    "MonteCarloResult", "monte_carlo",
]
