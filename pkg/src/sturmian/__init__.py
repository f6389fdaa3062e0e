"""Characteristic Sturmian words, Ostrowski numeration and local periods."""

from .words import (
    BinaryWord,
    BlockTable,
    DirectiveExhausted,
    DirectiveSequence,
    factor,
    morphism_apply,
    parse_directive,
)
from .numeration import (
    OstrowskiDigits,
    decode,
    decompose_prefix,
    encode,
    is_valid,
    meets_exception,
    shift,
    trailing_zeros,
)
from .localperiod import (
    NoRepetitionWord,
    PeriodResult,
    corresponding_position,
    image_position,
    is_conjugate,
    is_repetition_word_at,
    lift_repetition,
    local_period,
    local_period_fast,
    local_period_oracle,
    oracle_repetition_word,
)

__version__ = "0.1.0"
