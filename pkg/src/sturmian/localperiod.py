"""Repetition words and local periods in characteristic Sturmian words.

Two independent routes to the local period p(n):

* :func:`oracle_repetition_word` searches the word itself for the shortest
  repetition word at ``n``;
* :func:`local_period_fast` reads it off the Ostrowski representation of
  ``n + 1`` (trailing zeros plus one exceptional digit pattern).

A factor ``u`` starting at position ``i`` is a repetition word when the two
sides of the cut agree on their overlap: either ``u`` is a suffix of the
left context ``w[0..i-1]`` or the left context is a suffix of ``u``.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Optional

from .numeration import encode, meets_exception, shift, decode, trailing_zeros
from .words import BlockTable, morphism_apply

__all__ = [
    "PeriodResult",
    "NoRepetitionWord",
    "is_repetition_word_at",
    "oracle_repetition_word",
    "local_period_oracle",
    "local_period_fast",
    "local_period",
    "is_conjugate",
    "image_position",
    "corresponding_position",
    "lift_repetition",
]


class NoRepetitionWord(LookupError):
    """No repetition word was found within the requested length bound."""


@dataclass(frozen=True)
class PeriodResult:
    position: int
    block_index: int
    period: int
    exception_applied: bool
    repetition_word: Optional[str] = None

    def to_json(self) -> dict:
        return asdict(self)


def _prefix(source, length: int) -> str:
    if isinstance(source, BlockTable):
        return source.word_prefix(length)
    if len(source) < length:
        raise ValueError(f"word prefix of length {len(source)} is shorter than {length}")
    return source[:length]


def _matches_left(left: str, candidate: str) -> bool:
    if len(candidate) <= len(left):
        return left.endswith(candidate)
    return candidate.endswith(left)


def is_repetition_word_at(source, i: int, candidate: str) -> bool:
    """Whether ``candidate`` is a repetition word at position ``i``.

    ``source`` is a :class:`BlockTable` or a sufficiently long prefix of
    the word.  ``candidate`` must actually occur at ``i``; a candidate that
    does not is reported as not being a repetition word.
    """
    if not candidate:
        raise ValueError("repetition words are nonempty")
    w = _prefix(source, i + len(candidate))
    if w[i:] != candidate:
        return False
    return _matches_left(w[:i], candidate)


def oracle_repetition_word(table: BlockTable, n: int, max_len: int) -> str:
    """Shortest repetition word at ``n`` of length at most ``max_len``.

    Candidate lengths are tried in increasing order directly on the word.
    Raises :class:`NoRepetitionWord` when none fits inside the bound.
    """
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    w = table.word_prefix(n + max_len)
    left = w[:n]
    for length in range(1, max_len + 1):
        candidate = w[n:n + length]
        if _matches_left(left, candidate):
            return candidate
    raise NoRepetitionWord(f"no repetition word of length <= {max_len} at {n}")


def local_period_oracle(table: BlockTable, n: int, start: int = 16) -> str:
    """Oracle search with the bound doubled until it reaches 4(n+2)."""
    cap = 4 * (n + 2)
    bound = min(start, cap)
    while True:
        try:
            return oracle_repetition_word(table, n, bound)
        except NoRepetitionWord:
            if bound >= cap:
                raise
            bound = min(2 * bound, cap)


def local_period_fast(table: BlockTable, n: int) -> PeriodResult:
    """Local period at ``n`` from the Ostrowski digits of ``n + 1``."""
    if n < 0:
        raise ValueError("position must be nonnegative")
    d = encode(n + 1, table)
    t = trailing_zeros(d)
    exceptional = meets_exception(d)
    index = t + 1 if exceptional else t
    return PeriodResult(n, index, table.block_length(index), exceptional)


def local_period(table: BlockTable, n: int, oracle: bool = False) -> PeriodResult:
    """:func:`local_period_fast`, optionally with the oracle's word attached."""
    result = local_period_fast(table, n)
    if not oracle:
        return result
    word = local_period_oracle(table, n)
    return PeriodResult(result.position, result.block_index, result.period,
                        result.exception_applied, word)


def is_conjugate(x: str, y: str) -> bool:
    return len(x) == len(y) and x in y + y


def image_position(k: int, beta_table: BlockTable, m: int) -> int:
    """The ``n`` with W(alpha)[0..n] = phi_k(W(beta)[0..m])."""
    prefix = beta_table.word_prefix(m + 1)
    ones = prefix.count("1")
    return (k + 1) * (len(prefix) - ones) + ones - 1


def corresponding_position(table: BlockTable, n: int) -> Optional[int]:
    """The ``m`` with W(alpha)[0..n] = phi_{a_0}(W(beta)[0..m]), if any.

    Such an ``m`` exists exactly when the Ostrowski representation of
    ``n + 1`` ends in 0; it is one less than the value of the remaining
    digits read over the tail sequence.
    """
    d = encode(n + 1, table)
    rest, d0 = shift(d)
    if d0:
        return None
    return decode(rest) - 1


def lift_repetition(k: int, beta_table: BlockTable, m: int, u: str,
                    n: Optional[int] = None) -> str:
    """Carry a repetition word ``u`` at ``m`` in W(beta) through phi_k.

    The result is a repetition word at the image position in W(alpha),
    where alpha is ``k`` followed by beta, and it is a conjugate of
    ``phi_k(u)``.  When ``n`` is given it must be that image position.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if n is not None and n != image_position(k, beta_table, m):
        raise ValueError(f"position {n} does not correspond to {m} under phi_{k}")
    if not is_repetition_word_at(beta_table, m, u):
        raise ValueError(f"{u!r} is not a repetition word at position {m}")
    if beta_table.letter_at(m) == "1":
        return morphism_apply(k, u)
    # u = 0u'; the image starts at the 1 closing phi_k(0)
    return "1" + morphism_apply(k, u[1:]) + "0" * k
