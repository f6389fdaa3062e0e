"""Ostrowski numeration attached to a directive sequence.

A representation is stored most-significant digit first, the way it is
written: ``1021`` means d_3 = 1, d_2 = 0, d_1 = 2, d_0 = 1 and stands for
1*q_3 + 0*q_2 + 2*q_1 + 1*q_0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .words import BlockTable, DirectiveSequence, parse_directive

__all__ = [
    "OstrowskiDigits",
    "parse_digits",
    "format_digits",
    "is_valid",
    "encode",
    "decode",
    "trailing_zeros",
    "meets_exception",
    "shift",
    "decompose_prefix",
]


def _as_alpha(alpha) -> DirectiveSequence:
    if isinstance(alpha, BlockTable):
        return alpha.alpha
    if isinstance(alpha, str):
        return parse_directive(alpha)
    return alpha


def parse_digits(text: str) -> tuple[int, ...]:
    """Read ``"1021"`` or ``"1,0,12,1"`` into a digit tuple."""
    text = text.strip()
    if not text:
        raise ValueError("empty digit string")
    if "," in text:
        parts = [p.strip() for p in text.split(",")]
    else:
        parts = list(text)
    if not all(p.isdigit() for p in parts):
        raise ValueError(f"malformed digit string {text!r}")
    return tuple(int(p) for p in parts)


def format_digits(digits: Sequence[int]) -> str:
    if all(d <= 9 for d in digits):
        return "".join(map(str, digits))
    return ",".join(map(str, digits))


def _canonical(digits: Sequence[int]) -> tuple[int, ...]:
    digits = tuple(digits)
    k = 0
    while k < len(digits) - 1 and digits[k] == 0:
        k += 1
    return digits[k:] or (0,)


@dataclass(frozen=True)
class OstrowskiDigits:
    """Digits d_k ... d_0 of an Ostrowski representation over ``alpha``."""

    digits: tuple[int, ...]
    alpha: DirectiveSequence

    def __post_init__(self):
        object.__setattr__(self, "digits", _canonical(self.digits))
        object.__setattr__(self, "alpha", _as_alpha(self.alpha))
        if any(d < 0 for d in self.digits):
            raise ValueError("digits must be nonnegative")

    @classmethod
    def parse(cls, text: str, alpha) -> "OstrowskiDigits":
        return cls(parse_digits(text), _as_alpha(alpha))

    @property
    def low_first(self) -> tuple[int, ...]:
        """Digits indexed by position: ``low_first[i] == d_i``."""
        return self.digits[::-1]

    def __len__(self):
        return len(self.digits)

    def __str__(self):
        return format_digits(self.digits)

    def to_json(self) -> dict:
        return {"digits": list(self.digits), "alpha": str(self.alpha)}


def is_valid(digits, alpha=None) -> bool:
    """Check 0 <= d_i <= a_i, and d_i == a_i implies d_{i-1} == 0."""
    if isinstance(digits, OstrowskiDigits):
        alpha = digits.alpha if alpha is None else alpha
        digits = digits.digits
    elif isinstance(digits, str):
        digits = parse_digits(digits)
    if alpha is None:
        raise TypeError("a directive sequence is required for bare digits")
    alpha = _as_alpha(alpha)
    d = tuple(digits)[::-1]
    for i, di in enumerate(d):
        if di < 0:
            raise ValueError("digits must be nonnegative")
        if di == 0:
            continue
        a = alpha.term(i)
        if di > a:
            return False
        if di == a and i >= 1 and d[i - 1] != 0:
            return False
    return True


def encode(n: int, alpha) -> OstrowskiDigits:
    """Greedy most-significant-first Ostrowski representation of ``n``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    table = alpha if isinstance(alpha, BlockTable) else BlockTable(_as_alpha(alpha))
    top = table.index_covering(n, strict=True)  # q_top > n
    digits = []
    rem = n
    for i in range(top - 1, -1, -1):
        q = table.block_length(i)
        digits.append(rem // q)
        rem %= q
    result = OstrowskiDigits(tuple(digits) or (0,), table.alpha)
    assert rem == 0 and is_valid(result), (n, result)
    return result


def decode(d: OstrowskiDigits, table: BlockTable | None = None) -> int:
    if table is None:
        table = BlockTable(d.alpha)
    if not is_valid(d, table.alpha):
        raise ValueError(f"{d} is not a valid representation over {d.alpha}")
    return sum(di * table.block_length(i) for i, di in enumerate(d.low_first))


def _require_positive(d: OstrowskiDigits) -> None:
    if not any(d.digits):
        raise ValueError("representation of zero has no trailing-zero count")


def trailing_zeros(d: OstrowskiDigits) -> int:
    _require_positive(d)
    t = 0
    for di in d.low_first:
        if di:
            return t
        t += 1
    return t


def meets_exception(d: OstrowskiDigits) -> bool:
    """True when the last nonzero digit is 1, there is another nonzero digit,
    and an even number of zeros separates the last two nonzero digits."""
    _require_positive(d)
    nonzero = [i for i, di in enumerate(d.low_first) if di]
    if len(nonzero) < 2:
        return False
    last, second = nonzero[0], nonzero[1]
    return d.low_first[last] == 1 and (second - last - 1) % 2 == 0


def shift(d: OstrowskiDigits) -> tuple[OstrowskiDigits, int]:
    """Drop d_0 and reinterpret d_k ... d_1 over the tail sequence."""
    if not is_valid(d, d.alpha):
        raise ValueError(f"{d} is not a valid representation over {d.alpha}")
    beta = d.alpha.tail()
    rest = d.digits[:-1] or (0,)
    return OstrowskiDigits(rest, beta), d.digits[-1]


def decompose_prefix(n: int, table: BlockTable) -> list[tuple[int, int]]:
    """Block exponents (i, d_i) with d_i > 0, highest block first.

    Concatenating ``table.block(i) * d_i`` over the list gives the first
    ``n`` letters of the word.
    """
    d = encode(n, table)
    k = len(d) - 1
    return [(k - j, dj) for j, dj in enumerate(d.digits) if dj]
