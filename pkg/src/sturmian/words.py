"""Directive sequences, the morphisms phi_k and characteristic blocks.

Binary words are plain ``str`` objects over the characters ``'0'`` and
``'1'``.  Python strings already give exact equality, concatenation
(``+``), repetition (``*``) and prefix/suffix tests, so the only extra
helper is :func:`factor`, which uses inclusive indexing ``w[i..j]``.
"""

from __future__ import annotations

import re
import threading
from dataclasses import dataclass
from typing import Optional

__all__ = [
    "BinaryWord",
    "DirectiveExhausted",
    "DirectiveSequence",
    "BlockTable",
    "parse_directive",
    "morphism_apply",
    "factor",
    "check_word",
]

BinaryWord = str

_DIRECTIVE_RE = re.compile(r"^\s*(\d+(?:\s*,\s*\d+)*)?\s*(?::\s*(\d+(?:\s*,\s*\d+)*))?\s*$")


class DirectiveExhausted(LookupError):
    """Raised when a computation needs a directive term that does not exist."""


@dataclass(frozen=True)
class DirectiveSequence:
    """An eventually periodic sequence of positive integers.

    ``head`` is the finite prefix a_0 ... a_{m-1}; ``cycle``, when given,
    repeats forever afterwards.  Without a cycle the sequence is finite
    and asking for a term past the head raises :class:`DirectiveExhausted`.
    """

    head: tuple[int, ...] = ()
    cycle: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        object.__setattr__(self, "head", tuple(int(a) for a in self.head))
        if self.cycle is not None:
            object.__setattr__(self, "cycle", tuple(int(a) for a in self.cycle))
            if not self.cycle:
                raise ValueError("cycle must be nonempty when present")
        if not self.head and self.cycle is None:
            raise ValueError("directive sequence has no terms")
        for a in self.terms_listed():
            if a < 1:
                raise ValueError(f"directive terms must be >= 1, got {a}")

    def terms_listed(self) -> tuple[int, ...]:
        return self.head + (self.cycle or ())

    @property
    def is_infinite(self) -> bool:
        return self.cycle is not None

    def has_term(self, i: int) -> bool:
        return i >= 0 and (self.cycle is not None or i < len(self.head))

    def term(self, i: int) -> int:
        if i < 0:
            raise IndexError(f"negative directive index {i}")
        if i < len(self.head):
            return self.head[i]
        if self.cycle is None:
            raise DirectiveExhausted(
                f"directive sequence {self} has only {len(self.head)} terms; "
                f"term {i} requested"
            )
        return self.cycle[(i - len(self.head)) % len(self.cycle)]

    __getitem__ = term

    def tail(self) -> "DirectiveSequence":
        """The sequence a_1, a_2, ... with the first term dropped."""
        if self.head:
            if len(self.head) == 1 and self.cycle is None:
                raise DirectiveExhausted(f"tail of {self} is empty")
            return DirectiveSequence(self.head[1:], self.cycle)
        assert self.cycle is not None
        return DirectiveSequence((), self.cycle[1:] + self.cycle[:1])

    def __str__(self) -> str:
        text = ",".join(map(str, self.head))
        if self.cycle is not None:
            text += ":" + ",".join(map(str, self.cycle))
        return text


def parse_directive(text: str) -> DirectiveSequence:
    """Parse ``head[:cycle]``, e.g. ``"1,3,2,2:2"`` or ``":1"`` (Fibonacci)."""
    match = _DIRECTIVE_RE.match(text)
    if match is None:
        raise ValueError(f"malformed directive sequence {text!r}")
    head_text, cycle_text = match.groups()
    if head_text is None and cycle_text is None:
        raise ValueError("empty directive sequence")

    def ints(part):
        return tuple(int(tok) for tok in part.split(","))

    head = ints(head_text) if head_text else ()
    cycle = ints(cycle_text) if cycle_text else None
    return DirectiveSequence(head, cycle)


def check_word(w: str) -> str:
    if not set(w) <= {"0", "1"}:
        raise ValueError(f"not a binary word: {w!r}")
    return w


def factor(w: str, i: int, j: int) -> str:
    """Return ``w[i..j]`` with both ends inclusive (empty when ``j < i``)."""
    if i < 0 or j >= len(w):
        raise IndexError(f"factor [{i}..{j}] out of range for length {len(w)}")
    return w[i:j + 1]


def morphism_apply(k: int, w: str) -> str:
    """Apply phi_k: 0 -> 0^k 1, 1 -> 0."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    image0 = "0" * k + "1"
    # the placeholder avoids rewriting the 1s we just produced
    return w.replace("1", "x").replace("0", image0).replace("x", "0")


class BlockTable:
    """Memoized standard sequence X_0, X_1, ... for a directive sequence.

    Blocks and their lengths are cached behind a lock, so one table can be
    shared between threads.
    """

    def __init__(self, alpha: DirectiveSequence | str):
        if isinstance(alpha, str):
            alpha = parse_directive(alpha)
        self.alpha = alpha
        self._lock = threading.Lock()
        self._lengths: list[int] = [1]
        self._blocks: list[str] = ["0"]

    def __repr__(self):
        return f"BlockTable({str(self.alpha)!r})"

    def _extend_lengths(self, i: int) -> None:
        q = self._lengths
        while len(q) <= i:
            n = len(q)
            if n == 1:
                q.append(self.alpha.term(0) + 1)
            else:
                q.append(q[n - 1] * self.alpha.term(n - 1) + q[n - 2])

    def block_length(self, i: int) -> int:
        """q_i, from the integer recurrence only."""
        if i < 0:
            raise IndexError(i)
        with self._lock:
            self._extend_lengths(i)
            return self._lengths[i]

    def block(self, i: int) -> str:
        """The i-th characteristic block X_i."""
        if i < 0:
            raise IndexError(i)
        with self._lock:
            X = self._blocks
            while len(X) <= i:
                n = len(X)
                if n == 1:
                    X.append("0" * self.alpha.term(0) + "1")
                else:
                    X.append(X[n - 1] * self.alpha.term(n - 1) + X[n - 2])
            return X[i]

    def index_covering(self, n: int, strict: bool = False) -> int:
        """Smallest i with q_i >= n (or q_i > n when ``strict``)."""
        i = 0
        while True:
            q = self.block_length(i)
            if q > n or (q == n and not strict):
                return i
            i += 1

    def word_prefix(self, n: int) -> str:
        """The first ``n`` letters of the characteristic Sturmian word."""
        if n < 0:
            raise ValueError("prefix length must be nonnegative")
        if n == 0:
            return ""
        return self.block(self.index_covering(n))[:n]

    def letter_at(self, n: int) -> str:
        """Letter ``n`` of the word, found by descending the block recurrence."""
        if n < 0:
            raise IndexError(n)
        i = self.index_covering(n, strict=True)
        while i >= 2:
            # X_i = X_{i-1}^{a_{i-1}} X_{i-2}
            head = self.alpha.term(i - 1) * self.block_length(i - 1)
            if n < head:
                n %= self.block_length(i - 1)
                i -= 1
            else:
                n -= head
                i -= 2
        if i == 1:
            return "0" if n < self.alpha.term(0) else "1"
        return "0"

    def tail_table(self) -> "BlockTable":
        """Table for the directive sequence with a_0 removed."""
        return BlockTable(self.alpha.tail())
