"""Exit criteria for the library, one test per criterion.

Each test records a PASS/FAIL line that is printed in the pytest terminal
summary under "acceptance criteria".
"""

import random
import time

from sturmian import (
    BlockTable,
    corresponding_position,
    decode,
    decompose_prefix,
    encode,
    image_position,
    is_conjugate,
    is_repetition_word_at,
    lift_repetition,
    local_period_fast,
    local_period_oracle,
    morphism_apply,
    shift,
)
from sturmian.cli import main

from conftest import ACCEPTANCE_LINES, FIBONACCI, MIXED, SWEEP_ALPHAS, TABLE2_ALPHA
from test_numeration import TABLE2, all_valid_vectors

SWEEP_MAX = 2000


def record(label, ok, detail=""):
    ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  ({detail})" if detail else ""))
    print(ACCEPTANCE_LINES[-1])
    assert ok, f"{label}: {detail}"


def test_ac1_fibonacci_table(capsys):
    start = time.perf_counter()
    code = main(["table", "--alpha", FIBONACCI, "--from", "0", "--to", "20"])
    out = capsys.readouterr().out
    elapsed = time.perf_counter() - start
    got = [int(line.split("\t")[1]) for line in out.splitlines()[1:]]
    expected = [1, 2, 3, 1, 5, 2, 2, 8, 1, 3, 3, 1, 13, 2, 2, 5, 1, 5, 2, 2, 21]
    record("AC1 Fibonacci local period table n=0..20", code == 0 and got == expected and elapsed < 1,
           f"{elapsed:.3f}s")


def test_ac2_ostrowski_table():
    start = time.perf_counter()
    table = BlockTable(TABLE2_ALPHA)
    got = [str(encode(n, table)) for n in range(60)]
    elapsed = time.perf_counter() - start
    bad = [n for n in range(60) if got[n] != TABLE2[n]]
    record("AC2 Ostrowski table alpha=1,3,2,2:2 n=0..59", not bad and elapsed < 1,
           f"mismatches at {bad}, {elapsed:.3f}s" if bad else f"{elapsed:.3f}s")


def test_ac3_blocks():
    table = BlockTable(TABLE2_ALPHA)
    expected = [
        "0",
        "01",
        "0101010",
        "0101010010101001",
        "010101001010100101010100101010010101010",
    ]
    got = [table.block(i) for i in range(5)]
    record("AC3 blocks X_0..X_4 and 39-letter prefix",
           got == expected and table.word_prefix(39) == expected[4] and len(expected[4]) == 39)


def test_ac4_decomposition():
    table = BlockTable(TABLE2_ALPHA)
    parts = decompose_prefix(21, table)
    w = "".join(table.block(i) * e for i, e in parts)
    record("AC4 prefix of length 21 = X_3 X_1^2 X_0",
           parts == [(3, 1), (1, 2), (0, 1)]
           and w == table.word_prefix(21) == "010101001010100101010")


def test_ac5_worked_positions():
    table = BlockTable(TABLE2_ALPHA)
    words = [local_period_oracle(table, n) for n in range(23, 27)]
    fast = [local_period_fast(table, n) for n in range(23, 27)]
    ok = (
        words == ["0", "1010100", "01", "10"]
        and [r.block_index for r in fast] == [0, 2, 1, 1]
        and [r.exception_applied for r in fast] == [False, True, True, False]
        and all(is_conjugate(w, table.block(r.block_index)) for w, r in zip(words, fast))
    )
    record("AC5 repetition words at positions 23..26", ok, f"{words}")


def test_ac6_equivalence_sweep():
    assert len(SWEEP_ALPHAS) == 23
    start = time.perf_counter()
    failures = []
    for text in SWEEP_ALPHAS:
        table = BlockTable(text)
        for n in range(SWEEP_MAX + 1):
            fast = local_period_fast(table, n)
            word = local_period_oracle(table, n)
            if len(word) != fast.period or not is_conjugate(word, table.block(fast.block_index)):
                failures.append((text, n, word, fast))
    elapsed = time.perf_counter() - start
    record("AC6 digit rule = brute-force oracle, 23 sequences, n<=2000",
           not failures and elapsed < 30, f"{len(failures)} failures, {elapsed:.1f}s")


def test_ac7_extremality():
    failures = []
    for text in SWEEP_ALPHAS:
        table = BlockTable(text)
        for n in range(SWEEP_MAX + 1):
            if local_period_fast(table, n).period > n + 1:
                failures.append((text, n, "bound"))
        i = 0
        while table.block_length(i) <= SWEEP_MAX + 1:
            q = table.block_length(i)
            if local_period_fast(table, q - 1).period != q or len(local_period_oracle(table, q - 1)) != q:
                failures.append((text, q - 1, "attained"))
            i += 1
    record("AC7 p(n) <= n+1 and p(q_i - 1) = q_i", not failures, f"{failures[:3]}")


def test_ac8_numeration():
    failures = []
    for text in (FIBONACCI, TABLE2_ALPHA, MIXED):
        table = BlockTable(text)
        for n in range(100_001):
            if decode(encode(n, table), table) != n:
                failures.append((text, "roundtrip", n))
                break
    for text in SWEEP_ALPHAS:
        table = BlockTable(text)
        positions = table.index_covering(200, strict=True)
        counts = {}
        for vec in all_valid_vectors(table, positions):
            value = sum(d * table.block_length(i) for i, d in enumerate(reversed(vec)))
            if value <= 200:
                counts[value] = counts.get(value, 0) + 1
        if counts != {n: 1 for n in range(201)}:
            failures.append((text, "uniqueness"))
    for text in SWEEP_ALPHAS:
        table = BlockTable(text)
        beta = table.tail_table()
        k = table.alpha.term(0)
        for n in range(SWEEP_MAX + 1):
            rest, d0 = shift(encode(n, table))
            m = decode(rest, beta)
            if table.word_prefix(n) != morphism_apply(k, beta.word_prefix(m)) + "0" * d0:
                failures.append((text, "shift identity", n))
            if d0 > 0 and beta.letter_at(m) != "0":
                failures.append((text, "shift letter", n))
    record("AC8 roundtrip n<=1e5, uniqueness n<=200, digit-shift identity n<=2000",
           not failures, f"{failures[:3]}")


def test_ac9_lifting():
    rng = random.Random(9)
    tables = {text: BlockTable(text) for text in SWEEP_ALPHAS}
    pairs = []
    while len(pairs) < 500:
        text = rng.choice(SWEEP_ALPHAS)
        n = rng.randint(0, SWEEP_MAX)
        m = corresponding_position(tables[text], n)
        if m is not None:
            pairs.append((text, n, m))
    failures = []
    for text, n, m in pairs:
        table = tables[text]
        beta = table.tail_table()
        k = table.alpha.term(0)
        assert image_position(k, beta, m) == n
        u = local_period_oracle(beta, m)
        v = lift_repetition(k, beta, m, u, n=n)
        if not (
            is_conjugate(v, morphism_apply(k, u))
            and len(v) == len(local_period_oracle(table, n))
            and is_repetition_word_at(table, n, v)
        ):
            failures.append((text, n, m, u, v))
    record("AC9 lifting through phi_k on 500 sampled position pairs",
           not failures, f"{len(failures)} failures")
