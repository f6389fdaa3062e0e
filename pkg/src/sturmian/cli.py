"""Command-line front end.

Exit codes: 0 success, 1 disagreement or invariant violation, 2 usage or
parse error, 3 directive sequence exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from .localperiod import NoRepetitionWord, is_conjugate, local_period, local_period_fast, local_period_oracle
from .numeration import OstrowskiDigits, decode, decompose_prefix, encode
from .words import BlockTable, DirectiveExhausted, parse_directive

EXIT_OK = 0
EXIT_DISAGREE = 1
EXIT_USAGE = 2
EXIT_EXHAUSTED = 3

class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    alpha_text: str
    command: str
    args: dict = field(default_factory=dict)
    oracle: bool = False
    word: bool = False
    json: bool = False


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sturmian",
        description="Characteristic Sturmian words, Ostrowski numeration and local periods.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--alpha", required=True, help='directive sequence "head[:cycle]", e.g. "1,3,2,2:2"')
    common.add_argument("--json", action="store_true", help="emit JSON")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("prefix", parents=[common], help="print a prefix of the word")
    p.add_argument("--length", type=_nonneg, required=True)

    p = sub.add_parser("encode", parents=[common], help="Ostrowski digits of N")
    p.add_argument("n", type=_nonneg)

    p = sub.add_parser("decode", parents=[common], help="value of a digit string")
    p.add_argument("digits")

    p = sub.add_parser("decompose", parents=[common], help="block decomposition of the length-N prefix")
    p.add_argument("n", type=_nonneg)

    for name, helptext in (("period", "local period at N"), ("table", "local periods over a range")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        if name == "period":
            p.add_argument("n", type=_nonneg)
        else:
            p.add_argument("--from", dest="start", type=_nonneg, default=0)
            p.add_argument("--to", dest="stop", type=_nonneg, required=True)
        p.add_argument("--oracle", action="store_true", help="also run the brute-force search")
        p.add_argument("--word", action="store_true", help="also print the predicted block X_i (text output only)")

    p = sub.add_parser("verify", parents=[common], help="oracle vs. digit rule for all n <= MAX_N")
    p.add_argument("--max-n", type=_nonneg, required=True)
    return parser


def _config(ns: argparse.Namespace) -> CliConfig:
    skip = {"alpha", "command", "oracle", "word", "json"}
    return CliConfig(
        alpha_text=ns.alpha,
        command=ns.command,
        args={k: v for k, v in vars(ns).items() if k not in skip},
        oracle=getattr(ns, "oracle", False),
        word=getattr(ns, "word", False),
        json=ns.json,
    )


def cmd_prefix(table: BlockTable, cfg: CliConfig) -> int:
    w = table.word_prefix(cfg.args["length"])
    print(json.dumps({"prefix": w}) if cfg.json else w)
    return EXIT_OK


def cmd_encode(table: BlockTable, cfg: CliConfig) -> int:
    d = encode(cfg.args["n"], table)
    print(json.dumps(d.to_json()) if cfg.json else d)
    return EXIT_OK


def cmd_decode(table: BlockTable, cfg: CliConfig) -> int:
    try:
        d = OstrowskiDigits.parse(cfg.args["digits"], table.alpha)
        n = decode(d, table)
    except ValueError as exc:
        raise UsageError(str(exc))
    print(json.dumps({"n": n}) if cfg.json else n)
    return EXIT_OK


def cmd_decompose(table: BlockTable, cfg: CliConfig) -> int:
    parts = decompose_prefix(cfg.args["n"], table)
    if cfg.json:
        print(json.dumps([{"block_index": i, "exponent": e} for i, e in parts]))
    else:
        print(" ".join(f"X{i}^{e}" if e > 1 else f"X{i}" for i, e in parts))
    return EXIT_OK


def cmd_period(table: BlockTable, cfg: CliConfig) -> int:
    result = local_period(table, cfg.args["n"], oracle=cfg.oracle)
    if cfg.json:
        print(json.dumps(result.to_json()))
    else:
        fields = [str(result.position), str(result.period)]
        if cfg.oracle:
            fields.append(result.repetition_word)
        if cfg.word:
            fields.append(table.block(result.block_index))
        print("\t".join(fields))
    return EXIT_OK


def cmd_table(table: BlockTable, cfg: CliConfig) -> int:
    start, stop = cfg.args["start"], cfg.args["stop"]
    if start > stop:
        raise UsageError("--from must not exceed --to")
    rows = []
    agree = True
    for n in range(start, stop + 1):
        result = local_period(table, n, oracle=cfg.oracle)
        ok = result.repetition_word is None or (
            len(result.repetition_word) == result.period
            and is_conjugate(result.repetition_word, table.block(result.block_index))
        )
        agree &= ok
        rows.append((result, ok))
    if cfg.json:
        print(json.dumps([r.to_json() for r, _ in rows]))
    else:
        header = ["n", "period"]
        if cfg.oracle:
            header += ["word", "check"]
        if cfg.word:
            header.append("block")
        print("\t".join(header))
        for r, ok in rows:
            fields = [str(r.position), str(r.period)]
            if cfg.oracle:
                fields += [r.repetition_word, "AGREE" if ok else "DISAGREE"]
            if cfg.word:
                fields.append(table.block(r.block_index))
            print("\t".join(fields))
    return EXIT_OK if agree else EXIT_DISAGREE


def check_position(table: BlockTable, n: int) -> str | None:
    """Compare both routes at ``n``; return a description of any failure."""
    fast = local_period_fast(table, n)
    try:
        word = local_period_oracle(table, n)
    except NoRepetitionWord as exc:
        return f"n={n}: oracle failed ({exc})"
    if len(word) != fast.period:
        return f"n={n}: oracle period {len(word)} ({word}) != digit rule {fast.period}"
    if not is_conjugate(word, table.block(fast.block_index)):
        return f"n={n}: {word} is not a conjugate of X_{fast.block_index}"
    if fast.period > n + 1:
        return f"n={n}: period {fast.period} exceeds n+1"
    return None


def cmd_verify(table: BlockTable, cfg: CliConfig) -> int:
    max_n = cfg.args["max_n"]
    for n in range(max_n + 1):
        failure = check_position(table, n)
        if failure is not None:
            print(json.dumps({"ok": False, "counterexample": failure}) if cfg.json
                  else f"FAIL {failure}")
            return EXIT_DISAGREE
        if n and n % 10_000 == 0:
            print(f"verified {n}/{max_n}", file=sys.stderr)
    if cfg.json:
        print(json.dumps({"ok": True, "alpha": str(table.alpha), "max_n": max_n}))
    else:
        print(f"OK alpha={table.alpha} positions 0..{max_n}")
    return EXIT_OK


HANDLERS = {
    "prefix": cmd_prefix,
    "encode": cmd_encode,
    "decode": cmd_decode,
    "period": cmd_period,
    "table": cmd_table,
    "decompose": cmd_decompose,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    cfg = _config(ns)
    try:
        table = BlockTable(parse_directive(cfg.alpha_text))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return HANDLERS[cfg.command](table, cfg)
    except DirectiveExhausted as exc:
        print(f"error: directive sequence exhausted: {exc}", file=sys.stderr)
        return EXIT_EXHAUSTED
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
