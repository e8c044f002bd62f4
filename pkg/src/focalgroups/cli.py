"""Command line front end.

    focalgroups word-info "[x1,x2,x3]"
    focalgroups verify --group S4 --word "[x1,x2]" --prime 2
    focalgroups corpus-run --max-order 720 --output machine
    focalgroups question1-search --words x1 --power 3 --max-order 6

Exit status: 0 when nothing fails, 1 when some verdict is ``fails`` (or a
verifier errored), 2 on bad input.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .corpus import build_group, default_corpus
from .errors import FocalError
from .focal import (
    ERROR,
    FAILS,
    INAPPLICABLE,
    VerificationReport,
    check_question1,
    run_suite,
    summarize,
    verify_nilpotent_case,
    verify_product_extensions,
    verify_remark_power,
    verify_theorem_a,
)
from .sylow import is_prime, prime_divisors
from .values import power_value_set, value_set
from .words import (
    canonical,
    defect,
    format_word,
    height,
    leaf_count,
    parse_word,
    proper_extensions_same_height,
    render_tree,
    vertex_count,
)

DEFAULT_WORDS = (
    "[x1,x2]",
    "[x1,x2,x3]",
    "[x1,x2,x3,x4]",
    "[x1,x2]",
    "[[x1,x2],[x3,x4]]",
    "[[[x1,x2],[x3,x4]],[[x5,x6],[x7,x8]]]",
    "[[x1,x2],[[x3,x4],x5]]",
)


class UsageError(Exception):
    pass


def _parse_words(texts: Sequence[str]):
    words = []
    for t in texts:
        w = canonical(parse_word(t))
        if w not in words:
            words.append(w)
    return words


def _primes_for(order: int, prime: int | None) -> list[int]:
    if prime is None:
        return prime_divisors(order)
    if not is_prime(prime):
        raise UsageError(f"--prime {prime} is not prime")
    return [prime]


def _text_line(rep: VerificationReport) -> str:
    head = f"{rep.verdict.upper():<12} {rep.statement:<19} {rep.group_desc}"
    if rep.word_text:
        head += f"  w={rep.word_text}"
    if rep.p is not None:
        head += f"  p={rep.p}"
    nums = ", ".join(f"{k}={v}" for k, v in rep.numbers.items())
    line = f"{head}\n    {nums}"
    if rep.witness_labels:
        label = "counterexample" if rep.verdict == FAILS else "generators"
        line += f"\n    {label}: " + " ".join(rep.witness_labels)
    if rep.error:
        line += f"\n    error: {rep.error}"
    return line


def _emit(reports: Sequence[VerificationReport], output: str, out) -> int:
    for rep in reports:
        print(rep.to_line() if output == "machine" else _text_line(rep), file=out)
    counts = summarize(reports)
    summary = (f"total={counts['total']} holds={counts['holds']} fails={counts[FAILS]} "
               f"inapplicable={counts[INAPPLICABLE]}")
    if counts[ERROR]:
        summary += f" errors={counts[ERROR]}"
    print(summary, file=out)
    return 1 if counts[FAILS] or counts[ERROR] else 0


def cmd_word_info(args, out) -> int:
    w = parse_word(args.word)
    phis = proper_extensions_same_height(w)
    if args.output == "machine":
        print(f"word={format_word(w)} height={height(w)} vertices={vertex_count(w)} leaves={leaf_count(w)} "
              f"defect={defect(w)} phi_count={len(phis)} phi=[{';'.join(map(format_word, phis))}]", file=out)
        return 0
    print(f"word:      {format_word(w)}", file=out)
    print(f"height:    {height(w)}", file=out)
    print(f"vertices:  {vertex_count(w)}", file=out)
    print(f"leaves:    {leaf_count(w)}", file=out)
    print(f"defect:    {defect(w)}", file=out)
    print(f"proper extensions of the same height: {len(phis)}", file=out)
    for u in phis:
        print(f"    {format_word(u)}", file=out)
    print("tree:", file=out)
    print(render_tree(w), file=out)
    return 0


def cmd_verify(args, out) -> int:
    G = build_group(args.group)
    w = parse_word(args.word)
    primes = _primes_for(G.order, args.prime)
    reports = []
    for p in primes:
        if args.power is not None:
            text = f"{format_word(w)}^{args.power}"
            reports.append(check_question1(G, power_value_set(G, w, args.power), p, word_text=text,
                                           group_desc=args.group))
            continue
        reports.append(verify_theorem_a(G, w, p, args.group))
        reports.append(verify_nilpotent_case(G, w, p, args.group))
        reports.append(verify_product_extensions(G, w, p, args.group))
        reports.append(verify_remark_power(G, w, p, args.group))
    return _emit(reports, args.output, out)


def _corpus(max_order: int):
    return [d for d in default_corpus() if d.expected_order is None or d.expected_order <= max_order]


def cmd_corpus_run(args, out) -> int:
    words = _parse_words(args.words or DEFAULT_WORDS)
    reports = run_suite(_corpus(args.max_order), words, jobs=args.jobs)
    return _emit(reports, args.output, out)


def cmd_question1_search(args, out) -> int:
    words = _parse_words(args.words or DEFAULT_WORDS)
    groups = [(g, build_group(g)) for g in args.group] if args.group else \
        [(d.name, d.build()) for d in _corpus(args.max_order)]
    reports = []
    for name, G in groups:
        for w in words:
            for p in prime_divisors(G.order):
                if args.power is None:
                    values, text = value_set(G, w), format_word(w)
                else:
                    values, text = power_value_set(G, w, args.power), f"{format_word(w)}^{args.power}"
                reports.append(check_question1(G, values, p, word_text=text, group_desc=name))
    code = _emit(reports, args.output, out)
    found = [r for r in reports if r.verdict == FAILS]
    if args.output == "text":
        if found:
            for r in found:
                print(f"!!! COUNTEREXAMPLE: group={r.group_desc} word={r.word_text} p={r.p} "
                      f"|<P∩X>|={r.numbers['|genSide|']} |P∩<X>|={r.numbers['|PcapwG|']}", file=out)
        else:
            print("no counterexamples found", file=out)
    return code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="focalgroups", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def output_flag(p):
        p.add_argument("--output", choices=("text", "machine"), default="text")

    p = sub.add_parser("word-info", help="tree data of an outer commutator word")
    p.add_argument("word")
    output_flag(p)
    p.set_defaults(func=cmd_word_info)

    p = sub.add_parser("verify", help="check one group and word")
    p.add_argument("--group", required=True, help="builder name (S4, S3xS3, ...) or @file")
    p.add_argument("--word", required=True)
    p.add_argument("--prime", type=int)
    p.add_argument("--power", type=int, help="test the power word w^m against Question 1 instead")
    output_flag(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("corpus-run", help="run every verifier on the built-in corpus")
    p.add_argument("--max-order", type=int, default=720)
    p.add_argument("--words", nargs="+")
    p.add_argument("--jobs", type=int, default=1)
    output_flag(p)
    p.set_defaults(func=cmd_corpus_run)

    p = sub.add_parser("question1-search", help="look for P ∩ w(G) not generated by w-values in P")
    p.add_argument("--max-order", type=int, default=720)
    p.add_argument("--words", nargs="+")
    p.add_argument("--group", action="append", help="restrict to these groups (repeatable)")
    p.add_argument("--power", type=int)
    output_flag(p)
    p.set_defaults(func=cmd_question1_search)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    if getattr(args, "power", None) is not None and args.power < 1:
        print("error: --power must be positive", file=sys.stderr)
        return 2
    try:
        return args.func(args, out)
    except (FocalError, UsageError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
