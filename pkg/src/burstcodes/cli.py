"""Command-line front end.

Bit strings travel as ASCII ``0``/``1`` lines on stdin/stdout; reports are
flat ``key=value`` lines.  Exit status: 0 ok, 1 verification failure,
2 usage error, 3 malformed input, 4 decoding failure.
"""

from __future__ import annotations

import argparse
import math
import random
import sys
import time
from typing import Optional, Sequence, TextIO

from .bitseq import BitString, parse_lines
from .burstcode import (
    CodeInstance,
    CodeParams,
    SyndromeSet,
    bucket_codewords,
    decode,
    enumerate_code,
    search_best,
    syndrome_space_size,
)
from .channel import apply_burst, ball_upto, is_burst_code
from .errors import AmbiguityError, BurstCodeError, DecodeFailure, FormatError
from .locator import LocSyndromes, locate
from .pattern import (
    burst_pattern,
    default_delta,
    dense_count_exact,
    dense_fraction_mc,
    dense_lower_bound,
    nondense_bound,
)
from .sysenc import PipelineParams, encode, pipeline_decode

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_FORMAT, EXIT_DECODE = 0, 1, 2, 3, 4

Report = list[tuple[str, object]]


def format_report(report: Report) -> str:
    return "".join(f"{key}={_fmt(value)}\n" for key, value in report)


def _fmt(value) -> str:
    if isinstance(value, float):
        return "inf" if math.isinf(value) else f"{value:.6g}"
    if isinstance(value, (tuple, list)):
        return ",".join(_fmt(v) for v in value)
    return str(value)


def _ints(text: str) -> tuple[int, ...]:
    return tuple(int(t) for t in text.split(",") if t.strip()) if text else ()


def syndrome_flags(syn: SyndromeSet) -> Report:
    return [("c0", syn.c0), ("c1", syn.c1), ("v", syn.v), ("b", syn.b)]


# -- report builders shared by the CLI and the tests -------------------------


def search_report(params: CodeParams, buckets=None) -> Report:
    res = search_best(params, buckets)
    report: Report = [("n", params.n), ("k", params.k), ("delta", params.delta)]
    report += [
        ("dense_count", res.dense_count),
        ("syndrome_sets", syndrome_space_size(params)),
        ("nonempty_buckets", res.nonempty_buckets),
        ("cardinality", res.cardinality),
        ("redundancy", res.redundancy),
        ("pigeonhole_cardinality", res.pigeonhole_bound),
        ("pigeonhole_redundancy", res.pigeonhole_redundancy),
        ("asymptotic_redundancy", res.asymptotic_redundancy),
    ]
    if res.best is not None:
        report += syndrome_flags(res.best)
    return report


def locate_report(y: BitString, params: CodeParams, c0: int, c1: int) -> Report:
    res = locate(y, params.pattern_params, LocSyndromes(c0, c1, params.n))
    report: Report = [("length", res.length), ("case", res.case)]
    for (lo, hi), tag in zip(res.candidates, res.tags):
        report.append(("candidate", f"{lo}-{hi}:{tag}"))
    return report


def layout_report(params: PipelineParams) -> Report:
    w1, w2 = params.widths
    return [
        ("d", params.d),
        ("k", params.k),
        ("delta", params.delta),
        ("block", params.block),
        ("m1", params.m1),
        ("m2", params.m2),
        ("m3", params.m3),
        ("s1_width", w1),
        ("s2_width", w2),
        ("length", params.length),
        ("redundancy", params.redundancy),
        ("target_log_form", params.target_redundancy()),
    ]


def density_report(n: int, k: int, delta: int, mode: str, samples: int, seed: Optional[int]) -> Report:
    p = burst_pattern(k)
    report: Report = [("n", n), ("k", k), ("delta", delta), ("mode", mode)]
    if mode == "exact":
        count = dense_count_exact(n, p, delta)
        report += [
            ("dense_count", count),
            ("total", 2**n),
            ("fraction", count / 2**n),
            ("lower_bound", dense_lower_bound(n)),
        ]
    else:
        est = dense_fraction_mc(n, p, delta, samples, seed)
        report += [
            ("samples", est.samples),
            ("seed", est.seed),
            ("dense", est.dense),
            ("fraction", est.fraction),
            ("nondense_fraction", est.nondense_fraction),
            ("stderr", est.stderr),
            ("nondense_bound", nondense_bound(n)),
        ]
    return report


def verify_report(params: CodeParams, seed: int, random_buckets: int = 3) -> tuple[Report, int]:
    """Round-trip and disjointness sweeps; returns the report and failure count."""
    buckets = bucket_codewords(params)
    res = search_best(params, buckets)
    chosen = [res.best] if res.best is not None else []
    rest = [s for s in buckets if s != res.best]
    rng = random.Random(seed)
    chosen += rng.sample(rest, min(random_buckets, len(rest)))
    trials = failures = disjoint_failures = 0
    for syn in chosen:
        code = CodeInstance(params, syn)
        words = buckets[syn]
        if not is_burst_code(words, params.k):
            disjoint_failures += 1
        for x in words:
            for y in ball_upto(x, params.k):
                trials += 1
                try:
                    if decode(y, code) != x:
                        failures += 1
                except (DecodeFailure, AmbiguityError):
                    failures += 1
    partition_ok = res.dense_count == dense_count_exact(params.n, burst_pattern(params.k), params.delta)
    report: Report = [
        ("n", params.n),
        ("k", params.k),
        ("delta", params.delta),
        ("seed", seed),
        ("buckets_checked", len(chosen)),
        ("codewords_checked", sum(len(buckets[s]) for s in chosen)),
        ("roundtrip_trials", trials),
        ("roundtrip_failures", failures),
        ("disjointness_failures", disjoint_failures),
        ("partition_identity", "pass" if partition_ok else "fail"),
    ]
    bad = failures + disjoint_failures + (0 if partition_ok else 1)
    report.append(("result", "pass" if bad == 0 else "fail"))
    return report, bad


# -- argument handling --------------------------------------------------------


def _read_one(args, stdin: TextIO) -> BitString:
    if args.input:
        with open(args.input) as fh:
            items = parse_lines(fh)
    else:
        items = parse_lines(stdin)
    if not items:
        raise FormatError("no bit string on input")
    return items[0]


def _code_params(args) -> CodeParams:
    delta = args.delta if args.delta is not None else default_delta(args.n, args.k)
    return CodeParams(args.n, args.k, delta)


def _code(args) -> CodeInstance:
    syn = SyndromeSet(args.c0, args.c1, _ints(args.v), _ints(args.b))
    return CodeInstance(_code_params(args), syn)


def _pipeline(args) -> PipelineParams:
    return PipelineParams(args.d, args.k, args.delta)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="burstcodes", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def code_args(p, syndromes=True):
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--delta", type=int, help="density; default k*2^(2k+1)*ceil(log2 n)")
        if syndromes:
            p.add_argument("--c0", type=int, required=True)
            p.add_argument("--c1", type=int, required=True)
            p.add_argument("--v", default="", help="comma list in (k', i) order")
            p.add_argument("--b", default="", help="comma list in (k', i) order")

    def pipeline_args(p):
        p.add_argument("--d", type=int, required=True)
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--delta", type=int, help="density; default k*2^(2k+1)*ceil(log2 d)")

    def input_arg(p):
        p.add_argument("--input", help="file with the bit string (default: stdin)")

    p = sub.add_parser("corrupt", help="apply one burst of deletions")
    p.add_argument("--ell", type=int, required=True, help="length of the kept prefix")
    p.add_argument("--length", type=int, required=True, help="burst length")
    input_arg(p)

    p = sub.add_parser("enumerate", help="list all codewords of one code")
    code_args(p)

    p = sub.add_parser("search", help="largest syndrome bucket")
    code_args(p, syndromes=False)
    p.add_argument("--timing", action="store_true")

    p = sub.add_parser("decode", help="correct one burst")
    code_args(p)
    input_arg(p)

    p = sub.add_parser("locate", help="burst-locating windows (debugging aid)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--delta", type=int)
    p.add_argument("--c0", type=int, required=True)
    p.add_argument("--c1", type=int, required=True)
    input_arg(p)

    p = sub.add_parser("density", help="count or sample dense strings")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--delta", type=int)
    p.add_argument("--mode", choices=("exact", "mc"), default="exact")
    p.add_argument("--samples", type=int, default=100000)
    p.add_argument("--seed", type=int)
    p.add_argument("--timing", action="store_true")

    p = sub.add_parser("verify", help="exhaustive round-trip and disjointness sweeps")
    code_args(p, syndromes=False)
    p.add_argument("--exhaustive", action="store_true", required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--random-buckets", type=int, default=3)
    p.add_argument("--timing", action="store_true")

    p = sub.add_parser("encode", help="systematic encoder")
    pipeline_args(p)
    input_arg(p)

    p = sub.add_parser("pipeline-decode", help="systematic decoder")
    pipeline_args(p)
    input_arg(p)

    p = sub.add_parser("layout", help="segment lengths and field widths")
    pipeline_args(p)
    return ap


def run(argv: Sequence[str], stdin: TextIO = sys.stdin, stdout: TextIO = sys.stdout) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    started = time.perf_counter()
    status = EXIT_OK
    cmd = args.command
    try:
        if cmd == "corrupt":
            out = str(apply_burst(_read_one(args, stdin), args.ell, args.length)) + "\n"
        elif cmd == "enumerate":
            out = "".join(f"{w}\n" for w in enumerate_code(_code(args)))
        elif cmd == "search":
            out = format_report([("command", cmd)] + search_report(_code_params(args)))
        elif cmd == "decode":
            out = str(decode(_read_one(args, stdin), _code(args))) + "\n"
        elif cmd == "locate":
            params = _code_params(args)
            out = format_report([("command", cmd)] + locate_report(_read_one(args, stdin), params, args.c0, args.c1))
        elif cmd == "density":
            if args.mode == "mc" and args.seed is None:
                parser.print_usage(sys.stderr)
                print("burstcodes density: --seed is required with --mode mc", file=sys.stderr)
                return EXIT_USAGE
            delta = args.delta if args.delta is not None else default_delta(args.n, args.k)
            out = format_report(
                [("command", cmd)] + density_report(args.n, args.k, delta, args.mode, args.samples, args.seed)
            )
        elif cmd == "verify":
            report, bad = verify_report(_code_params(args), args.seed, args.random_buckets)
            out = format_report([("command", cmd)] + report)
            status = EXIT_VERIFY if bad else EXIT_OK
        elif cmd == "encode":
            out = str(encode(_read_one(args, stdin), _pipeline(args))) + "\n"
        elif cmd == "pipeline-decode":
            out = str(pipeline_decode(_read_one(args, stdin), _pipeline(args))) + "\n"
        else:  # layout
            out = format_report([("command", cmd)] + layout_report(_pipeline(args)))
    except FormatError as exc:
        print(f"burstcodes {cmd}: format error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except (DecodeFailure, AmbiguityError) as exc:
        stage = getattr(exc, "stage", None)
        suffix = f" (stage {stage})" if stage else ""
        print(f"burstcodes {cmd}: decoding failed{suffix}: {exc}", file=sys.stderr)
        return EXIT_DECODE
    except (BurstCodeError, OSError) as exc:
        print(f"burstcodes {cmd}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if getattr(args, "timing", False):
        out += f"elapsed_s={time.perf_counter() - started:.3f}\n"
    stdout.write(out)
    return status


def main(argv: Optional[Sequence[str]] = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
