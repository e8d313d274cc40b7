"""Command-line interface.

JSON goes to stdout (sorted keys, so identical inputs give identical bytes),
diagnostics to stderr. Exit codes: 0 success, 1 domain error, 2 crossing
limit exceeded, 3 usage error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .braidcore import BraidWord, closure_pd, component_count, parse_braid_text, underlying_permutation
from .lorenz import (
    LorenzPermutation,
    code_words_from_permutation,
    lorenz_braid,
    parse_code_words,
    parse_vector,
    permutation_from_code_words,
    permutation_from_vector,
    trip_number,
    trip_number_of_vector,
    vector_from_permutation,
)
from .notation import NotationError, params_to_dict, parse_gen, parse_tlink, parse_tn
from .oracle import DEFAULT_MAX_CROSSINGS, CrossingLimitExceeded, equivalence_evidence, jones_normalized
from .tlink import (
    alt_trip_family,
    associated_lorenz,
    gen_tlink_braid,
    gen_to_tn,
    lorenz_like_to_tn,
    prop2_normalize,
    tlink_braid,
    tn_link_braid,
    tn_to_gen,
)
from .volume import AUTO, bound_from_trip, bound_gen_tlink, bound_manifold

EXIT_OK, EXIT_DOMAIN, EXIT_RESOURCE, EXIT_USAGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# -- input helpers ----------------------------------------------------------


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _parsed(fn, text):
    try:
        return fn(text)
    except NotationError as exc:
        raise UsageError(str(exc)) from exc


def _braid_from_file(path: str) -> BraidWord:
    text = _read(path)
    try:
        return parse_braid_text(text)
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def _braid_dict(b: BraidWord) -> dict:
    return {"strands": b.strands, "letters": list(b.letters), "components": component_count(b)}


def _limit(value: str) -> int | None:
    if value.lower() == "none":
        return None
    n = int(value)
    if n < 0:
        raise argparse.ArgumentTypeError("crossing limit must be nonnegative")
    return n


def _twist_arg(value: str):
    return AUTO if value == AUTO else int(value)


def _lorenz_input(args) -> LorenzPermutation:
    """Resolve --words / --words-file / --vector / --permutation into a permutation."""
    if args.words is not None or args.words_file is not None:
        text = args.words if args.words is not None else _read(args.words_file)
        cw = parse_code_words(text, allow_parallel=args.allow_parallel)
        return permutation_from_code_words(cw)
    if args.vector is not None:
        return permutation_from_vector(parse_vector(args.vector))
    if args.permutation is not None:
        image = tuple(int(t) for t in args.permutation.replace(",", " ").split())
        p = args.p if args.p is not None else sum(1 for i, t in enumerate(image, 1) if t > i)
        return LorenzPermutation(image, p)
    raise UsageError("give one of --words, --words-file, --vector, --permutation")


def _add_lorenz_inputs(sp):
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--words", help='code words, ";"-separated, e.g. "x^2 y x y"')
    g.add_argument("--words-file", help="code-word text or JSON file")
    g.add_argument("--vector", help='Lorenz vector, e.g. "<2^2, 4^2>"')
    g.add_argument("--permutation", help='Lorenz permutation image, e.g. "3,4,5,1,2"')
    sp.add_argument("--p", type=int, help="number of left-lobe points (default: count of i with image > i)")
    sp.add_argument("--allow-parallel", action="store_true", help="accept repeated code words")


# -- subcommands ------------------------------------------------------------


def cmd_build(args) -> dict:
    given = [k for k in ("vector", "tlink", "gen", "tn", "words") if getattr(args, k) is not None]
    if len(given) != 1:
        raise UsageError("give exactly one of --vector, --tlink, --gen, --tn, --words")
    if args.vector is not None:
        b = lorenz_braid(parse_vector(args.vector))
    elif args.words is not None:
        lp = permutation_from_code_words(parse_code_words(args.words, args.allow_parallel))
        b = lorenz_braid(vector_from_permutation(lp))
    elif args.tlink is not None:
        b = tlink_braid(_parsed(parse_tlink, args.tlink))
    elif args.gen is not None:
        b = gen_tlink_braid(_parsed(parse_gen, args.gen))
    else:
        b = tn_link_braid(_parsed(parse_tn, args.tn))
    if args.output:
        Path(args.output).write_text(str(b) + "\n")
    return _braid_dict(b)


def cmd_convert(args) -> dict:
    if args.gen is not None:
        if args.n is None:
            raise UsageError("--gen needs --n")
        g = _parsed(parse_gen, args.gen)
        return {"input": params_to_dict(g), "output": params_to_dict(gen_to_tn(g, args.n))}
    if args.tn is not None:
        t = _parsed(parse_tn, args.tn)
        out = associated_lorenz(t) if args.associated else tn_to_gen(t)
        return {"input": params_to_dict(t), "output": params_to_dict(out)}
    if args.vector is not None:
        v = parse_vector(args.vector)
        t = lorenz_like_to_tn(v, args.n or 0, args.d, args.d_prime)
        return {"input": {"kind": "vector", "notation": str(v)}, "output": params_to_dict(t)}
    if args.tlink is not None:
        if args.n is None or args.r_prime is None:
            raise UsageError("--tlink needs --n (negative) and --r-prime")
        t = _parsed(parse_tlink, args.tlink)
        out = alt_trip_family(t, args.n, args.r_prime)
        return {
            "input": params_to_dict(t),
            "output": params_to_dict(out),
            "associated_trip": trip_number_of_vector(associated_lorenz(out).vector()),
        }
    raise UsageError("give one of --gen, --tn, --vector, --tlink")


def cmd_normalize(args) -> dict:
    v = parse_vector(args.vector)
    beta = _braid_from_file(args.beta) if args.beta else BraidWord(v.strands)
    out = prop2_normalize(v, beta)
    return {"vector": str(v), "braid": _braid_dict(out)}


def cmd_bunch(args) -> dict:
    lp = _lorenz_input(args)
    v = vector_from_permutation(lp)
    out = {
        "permutation": list(lp.image),
        "p": lp.p,
        "vector": [list(pr) for pr in v.pairs],
        "vector_text": str(v),
        "trip": trip_number_of_vector(v),
        "components": len(lp.permutation().cycles()),
    }
    if lp.p:
        cw = code_words_from_permutation(lp)
        out["words"] = str(cw).splitlines()
        out["word_trip"] = trip_number(cw)
    return out


def cmd_trip(args) -> dict:
    if args.words is not None or args.words_file is not None:
        text = args.words if args.words is not None else _read(args.words_file)
        return {"trip": trip_number(parse_code_words(text, allow_parallel=args.allow_parallel))}
    lp = _lorenz_input(args)
    return {"trip": trip_number_of_vector(vector_from_permutation(lp))}


def cmd_bound(args) -> dict:
    if (args.trip is None) == (args.gen is None):
        raise UsageError("give exactly one of --trip, --gen")
    if args.trip is not None:
        if args.trip < 0:
            raise ValueError("trip number must be nonnegative")
        return bound_from_trip(args.trip).to_dict()
    g = _parsed(parse_gen, args.gen)
    fn = bound_manifold if args.manifold else bound_gen_tlink
    return fn(g, args.n, window=args.window).to_dict()


def cmd_verify(args) -> dict:
    a = _braid_from_file(args.braid_a)
    b = _braid_from_file(args.braid_b)
    verdict = equivalence_evidence(
        a, b, max_crossings=args.max_crossings, method=args.method, workers=args.workers
    )
    return verdict.to_dict()


def cmd_export(args) -> dict:
    b = _braid_from_file(args.braid)
    pd = closure_pd(b)
    out = json.loads(pd.to_json())
    out["permutation"] = list(underlying_permutation(b).image)
    if args.jones:
        j = jones_normalized(b, max_crossings=args.max_crossings)
        out["jones"] = j.to_pairs()
        out["jones_text"] = str(j)
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tlinks", description="Lorenz links, T-links and their braids.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log to stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sp = sub.add_parser("build", help="braid word from parameters")
    sp.add_argument("--vector")
    sp.add_argument("--words")
    sp.add_argument("--tlink", help='e.g. "T((2,2),(3,1))"')
    sp.add_argument("--gen", help='e.g. "T((2,3),(4,-4);d=0)"')
    sp.add_argument("--tn", help='e.g. "T^{-2}((2,3),(4;0))"')
    sp.add_argument("--allow-parallel", action="store_true")
    sp.add_argument("-o", "--output", help="also write the braid in text format")
    sp.set_defaults(func=cmd_build)

    sp = sub.add_parser("convert", help="rewrite between T-link parameter forms")
    sp.add_argument("--gen", help="generalised T-link -> T^{2n}-link (needs --n)")
    sp.add_argument("--tn", help="T^{2n}-link -> generalised T-link")
    sp.add_argument("--associated", action="store_true", help="with --tn: associated Lorenz T-link")
    sp.add_argument("--vector", help="Lorenz-like template link -> T^n-link (--n twists)")
    sp.add_argument("--tlink", help="T-link -> alternative T^{2n} form (--n < 0, --r-prime)")
    sp.add_argument("--n", type=int)
    sp.add_argument("--d", type=int, default=0, help="extra loops in the twisted strip")
    sp.add_argument("--d-prime", type=int, default=0, help="loops along the left boundary")
    sp.add_argument("--r-prime", type=int)
    sp.set_defaults(func=cmd_convert)

    sp = sub.add_parser("normalize", help="rewrite a Lorenz braid into T-link form")
    sp.add_argument("--vector", required=True)
    sp.add_argument("--beta", help="braid file appended after the Lorenz braid")
    sp.set_defaults(func=cmd_normalize)

    sp = sub.add_parser("bunch", help="code words <-> permutation <-> vector")
    _add_lorenz_inputs(sp)
    sp.set_defaults(func=cmd_bunch)

    sp = sub.add_parser("trip", help="trip number")
    _add_lorenz_inputs(sp)
    sp.set_defaults(func=cmd_trip)

    sp = sub.add_parser("bound", help="volume upper bound")
    sp.add_argument("--trip", type=int)
    sp.add_argument("--gen")
    sp.add_argument("--n", type=_twist_arg, default=AUTO, help='integer or "auto"')
    sp.add_argument("--window", type=int, default=2, help="auto search: residuals below window * r")
    sp.add_argument("--manifold", action="store_true", help="bound for Dehn fillings")
    sp.set_defaults(func=cmd_bound)

    sp = sub.add_parser("verify", help="compare two braid closures by invariants")
    sp.add_argument("--braid-a", required=True)
    sp.add_argument("--braid-b", required=True)
    sp.add_argument("--max-crossings", type=_limit, default=DEFAULT_MAX_CROSSINGS)
    sp.add_argument("--method", choices=["merged", "states"], default="merged")
    sp.add_argument("--workers", type=int, default=1)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("export", help="PD code of a braid closure")
    sp.add_argument("--braid", required=True)
    sp.add_argument("--jones", action="store_true")
    sp.add_argument("--max-crossings", type=_limit, default=DEFAULT_MAX_CROSSINGS)
    sp.set_defaults(func=cmd_export)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr)
    try:
        result = args.func(args)
    except UsageError as exc:
        print(f"tlinks: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CrossingLimitExceeded as exc:
        print(f"tlinks: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ValueError as exc:
        print(f"tlinks: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    sys.stdout.write(json.dumps(result, sort_keys=True) + "\n")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
