"""Command-line interface.

Exit codes: 0 for a positive verdict (or plain success), 1 for a negative
verdict, 2 for malformed input, 3 when a size cap refuses the computation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import automata as au
from . import games, oracle, products
from .algebra import (
    FiniteSemigroup,
    syntactic_order,
    syntactic_stamp,
)
from .errors import InternalInconsistency, SizeCapExceeded, VarietyLabError
from .formats import read_action, read_fixtures, read_mtab, write_mtab
from .identities import (
    counterexample,
    parse_identity,
    semigroup_counterexample,
    stamp_counterexample,
)
from .varieties import classify, decide, density_class, is_dense, lookup

CLI_MAX_MONOID = 100_000
EXIT_TRUE, EXIT_FALSE, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


class UsageError(VarietyLabError):
    pass


def max_monoid_size(arg: int | None) -> int:
    if arg is not None:
        return arg
    env = os.environ.get("VARIETYLAB_MAX_MONOID")
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"VARIETYLAB_MAX_MONOID must be an integer, got {env!r}") from None
    return CLI_MAX_MONOID


def load_input(spec: str, alphabet: str | None = None) -> au.Dfa:
    """``regex:EXPR`` or ``dfa:FILE`` (JSON); ``alphabet`` adds letters."""
    extra = tuple(alphabet or "")
    if spec.startswith("regex:"):
        return au.compile(au.parse_regex(spec[6:], extra))
    if spec.startswith("dfa:"):
        d = au.dfa_from_json(Path(spec[4:]).read_text())
        if extra and not set(extra) <= set(d.alphabet):
            d = au.extend_alphabet(d, tuple(sorted(set(d.alphabet) | set(extra))))
        return d
    raise UsageError(f"input must start with 'regex:' or 'dfa:', got {spec!r}")


def _stamp(args):
    d = load_input(args.input, args.alphabet)
    return d, *syntactic_stamp(d, max_monoid_size(args.max_monoid_size))


def _print_json(obj):
    print(json.dumps(obj, indent=None))


# --------------------------------------------------------------------------
# subcommands


def cmd_synt(args) -> int:
    d, stamp, P = _stamp(args)
    order = syntactic_order(stamp, P)
    M = stamp.monoid
    if args.emit == "mtab":
        sys.stdout.write(write_mtab(M, stamp.gen_image, order.leq))
    else:
        _print_json({
            "size": M.size,
            "identity": M.identity,
            "alphabet": list(stamp.alphabet),
            "generators": stamp.gen_image,
            "words": list(stamp.words),
            "accepting": sorted(P.subset),
            "table": M.table.tolist(),
            "order": [[int(i), int(j)] for i in range(M.size) for j in range(M.size)
                      if i != j and order.leq[i, j]],
        })
    return EXIT_TRUE


def cmd_classify(args) -> int:
    d = load_input(args.input, args.alphabet)
    report = classify(d, max_monoid_size(args.max_monoid_size))
    if args.json:
        print(report.to_json())
    else:
        for k, v in report.as_dict().items():
            print(f"{k:20s} {str(v).lower() if isinstance(v, bool) else v}")
    return EXIT_TRUE


def _describe(found, words=None) -> str:
    labels = [w or "1" for w in words] if words else None
    return found.describe(labels)


def cmd_check(args) -> int:
    if args.variety:
        if not args.input:
            raise UsageError("--variety needs --input")
        d, stamp, P = _stamp(args)
        verdict = decide(args.variety, stamp, P)
        name = lookup(args.variety).name
        print(f"{name}: {'member' if verdict.member else 'not a member'}")
        if args.explain and not verdict.member:
            if verdict.failed_identity:
                print(f"fails {verdict.failed_identity}")
                print(f"witness {_describe(verdict.counterexample, stamp.words)}")
            else:
                print("structural test failed")
        return EXIT_TRUE if verdict.member else EXIT_FALSE
    if not args.identity or not args.monoid:
        raise UsageError("check needs --variety with --input, or --identity with --monoid")
    mf = read_mtab(Path(args.monoid).read_text())
    interp = {"plain": "plain", "sg": "semigroup", "cne": "C_ne", "clm": "C_lm"}[args.interp]
    ident = parse_identity(args.identity, interp)
    if ident.relation == "leq" and not args.ordered:
        raise UsageError("an inequality needs --ordered")
    ordered = mf.ordered if args.ordered else None
    if interp == "plain":
        found = counterexample(ordered or mf.monoid, ident)
    elif interp == "semigroup" and mf.stamp is None:
        M = mf.monoid
        found = semigroup_counterexample(FiniteSemigroup(M.table, check=False), ident)
    else:
        if mf.stamp is None:
            raise UsageError(f"interpretation {args.interp} needs 'gen' lines in the monoid file")
        found = stamp_counterexample(mf.stamp, ident, ordered)
    print(f"{ident}: {'holds' if found is None else 'fails'}")
    if found is not None:
        print(f"witness {found.describe(mf.monoid.labels)}")
    return EXIT_TRUE if found is None else EXIT_FALSE


def cmd_ef(args) -> int:
    sig = games.Signature.parse(args.sig)
    print(games.ef_winner(args.left, args.right, args.rounds, sig))
    return EXIT_TRUE


def cmd_density(args) -> int:
    d = load_input(args.input, args.alphabet)
    cls = density_class(d)
    counts = oracle.count_table(au.minimize(d), args.max_n)
    if args.json:
        _print_json({"class": cls, "counts": counts})
    else:
        print(f"class {cls}")
        for n, c in enumerate(counts):
            print(f"{n:4d} {c}")
    return EXIT_TRUE


def cmd_dense(args) -> int:
    d, stamp, P = _stamp(args)
    dense, witness = is_dense(d, (stamp, P))
    if args.json:
        _print_json({"dense": dense, "witness": witness})
    else:
        print("dense" if dense else f"not dense; witness {witness!r}")
    return EXIT_TRUE if dense else EXIT_FALSE


def cmd_product(args) -> int:
    kind = args.kind
    if kind == "la-astar":
        if not args.input or not args.letter:
            raise UsageError("la-astar needs --input and --letter")
        d, stamp, P = _stamp(args)
        st, acc = products.la_astar_stamp(stamp, P, args.letter)
        sys.stdout.write(write_mtab(st.monoid, st.gen_image))
        print(f"accepting {' '.join(map(str, sorted(acc.subset)))}")
        if args.verify:
            same = au.equivalent(products.language_of(st, acc), products.la_astar_reference(d, args.letter))
            print(f"equivalent {str(same).lower()}")
            return EXIT_TRUE if same else EXIT_FALSE
        return EXIT_TRUE
    if not args.left or not args.right:
        raise UsageError(f"{kind} needs --left and --right")
    S = read_mtab(Path(args.left).read_text()).monoid
    T = read_mtab(Path(args.right).read_text()).monoid
    if kind == "wreath":
        M, _ = products.wreath_product(S, T)
    else:
        if not args.action:
            raise UsageError(f"{kind} needs --action")
        act = read_action(Path(args.action).read_text(), S, T)
        if kind == "semidirect":
            if isinstance(act, products.BiAction):
                act = act.left
            M = products.semidirect_product(S, T, act)
        else:
            if not isinstance(act, products.BiAction):
                raise UsageError("block products need 'ract' lines in the action file")
            M = products.block_product(S, T, act)
    sys.stdout.write(write_mtab(M))
    return EXIT_TRUE


def cmd_oracle(args) -> int:
    d = load_input(args.input, args.alphabet)
    if args.kind == "synt-bf":
        M = oracle.syntactic_monoid_bruteforce(d, args.max_len)
        sys.stdout.write(write_mtab(M))
    elif args.kind == "count":
        print(oracle.count_words(d, args.n))
    else:
        ok = oracle.piecewise_consistency(d, args.k, args.max_len or 8)
        print(str(ok).lower())
        return EXIT_TRUE if ok else EXIT_FALSE
    return EXIT_TRUE


# --------------------------------------------------------------------------
# fixture corpus


def _fixture_dfa(inp: dict) -> au.Dfa:
    if "regex" in inp:
        return au.compile(au.parse_regex(inp["regex"], tuple(inp.get("alphabet", ""))))
    return au.dfa_from_json(json.dumps(inp["dfa"]))


def run_fixture(fx: dict, cap: int):
    """Compute the output a fixture's operation produces."""
    op, inp = fx["operation"], fx["input"]
    if op == "classify":
        return classify(_fixture_dfa(inp), cap).as_dict()
    if op == "synt_size":
        return syntactic_stamp(_fixture_dfa(inp), cap)[0].monoid.size
    if op == "member":
        stamp, P = syntactic_stamp(_fixture_dfa(inp), cap)
        return decide(inp["variety"], stamp, P).member
    if op == "count":
        return oracle.count_words(au.minimize(_fixture_dfa(inp)), inp["n"])
    if op == "density":
        return density_class(_fixture_dfa(inp))
    if op == "dense":
        return list(is_dense(_fixture_dfa(inp)))
    if op == "ef":
        sig = games.Signature.parse(inp.get("sig", "lt"))
        return games.ef_winner(inp["left"], inp["right"], inp["rounds"], sig)
    if op == "pumping":
        return games.verify_pumping(inp["u"], inp["d"], games.Signature.parse(inp.get("sig", "lt")))
    if op == "random_monoid_size":
        return oracle.random_transition_monoid(inp["seed"], inp["states"], inp["letters"])[0].size
    raise UsageError(f"unknown fixture operation {op!r}")


def cmd_corpus(args) -> int:
    root = Path(args.dir)
    if not root.is_dir():
        raise UsageError(f"{root} is not a directory")
    fixtures = []
    for path in sorted(root.glob("*.jsonl")):
        for i, fx in enumerate(read_fixtures(path.read_text())):
            fixtures.append((str(fx.get("id", f"{path.stem}:{i}")), fx))
    fixtures.sort(key=lambda p: p[0])
    cap = max_monoid_size(args.max_monoid_size)
    mismatches = 0
    for fid, fx in fixtures:
        try:
            got = run_fixture(fx, cap)
        except VarietyLabError as exc:
            got = f"error: {exc}"
        if got != fx["output"]:
            mismatches += 1
            print(f"MISMATCH {fid}: expected {fx['output']!r}, got {got!r}")
        elif args.verbose:
            print(f"ok {fid}")
    print(f"{len(fixtures)} fixtures, {mismatches} mismatches")
    return EXIT_TRUE if mismatches == 0 else EXIT_FALSE


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="varietylab", description=__doc__.splitlines()[0])
    p.add_argument("--max-monoid-size", type=int, default=None,
                   help=f"refuse monoids larger than this (default {CLI_MAX_MONOID}, "
                        "or $VARIETYLAB_MAX_MONOID)")
    sub = p.add_subparsers(dest="command", required=True)

    def with_input(sp, required=True):
        sp.add_argument("--input", required=required, help='regex:"EXPR" or dfa:FILE.json')
        sp.add_argument("--alphabet", default=None, help="extra letters for the alphabet, e.g. abc")
        return sp

    s = with_input(sub.add_parser("synt", help="syntactic monoid, order and generators"))
    s.add_argument("--emit", choices=("mtab", "json"), default="mtab")
    s.set_defaults(func=cmd_synt)

    s = with_input(sub.add_parser("classify", help="run every language decider"))
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_classify)

    s = with_input(sub.add_parser("check", help="variety membership or identity satisfaction"), False)
    s.add_argument("--variety")
    s.add_argument("--identity")
    s.add_argument("--monoid", help=".mtab file")
    s.add_argument("--ordered", action="store_true")
    s.add_argument("--interp", choices=("plain", "sg", "cne", "clm"), default="plain")
    s.add_argument("--explain", action="store_true")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("ef", help="winner of an Ehrenfeucht-Fraisse game")
    s.add_argument("--left", required=True)
    s.add_argument("--right", required=True)
    s.add_argument("--rounds", type=int, required=True)
    s.add_argument("--sig", default="lt", help="lt[,succ][,mod=Q]")
    s.set_defaults(func=cmd_ef)

    s = with_input(sub.add_parser("density", help="density class and word counts"))
    s.add_argument("--max-n", type=int, default=20)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_density)

    s = with_input(sub.add_parser("dense", help="density verdict with a non-density witness"))
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_dense)

    s = with_input(sub.add_parser("product", help="semidirect, wreath, block products; LaA* stamps"), False)
    s.add_argument("kind", choices=("semidirect", "wreath", "block", "la-astar"))
    s.add_argument("--left")
    s.add_argument("--right")
    s.add_argument("--action")
    s.add_argument("--letter")
    s.add_argument("--verify", action="store_true")
    s.set_defaults(func=cmd_product)

    s = with_input(sub.add_parser("oracle", help="brute-force verifiers"))
    s.add_argument("kind", choices=("synt-bf", "count", "piecewise"))
    s.add_argument("--max-len", type=int, default=None)
    s.add_argument("--n", type=int, default=10)
    s.add_argument("--k", type=int, default=2)
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("corpus", help="run fixture files and report mismatches")
    s.add_argument("--dir", required=True)
    s.add_argument("--verbose", action="store_true")
    s.set_defaults(func=cmd_corpus)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_TRUE
    try:
        return args.func(args)
    except SizeCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except InternalInconsistency:
        raise
    except (VarietyLabError, ValueError, KeyError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
