"""Command-line entry point.

Exit codes: 0 success, 1 domain or usage error (one JSON line on stderr),
2 a verification that did not pass.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction

from penney import search
from penney.automaton import (absorption_win, build, build_single, expected_absorption_time,
                              to_dot)
from penney.correlation import (bad_prefix_sets, correlation_poly, forward_propagation_holds,
                                overlap_set, period_set)
from penney.properties import (has_property_r, property_e_witnesses, property_r_bruteforce,
                               verify_phi_bijection)
from penney.ratfunc import derivative_extrema, evaluate, limit_at_zero
from penney.winprob import classify_symmetry, expected_hitting_time, win_probability
from penney.words import Word, WordError, make_word

EXIT_OK, EXIT_DOMAIN, EXIT_VERIFY = 0, 1, 2


class UsageError(argparse.ArgumentTypeError, ValueError):
    """Bad command line; argparse keeps the message when a type converter raises it."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_rational(text: str) -> Fraction:
    """'a/b' or decimal text, converted exactly ("0.45" -> 9/20)."""
    try:
        q = Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not an exact rational: {text!r}") from None
    return q


def parse_probability(text: str) -> Fraction:
    q = parse_rational(text)
    if not 0 < q < 1:
        raise UsageError(f"probability must lie strictly between 0 and 1, got {text}")
    return q


def _frac(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _words(*texts) -> list[Word]:
    return [make_word(t) for t in texts]


def _sorted_words(ws) -> list[str]:
    return sorted((str(x) for x in ws), key=lambda s: (len(s), s))


def _table(poly) -> list:
    return [{"ones": i, "zeros": j, "count": c} for (i, j), c in sorted(poly.terms.items())]


# -- subcommands --------------------------------------------------------------

def cmd_win(args):
    v, w = _words(args.v, args.w)
    f = win_probability(v, w)
    out = {"command": "win", "v": str(v), "w": str(w), "win": f.to_json(),
           "symmetry": classify_symmetry(v, w).label(),
           "limit_at_zero": _frac(limit_at_zero(f)),
           "extrema": [[_frac(a), _frac(b)] for a, b in derivative_extrema(f)]}
    if args.at is not None:
        out["at"] = _frac(args.at)
        out["value"] = _frac(evaluate(f, args.at))
    return out, EXIT_OK


def cmd_corr(args):
    v, w = _words(args.v, args.w)
    pairs = {"vv": (v, v), "ww": (w, w), "vw": (v, w), "wv": (w, v)}
    sets = bad_prefix_sets(v, w)
    out = {"command": "corr", "v": str(v), "w": str(w),
           "overlaps": {k: list(overlap_set(a, b).lengths) for k, (a, b) in pairs.items()},
           "tables": {k: _table(correlation_poly(a, b)) for k, (a, b) in pairs.items()},
           "bad_prefixes": {"D_vv": _sorted_words(sets.dvv), "D_ww": _sorted_words(sets.dww),
                            "D_vw": _sorted_words(sets.dvw), "D_wv": _sorted_words(sets.dwv),
                            "F": _sorted_words(sets.f)},
           "periods": {"v": sorted(period_set(v)), "w": sorted(period_set(w))},
           "forward_propagation": {"v": forward_propagation_holds(v),
                                   "w": forward_propagation_holds(w)}}
    return out, EXIT_OK


def cmd_check(args):
    v, w = _words(args.v, args.w)
    out = {"command": "check", "property": args.property, "v": str(v), "w": str(w)}
    if args.property == "r":
        verdict = has_property_r(v, w)
        out["verdict"] = verdict
        out["F"] = _sorted_words(bad_prefix_sets(v, w, equal_length=True).f)
        if args.bruteforce:
            out["bruteforce"] = property_r_bruteforce(v, w)
            if out["bruteforce"] != verdict:
                return out, EXIT_VERIFY
        return out, EXIT_OK
    witnesses = property_e_witnesses(v, w, strict=args.strict)
    if args.property == "e":
        out["verdict"] = bool(witnesses)
        out["witnesses"] = [x.to_json() for x in witnesses]
        return out, EXIT_OK
    if not witnesses:
        raise WordError(f"({v}, {w}) has no property E witness")
    report = verify_phi_bijection(v, w, witnesses[0], args.max_len)
    out["verdict"] = report.passed
    out["witness"] = witnesses[0].to_json()
    out["report"] = report.to_json()
    return out, EXIT_OK if report.passed else EXIT_VERIFY


def cmd_graph(args):
    if args.w is None:
        g = build_single(make_word(args.v))
    else:
        g = build(*_words(args.v, args.w))
    if args.format == "dot":
        return to_dot(g), EXIT_OK
    order = g.bfs_order()
    ids = {x: i for i, x in enumerate(order)}
    out = {"command": "graph", "v": str(g.v), "w": str(g.w) if g.w is not None else None,
           "vertices": [{"id": ids[x], "v_prefix": str(x[0]), "w_prefix": str(x[1]),
                         "absorbing": g.winner(x).value if g.winner(x) else None}
                        for x in order],
           "edges": [{"from": ids[x], "to": ids[y], "label": str(bit)}
                     for x in order for bit, y in enumerate(g.edges.get(x, ()))]}
    return out, EXIT_OK


def cmd_oracle(args):
    v, w = _words(args.v, args.w)
    q = args.at if args.at is not None else Fraction(1, 2)
    formula = evaluate(win_probability(v, w), q)
    chain = absorption_win(build(v, w), q)
    times = {}
    for name, x in (("v", v), ("w", w)):
        a = evaluate(expected_hitting_time(x), q)
        b = expected_absorption_time(build_single(x), q)
        times[name] = {"formula": _frac(a), "automaton": _frac(b), "agree": a == b}
    agree = formula == chain and all(t["agree"] for t in times.values())
    out = {"command": "oracle", "v": str(v), "w": str(w), "at": _frac(q),
           "formula": _frac(formula), "automaton": _frac(chain),
           "expected_time": times, "agree": agree}
    return out, EXIT_OK if agree else EXIT_VERIFY


def _report(rep: search.SearchReport, args, command="search"):
    out = {"command": command, **rep.to_json(timing=args.timing)}
    return out, EXIT_VERIFY if rep.verdict == "fail" else EXIT_OK


def cmd_search(args):
    op = args.operation
    if op == "longer-by-one":
        return _report(search.verify_longer_by_one(args.n, threads=args.threads), args)
    if op == "gap-bound":
        return _report(search.verify_length_gap_bound(args.n, args.k, threads=args.threads), args)
    if op == "argmax":
        return _report(search.argmax_win(args.n, args.k, args.at or Fraction(1, 2)), args)
    if op == "threshold":
        lo, hi = search.threshold_root(args.k, args.tol)
        return {"command": "search", "operation": "threshold", "k": args.k,
                "interval": [_frac(lo), _frac(hi)],
                "decimal": f"{float((lo + hi) / 2):.12f}"}, EXIT_OK
    if op == "bounds":
        if args.at is None:
            raise UsageError("bounds needs --at")
        return {"command": "search", "operation": "bounds",
                **search.closed_form_bounds(args.k, args.at)}, EXIT_OK
    if op == "curve":
        grid = args.grid or [Fraction(i, 20) for i in range(1, 10)]
        rows = search.longer_favorable_curve(args.max_len, grid, samples=args.samples,
                                             seed=args.seed, threads=args.threads)
        if args.format == "csv":
            return "\n".join([search.CURVE_HEADER] + [r.csv() for r in rows]) + "\n", EXIT_OK
        out = {"command": "search", "operation": "curve",
               "parameters": {"max_len": args.max_len, "samples": args.samples},
               "rows": [{"p": _frac(r.p), "proportion": _frac(r.proportion),
                         "ci_half_width": r.ci_half_width, "n_pairs": r.n_pairs}
                        for r in rows]}
        if args.samples is not None:
            out["seed"], out["rng"] = args.seed, search.RNG_ALGORITHM
        return out, EXIT_OK
    if op == "density":
        return _report(search.property_r_density(
            args.n, threads=args.threads, checkpoint=args.checkpoint,
            confirm_long_run=args.confirm_long_run, kernel=args.kernel), args)
    raise UsageError(f"unknown search operation {op}")


def cmd_census(args):
    return _report(search.symmetry_census(args.n, threads=args.threads), args, "census")


# -- parser ---------------------------------------------------------------------

def _human(obj, indent=0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for k, val in obj.items():
            if isinstance(val, (dict, list)) and val:
                lines.append(f"{pad}{k}:")
                lines.append(_human(val, indent + 1))
            else:
                lines.append(f"{pad}{k}: {val}")
        return "\n".join(lines)
    if isinstance(obj, list):
        return "\n".join(f"{pad}- {json.dumps(x, ensure_ascii=False)}" for x in obj)
    return f"{pad}{obj}"


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "dot", "human"], default="json")
    common.add_argument("--threads", type=int, default=None)
    common.add_argument("--timing", action="store_true", help="include elapsed seconds")
    common.add_argument("-v", "--verbose", action="store_true")

    p = _Parser(prog="penney", description="Exact Penney's ante computations.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("win", parents=[common], help="win probability as a function of p")
    s.add_argument("v")
    s.add_argument("w")
    s.add_argument("--at", type=parse_probability)
    s.set_defaults(func=cmd_win)

    s = sub.add_parser("corr", parents=[common], help="overlaps, correlation tables, bad prefixes")
    s.add_argument("v")
    s.add_argument("w")
    s.set_defaults(func=cmd_corr)

    s = sub.add_parser("check", parents=[common], help="decide property R or E, verify phi")
    s.add_argument("property", choices=["r", "e", "phi"])
    s.add_argument("v")
    s.add_argument("w")
    s.add_argument("--max-len", type=int, default=20)
    s.add_argument("--strict", action="store_true", help="literal condition IV for E")
    s.add_argument("--bruteforce", action="store_true", help="also run the brute-force R oracle")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("graph", parents=[common], help="prefix-pair automaton")
    s.add_argument("v")
    s.add_argument("w", nargs="?")
    s.set_defaults(func=cmd_graph)

    s = sub.add_parser("oracle", parents=[common], help="formula against automaton, exactly")
    s.add_argument("v")
    s.add_argument("w")
    s.add_argument("--at", type=parse_probability)
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("search", parents=[common], help="exhaustive and sampled sweeps")
    s.add_argument("operation", choices=["longer-by-one", "gap-bound", "argmax", "threshold",
                                         "bounds", "curve", "density"])
    s.add_argument("--n", type=int)
    s.add_argument("--k", type=int, default=1)
    s.add_argument("--at", type=parse_probability)
    s.add_argument("--tol", type=parse_rational, default=Fraction(1, 10 ** 9))
    s.add_argument("--max-len", type=int, default=8)
    s.add_argument("--grid", type=parse_rational, nargs="+")
    s.add_argument("--samples", type=int)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--confirm-long-run", action="store_true")
    s.add_argument("--checkpoint")
    s.add_argument("--kernel", choices=["auto", "python", "numba"], default="auto")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("census", parents=[common], help="symmetry census of length-n pairs")
    s.add_argument("n", type=int)
    s.set_defaults(func=cmd_census)
    return p


def _needs_n(args):
    if args.command == "search" and args.operation in (
            "longer-by-one", "gap-bound", "argmax", "density") and args.n is None:
        raise UsageError(f"{args.operation} needs --n")


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        _needs_n(args)
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                            format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
        out, code = args.func(args)
    except (UsageError, WordError, search.RangeError, ArithmeticError, ValueError) as exc:
        print(json.dumps({"error": str(exc), "type": type(exc).__name__}), file=sys.stderr)
        return EXIT_DOMAIN
    if isinstance(out, str):
        sys.stdout.write(out)
    elif args.format == "human":
        print(_human(out))
    else:
        print(json.dumps(out, ensure_ascii=False))
    return code


if __name__ == "__main__":
    sys.exit(main())
