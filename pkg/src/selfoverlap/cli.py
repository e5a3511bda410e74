"""``selfoverlap`` command line.

stdout carries data (JSON envelope or CSV), stderr carries logs.  Exit
codes: 0 ok, 1 verification failure, 2 usage error, 3 domain error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from fractions import Fraction
from math import factorial

from . import __version__
from . import asymptotics as asy
from . import families as fam
from . import patterns as pat
from . import series
from .errors import DegenerateBasis, DomainError
from .oracle import default_backend_name, estimate_probability
from .oracle import brute_pattern_table
from .perm import BONA, MYERS, block_count, decompose, is_self_overlapping, overlap_profile, parse_permutation, reverse
from .serialize import csv_text, dumps, envelope
from .verify import SUITES, run_suite

log = logging.getLogger("selfoverlap")

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3


class Result:
    def __init__(self, parameters, results, header=None, rows=(), code=EXIT_OK):
        self.parameters = parameters
        self.results = results
        self.header = header
        self.rows = list(rows)
        self.code = code


def cmd_detect(args):
    sigma = parse_permutation(" ".join(args.perm))
    prof = overlap_profile(sigma)
    res = {
        "permutation": sigma,
        "n": prof.n,
        "ranges": list(prof.ranges),
        "minimal": prof.minimal,
        "is_self_overlapping": is_self_overlapping(sigma, args.convention),
        "convention": args.convention,
    }
    if args.convention == MYERS:
        res["reverse_ranges"] = list(overlap_profile(reverse(sigma)).ranges)
    rows = [(prof.n, " ".join(map(str, prof.ranges)), prof.minimal, res["is_self_overlapping"])]
    return Result({"perm": str(sigma), "convention": args.convention}, res,
                  ["n", "ranges", "minimal", "is_self_overlapping"], rows)


def cmd_decompose(args):
    sigma = parse_permutation(" ".join(args.perm))
    d = decompose(sigma)
    res = {"permutation": sigma, "prefix": list(d.prefix), "middle": d.middle, "block_count": block_count(d)}
    rows = [("prefix", i + 1, b) for i, b in enumerate(d.prefix)] + [("middle", 0, d.middle)]
    return Result({"perm": str(sigma)}, res, ["role", "index", "block"], rows)


def cmd_count(args):
    N, m = args.max_n, args.m
    if args.family == "nso":
        start, values = 1, series.count_nso(N)
    elif args.family == "so":
        start, values = 1, series.count_so(N)
    elif args.family == "so-m":
        start, values = 1, series.count_so_m(N, _need_m(args))
    else:
        start, values = 0, series.count_nso_m(N, _need_m(args))
    res = {"family": args.family, "start": start, "values": values}
    params = {"family": args.family, "max_n": N}
    if m is not None:
        params["m"] = m
    return Result(params, res, ["n", "value"], [(start + i, v) for i, v in enumerate(values)])


def _need_m(args):
    if args.m is None:
        raise UsageError("--m is required for this family")
    return args.m


class UsageError(Exception):
    pass


def _maybe(fn, *a):
    try:
        return fn(*a)
    except DegenerateBasis:
        return None


def cmd_expand(args):
    n, r, m = args.n, args.r, args.m
    params = {"target": args.target, "n": n, "r": r}
    if args.target == "so":
        res = {
            "truncation": asy.eval_so_expansion(n, r),
            "exact": asy.exact_so_probability(n),
            "remainder_diagnostic": _maybe(asy.remainder_diagnostic, n, r),
            "coefficients": [{"k": k, "coefficient": c} for k, c in asy.so_expansion(r).coefficients()],
        }
    elif args.target == "so-m":
        m = _need_m(args)
        params["m"] = m
        trunc = asy.eval_so_m_expansion(n, m, r)
        exact = asy.exact_so_m_probability(n, m)
        res = {
            "truncation": trunc,
            "exact": exact,
            "remainder_diagnostic": (exact - trunc) * asy.falling(n, 2 * r) if n >= 2 * r else None,
            "coefficients": [{"k": k, "coefficient": c} for k, c in asy.so_m_expansion(m, r).coefficients()],
        }
    else:
        if args.p is None:
            raise UsageError("--p is required for target pattern")
        m = 0 if m is None else m
        params.update(p=args.p, m=m)
        coeffs = pat.pattern_expansion_coefficients(args.p, m, r)
        res = {
            "truncation": coeffs.evaluate(n),
            "truncation_first_form": _maybe(pat.eval_pattern_expansion_1, args.p, m, n, r) if r > m else None,
            "exact": Fraction(pat.myers_count_p(args.p, n, m), factorial(n)),
            "remainder_diagnostic": _maybe(pat.pattern_remainder_diagnostic, args.p, m, n, r),
            "coefficients": [{"k": k, "coefficient": c} for k, c in coeffs.coefficients()],
        }
    rows = [(key, res[key]) for key in ("truncation", "exact", "remainder_diagnostic")]
    return Result(params, res, ["quantity", "value"], rows)


def cmd_pattern(args):
    pi = parse_permutation(args.pi)
    spec = pat.PatternSpec(pi)
    brute = args.brute
    if not brute and not (spec.p >= 3 and spec.eligible):
        log.warning("pattern %s is not eligible for the closed form; using exhaustive scan", pi)
        brute = True
    if brute:
        table = brute_pattern_table(pi, args.n, workers=args.workers, max_n=args.max_n)
        counts = dict(table.counts)
        top = max(counts) if counts else 0
        counts = {m: counts.get(m, 0) for m in range(top + 1)}
    else:
        counts = pat.myers_table(spec, args.n).counts
    if args.m is not None:
        counts = {args.m: counts.get(args.m, 0)}
    res = {"n": args.n, "pattern": pi, "counts": counts, "method": "scan" if brute else "closed-form",
           "eligible": spec.eligible}
    if args.m is not None:
        res["probability"] = Fraction(counts[args.m], factorial(args.n))
    params = {"pi": str(pi), "n": args.n, "brute": brute}
    if args.m is not None:
        params["m"] = args.m
    return Result(params, res, ["n", "m", "count"], [(args.n, m, c) for m, c in counts.items()])


def cmd_coeffs(args):
    ex = pat.pattern_expansion_coefficients(args.p, args.m, args.r)
    res = {"coefficients": [{"k": k, "coefficient": c} for k, c in ex.coefficients()]}
    code = EXIT_OK
    if args.cross_check:
        other = pat.rebase_expansion_via_lemma(args.p, args.m, args.r)
        agree = other == ex
        res["cross_check"] = {
            "agree": agree,
            "rebased": [{"k": k, "coefficient": c} for k, c in other.coefficients()],
        }
        code = EXIT_OK if agree else EXIT_VERIFY
    params = {"p": args.p, "m": args.m, "r": args.r, "cross_check": args.cross_check}
    return Result(params, res, ["k", "coefficient"], ex.coefficients(), code)


def cmd_verify(args):
    checks = run_suite(args.suite, args.max_n, workers=args.workers, inject=args.inject_mismatch)
    for name, ok in checks:
        log.info("%s %s", "PASS" if ok else "FAIL", name)
    passed = all(ok for _, ok in checks)
    res = {"suite": args.suite, "passed": passed, "checks": [{"name": n, "passed": ok} for n, ok in checks]}
    params = {"suite": args.suite, "max_n": args.max_n, "inject_mismatch": args.inject_mismatch}
    return Result(params, res, ["check", "passed"], checks, EXIT_OK if passed else EXIT_VERIFY)


def cmd_sample(args):
    n = args.n
    kw = {}
    exact = None
    if args.event == "so":
        exact = asy.exact_so_probability(n)
    elif args.event == "blocks":
        kw["m"] = _need_m(args)
        exact = asy.exact_so_m_probability(n, kw["m"])
    else:
        if args.pi is None:
            raise UsageError("--pi is required for event pattern")
        pi = parse_permutation(args.pi)
        kw["m"] = 0 if args.m is None else args.m
        kw["pattern"] = pi
        if len(pi) >= 3 and pat.is_eligible(pi):
            exact = pat.exact_pattern_probability(pi, n, kw["m"])
    est = estimate_probability(args.event, n, args.samples, args.seed, **kw)
    res = {
        "samples": est.samples,
        "hits": est.hits,
        "estimate": est.estimate,
        "stderr": format(est.stderr, ".6g"),
        "seed": est.seed,
        "exact": exact,
        "z_score": format(est.z_score(exact), ".4g") if exact is not None else None,
    }
    params = {"event": args.event, "n": n, "samples": args.samples, "seed": args.seed, **{
        k: (str(v) if k == "pattern" else v) for k, v in kw.items()}}
    rows = [(est.samples, est.hits, est.estimate, res["stderr"], est.seed)]
    return Result(params, res, ["samples", "hits", "estimate", "stderr", "seed"], rows)


def cmd_families(args):
    N, r = args.max_n, args.r
    nso, so = series.count_nso(N), series.count_so(N)
    ind = fam.count_indecomposable(N)
    simple = [0, 0, 0] + (fam.count_simple(N) if N >= 4 else [])
    rows = []
    for n in range(1, N + 1):
        row = {
            "n": n, "nso": nso[n - 1], "so": so[n - 1], "indecomposable": ind[n - 1], "simple": simple[n - 1],
            "so_exact": asy.exact_so_probability(n),
            "so_truncation": _maybe(asy.eval_so_expansion, n, r),
            "indecomposable_exact": Fraction(ind[n - 1], factorial(n)),
            "indecomposable_truncation": _maybe(fam.eval_indecomposable_expansion, n, r),
            "simple_exact": Fraction(simple[n - 1], factorial(n)),
            "simple_truncation_float": fam.eval_simple_expansion(n) if n >= 4 else None,
        }
        rows.append(row)
    res = {"rows": rows, "simple_rescaled_coefficients": fam.simple_expansion_rescaled()}
    header = list(rows[0]) if rows else ["n"]
    return Result({"max_n": N, "r": r}, res, header, [list(row.values()) for row in rows])


def _common(parser, suppress):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--format", choices=["json", "csv"], default=d("json"))
    parser.add_argument("--workers", type=int, default=d(None), help="threads for exhaustive enumeration")
    parser.add_argument("--out", default=d(None), help="write output to FILE instead of stdout")
    parser.add_argument("-v", "--verbose", action="store_true", default=d(False))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="selfoverlap", description=__doc__.splitlines()[0])
    _common(parser, suppress=False)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        _common(p, suppress=True)
        p.set_defaults(func=fn)
        return p

    p = add("detect", cmd_detect, "overlapping ranges of a permutation")
    p.add_argument("perm", nargs="+")
    p.add_argument("--convention", choices=[BONA, MYERS], default=BONA)

    p = add("decompose", cmd_decompose, "palindromic decomposition")
    p.add_argument("perm", nargs="+")

    p = add("count", cmd_count, "counting sequences")
    p.add_argument("--family", choices=["nso", "so", "so-m", "nso-m"], required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--m", type=int)

    p = add("expand", cmd_expand, "truncated expansions vs exact values")
    p.add_argument("--target", choices=["so", "so-m", "pattern"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--p", type=int)

    p = add("pattern", cmd_pattern, "very tight occurrence distribution")
    p.add_argument("--pi", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--brute", action="store_true")
    p.add_argument("--max-n", type=int, default=11)

    p = add("coeffs", cmd_coeffs, "falling-factorial coefficients c_k")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--cross-check", action="store_true")

    p = add("verify", cmd_verify, "oracle equivalence suites")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--max-n", type=int)
    p.add_argument("--inject-mismatch", action="store_true", help="perturb one formula (smoke test)")

    p = add("sample", cmd_sample, "Monte-Carlo estimate")
    p.add_argument("--event", choices=["so", "blocks", "pattern"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--pi")

    p = add("families", cmd_families, "side-by-side family table")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--r", type=int, default=3)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(levelname)s %(message)s")
    log.debug("kernel backend: %s", default_backend_name())
    try:
        result = args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    if args.format == "csv":
        text = csv_text(result.header, result.rows)
    else:
        text = dumps(envelope(args.command, result.parameters, result.results, __version__))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return result.code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
