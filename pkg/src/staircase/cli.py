"""Command-line interface.

Exit codes: 0 success, 1 usage error or nothing to do, 2 invalid input,
3 verification mismatch, 4 exponent overflow.
"""
from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from .errors import ExponentOverflow, InvalidParams, NotMPrimary, VerificationError
from .family import (
    FamilyParams,
    build_family,
    choose_parameters,
    mu_reports,
    params_from_a,
    reports_to_csv,
    signs,
    validate,
    verify_headline,
)
from .formats import dump_ideal, dump_params, load_params, parse_ideal
from .grading import cm_type, socle_monomials, socle_via_colon
from .ideal import deg_ideal, format_monomial, mu, normalize, power, powers, product
from .oracle import naive_minimalize, naive_product, random_ideal, random_monomials

log = logging.getLogger("staircase")

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_MISMATCH, EXIT_OVERFLOW = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _int_list(text):
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _int_set(text):
    """'2-4', '2,3,5' or a mix such as '2,4-6'; order is preserved, duplicates dropped."""
    out = []
    try:
        for part in text.split(","):
            part = part.strip()
            if not part:
                continue
            if "-" in part:
                lo, hi = part.split("-", 1)
                out.extend(range(int(lo), int(hi) + 1))
            else:
                out.append(int(part))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integers or ranges like 2-8, got {text!r}") from None
    return list(dict.fromkeys(out))


# ---------------------------------------------------------------- sources


def _add_output(p):
    p.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    p.add_argument("--out", help="write to this file instead of stdout")
    p.add_argument("--no-banner", action="store_true", help="omit the version line in plain output")


def _add_params(p, ideal=False):
    g = p.add_argument_group("family parameters")
    g.add_argument("--m", type=int)
    g.add_argument("--p", type=_int_list, help="p_1..p_m, comma separated")
    g.add_argument("--a", type=_int_list, help="a_2..a_m, comma separated")
    g.add_argument("--params", metavar="FILE", help='JSON file {"m": .., "p": [..], "a": [..]}')
    g.add_argument("--choose-n", type=int, metavar="N", help="use the greedy parameters for n")
    if ideal:
        g.add_argument("--ideal", metavar="FILE", help="JSON ideal file ('-' for stdin)")


def _params(args) -> FamilyParams:
    inline = args.m is not None or args.p is not None or args.a is not None
    sources = [inline, args.params is not None, args.choose_n is not None]
    if getattr(args, "ideal", None) is not None:
        sources.append(True)
    if sum(sources) != 1:
        raise UsageError("give exactly one of --m/--p/--a, --params, --choose-n" + (", --ideal" if hasattr(args, "ideal") else ""))
    if args.params is not None:
        params = load_params(args.params)
    elif args.choose_n is not None:
        if args.choose_n < 1:
            raise InvalidParams(f"--choose-n must be >= 1, got {args.choose_n}")
        params = choose_parameters(args.choose_n)
    else:
        if args.m is None or args.p is None:
            raise UsageError("inline parameters need --m and --p (and --a when m >= 2)")
        params = FamilyParams(args.m, tuple(args.p), tuple(args.a or ()))
    validate(params)
    return params


def _read_ideal_arg(path):
    text = sys.stdin.read() if path == "-" else open(path).read()
    obj = json.loads(text)
    # accept the object written by `construct --format json` as well as a bare array
    if isinstance(obj, dict) and "ideal" in obj:
        obj = obj["ideal"]
    ideal, changed = parse_ideal(obj)
    if changed:
        log.info("input ideal was not canonical; canonicalized to %d generators", mu(ideal))
    return ideal


def _base_ideal(args):
    if getattr(args, "ideal", None) is not None:
        if any(v is not None for v in (args.m, args.p, args.a, args.params, args.choose_n)):
            raise UsageError("give exactly one of --m/--p/--a, --params, --choose-n, --ideal")
        return None, _read_ideal_arg(args.ideal)
    params = _params(args)
    return params, build_family(params)[1]


# ---------------------------------------------------------------- output


class _Out:
    def __init__(self, args):
        self.args = args
        self.buf = io.StringIO()
        if args.format == "plain" and not args.no_banner:
            self.line(f"# staircase {__version__}")

    def line(self, text=""):
        self.buf.write(text + "\n")

    def json(self, obj):
        self.buf.write(json.dumps(obj, separators=(",", ":")) + "\n")

    def flush(self):
        text = self.buf.getvalue()
        if self.args.out:
            with open(self.args.out, "w", newline="") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)


def _csv_text(header, rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


# ---------------------------------------------------------------- commands


def cmd_construct(args):
    params = _params(args)
    comps, ideal = build_family(params)
    out = _Out(args)
    names = [f"I_{i}" for i in range(1, len(comps) + 1)] + ["I"]
    ideals = comps + [ideal]
    if args.format == "json":
        out.json(
            {
                "params": params.to_json(),
                "components": [c.to_list() for c in comps],
                "ideal": ideal.to_list(),
                "summary": [{"name": n, "mu": mu(c), "degree": deg_ideal(c)} for n, c in zip(names, ideals)],
            }
        )
    elif args.format == "csv":
        out.buf.write(_csv_text(["name", "mu", "degree", "gens"], [[n, mu(c), deg_ideal(c), dump_ideal(c)] for n, c in zip(names, ideals)]))
    else:
        out.line(f"params {dump_params(params)}")
        for n, c in zip(names, ideals):
            out.line(f"{n} {dump_ideal(c)}")
        out.line("summary " + " ".join(f"{n}:mu={mu(c)},deg={deg_ideal(c)}" for n, c in zip(names, ideals)))
    out.flush()
    return EXIT_OK


def cmd_power(args):
    _, ideal = _base_ideal(args)
    Ik = power(ideal, args.k)
    out = _Out(args)
    if args.format == "json":
        out.line(dump_ideal(Ik))
    elif args.format == "csv":
        out.buf.write(_csv_text(["a", "b"], Ik.to_list()))
    else:
        out.line(f"k={args.k} mu={mu(Ik)} deg={deg_ideal(Ik) if Ik else '-'}")
        out.line(dump_ideal(Ik))
    out.flush()
    return EXIT_OK


def cmd_mu(args):
    _, ideal = _base_ideal(args)
    if args.kmax is not None:
        ks = range(1, args.kmax + 1)
        rows = [(k, mu(Ik)) for k, Ik in zip(ks, powers(ideal, args.kmax))]
    else:
        rows = [(args.k, mu(power(ideal, args.k)))]
    out = _Out(args)
    if args.format == "json":
        out.json([{"k": k, "mu": v} for k, v in rows])
    elif args.format == "csv":
        out.buf.write(_csv_text(["k", "mu"], rows))
    else:
        for k, v in rows:
            out.line(f"mu(I^{k}) = {v}")
    out.flush()
    return EXIT_OK


def _emit_reports(args, reports, params, verdict):
    out = _Out(args)
    if args.format == "json":
        out.json([r.to_json() for r in reports])
    elif args.format == "csv":
        out.buf.write(reports_to_csv(reports))
    else:
        out.line(f"params {dump_params(params)}")
        out.line(f"{'k':>3} {'mu':>6} {'pred':>6} {'struct':>6} {'type':>6} {'degree':>8}")
        for r in reports:
            out.line(f"{r.k:>3} {r.mu_computed:>6} {r.mu_predicted:>6} {'ok' if r.structure_ok else 'FAIL':>6} {r.cm_type:>6} {r.degree:>8}")
        out.line(verdict)
    out.flush()


def cmd_table(args):
    params = _params(args)
    reports = mu_reports(params, args.kmax)
    bad = [r for r in reports if not r.ok or r.cm_type != r.mu_computed - 1]
    verdict = "all rows match" if not bad else "MISMATCH at k=" + ",".join(str(r.k) for r in bad)
    _emit_reports(args, reports, params, verdict)
    if bad:
        log.error("verification mismatch at k=%s", ",".join(str(r.k) for r in bad))
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_verify(args):
    inline = args.m is not None or args.params is not None
    if inline:
        params = _params(args)
        n = params.m
    elif args.choose_n is not None:
        n = args.choose_n
        params = choose_parameters(n)
    else:
        raise UsageError("verify needs --choose-n N or family parameters")
    kmax = args.kmax if args.kmax is not None else n + 3
    if kmax < n:
        raise UsageError(f"--kmax must be >= n = {n}")
    try:
        reports = verify_headline(n, kmax, params)
    except VerificationError as exc:
        for problem in exc.mismatches:
            log.error("%s", problem)
        _emit_reports(args, mu_reports(params, kmax), params, "VERIFICATION FAILED")
        return EXIT_MISMATCH
    mus = ", ".join(str(r.mu_computed) for r in reports)
    _emit_reports(args, reports, params, f"verified n={n}: mu = {mus}")
    return EXIT_OK


def cmd_socle(args):
    _, ideal = _base_ideal(args)
    Ik = power(ideal, args.k) if args.k > 1 else ideal
    corners = socle_monomials(Ik)
    via_colon = socle_via_colon(Ik)
    r, n_gens = cm_type(Ik), mu(Ik)
    ok = r == n_gens - 1 and corners == via_colon
    out = _Out(args)
    if args.format == "json":
        out.json({"k": args.k, "socle": [list(m) for m in corners], "cm_type": r, "mu": n_gens, "identity_ok": ok})
    elif args.format == "csv":
        out.buf.write(_csv_text(["a", "b"], [list(m) for m in corners]))
    else:
        out.line("socle " + ", ".join(format_monomial(m) for m in corners))
        out.line(f"cm_type {r}")
        out.line(f"mu {n_gens}")
        out.line(f"type = mu - 1: {'yes' if ok else 'NO'}")
    out.flush()
    return EXIT_OK if ok else EXIT_MISMATCH


SEARCH_HEADER = ["m", "p", "a", "sign_pattern", "mu_sequence"]


def _search_row(job):
    params, kmax = job
    _, ideal = build_family(params)
    mus = [mu(Ik) for Ik in powers(ideal, kmax)]
    return params, "".join(signs(mus)), mus


def _grid(ms, avalues):
    for m in ms:
        if m < 1:
            log.warning("skipping m=%d: m must be >= 1", m)
            continue
        for a in itertools.product(avalues, repeat=m - 1):
            yield m, a


def cmd_search(args):
    if args.kmax < 2:
        raise UsageError("--kmax must be >= 2 for sign patterns")
    jobs = []
    for m, a in _grid(args.m_values, args.a_values):
        try:
            params = params_from_a(a) if m > 1 else FamilyParams(1, (2,), ())
            validate(params)
        except InvalidParams as exc:
            log.warning("skipping m=%d a=%s: %s", m, ",".join(map(str, a)), exc)
            continue
        jobs.append((params, args.kmax))
    if not jobs:
        sys.stderr.write("no valid tuples\n")
        return EXIT_USAGE
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_search_row, jobs))
    else:
        results = [_search_row(j) for j in jobs]
    rows = [
        [p.m, ";".join(map(str, p.p)), ";".join(map(str, p.a)), pattern, ";".join(map(str, mus))]
        for p, pattern, mus in results
    ]
    out = _Out(args)
    if args.format == "json":
        out.json(
            [
                {"params": p.to_json(), "sign_pattern": pattern, "mu_sequence": mus}
                for p, pattern, mus in results
            ]
        )
    elif args.format == "csv":
        out.buf.write(_csv_text(SEARCH_HEADER, rows))
    else:
        for p, pattern, mus in results:
            out.line(f"{p.describe():<40} {pattern:<{args.kmax}} {' '.join(map(str, mus))}")
    out.flush()
    return EXIT_OK


def cmd_selftest(args):
    failures = 0
    for i in range(args.count):
        seed = args.seed * 1_000_003 + i
        kind = i % 3
        if kind == 0:
            cands = random_monomials(seed, 200, args.max_exp)
            fast, slow = normalize(cands).gens, naive_minimalize(cands)
        elif kind == 1:
            I = random_ideal(seed, args.max_gens, args.max_exp)
            J = random_ideal(seed + 1, args.max_gens, args.max_exp)
            fast, slow = product(I, J).gens, naive_product(I.gens, J.gens)
        else:
            I = random_ideal(seed, min(args.max_gens, 10), args.max_exp)
            fast = power(I, 3).gens
            slow = naive_product(naive_product(I.gens, I.gens), I.gens)
        if set(fast) != set(slow):
            failures += 1
            log.error("selftest instance %d (seed %d) disagrees with the oracle", i, seed)
    out = _Out(args)
    out.line(f"selftest seed={args.seed} instances={args.count} failures={failures}")
    out.flush()
    return EXIT_OK if failures == 0 else EXIT_MISMATCH


# ---------------------------------------------------------------- entry


def build_parser():
    parser = _Parser(prog="staircase", description="Monomial ideals in K[x,y] and generator counts of their powers.")
    parser.add_argument("--version", action="version", version=f"staircase {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("construct", help="build I_1..I_m and I")
    _add_params(p)
    _add_output(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("power", help="generators of I^k")
    _add_params(p, ideal=True)
    p.add_argument("--k", type=int, default=1)
    _add_output(p)
    p.set_defaults(func=cmd_power)

    p = sub.add_parser("mu", help="mu(I^k), or mu(I^1..I^kmax)")
    _add_params(p, ideal=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--kmax", type=int)
    _add_output(p)
    p.set_defaults(func=cmd_mu)

    p = sub.add_parser("table", help="computed vs predicted mu for k = 1..kmax")
    _add_params(p)
    p.add_argument("--kmax", type=int, default=6)
    _add_output(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="end-to-end check of the strictly decreasing generator counts")
    _add_params(p)
    p.add_argument("--kmax", type=int)
    _add_output(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("socle", help="socle monomials and Cohen-Macaulay type of S/I^k")
    _add_params(p, ideal=True)
    p.add_argument("--k", type=int, default=1)
    _add_output(p)
    p.set_defaults(func=cmd_socle)

    p = sub.add_parser("search", help="sign patterns of mu(I^(k+1)) - mu(I^k) over a parameter grid")
    p.add_argument("--m", dest="m_values", type=_int_set, required=True, help="e.g. 2-4 or 2,5")
    p.add_argument("--a", dest="a_values", type=_int_set, required=True, help="values for every a_i, e.g. 2-8")
    p.add_argument("--kmax", type=int, default=4)
    p.add_argument("--jobs", type=int, default=1)
    _add_output(p)
    p.set_defaults(func=cmd_search, format="csv")

    p = sub.add_parser("selftest", help="fuzz the fast kernel against the brute-force oracle")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=300)
    p.add_argument("--max-gens", type=int, default=30)
    p.add_argument("--max-exp", type=int, default=10**6)
    _add_output(p)
    p.set_defaults(func=cmd_selftest)
    return parser


def _setup_logging(verbose):
    # bind to the current stderr on every call so repeated in-process runs stay separate
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s: %(message)s"))
    log.handlers[:] = [handler]
    log.setLevel(logging.INFO if verbose else logging.WARNING)
    log.propagate = False


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _setup_logging(args.verbose)
    for name in ("k", "kmax"):
        value = getattr(args, name, None)
        if value is not None and value < 1 and args.command != "search":
            sys.stderr.write(f"error: --{name} must be >= 1\n")
            return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except ExponentOverflow as exc:
        sys.stderr.write(f"overflow: {exc}; try a smaller --kmax or smaller parameters\n")
        return EXIT_OVERFLOW
    except (InvalidParams, NotMPrimary) as exc:
        sys.stderr.write(f"invalid input: {exc}\n")
        return EXIT_INVALID
    except (ValueError, TypeError, OSError) as exc:
        sys.stderr.write(f"invalid input: {exc}\n")
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
