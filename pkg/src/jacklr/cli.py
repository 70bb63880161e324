"""Command-line entry point: ``jacklr <command> ...``.

Exit status: 0 on success and clean scans, 2 when a scan finds
counterexamples, 1 on operational errors (bad input, I/O, cap exceeded).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import jack
from .alg import parse_rational
from .cache import DiskStore, default_cache_dir
from .errors import JackLRError
from .hermitian import (decide_product_support, parse_case, split_case_list, table_rows,
                        tensor_multiplicity)
from .jack import jack_expand
from .lr import lr_coeff, lr_expand
from .partition import format_partition, parse_partition
from .scan import DEFAULT_CAP, KINDS, ScanError, ScanParams, run_scan
from .structconst import check_stanley, stanley_product, structure_constants
from .symring import format_coeff

log = logging.getLogger("jacklr")


def _fp(p) -> str:
    return format_partition(p) or "0"


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _emit(args, payload: dict, text: str) -> None:
    sys.stdout.write(_dump(payload) if args.json else text.rstrip("\n") + "\n")


def _setup_cache(args) -> None:
    if getattr(args, "no_cache", False):
        return
    root = Path(args.cache) if args.cache else default_cache_dir()
    jack.set_store(DiskStore(root))


# ------------------------------------------------------------------ commands

def cmd_lr(args) -> int:
    lam, mu = parse_partition(args.lam), parse_partition(args.mu)
    if args.nu is not None:
        nu = parse_partition(args.nu)
        c = lr_coeff(lam, mu, nu)
        _emit(args, {"coeff": c}, str(c))
        return 0
    coeffs = lr_expand(lam, mu, args.max_len)
    _emit(args, {"coeffs": {_fp(nu): c for nu, c in coeffs.items()}},
          ", ".join(f"({_fp(nu)}):{c}" for nu, c in coeffs.items()) or "0")
    return 0


def cmd_jack(args) -> int:
    _setup_cache(args)
    lam = parse_partition(args.lam)
    exp = jack_expand(lam, args.nvars)
    if args.at is not None:
        x = parse_rational(args.at)
        coeffs = {mu: c(x) for mu, c in exp.coeffs.items()}
        coeffs = {mu: c for mu, c in coeffs.items() if c}
    else:
        x = None
        coeffs = exp.coeffs
    pieces = []
    for mu, c in coeffs.items():
        basis_el = f"m[{_fp(mu)}]"
        pieces.append(basis_el if c == 1 else f"{format_coeff(c)}·{basis_el}")
    payload = {"lam": _fp(lam), "nvars": args.nvars, "alpha": None if x is None else str(x),
               "coeffs": {_fp(mu): str(c) for mu, c in coeffs.items()}}
    _emit(args, payload, " + ".join(pieces) or "0")
    return 0


def cmd_struct(args) -> int:
    _setup_cache(args)
    lam, mu = parse_partition(args.lam), parse_partition(args.mu)
    table = structure_constants(lam, mu, args.nvars)
    if args.rank is not None:
        table = table.truncate(args.rank)
    if args.at is not None:
        x = parse_rational(args.at)
        entries = table.at(x)
    else:
        x = None
        entries = table.entries
    width = max((len(_fp(nu)) for nu in entries), default=1) + 2
    text = "\n".join(f"({_fp(nu)})".ljust(width + 2) + str(f) for nu, f in entries.items())
    payload = {"lam": _fp(lam), "mu": _fp(mu), "nvars": table.nvars, "rank": args.rank,
               "alpha": None if x is None else str(x),
               "coeffs": {_fp(nu): str(f) for nu, f in entries.items()}}
    _emit(args, payload, text or "0")
    if args.plot:
        from .plotting import plot_struct_curves
        plot_struct_curves(table, args.plot)
    return 0


def cmd_stanley(args) -> int:
    _setup_cache(args)
    lam, mu, nu = (parse_partition(s) for s in (args.lam, args.mu, args.nu))
    cls = check_stanley(lam, mu, nu)
    prod = stanley_product(lam, mu, nu)
    _emit(args, {"product": str(prod), "class": cls.value}, f"{prod}\n{cls.value}")
    return 0


def cmd_cases(args) -> int:
    rows = table_rows()
    payload = {"cases": [{"literal": c.literal, "label": c.label, "rank": c.rank, "mult": c.mult,
                          "tube": c.tube, "alpha": str(c.alpha),
                          "tube_reduction": f"{c.tube_reduction[0]}:{','.join(map(str, c.tube_reduction[1]))}".rstrip(":")}
                         for c in rows]}
    lines = [f"{'case':<12}{'literal':<12}{'r':>3}{'m':>4}  {'tube':<6}alpha"]
    for c in rows:
        lines.append(f"{c.label:<12}{c.literal:<12}{c.rank:>3}{c.mult:>4}  {str(c.tube):<6}{c.alpha}")
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_support(args) -> int:
    _setup_cache(args)
    case = parse_case(args.case)
    lam, mu, nu = (parse_partition(s) for s in (args.lam, args.mu, args.nu))
    verdict, ev = decide_product_support(case, lam, mu, nu)
    payload = {"verdict": verdict.value, **ev.as_dict()}
    text = f"{verdict.value}\nf = {ev.f}\nf({ev.alpha}) = {ev.value}\nc = {ev.lr}"
    _emit(args, payload, text)
    return 0


def cmd_mult(args) -> int:
    case = parse_case(args.case)
    lam, mu, nu = (parse_partition(s) for s in (args.lam, args.mu, args.nu))
    res = tensor_multiplicity(case, lam, mu, nu)
    payload = {"case": case.literal, "value": res.value, "formula": res.formula,
               "conjectural": res.conjectural}
    _emit(args, payload, f"{res.value}  [{res.formula}]")
    return 0


def _summary(report) -> str:
    lines = [report.params.command()]
    for cls, c in report.checks.items():
        lines.append(f"  {cls:<20} attempted {c['attempted']:>7}  passed {c['passed']:>7}  failed {c['failed']:>4}")
    if report.counterexamples:
        lines.append(f"  {len(report.counterexamples)} counterexample(s):")
        for ce in report.counterexamples[:20]:
            lines.append("    " + json.dumps(ce, ensure_ascii=False))
    else:
        lines.append("  no counterexamples")
    return "\n".join(lines)


def cmd_scan(args) -> int:
    cases = ()
    if args.cases:
        cases = tuple(c.literal for c in split_case_list(args.cases.replace(";", ",")))
    m_values = tuple(int(v) for v in args.m_values.split(",")) if args.m_values else (1, 2, 4, 8)
    params = ScanParams(args.kind, args.max_size, args.rank, cases, m_values)
    cache_dir = None
    if not args.no_cache:
        cache_dir = Path(args.cache) if args.cache else default_cache_dir()
    report = run_scan(params, workers=args.workers, cache_dir=cache_dir, cap=args.cap,
                      override_cap=args.i_know_what_im_doing)
    data = _dump(report.to_dict(include_runtime=args.runtime))
    if args.out:
        out = Path(args.out)
        out.write_text(data, encoding="utf-8")
        out.with_name(out.stem + ".runtime.json").write_text(_dump(report.runtime()), encoding="utf-8")
    if args.json and not args.out:
        sys.stdout.write(data)
    else:
        sys.stdout.write(_summary(report) + "\n")
    rt = report.runtime()
    print(f"wall time {rt['wall_time_s']}s, cache hits {rt['cache_hits']}, misses {rt['cache_misses']}",
          file=sys.stderr)
    if args.plot:
        from .plotting import plot_scan_report
        plot_scan_report(report.to_dict(), args.plot)
    return 0 if report.clean else 2


# -------------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="jacklr", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, cache=True):
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        if cache:
            sp.add_argument("--cache", help="cache directory (default $JACKLR_CACHE or ./.jackcache)")
            sp.add_argument("--no-cache", action="store_true", help="keep expansions in memory only")

    sp = sub.add_parser("lr", help="Littlewood-Richardson coefficients")
    sp.add_argument("lam")
    sp.add_argument("mu")
    sp.add_argument("nu", nargs="?")
    sp.add_argument("--max-len", type=int, help="only nu with at most this many parts")
    common(sp, cache=False)
    sp.set_defaults(func=cmd_lr)

    sp = sub.add_parser("jack", help="monomial expansion of a Jack polynomial P_lam")
    sp.add_argument("lam")
    sp.add_argument("nvars", type=int)
    sp.add_argument("--at", help="specialize a to this rational")
    common(sp)
    sp.set_defaults(func=cmd_jack)

    sp = sub.add_parser("struct", help="structure constants f^nu_{lam,mu}(a)")
    sp.add_argument("lam")
    sp.add_argument("mu")
    sp.add_argument("--rank", type=int, help="keep only nu with at most this many parts")
    sp.add_argument("--nvars", type=int, help="number of variables (default |lam|+|mu|)")
    sp.add_argument("--at", help="specialize a to this rational")
    sp.add_argument("--plot", help="write a figure of f^nu(a) to this file")
    common(sp)
    sp.set_defaults(func=cmd_struct)

    sp = sub.add_parser("stanley", help="classify c_lam c_mu c'_nu f^nu_{lam,mu}")
    sp.add_argument("lam")
    sp.add_argument("mu")
    sp.add_argument("nu")
    common(sp)
    sp.set_defaults(func=cmd_stanley)

    sp = sub.add_parser("cases", help="Hermitian symmetric space case table")
    common(sp, cache=False)
    sp.set_defaults(func=cmd_cases)

    sp = sub.add_parser("support", help="is S_nu inside S_lam * S_mu for a case?")
    sp.add_argument("case")
    sp.add_argument("lam")
    sp.add_argument("mu")
    sp.add_argument("nu")
    common(sp)
    sp.set_defaults(func=cmd_support)

    sp = sub.add_parser("mult", help="tensor multiplicity [V_lam (x) V_mu : V_nu]")
    sp.add_argument("case")
    sp.add_argument("lam")
    sp.add_argument("mu")
    sp.add_argument("nu")
    common(sp, cache=False)
    sp.set_defaults(func=cmd_mult)

    sp = sub.add_parser("scan", help="exhaustive verification sweep")
    sp.add_argument("kind", choices=KINDS)
    sp.add_argument("--max-size", type=int, required=True, help="bound on |lam| + |mu|")
    sp.add_argument("--rank", type=int, help="bound on the number of parts")
    sp.add_argument("--cases", help="case literals, e.g. 'sp:2,su:2,2,evii'")
    sp.add_argument("--m-values", help="root multiplicities for nonvanishing (default 1,2,4,8)")
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--out", help="write the JSON report here")
    sp.add_argument("--plot", help="write a summary figure here")
    sp.add_argument("--runtime", action="store_true",
                    help="include wall time and cache counters in the JSON (not reproducible)")
    sp.add_argument("--cap", type=int, default=DEFAULT_CAP)
    sp.add_argument("--i-know-what-im-doing", action="store_true", help="ignore the size cap")
    common(sp)
    sp.set_defaults(func=cmd_scan)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (JackLRError, ScanError, OSError, ValueError) as exc:
        print(f"jacklr: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
