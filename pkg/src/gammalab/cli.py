"""Command-line front end: verify / eval / sweep / list.

Exit codes: 0 success, 1 usage or internal error, 2 verification failure
(an expected-CONFIRMED identity came back REFUTED).
"""

from __future__ import annotations

import argparse
import difflib
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import kernels
from .errors import GammalabError
from .integral_catalog import integral_catalog, list_integral_ids
from .registry import Registry, TOL_CLASS, failures, set_runtime_options
from .report import build_report, fmt15, to_json, to_markdown
from .series_catalog import list_series_ids, sum_catalog


@dataclass
class Config:
    tol_class: str | None = None
    max_terms: int | None = None
    quad_level_cap: int = 10
    parallelism: int = 1
    json_path: str | None = None
    md_path: str | None = None
    no_timing: bool = False

    def __post_init__(self) -> None:
        if self.parallelism < 1:
            raise ValueError("parallelism must be >= 1")
        if self.quad_level_cap > 14:
            raise ValueError("quadrature level cap must be <= 14")

    def snapshot(self) -> dict:
        return {
            "tol_class": self.tol_class or "per-record",
            "max_terms": self.max_terms or "per-entry",
            "quad_level_cap": self.quad_level_cap,
            "parallelism": self.parallelism,
        }


_FN_KEYS = {
    "log_gamma": (kernels.log_gamma, 1),
    "digamma": (kernels.digamma, 1),
    "polygamma": (lambda k, x: kernels.polygamma(int(k), x), 2),
    "lambda": (kernels.lambda_fn, 1),
    "si": (lambda x: kernels.sici(x)[0], 1),
    "ci": (lambda x: kernels.sici(x)[1], 1),
    "ei": (kernels.exp_integral, 1),
    "zeta": (lambda s: kernels.zeta_family("zeta", s), 1),
    "zeta_prime": (lambda s: kernels.zeta_family("zeta_prime", s), 1),
    "zeta_prime2_at_2": (lambda: kernels.zeta_family("zeta_prime2_at_2"), 0),
    "zeta_prime_neg1": (lambda: kernels.zeta_family("zeta_prime_neg1"), 0),
    "hurwitz": (lambda s, a: kernels.zeta_family("hurwitz", s, a), 2),
    "gamma1": (kernels.stieltjes_gamma1, 0),
    "log_barnes_g": (kernels.log_barnes_g, 1),
    "clausen_cl2": (kernels.clausen_cl2, 1),
    "bernoulli_poly": (lambda n, x: kernels.bernoulli_poly(int(n), x), 2),
}


def _near_matches(key: str, pool) -> str:
    close = difflib.get_close_matches(key, list(pool), n=4, cutoff=0.4)
    return f" (near matches: {', '.join(close)})" if close else ""


# one task of the parallel suite; module-level so it pickles
def _suite_task(task) -> object:
    rid, params, tol_class, disputed, runtime = task
    set_runtime_options(**runtime)
    reg = Registry()
    if reg.record(rid).probe is not None:
        return reg._verify_probe(reg.record(rid))
    if disputed:
        v = reg.verify_identity(rid, params, tol_class="strict", boost=4)
        return v
    return reg.verify_identity(rid, params, tol_class=tol_class)


def _run_suite(reg: Registry, records, cfg: Config):
    if cfg.parallelism == 1:
        return reg.run_suite([r.id for r in records], tol_class=cfg.tol_class)
    runtime = {"max_terms": cfg.max_terms, "level_cap": cfg.quad_level_cap}
    tasks = []
    for rec in sorted(records, key=lambda r: r.id):
        if rec.probe is not None:
            tasks.append((rec.id, (), cfg.tol_class, False, runtime))
            continue
        for params in rec.default_params:
            tasks.append((rec.id, params, cfg.tol_class,
                          rec.expected == "DISPUTED", runtime))
    with ProcessPoolExecutor(max_workers=cfg.parallelism) as pool:
        verdicts = list(pool.map(_suite_task, tasks))
    # re-attach dispute notes dropped by the worker round-trip
    out = []
    for v in verdicts:
        rec = reg.record(v.id)
        if rec.expected == "DISPUTED" and rec.reported:
            diag = dict(v.diagnostics)
            diag["reported"] = rec.reported
            v = type(v)(v.id, v.params, v.lhs_value, v.lhs_err, v.rhs_value,
                        v.rhs_err, v.residual, v.budget, v.status,
                        v.expected, v.tol_class, v.wall_time, v.note, diag)
        out.append(v)
    return out


def cmd_verify(args) -> int:
    cfg = Config(tol_class=args.tol_class, max_terms=args.max_terms,
                 quad_level_cap=args.quad_level_cap,
                 parallelism=args.parallelism, json_path=args.json,
                 md_path=args.md, no_timing=args.no_timing)
    set_runtime_options(max_terms=cfg.max_terms,
                        level_cap=cfg.quad_level_cap)
    reg = Registry()
    if args.ids:
        records = []
        for rid in args.ids.split(","):
            rid = rid.strip()
            try:
                records.append(reg.record(rid))
            except GammalabError:
                known = [r.id for r in reg.list_identities()]
                print(f"error: unknown identity id {rid!r}"
                      f"{_near_matches(rid, known)}", file=sys.stderr)
                return 1
    elif args.section is not None:
        records = reg.list_identities(section=args.section)
        if not records:
            print(f"error: no identities in section {args.section}",
                  file=sys.stderr)
            return 1
    else:
        records = reg.list_identities()
    verdicts = _run_suite(reg, records, cfg)
    report = build_report(reg, verdicts, cfg.snapshot())
    timing = not cfg.no_timing
    if cfg.json_path:
        with open(cfg.json_path, "w") as fh:
            fh.write(to_json(report, timing=timing))
            fh.write("\n")
    if cfg.md_path:
        with open(cfg.md_path, "w") as fh:
            fh.write(to_markdown(report, reg, timing=timing))
            fh.write("\n")
    for v in verdicts:
        pstr = "(" + ", ".join(fmt15(p) for p in v.params) + ")"
        print(f"{v.id:12s} {pstr:18s} {v.status:12s} "
              f"residual={fmt15(v.residual)} budget={fmt15(v.budget)}")
    bad = failures(verdicts)
    counts = report.summary["counts"]
    print("summary: " + ", ".join(f"{k}={v}" for k, v in sorted(counts.items()))
          + f"; failures={len(bad)}")
    return 2 if bad else 0


def cmd_eval(args) -> int:
    params = tuple(float(p) for p in args.params)
    key = args.key
    try:
        if args.kind == "fn":
            if key not in _FN_KEYS:
                print(f"error: unknown function {key!r}"
                      f"{_near_matches(key, _FN_KEYS)}", file=sys.stderr)
                return 1
            fn, nparams = _FN_KEYS[key]
            if len(params) != nparams:
                print(f"error: {key} takes {nparams} parameter(s)",
                      file=sys.stderr)
                return 1
            r = fn(*params)
            value, err = r.value, r.abs_err
        elif args.kind == "series":
            r = sum_catalog(key, params)
            value, err = r.value, r.abs_err
        else:
            r = integral_catalog(key, params)
            value, err = r.value, r.abs_err
    except GammalabError as exc:
        pool = (list_series_ids() if args.kind == "series"
                else list_integral_ids() if args.kind == "integral" else [])
        extra = _near_matches(key, pool) if "unknown" in str(exc) else ""
        print(f"error: {exc}{extra}", file=sys.stderr)
        return 1
    pstr = " ".join(fmt15(p) for p in params)
    print(f"{key} {pstr} = {fmt15(value)} ± {fmt15(err)}".replace("  ", " "))
    return 0


def cmd_sweep(args) -> int:
    reg = Registry()
    try:
        rec = reg.record(args.id)
    except GammalabError:
        known = [r.id for r in reg.list_identities()]
        print(f"error: unknown identity id {args.id!r}"
              f"{_near_matches(args.id, known)}", file=sys.stderr)
        return 1
    if not rec.param_names:
        print(f"error: {args.id} is not parametric", file=sys.stderr)
        return 1
    if args.param not in rec.param_names:
        print(f"error: {args.id} has parameters {rec.param_names}",
              file=sys.stderr)
        return 1
    if args.steps < 2 or not args.start < args.stop:
        print("error: need steps >= 2 and from < to", file=sys.stderr)
        return 1
    idx = rec.param_names.index(args.param)
    lo, hi = rec.param_domain[idx]
    if not (lo <= args.start and args.stop <= hi):
        print(f"error: sweep range outside domain [{lo}, {hi}]",
              file=sys.stderr)
        return 1
    base = list(rec.default_params[0])
    rows = []
    for k in range(args.steps):
        val = args.start + (args.stop - args.start) * k / (args.steps - 1)
        base[idx] = val
        v = reg.verify_identity(args.id, tuple(base))
        rows.append(v)
        print(f"{args.param}={fmt15(val):22s} lhs={fmt15(v.lhs_value):22s} "
              f"rhs={fmt15(v.rhs_value):22s} residual={fmt15(v.residual):13s} "
              f"{v.status}")
    if args.json:
        report = build_report(reg, rows, {"sweep": args.id,
                                          "param": args.param})
        with open(args.json, "w") as fh:
            fh.write(to_json(report, timing=not args.no_timing))
            fh.write("\n")
    return 0


def cmd_list(args) -> int:
    reg = Registry()
    for rec in reg.list_identities(section=args.section,
                                   expected=args.status):
        pnames = ",".join(rec.param_names) or "-"
        print(f"{rec.id:12s} sec {rec.section}  params [{pnames}]  "
              f"{rec.expected:15s} {rec.anchor}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="gammalab",
        description="Verify log-gamma integral and series identities "
                    "by independent numerical routes.")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run the verification suite")
    sel = v.add_mutually_exclusive_group()
    sel.add_argument("--ids", help="comma-separated identity ids")
    sel.add_argument("--section", type=int, help="restrict to one section")
    sel.add_argument("--all", action="store_true", help="full catalog "
                     "(default)")
    v.add_argument("--tol-class", choices=sorted(TOL_CLASS), default=None)
    v.add_argument("--max-terms", type=int, default=None)
    v.add_argument("--quad-level-cap", type=int, default=10)
    v.add_argument("--parallelism", type=int, default=1)
    v.add_argument("--json", metavar="PATH")
    v.add_argument("--md", metavar="PATH")
    v.add_argument("--no-timing", action="store_true",
                   help="omit wall-time fields (reproducible output)")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("eval", help="evaluate one catalogued object")
    e.add_argument("kind", choices=("fn", "series", "integral"))
    e.add_argument("key")
    e.add_argument("params", nargs="*")
    e.set_defaults(func=cmd_eval)

    s = sub.add_parser("sweep", help="scan a parametric identity")
    s.add_argument("id")
    s.add_argument("--param", required=True)
    s.add_argument("--from", dest="start", type=float, required=True)
    s.add_argument("--to", dest="stop", type=float, required=True)
    s.add_argument("--steps", type=int, required=True)
    s.add_argument("--json", metavar="PATH")
    s.add_argument("--no-timing", action="store_true")
    s.set_defaults(func=cmd_sweep)

    ls = sub.add_parser("list", help="list catalogued identities")
    ls.add_argument("--section", type=int, default=None)
    ls.add_argument("--status", default=None,
                    help="filter by expected status")
    ls.set_defaults(func=cmd_list)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (GammalabError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
