"""Command line: frobsplit {contract,verify,split,eval} ..."""
import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import checks, gmod, induction
from .fparith import ModulusError, PrimeModulus
from .flagsplit import DegreeError, check_degree_bound
from .hyperalg import ExponentBoundError, Hyperalgebra, ParseError, SupportError, dist_fr, fr_prime, mu0, phi
from .modexpr import ExpressionError, parse_module

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(Exception):
    pass


# ----------------------------------------------------------------- helpers

def _weight_str(w):
    return str(w[0]) if len(w) == 1 else "(" + ",".join(map(str, w)) + ")"


def _character_str(m):
    char = m.character()
    if not char:
        return "0"
    parts = []
    for w in sorted(char, reverse=True):
        c = char[w]
        parts.append(f"e({_weight_str(w)})" if c == 1 else f"{c} e({_weight_str(w)})")
    return " + ".join(parts)


def _factors(m):
    fac = gmod.composition_factors(m)
    return [(f"L({_weight_str(w)})", fac[w]) for w in sorted(fac, reverse=True)]


def _factors_str(m):
    fac = _factors(m)
    if not fac:
        return "none"
    return ", ".join(name if c == 1 else f"{name}^{c}" for name, c in fac)


def _identify(m):
    """Name a standard module isomorphic to m, if one of the obvious candidates fits."""
    if m.dim == 0:
        return "0"
    top = max(m.weights)
    if min(top) < 0 or m.borel:
        return None
    names = []
    for label, build in (("nabla", gmod.dual_weyl), ("delta", gmod.weyl_module), ("L", gmod.simple)):
        cand = build(top, m.p)
        if gmod.is_isomorphic(m, cand):
            names.append(f"{label}({_weight_str(top)})")
    return " = ".join(names) or None


def _describe(m):
    out = {"dim": m.dim, "character": _character_str(m)}
    if not m.borel:
        out["factors"] = _factors_str(m)
        ident = _identify(m)
        if ident:
            out["isomorphic_to"] = ident
    return out


def _emit(payload, text_lines, args):
    fmt = args.format or getattr(args, "default_format", "text")
    if fmt == "json":
        out = json.dumps(payload, indent=2, sort_keys=True)
    else:
        out = "\n".join(text_lines)
    print(out)
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")


# ---------------------------------------------------------------- commands

def cmd_contract(args):
    try:
        m = parse_module(args.expr, args.p, args.rank)
        c = gmod.contract(m)
        cmp = parse_module(args.compare, args.p, args.rank) if args.compare else None
    except ExpressionError as exc:
        raise UsageError(str(exc)) from exc
    payload = {"expression": args.expr, "p": args.p, "module": _describe(m), "contraction": _describe(c)}
    lines = [f"{args.expr}  (p={args.p})"]
    for label, key in (("module", "module"), ("contraction", "contraction")):
        d = payload[key]
        lines.append(f"{label}: dim {d['dim']}")
        lines.append(f"  character: {d['character']}")
        if "factors" in d:
            lines.append(f"  factors: {d['factors']}")
        if "isomorphic_to" in d:
            lines.append(f"  isomorphic to: {d['isomorphic_to']}")
    ok = True
    if cmp is not None:
        ok = gmod.is_isomorphic(c, cmp)
        payload["compare"] = {"expression": args.compare, "isomorphic": ok}
        lines.append(f"contraction isomorphic to {args.compare}: {'yes' if ok else 'no'}")
    _emit(payload, lines, args)
    return EXIT_OK if ok else EXIT_FAIL


def _run_one(job):
    index, cfg, timing = job
    return checks.run_check(checks.REGISTRY[index], cfg, timing=timing)


def _module_check(args, cfg):
    try:
        m = parse_module(args.module, args.p, args.rank)
    except ExpressionError as exc:
        raise UsageError(str(exc)) from exc
    if not m.borel:
        m = gmod.borel_restriction(m)
    fn = {"twist-contract": induction.check_twist_contract,
          "steinberg-cup": induction.check_steinberg_cup}.get(args.check)
    if fn is None:
        raise UsageError("--module only applies to twist-contract and steinberg-cup")
    check = next(c for c in checks.REGISTRY if c.name == args.check)
    ok = fn(m)
    return [{"name": check.name, "anchor": check.anchor, "suite": check.suite,
             "parameters": {"p": cfg.p, "rank": cfg.rank, "module": args.module},
             "pass": bool(ok), "details": {}}]


def cmd_verify(args):
    cfg = checks.Config(p=args.p, rank=args.rank, max_degree=args.max_degree or 0,
                        seed=args.seed, sampled=args.sampled)
    check_degree_bound(cfg.p, cfg.degree)
    if args.module:
        records = _module_check(args, cfg)
    else:
        selected = checks.select(args.suite)
        if args.check:
            selected = [c for c in checks.REGISTRY if c.name == args.check]
            if not selected:
                raise UsageError(f"unknown check {args.check!r}")
        if cfg.rank > 1:
            selected = [c for c in selected if c.name not in checks.RANK_ONE_ONLY]
        indices = [checks.REGISTRY.index(c) for c in selected]
        jobs = [(i, cfg, not args.no_timing) for i in indices]
        if args.jobs > 1:
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                records = list(pool.map(_run_one, jobs))
        else:
            records = [_run_one(j) for j in jobs]
    ok = all(r["pass"] for r in records)
    payload = {"config": {"p": cfg.p, "rank": cfg.rank, "D": cfg.degree, "seed": cfg.seed,
                          "sampled": cfg.sampled, "suite": args.suite},
               "checks": records, "pass": ok}
    lines = []
    for r in records:
        tail = f"  {r['elapsed_ms']:.1f} ms" if "elapsed_ms" in r else ""
        lines.append(f"{'PASS' if r['pass'] else 'FAIL'}  {r['suite']}/{r['name']}  [{r['anchor']}]{tail}")
        if not r["pass"]:
            lines.append("      " + json.dumps(r["details"], sort_keys=True)[:400])
    lines.append(f"{sum(r['pass'] for r in records)}/{len(records)} checks passed")
    _emit(payload, lines, args)
    return EXIT_OK if ok else EXIT_FAIL


SPLIT_CHECKS = {"semiinv": ["frobenius-linear", "semi-invariance"], "glue": ["charts"],
                "schubert": ["schubert"], "sigma": ["sigma"], "f0": ["f0-splitting"], "models": ["models"]}


def cmd_split(args):
    cfg = checks.Config(p=args.p, rank=1, max_degree=args.max_degree or 0, seed=args.seed)
    check_degree_bound(cfg.p, cfg.degree)
    names = [n for group in SPLIT_CHECKS.values() for n in group] if args.check == "all" \
        else SPLIT_CHECKS[args.check]
    records = []
    for name in names:
        check = next(c for c in checks.REGISTRY if c.name == name)
        r = checks.run_check(check, cfg, timing=not args.no_timing)
        rec = {"check": name, "p": cfg.p, "D": cfg.degree, "pass": r["pass"]}
        if not r["pass"]:
            rec["counterexample"] = r["details"]
        records.append(rec)
    ok = all(r["pass"] for r in records)
    lines = [f"{'PASS' if r['pass'] else 'FAIL'}  {r['check']}  (p={r['p']}, D={r['D']})" for r in records]
    _emit({"checks": records, "pass": ok}, lines, args)
    return EXIT_OK if ok else EXIT_FAIL


def _factored_phi(x):
    """phi(x) written as 'Fr(x) times mu0, both in normal form."""
    head = fr_prime(x)
    m = mu0(x.alg)
    h, t = str(head), str(m)
    if len(head.pbw_terms()) > 1:
        h = f"({h})"
    if len(m.pbw_terms()) > 1:
        t = f"({t})"
    if h == "1":
        return t
    return f"{h} {t}"


def cmd_eval(args):
    alg = Hyperalgebra(args.p, args.rank)
    try:
        x = alg.parse(args.x)
        y = alg.parse(args.y) if args.y else None
    except ParseError as exc:
        raise UsageError(str(exc)) from exc
    value = x * y if y is not None else x
    payload = {"input": args.x, "p": args.p}
    if args.apply == "phi":
        text = _factored_phi(value)
        payload["phi"] = text
        payload["phi_expanded"] = str(phi(value))
        lines = [text]
        if args.expand:
            lines = [payload["phi_expanded"]]
    elif args.apply == "fr":
        text = str(dist_fr(value))
        payload["fr"] = text
        lines = [text]
    else:
        text = str(value)
        payload["normal_form"] = text
        lines = [text]
    if y is not None:
        payload["right"] = args.y
    _emit(payload, lines, args)
    return EXIT_OK


# ------------------------------------------------------------------ parser

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, default=2, help="prime, 2 <= p <= 13")
    common.add_argument("--rank", type=int, default=1, help="number of SL2 factors")
    common.add_argument("--format", choices=("text", "json"), help="report format (split defaults to json)")
    common.add_argument("--out", help="also write the JSON report to this file")

    parser = argparse.ArgumentParser(prog="frobsplit",
                                     description="Frobenius splittings of SL2 hyperalgebras and flag varieties.")
    sub = parser.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("contract", parents=[common], help="describe a module and its Frobenius contraction")
    pc.add_argument("expr", help='module expression, e.g. "tensor(St, twist(nabla(2)))"')
    pc.add_argument("--compare", help="module expression to compare the contraction against")
    pc.set_defaults(func=cmd_contract)

    pv = sub.add_parser("verify", parents=[common], help="run verification suites")
    pv.add_argument("--suite", choices=checks.SUITES + ("all",), default="all")
    pv.add_argument("--check", help="run a single named check")
    pv.add_argument("--module", help="module expression for twist-contract or steinberg-cup")
    pv.add_argument("--max-degree", type=int, help="truncation degree D (default 3p, at most 8p)")
    pv.add_argument("--seed", type=int, default=0)
    pv.add_argument("--sampled", action="store_true", help="smaller randomized batteries")
    pv.add_argument("--jobs", type=int, default=1, help="worker processes")
    pv.add_argument("--no-timing", action="store_true", help="omit elapsed times (byte-stable output)")
    pv.set_defaults(func=cmd_verify)

    ps = sub.add_parser("split", parents=[common], help="Frobenius splitting checks on the projective line")
    ps.add_argument("--check", choices=tuple(SPLIT_CHECKS) + ("all",), default="all")
    ps.add_argument("--max-degree", type=int, help="truncation degree D (default 3p, at most 8p)")
    ps.add_argument("--seed", type=int, default=0)
    ps.add_argument("--no-timing", action="store_true", help="accepted for symmetry with verify")
    ps.set_defaults(func=cmd_split, default_format="json")

    pe = sub.add_parser("eval", parents=[common], help="normal form, phi or Dist(Fr) of an element")
    pe.add_argument("x", help='element, e.g. "E F" or "F^(2) [H;1] E"')
    pe.add_argument("y", nargs="?", help="optional right factor")
    pe.add_argument("--apply", choices=("phi", "fr"))
    pe.add_argument("--expand", action="store_true", help="print phi(x) fully in normal form")
    pe.set_defaults(func=cmd_eval)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        PrimeModulus(args.p)
        if args.rank < 1:
            raise UsageError("rank must be positive")
        return args.func(args)
    except (UsageError, ModulusError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DegreeError, ExponentBoundError, SupportError, MemoryError) as exc:
        print(f"resource bound: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
