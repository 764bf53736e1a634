"""Command-line surface: spectra, bounds, constructions, verifications, and
brute-force extremal search.  JSON output is the machine contract; tables are
for reading.  Exit codes: 0 success, 1 verification FAIL, 2 usage error,
3 budget exhausted."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__, _kernels
from .bounds import (caterpillar_bounds, augment_caterpillar, augment_kary,
                     augment_double_star, binary_coefficients,
                     ds_1_odd_exact, ds22_bounds, ds_k_unique_bounds,
                     ds_rainbow_bounds, kary_coefficients, verify_reduction)
from .certs import (BUDGET_EXHAUSTED, FAIL, PASS, load_certificate,
                    save_certificate, default_cache_dir)
from .coloring import BudgetExhausted
from .graphs import (Graph, GraphError, make_broom, make_caterpillar,
                     make_complete, make_cycle, make_double_star, make_path,
                     make_perfect_kary)
from .search import (RAINBOW, brute_extremal, recheck_certificate,
                     verify_k2s4_construction, verify_k6_rainbow_free,
                     verify_k6_universal_3unique)
from .spectrum import compute_spectrum, ds_spectrum_closed_form

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class SpecError(ValueError):
    pass


def parse_family(tokens: list[str], graph_file: str | None = None) -> tuple[str, Graph]:
    """Family grammar: P<k>, C<k>, K<n>, DS <r> <s>, B <k> <r>,
    CAT <c1,...,ck>, T <k> <d>; or a JSON graph file."""
    if graph_file:
        obj = json.loads(Path(graph_file).read_text())
        return f"file:{graph_file}", Graph.from_json(obj)
    if not tokens:
        raise SpecError("missing family spec")
    head = tokens[0].upper()
    try:
        if head.startswith("P") and len(head) > 1:
            return head, make_path(int(head[1:]))
        if head.startswith("C") and len(head) > 1 and head != "CAT":
            return head, make_cycle(int(head[1:]))
        if head.startswith("K") and len(head) > 1:
            return head, make_complete(int(head[1:]))
        if head == "DS":
            r, s = int(tokens[1]), int(tokens[2])
            return f"DS {r} {s}", make_double_star(r, s)
        if head == "B":
            k, r = int(tokens[1]), int(tokens[2])
            return f"B {k} {r}", make_broom(k, r)
        if head == "CAT":
            c = [int(x) for x in tokens[1].split(",")]
            return f"CAT {tokens[1]}", make_caterpillar(c)
        if head == "T":
            k, d = int(tokens[1]), int(tokens[2])
            return f"T {k} {d}", make_perfect_kary(k, d)
    except (IndexError, ValueError, GraphError) as exc:
        raise SpecError(f"bad family spec {' '.join(tokens)!r}: {exc}") from exc
    raise SpecError(f"unrecognized family spec {' '.join(tokens)!r}")


def _frac(f: Fraction) -> dict:
    return {"num": f.numerator, "den": f.denominator}


def _frac_str(f: Fraction) -> str:
    return f"{f.numerator}n" if f.denominator == 1 else f"{f.numerator}n/{f.denominator}"


def emit(args, obj: dict, table_lines: list[str]) -> None:
    obj.setdefault("schema", 1)
    obj.setdefault("seed", args.seed)
    if args.format == "json":
        print(json.dumps(obj, sort_keys=True, indent=2))
    else:
        for line in table_lines:
            print(line)


def cmd_spectrum(args) -> int:
    name, g = parse_family(args.family, args.graph_file)
    if args.closed_form:
        if not name.startswith("DS"):
            print("--closed-form only applies to DS", file=sys.stderr)
            return EXIT_USAGE
        _, r, s = name.split()
        spec = ds_spectrum_closed_form(int(r), int(s))
    else:
        try:
            spec = compute_spectrum(g, budget=args.budget)
        except BudgetExhausted:
            print("budget exhausted before any result", file=sys.stderr)
            return EXIT_BUDGET
    obj = spec.to_json()
    obj["family"] = name
    lines = [f"Spec({name}) = {{{', '.join(map(str, spec.values))}}}"
             + ("" if spec.exhaustive else "  [partial: budget exhausted]")]
    for v in spec.values:
        lines.append(f"  {v}-unique witness colors: {list(spec.witnesses[v].colors)}")
    emit(args, obj, lines)
    return EXIT_OK if spec.exhaustive else EXIT_BUDGET


def _report_lines(rep) -> str:
    flags = f"  [{', '.join(rep.assumptions)}]" if rep.assumptions else ""
    return f"  {rep.family}: {_frac_str(rep.coefficient)}{flags}"


def cmd_bounds(args) -> int:
    tokens = args.family
    head = tokens[0].upper() if tokens else ""
    reports = []
    extra: dict = {}
    if head == "DS":
        r, s = int(tokens[1]), int(tokens[2])
        if args.k_unique is not None:
            out = ds_k_unique_bounds(min(r, s), max(r, s), args.k_unique)
            reports = [out["lower"], out["upper"]]
            extra["k"] = out["k"]
        else:
            reports = list(ds_rainbow_bounds(r, s))
            if (r, s) == (2, 2):
                reports = [ds22_bounds()[0], ds22_bounds()[1]]
            if min(r, s) == 1 and max(r, s) % 2 == 1:
                reports.append(ds_1_odd_exact((max(r, s) - 1) // 2))
    elif head == "CAT":
        c = [int(x) for x in tokens[1].split(",")]
        out = caterpillar_bounds(c)
        reports = [out["literal"], out["constructive"]]
        extra = {"augmented_edges": out["augmented_edges"],
                 "discrepancy": out["discrepancy"]}
    elif head == "T":
        k, d = int(tokens[1]), int(tokens[2])
        if k == 2:
            out = binary_coefficients(d)
            reports = [out["literal"], out["proof_form"], out["constructive"]]
        else:
            out = kary_coefficients(k, d)
            reports = [out["literal"], out["constructive"]]
        extra = {"augmented_edges": out["augmented_edges"],
                 "discrepancy": out["discrepancy"]}
    else:
        print(f"no bound family for spec {' '.join(tokens)!r}", file=sys.stderr)
        return EXIT_USAGE
    obj = {"family_spec": " ".join(tokens),
           "bounds": [rep.to_json() for rep in reports], **extra}
    lines = [f"bounds for {' '.join(tokens)}:"]
    lines += [_report_lines(rep) for rep in reports]
    if extra.get("discrepancy"):
        lines.append("  note: literal and constructive formulas disagree "
                     "(known internal conflict; both reported)")
    emit(args, obj, lines)
    return EXIT_OK


def cmd_construct(args) -> int:
    if args.augment:
        tokens = args.family
        head = tokens[0].upper()
        if head == "DS":
            r, s, l = int(tokens[1]), int(tokens[2]), int(tokens[3])
            aug = augment_double_star(r, s, l)
        elif head == "CAT":
            aug = augment_caterpillar([int(x) for x in tokens[1].split(",")])
        elif head == "T":
            aug = augment_kary(int(tokens[1]), int(tokens[2]))
        else:
            print("--augment supports DS <r> <s> <l>, CAT <c...>, T <k> <d>",
                  file=sys.stderr)
            return EXIT_USAGE
        obj = {"original": aug.original.to_json(),
               "augmented": aug.augmented.to_json(),
               "construction_log": [list(x) for x in aug.construction_log],
               "edge_count": aug.edge_count,
               "embedding": aug.embedding.to_json()}
        emit(args, obj, [json.dumps(obj, sort_keys=True)])
        return EXIT_OK
    name, g = parse_family(args.family, args.graph_file)
    obj = g.to_json()
    obj["family"] = name
    emit(args, obj, [json.dumps(obj, sort_keys=True)])
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.recheck:
        cert = load_certificate(args.recheck)
        ok, detail = recheck_certificate(cert)
        emit(args, {"recheck": ok, "detail": detail, "kind": cert.kind},
             [f"recheck {cert.kind}: {'OK' if ok else 'FAILED'} ({detail})"])
        return EXIT_OK if ok else EXIT_FAIL
    name = args.check
    if name == "k6-rainbow-free":
        cert = verify_k6_rainbow_free()
    elif name == "k6-universal-3unique":
        cert = verify_k6_universal_3unique(
            budget=args.budget, color_cap=args.color_cap,
            sample_count=args.samples, seed=args.seed, threads=args.threads)
    elif name == "k2s4":
        if args.s is None:
            print("k2s4 needs --s", file=sys.stderr)
            return EXIT_USAGE
        cert = verify_k2s4_construction(args.s)
    elif name == "reduction-ds":
        if None in (args.r, args.s_param, args.l):
            print("reduction-ds needs --r --s-param --l", file=sys.stderr)
            return EXIT_USAGE
        r, s, l = args.r, args.s_param, args.l
        aug = augment_double_star(r, s, l)
        cert = verify_reduction(aug.original, aug, s - r + 1 + 2 * l,
                                budget=args.budget)
    else:
        print(f"unknown check {name!r}", file=sys.stderr)
        return EXIT_USAGE
    cert.seed = args.seed if cert.seed is None else cert.seed
    path = save_certificate(cert, args.cache_dir)
    emit(args, cert.to_json(),
         [f"{name}: {cert.verdict}  (certificate: {path})"])
    if cert.verdict == FAIL:
        return EXIT_FAIL
    if cert.verdict == BUDGET_EXHAUSTED:
        return EXIT_BUDGET
    return EXIT_OK


def cmd_search(args) -> int:
    _, f = parse_family(args.pattern.split(), None)
    k = RAINBOW if args.rainbow else args.k
    if k is None:
        print("search needs --rainbow or --k", file=sys.stderr)
        return EXIT_USAGE
    out = brute_extremal(args.n, f, k, budget=args.budget)
    if out.get("value") is None:
        obj = {"bracket": {"lower": out["lower"], "upper": out["upper"]}}
        lines = [f"budget exhausted: value within [{out['lower']}, {out['upper']}]"]
        code = EXIT_BUDGET
    else:
        obj = {"value": out["value"]}
        lines = [f"value = {out['value']}"]
        code = EXIT_OK
    if out.get("lower_witness"):
        path = save_certificate(out["lower_witness"], args.cache_dir)
        obj["lower_witness"] = str(path)
    if out.get("upper_exhaustion"):
        path = save_certificate(out["upper_exhaustion"], args.cache_dir)
        obj["upper_exhaustion"] = str(path)
    obj.update({"n": args.n, "pattern": args.pattern, "k": str(k)})
    emit(args, obj, lines)
    return code


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rturan",
                                description="rainbow / k-unique Turan workbench "
                                            f"(kernel backend: {_kernels.BACKEND})")
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("--format", choices=("json", "table"), default="table")
    p.add_argument("--seed", type=int, default=20240901)
    p.add_argument("--budget", type=int, default=None, help="node-count limit")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--cache-dir", default=None,
                   help=f"certificate cache (default {default_cache_dir()})")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", help="k-spectrum of a family graph")
    sp.add_argument("family", nargs="*")
    sp.add_argument("--graph-file")
    sp.add_argument("--closed-form", action="store_true")
    sp.set_defaults(func=cmd_spectrum)

    bp = sub.add_parser("bounds", help="bound formulas for a family")
    bp.add_argument("family", nargs="*")
    bp.add_argument("--rainbow", action="store_true")
    bp.add_argument("--k-unique", type=int, default=None, metavar="L",
                    help="pendant-recoloring parameter l")
    bp.set_defaults(func=cmd_bounds)

    cp = sub.add_parser("construct", help="emit a family graph as JSON")
    cp.add_argument("family", nargs="*")
    cp.add_argument("--graph-file")
    cp.add_argument("--augment", action="store_true")
    cp.set_defaults(func=cmd_construct)

    vp = sub.add_parser("verify", help="run a certified check")
    vp.add_argument("check", nargs="?")
    vp.add_argument("--recheck", metavar="FILE")
    vp.add_argument("--s", type=int, default=None)
    vp.add_argument("--r", type=int, default=None)
    vp.add_argument("--s-param", type=int, default=None)
    vp.add_argument("--l", type=int, default=None)
    vp.add_argument("--color-cap", type=int, default=7)
    vp.add_argument("--samples", type=int, default=1_000_000)
    vp.set_defaults(func=cmd_verify)

    spp = sub.add_parser("search", help="brute-force ex_k at desk scale")
    spp.add_argument("--n", type=int, required=True)
    spp.add_argument("--pattern", required=True)
    spp.add_argument("--rainbow", action="store_true")
    spp.add_argument("--k", type=int, default=None)
    spp.set_defaults(func=cmd_search)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except SpecError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    except BudgetExhausted:
        print("budget exhausted", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
