"""Command-line front end.  Exit codes: 0 success, 1 verification mismatch, 2 usage error."""
from __future__ import annotations

import argparse
import sys
import time

from . import hom_count as hc
from ._parallel import default_workers
from .f2_groebner import (ORDERS, ParseError, colon_ideal, groebner_basis, hilbert_function,
                          normal_form, parse_polynomial, read_ideal_file)
from .quat_group import Family, GroupId, format_elements
from .report import CommandReport, emit_report
from .spectral import (UnsupportedCase, b3q16_extension_datum, bcom_extension_datum,
                       bcom_hilbert_expected, bcom_presentation, direct_page_dims, e3_page, e4_page)
from .subgroups import all_subgroups, lower_central_series, maximal_subgroups, nil_poset_report
from .verify import run_criteria, verify_appendix


class UsageError(Exception):
    pass


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--tsv", action="store_true", default=argparse.SUPPRESS, help="tab-separated output")
    p.add_argument("--workers", type=int, default=argparse.SUPPRESS,
                   help="enumeration processes (default: $NILHOM_WORKERS or CPU count)")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="nilhom", parents=[common],
                                     description="Counts and F2 algebra for spaces of nilpotent tuples in SU(2).")
    sub = parser.add_subparsers(dest="cmd", required=True)

    methods = [m.value for m in hc.Method]
    p = sub.add_parser("components", parents=[common], help="component counts of Hom(F_n/Gamma^(q+1), G)")
    p.add_argument("target", choices=["su2", "so3", "u2"])
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-q", type=int, required=True)
    p.add_argument("--method", choices=methods, default="formula")

    p = sub.add_parser("summands", parents=[common], help="stable wedge summand counts")
    p.add_argument("target", choices=["su2", "so3"])
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-q", type=int, required=True)
    p.add_argument("--method", choices=methods, default="formula")

    p = sub.add_parser("group", parents=[common], help="finite group data")
    gsub = p.add_subparsers(dest="group_cmd", required=True)
    gi = gsub.add_parser("info", parents=[common])
    gi.add_argument("group", help="Q2^m, C2^m or D2^m")

    p = sub.add_parser("poset", parents=[common], help="poset of maximal class-<r subgroups")
    p.add_argument("group")
    p.add_argument("-r", type=int, required=True)

    p = sub.add_parser("gb", parents=[common], help="Groebner basis computations over F2")
    p.add_argument("action", choices=["basis", "reduce", "colon", "hilbert"])
    p.add_argument("--ring", required=True, help="ideal file")
    p.add_argument("--poly", help="polynomial, or @name for a named line of the file")
    p.add_argument("--maxdeg", type=int, default=10)
    p.add_argument("--order", choices=ORDERS, default="wdegrevlex")

    p = sub.add_parser("spectral", parents=[common], help="spectral sequence pages")
    ssub = p.add_subparsers(dest="spectral_cmd", required=True)
    sb = ssub.add_parser("bcom", parents=[common])
    sb.add_argument("n", type=int)
    sb.add_argument("--maxdeg", type=int, default=12)
    sq = ssub.add_parser("b3q16", parents=[common])
    sq.add_argument("--maxdeg", type=int, default=10)

    p = sub.add_parser("verify", parents=[common], help="run acceptance checks")
    p.add_argument("what", choices=["appendix", "all"])
    return parser


# -- handlers -----------------------------------------------------------------------------------

def _components(args, workers):
    if args.target == "su2":
        rep = hc.su2_component_count(args.n, args.q, args.method, workers)
    elif args.target == "so3":
        rep = hc.so3_component_count(args.n, args.q, args.method, workers)
    else:
        rep = hc.u2_component_count(args.n, args.q, args.method, workers)
    data = rep.to_json()
    return data, data.get("agree") is not False, None


def _summands(args, workers):
    rep = hc.stable_summand_counts(args.k, args.q, args.target, args.method, workers)
    data = rep.to_json()
    return data, data.get("agree") is not False, None


def _parse_group(text: str) -> GroupId:
    try:
        return GroupId.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _group_info(args, workers):
    g = _parse_group(args.group)
    full = next(h for h in all_subgroups(g) if h.order == g.order)
    series, cls = lower_central_series(full)
    data = {
        "group": str(g), "order": g.order,
        "elements": format_elements(g.elements()),
        "nilpotency_class": cls,
        "lower_central_series_orders": [h.order for h in series],
        "subgroup_count": len(all_subgroups(g)),
    }
    if g.family is Family.QUATERNION:
        data["maximal_subgroups"] = [{"name": h.name(), "descriptor": str(h.descriptor), "order": h.order}
                                     for h in maximal_subgroups(g)]
    return data, True, None


def _poset(args, workers):
    g = _parse_group(args.group)
    rep = nil_poset_report(g, args.r)
    return rep.to_json(), rep.tree, None


def _gb(args, workers):
    data_file = read_ideal_file(args.ring)
    R, I = data_file.ring, data_file.ideal
    poly = None
    if args.poly is not None:
        if args.poly.startswith("@"):
            name = args.poly[1:]
            if name not in data_file.named:
                raise UsageError(f"no line named {name!r} in {args.ring}")
            poly = data_file.named[name]
        else:
            poly = parse_polynomial(R, args.poly)
    if args.action in ("reduce", "colon") and poly is None:
        raise UsageError(f"gb {args.action} needs --poly")
    out = {"ring": R.header(), "order": args.order}
    rows = None
    if args.action == "basis":
        out["basis"] = [g.format(args.order) for g in groebner_basis(R, I, args.order).generators]
    elif args.action == "reduce":
        nf = normal_form(poly, groebner_basis(R, I, args.order))
        out.update(poly=poly.format(args.order), normal_form=nf.format(args.order), zero=nf.is_zero())
    elif args.action == "colon":
        ann = colon_ideal(R, I, poly, args.order)
        out.update(poly=poly.format(args.order), colon=[g.format(args.order) for g in ann.generators],
                   zero=ann.is_zero())
    else:
        dims = hilbert_function(R, I, args.maxdeg, args.order).to_list()
        out["dims"] = dims
        rows = [["degree", "dim"]] + [[d, v] for d, v in enumerate(dims)]
    return out, True, rows


def _spectral(args, workers):
    D = args.maxdeg
    if D < 0:
        raise UsageError("--maxdeg must be >= 0")
    if args.spectral_cmd == "bcom":
        if args.n < 3:
            raise UsageError("bcom needs n >= 3")
        R, I = bcom_presentation(args.n)
        hilb = hilbert_function(R, I, D).to_list()
        ext = bcom_extension_datum(args.n)
        e3 = e3_page(ext, D)
        e4 = e4_page(ext, D)
        out = {"n": args.n, "presentation": {"ring": R.header(), "relations": [g.format() for g in I.generators]},
               "hilbert": hilb, "expected": bcom_hilbert_expected(args.n, D),
               "E3": e3.to_json(), "E4": e4.to_json()}
        ok = hilb == out["expected"] == e3.poincare.to_list() == e4.poincare.to_list()
        return out, ok and all(e3.checks.values()), [["degree", "dim"]] + [[d, v] for d, v in enumerate(hilb)]
    ext = b3q16_extension_datum()
    out = {"group": "B(3,Q16)"}
    try:
        e3 = e3_page(ext, D)
        e4 = e4_page(ext, D)
    except UnsupportedCase as exc:
        return {**out, "unsupported": str(exc)}, False, None
    oracle = direct_page_dims(ext, 4, D)
    out.update(E3=e3.to_json(), E4=e4.to_json(), E4_direct_oracle=oracle)
    ok = all(e3.checks.values()) and all(e4.checks.values()) and oracle == e4.poincare.to_list()
    return out, ok, [["degree", "E4"]] + [[d, v] for d, v in enumerate(e4.poincare.to_list())]


def _verify(args, workers):
    verdicts = verify_appendix() if args.what == "appendix" else run_criteria(workers=workers)
    for v in verdicts:
        print(v.line(), file=sys.stderr)
    rows = [["criterion", "name", "passed"]] + [[v.criterion, v.name, v.passed] for v in verdicts]
    return {"verdicts": [v.to_json() for v in verdicts]}, all(v.passed for v in verdicts), rows


HANDLERS = {"components": _components, "summands": _summands, "group": _group_info,
            "poset": _poset, "gb": _gb, "spectral": _spectral, "verify": _verify}


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    workers = getattr(args, "workers", None)
    try:
        workers = default_workers() if workers is None else workers
    except ValueError:
        print("error: NILHOM_WORKERS must be an integer", file=sys.stderr)
        return 2
    if workers < 1:
        print("error: --workers must be >= 1", file=sys.stderr)
        return 2
    t0 = time.perf_counter()
    try:
        result, ok, rows = HANDLERS[args.cmd](args, workers)
    except hc.VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1
    except (UsageError, ParseError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report = CommandReport(["nilhom", *argv], result, ok, time.perf_counter() - t0, rows)
    print(emit_report(report, "tsv" if getattr(args, "tsv", False) else "json"))
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
