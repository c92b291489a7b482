"""Command-line front end.

Exit status: 0 on success, 1 when a verification fails, 2 on usage or
input errors. All numbers are printed exactly.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Sequence

from .affine import AffineWeylGroup, verify_lengths
from .chains import Chain, PolysimplicialComplex, augmented_homology, check_boundary_squared, verify_region_lemma
from .contraction import build_table, translated_region, verify
from .cyclotomic import format_number
from .elliptic import (
    LatticeGroup,
    VirtualWCharacter,
    counting_identity,
    e_pair,
    e_pair_hom,
    ell_dim_finite,
    ell_dim_oracle,
    ep_pair,
    same_class_sets,
)
from .errors import AlcoveError
from .finitegroup import character_table, is_elliptic
from .golden import b2_checks, b2_tables
from .rootdata import LATTICES, BasedRootDatum, preset, validate
from .svg import emit_svg


class UsageError(Exception):
    pass


def _dump(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def _datum(args) -> BasedRootDatum:
    if getattr(args, "file", None):
        return BasedRootDatum.load(args.file)
    return preset(args.datum, args.lattice)


def _region_coeffs(text: str, rank: int) -> list[int]:
    key, eq, val = text.partition("=")
    if key.strip() != "m" or not eq:
        raise UsageError(f"region must look like m=<int>, got {text!r}")
    try:
        m = int(val)
    except ValueError as exc:
        raise UsageError(f"bad region multiplier {val!r}") from exc
    return [m] * rank


def _points(text: str) -> list[tuple[Fraction, ...]]:
    """'a,b;c,d' -> [(a, b), (c, d)]."""
    try:
        return [tuple(Fraction(c) for c in part.split(",")) for part in text.split(";") if part.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad point list {text!r}") from exc


# --------------------------------------------------------------------------
# commands


def cmd_datum_validate(args) -> int:
    report = validate(_datum(args))
    _dump({"ok": report.ok, "issues": [{"code": c, "detail": d} for c, d in report.issues]})
    return 0 if report.ok else 1


def cmd_datum_preset(args) -> int:
    _dump(preset(args.name, args.lattice).to_json())
    return 0


def cmd_weyl_classes(args) -> int:
    datum = _datum(args)
    L = LatticeGroup.from_datum(datum)
    rows = [["class", "representative", "size", "centralizer_order", "elliptic"]]
    for k, c in enumerate(L.group.conjugacy_classes):
        g = L.group.elements[c.representative]
        rows.append([k, json.dumps([list(r) for r in g]), c.size, c.centralizer_order, is_elliptic(g)])
    _write_csv(rows)
    return 0


def cmd_weyl_chartable(args) -> int:
    L = LatticeGroup.from_datum(_datum(args))
    table = character_table(L.group)
    rows = [["character", *[f"C{k}" for k in range(L.group.num_classes)]]]
    for chi in table.characters:
        rows.append([chi.name, *[format_number(v) for v in chi.values]])
    _write_csv(rows)
    return 0


def cmd_affine_length(args) -> int:
    group = AffineWeylGroup(_datum(args))
    word = [s.strip() for s in args.word.split(",") if s.strip()]
    w = group.element_from_word(word)
    out = {"element": str(w)}
    for method in ("roots", "hyperplanes", "gallery", "word"):
        out[method] = group.length(w, method)
    out["reduced_word"] = list(group.reduced_word(w))
    _dump(out)
    return 0 if len({out[m] for m in ("roots", "hyperplanes", "gallery", "word")}) == 1 else 1


def cmd_affine_verify_lengths(args) -> int:
    report = verify_lengths(AffineWeylGroup(_datum(args)), args.maxlen).to_json()
    _dump(report)
    return 0 if not report["failures"] else 1


def cmd_affine_verify_regions(args) -> int:
    report = verify_region_lemma(PolysimplicialComplex.of(_datum(args)), args.maxlen)
    _dump(report)
    return 0 if not report["failures"] else 1


def cmd_chains_verify(args) -> int:
    cplx = PolysimplicialComplex.of(_datum(args))
    reg = translated_region(cplx, _region_coeffs(args.region, cplx.datum.num_simple))
    count, failures = check_boundary_squared(cplx, reg)
    homology = augmented_homology(cplx, reg)
    ok = not failures and not any(homology.values())
    _dump({"cells_checked": count, "boundary_squared_failures": failures,
           "augmented_homology": {str(k): v for k, v in homology.items()}, "ok": ok})
    return 0 if ok else 1


def cmd_contract_build(args) -> int:
    cplx = PolysimplicialComplex.of(_datum(args))
    table = build_table(cplx, args.pins)
    text = json.dumps({"datum": cplx.datum.to_json(), "pins": args.pins, "base": table.to_json()},
                      indent=2, sort_keys=True)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
        print(f"wrote {len(table.base)} base cells to {args.out}")
    else:
        print(text)
    return 0


def cmd_contract_verify(args) -> int:
    cplx = PolysimplicialComplex.of(_datum(args))
    table = build_table(cplx, args.pins)
    reg = translated_region(cplx, _region_coeffs(args.region, cplx.datum.num_simple))
    report = verify(table, reg)
    out = report.to_json()
    out["bound_ok"] = report.max_coeff <= 3 * report.base_max
    if args.report == "json":
        _dump(out)
    else:
        for k in sorted(out):
            print(f"{k}: {out[k]}")
    return 0 if report.ok and out["bound_ok"] else 1


def cmd_ell_finite(args) -> int:
    L = LatticeGroup.from_datum(_datum(args))
    table = character_table(L.group)
    names = [c.name for c in table.characters]
    pairing = [[format_number(e_pair(L.group, a, b)) for b in table.characters] for a in table.characters]
    agree = all(e_pair(L.group, a, b) == e_pair_hom(L.group, a, b)
                for a in table.characters for b in table.characters)
    elliptic = [k for k, c in enumerate(L.group.conjugacy_classes)
                if is_elliptic(L.group.elements[c.representative])]
    out = {"group_order": L.group.order, "elliptic_classes": elliptic,
           "ell_dim": ell_dim_finite(L.group), "ell_dim_oracle": ell_dim_oracle(L.group),
           "characters": names, "e_pair": pairing, "routes_agree": agree}
    _dump(out)
    return 0 if agree and out["ell_dim"] == out["ell_dim_oracle"] else 1


def cmd_ell_affine(args) -> int:
    L = LatticeGroup.from_datum(_datum(args))
    classes = L.elliptic_classes_affine(args.method)
    agree = same_class_sets(L, L.elliptic_classes_affine("snf"), L.elliptic_classes_affine("geometric")) \
        if L.affine is not None else True
    lhs, rhs, eq = counting_identity(L)
    _dump({"classes": [c.to_json() for c in classes], "count": len(classes),
           "routes_agree": agree, "counting_identity": {"classes": lhs, "sum_over_t": rhs, "equal": eq}})
    return 0 if agree and eq else 1


def cmd_ell_measure(args) -> int:
    L = LatticeGroup.from_datum(_datum(args))
    classes = L.elliptic_classes_affine()
    rows = []
    for c in classes:
        rows.append({"representative": str(c.representative),
                     "fixed_point": [str(x) for x in c.fixed_point],
                     "measure": str(c.measure), "coset_count_measure": str(L.bookkeeping_measure(c))})
    total = L.total_measure()
    _dump({"classes": rows, "total": str(total), "invariant_euler_characteristic": str(L.invariant_euler_characteristic())})
    return 0


def cmd_ep_pair(args) -> int:
    L = LatticeGroup.from_datum(_datum(args))
    U = VirtualWCharacter.parse(L, args.u)
    V = VirtualWCharacter.parse(L, args.v)
    methods = {"both": ["measure", "facets"], "all": ["measure", "facets", "hom"]}.get(args.method, [args.method])
    reports = [ep_pair(L, U, V, m) for m in methods]
    values = {r.method: format_number(r.value) for r in reports}
    agree = len(set(values.values())) == 1
    if len(reports) == 1:
        print(values[reports[0].method])
    else:
        _dump({"values": values, "agree": agree})
    return 0 if agree else 1


def cmd_report_b2(args) -> int:
    for name, text in b2_tables().items():
        print(f"# {name}")
        print(text, end="")
        print()
    checks = b2_checks()
    for c in checks:
        line = f"{'PASS' if c.ok else 'FAIL'} {c.name}"
        if not c.ok and c.detail:
            line += f" ({c.detail})"
        print(line)
    if all(c.ok for c in checks):
        print("ALL GOLDEN CHECKS PASS")
        return 0
    print("GOLDEN CHECKS FAILED")
    return 1


def cmd_viz_sigma(args) -> int:
    cplx = PolysimplicialComplex.of(_datum(args))
    overlays = []
    if args.region_of:
        reg = cplx.region(_points(args.region_of))
        overlays.append(reg.alcoves())
    if args.gamma:
        if len(cplx.group.components) != 1:
            raise UsageError("--gamma is supported for irreducible data only")
        cell, sign = cplx.identify([_points(args.gamma)])
        table = build_table(cplx, args.pins)
        overlays.append(table.gamma_chain(Chain.of(cell, sign)))
    svg = emit_svg(cplx, (Fraction(-args.window), Fraction(args.window)), overlays)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(svg)
    else:
        sys.stdout.write(svg)
    return 0


def _write_csv(rows) -> None:
    buf = io.StringIO()
    csv.writer(buf, quoting=csv.QUOTE_ALL, lineterminator="\n").writerows(rows)
    sys.stdout.write(buf.getvalue())


# --------------------------------------------------------------------------
# parser


def _add_datum(p: argparse.ArgumentParser, default: str = "B2") -> None:
    p.add_argument("--datum", default=default, help="preset name (A1, A1xA1, A2, B2, G2)")
    p.add_argument("--lattice", default="standard", choices=LATTICES)
    p.add_argument("--file", help="datum file (JSON with rank, roots, coroots, simple, name)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="alcove", description="Exact alcove and elliptic computations.")
    top = parser.add_subparsers(dest="group", required=True)

    datum = top.add_parser("datum").add_subparsers(dest="cmd", required=True)
    p = datum.add_parser("validate")
    _add_datum(p)
    p.set_defaults(func=cmd_datum_validate)
    p = datum.add_parser("preset")
    p.add_argument("name")
    p.add_argument("--lattice", default="standard", choices=LATTICES)
    p.set_defaults(func=cmd_datum_preset)

    weyl = top.add_parser("weyl").add_subparsers(dest="cmd", required=True)
    for name, func in (("classes", cmd_weyl_classes), ("chartable", cmd_weyl_chartable)):
        p = weyl.add_parser(name)
        _add_datum(p)
        p.set_defaults(func=func)

    affine = top.add_parser("affine").add_subparsers(dest="cmd", required=True)
    p = affine.add_parser("length")
    _add_datum(p)
    p.add_argument("--word", required=True, help="comma separated generator names, e.g. s1,s2,s0")
    p.set_defaults(func=cmd_affine_length)
    p = affine.add_parser("verify-lengths", aliases=["verify-lemma21"])
    _add_datum(p)
    p.add_argument("--maxlen", type=int, default=6)
    p.set_defaults(func=cmd_affine_verify_lengths)
    p = affine.add_parser("verify-regions", aliases=["verify-lemma22"])
    _add_datum(p)
    p.add_argument("--maxlen", type=int, default=5)
    p.set_defaults(func=cmd_affine_verify_regions)

    chains = top.add_parser("chains").add_subparsers(dest="cmd", required=True)
    p = chains.add_parser("verify")
    _add_datum(p)
    p.add_argument("--region", default="m=2")
    p.set_defaults(func=cmd_chains_verify)

    contract = top.add_parser("contract").add_subparsers(dest="cmd", required=True)
    p = contract.add_parser("build")
    _add_datum(p)
    p.add_argument("--pins", default="none", choices=["paper", "none"])
    p.add_argument("--out")
    p.set_defaults(func=cmd_contract_build)
    p = contract.add_parser("verify")
    _add_datum(p)
    p.add_argument("--pins", default="none", choices=["paper", "none"])
    p.add_argument("--region", default="m=3")
    p.add_argument("--report", default="json", choices=["json", "text"])
    p.set_defaults(func=cmd_contract_verify)

    ell = top.add_parser("ell").add_subparsers(dest="cmd", required=True)
    p = ell.add_parser("finite")
    _add_datum(p)
    p.set_defaults(func=cmd_ell_finite)
    p = ell.add_parser("affine")
    _add_datum(p)
    p.add_argument("--method", default="snf", choices=["snf", "geometric"])
    p.set_defaults(func=cmd_ell_affine)
    p = ell.add_parser("measure")
    _add_datum(p)
    p.set_defaults(func=cmd_ell_measure)

    ep = top.add_parser("ep").add_subparsers(dest="cmd", required=True)
    p = ep.add_parser("pair")
    _add_datum(p)
    p.add_argument("--u", required=True, help='e.g. "t=0,0;chi=eps0" or "2*t=1/2,0;chi=triv + t=0,0;chi=E"')
    p.add_argument("--v", required=True)
    p.add_argument("--method", default="measure", choices=["measure", "facets", "hom", "both", "all"])
    p.set_defaults(func=cmd_ep_pair)

    report = top.add_parser("report").add_subparsers(dest="cmd", required=True)
    p = report.add_parser("b2")
    p.set_defaults(func=cmd_report_b2)

    viz = top.add_parser("viz").add_subparsers(dest="cmd", required=True)
    p = viz.add_parser("sigma")
    _add_datum(p)
    p.add_argument("--window", type=Fraction, default=Fraction(3))
    p.add_argument("--region-of", help="points 'a,b;c,d' whose region A(K) is shaded")
    p.add_argument("--gamma", help="vertices 'a,b;c,d' of a cell whose contraction is shaded")
    p.add_argument("--pins", default="paper", choices=["paper", "none"])
    p.add_argument("--out")
    p.set_defaults(func=cmd_viz_sigma)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except AlcoveError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
