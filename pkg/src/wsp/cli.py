"""Command line interface.

Exit codes: 0 success, 2 bad input, 3 formula inconsistency, 4 failed verification.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import bounds as bounds_mod
from .cotangent import t1_table
from .enumerate import max_genus, semigroups_of_genus, table1_report
from .errors import FormulaInconsistency, InputError, VerificationFailure
from .families import family, verify_family
from .polyrig import equations as eqs
from .semigroup import NumericalSemigroup, from_gaps, from_generators

CSV_HEADER = ["gaps", "generators", "genus", "lambda", "ewt", "t1_plus", "t1_minus",
              "pflueger", "new_lower", "rv"]


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise InputError(f"not a comma-separated integer list: {text!r}") from None


def _semigroup(args) -> NumericalSemigroup:
    if getattr(args, "gaps", None) is not None:
        if args.gens:
            raise InputError("give generators or --gaps, not both")
        return from_gaps(_int_list(args.gaps))
    return from_generators(args.gens)


def basic_doc(S: NumericalSemigroup) -> dict:
    doc = {
        "generators": list(S.min_gens),
        "gaps": list(S.gaps),
        "genus": S.genus,
        "frobenius": S.frobenius,
        "multiplicity": S.multiplicity,
        "symmetric": None,
        "lambda": None,
        "ewt": None,
        "wt": None,
    }
    if S.genus >= 1:
        doc.update(symmetric=S.is_symmetric(), **{"lambda": S.lambda_()}, ewt=S.ewt(), wt=S.wt())
    return doc


def semigroup_doc(S: NumericalSemigroup) -> dict:
    """The full machine-readable report for a semigroup of genus >= 2."""
    rep = bounds_mod.bounds_report(S)
    table = t1_table(S)
    return {
        "generators": list(S.min_gens),
        "gaps": list(S.gaps),
        "genus": rep.genus,
        "frobenius": S.frobenius,
        "symmetric": S.is_symmetric(),
        "lambda": rep.lambda_,
        "ewt": rep.ewt,
        "wt": rep.wt,
        "t1": {
            "plus": table.t1_plus,
            "minus": table.t1_minus,
            "by_degree": {str(l): d for l, d in sorted(table.by_degree.items())},
        },
        "bounds": {
            "pflueger_lower": rep.pflueger_lower,
            "rv_upper": rep.rv_upper,
            "new_lower": rep.new_lower,
            "smoothing_dim": rep.smoothing_dim,
            "exact_moduli_dim": rep.exact_moduli_dim,
        },
        "negatively_graded": rep.negatively_graded,
    }


def _dump(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False)


def _lines(pairs) -> str:
    width = max(len(k) for k, _ in pairs)
    return "\n".join(f"{k:<{width}}  {v}" for k, v in pairs)


def _fmt(v) -> str:
    if isinstance(v, (list, tuple)):
        return ",".join(map(str, v))
    if isinstance(v, bool):
        return str(v).lower()
    return "-" if v is None else str(v)


def cmd_info(args) -> str:
    doc = basic_doc(_semigroup(args))
    if args.json:
        return _dump(doc)
    return _lines([(k.replace("generators", "min_gens"), _fmt(v)) for k, v in doc.items()])


def cmd_t1(args) -> str:
    S = _semigroup(args)
    doc = semigroup_doc(S)
    if args.json:
        return _dump(doc)
    t1 = doc["t1"]
    out = [f"T^1 of {S} (genus {S.genus})", "degree  dim  #A  dimV"]
    diag = t1_table(S).diagnostics
    for l, d in sorted(t1_table(S).by_degree.items()):
        a, v = diag[l]
        out.append(f"{l:>6}  {d:>3}  {a:>2}  {v:>4}")
    out.append(f"t1_plus  = {t1['plus']}")
    out.append(f"t1_minus = {t1['minus']}")
    return "\n".join(out)


def cmd_bounds(args) -> str:
    S = _semigroup(args)
    doc = semigroup_doc(S)
    if args.json:
        return _dump(doc)
    b = doc["bounds"]
    return _lines([
        ("semigroup", str(S)),
        ("genus", doc["genus"]),
        ("lambda", doc["lambda"]),
        ("ewt", doc["ewt"]),
        ("wt", doc["wt"]),
        ("t1_plus", doc["t1"]["plus"]),
        ("t1_minus", doc["t1"]["minus"]),
        ("pflueger", b["pflueger_lower"]),
        ("new_lower", b["new_lower"]),
        ("rv", b["rv_upper"]),
        ("smoothing_dim", b["smoothing_dim"]),
        ("exact_moduli_dim", _fmt(b["exact_moduli_dim"])),
        ("negatively_graded", _fmt(doc["negatively_graded"])),
    ])


def csv_row(S: NumericalSemigroup) -> list[str]:
    row = [_fmt(S.gaps), _fmt(S.min_gens), str(S.genus)]
    if S.genus < 2:
        extra = [""] * 7
        if S.genus == 1:
            t = t1_table(S)
            extra[:4] = [str(S.lambda_()), str(S.ewt()), str(t.t1_plus), str(t.t1_minus)]
        return row + extra
    r = bounds_mod.bounds_report(S)
    return row + [str(x) for x in (r.lambda_, r.ewt, r.t1_plus, r.t1_minus,
                                   r.pflueger_lower, r.new_lower, r.rv_upper)]


def cmd_enumerate(args) -> str:
    limit = args.max_genus if args.max_genus is not None else max_genus()
    rows = []
    for S in semigroups_of_genus(args.genus, limit=limit):
        row = csv_row(S)
        if args.only_positive_t1 and not (row[5] and int(row[5]) > 0):
            continue
        rows.append(row)
    rows.sort(key=lambda r: [int(x) for x in r[0].split(",")] if r[0] else [])
    buf = io.StringIO()
    w = csv.writer(buf, delimiter=";", lineterminator="\n")
    w.writerow(CSV_HEADER)
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def cmd_table1(args) -> str:
    rows = table1_report()
    if args.json:
        return _dump([
            {"gaps": list(r.gaps), "new_lower": r.new_lower, "rv_upper": r.rv_upper, "t1_plus": r.t1_plus}
            for r in rows
        ])
    out = [f"{'gaps':<20}{'dim M':>7}{'R-V':>6}{'T1+':>6}"]
    for r in rows:
        out.append(f"{_fmt(r.gaps):<20}{r.new_lower:>7}{r.rv_upper:>6}{r.t1_plus:>6}")
    return "\n".join(out)


def cmd_family(args) -> str:
    spec = family(args.id, args.tau)
    doc = {
        "family": spec.family_id,
        "tau": spec.tau,
        "generators": list(spec.generators),
        "genus": spec.closed_genus,
        "frobenius": spec.closed_frobenius,
        "t1_minus": spec.closed_t1_minus,
        "moduli_dim": spec.closed_moduli_dim,
        "cone_dim": spec.closed_cone_dim,
    }
    lines = [(k, _fmt(v)) for k, v in doc.items()]
    text = _lines(lines)
    if args.verify:
        ver = verify_family(spec, strict=False)
        doc["checks"] = {c.name: {"expected": c.expected, "actual": c.actual, "ok": c.ok}
                         for c in ver.checks}
        text += "\n" + "\n".join(str(c) for c in ver.checks)
        bad = ver.first_failure()
        if bad is not None:
            print(_dump(doc) if args.json else text)
            raise VerificationFailure(f"family {spec.family_id}, tau={spec.tau}: {bad}")
    return _dump(doc) if args.json else text


def cmd_family_equations(args) -> str:
    norm = args.normalization.split(",") if args.normalization else None
    equations = eqs.base_equations(args.id, args.tau, norm)
    if args.json:
        return _dump([str(e) for e in equations])
    return "\n".join(str(e) for e in equations)


def cmd_family_syzygies(args) -> str:
    out = []
    failed = None
    for label, value in eqs.syzygies_family1(args.tau):
        ok = value.is_zero()
        out.append(f"{label} = {value} {'✓' if ok else '✗'}")
        if not ok and failed is None:
            failed = label
    text = "\n".join(out)
    if failed:
        print(text)
        raise VerificationFailure(f"syzygy {failed} fails for tau={args.tau}")
    return text


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wsp", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def semigroup_cmd(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("gens", nargs="*", type=int, help="generators")
        sp.add_argument("--gaps", help="comma-separated gap list instead of generators")
        sp.add_argument("--json", action="store_true")
        sp.set_defaults(fn=fn)

    semigroup_cmd("info", cmd_info, "basic invariants")
    semigroup_cmd("t1", cmd_t1, "graded dimensions of T^1")
    semigroup_cmd("bounds", cmd_bounds, "moduli dimension bounds")

    sp = sub.add_parser("enumerate", help="all semigroups of a genus, as CSV")
    sp.add_argument("--genus", type=int, required=True)
    sp.add_argument("--only-positive-t1", action="store_true")
    sp.add_argument("--max-genus", type=int, default=None)
    sp.add_argument("--csv", action="store_true", help="accepted for symmetry; CSV is the default")
    sp.set_defaults(fn=cmd_enumerate)

    sp = sub.add_parser("table1", help="non-negatively graded semigroups of genus <= 6")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(fn=cmd_table1)

    sp = sub.add_parser("family", help="closed forms of a family member")
    sp.add_argument("--id", type=int, required=True)
    sp.add_argument("--tau", type=int, required=True)
    sp.add_argument("--verify", action="store_true")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(fn=cmd_family)

    sp = sub.add_parser("family-equations", help="the 5*tau base-space equations")
    sp.add_argument("--id", type=int, required=True)
    sp.add_argument("--tau", type=int, required=True)
    sp.add_argument("--normalization", help="comma-separated symbols set to zero")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(fn=cmd_family_equations)

    sp = sub.add_parser("family-syzygies", help="check the eight syzygies of family 1")
    sp.add_argument("--tau", type=int, required=True)
    sp.set_defaults(fn=cmd_family_syzygies)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        print(args.fn(args))
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except FormulaInconsistency as e:
        print(f"formula inconsistency: {e}", file=sys.stderr)
        return 3
    except VerificationFailure as e:
        print(f"verification failed: {e}", file=sys.stderr)
        return 4
    return 0


if __name__ == "__main__":
    sys.exit(main())
