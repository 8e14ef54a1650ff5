"""Command line interface.

Exit codes: 0 success (for ``verify-paper``: every certificate holds),
1 some certificate fails, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import analytic, certify
from .core import FamilyParams, is_admissible
from .global_bounds import Profile, global_table, mubar_total
from .local_bounds import local_table, mubar
from .output import FORMATS, OutputDocument, certificate_dict, markdown_table, render
from .polytope import certify_lattice_volume, lattice_count, volume_plus
from .rigidity import DEFAULT_A_MAX_DIRECT, check_family, hypertangent_ledger
from .words import encode_positions, nu_project, worst_case_words

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {v}")
    return v


def _positive(text: str) -> int:
    v = _nonneg(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {v}")
    return v


def _profile_text(p: Profile) -> str:
    return str(p)


def cmd_mubar(args) -> OutputDocument:
    value = str(mubar(args.a, args.b)) if is_admissible((args.a, args.b)) else "*"
    return OutputDocument(
        "mubar", {"a": args.a, "b": args.b}, {"value": value},
        columns=["a", "b", "value"], rows=[[args.a, args.b, value]], markdown=value + "\n",
    )


def _local_markdown(table) -> str:
    columns = ["a"] + [str(a) for a in range(1, table.a_max + 1)]
    rows = []
    for b in range(table.b_max + 1):
        row = [f"b={b}"]
        for a in range(1, table.a_max + 1):
            v = table.value(a, b)
            if v is None:
                row.append("*")
            elif table.column_max[a] == b:
                row.append(f"**{v}**")
            else:
                row.append(str(v))
        rows.append(row)
    return markdown_table(columns, rows)


def cmd_local_table(args) -> OutputDocument:
    if args.a_max < 1:
        raise UsageError("--a-max must be >= 1")
    table = local_table(args.a_max, args.b_max)
    cells = [
        {"a": a, "b": b, "value": "*" if v is None else v, "column_max": table.column_max[a] == b}
        for (a, b), v in sorted(table.cells.items())
    ]
    defined = len(table.defined_cells())
    return OutputDocument(
        "local-table", {"a_max": args.a_max, "b_max": args.b_max},
        {"defined_cells": defined, "cells": cells},
        columns=["a", "b", "value", "column_max"],
        rows=[[c["a"], c["b"], c["value"], c["column_max"]] for c in cells],
        markdown=_local_markdown(table),
    )


def _global_doc(kind: str, rows, params: dict, show_profiles: bool) -> OutputDocument:
    payload_rows, flat = [], []
    for row in rows:
        rec = {"a": row.a, "value": row.value, "maximizer_count": len(row.maximizers)}
        if show_profiles:
            rec["maximizers"] = [{"r": p.r, "b": list(p.b)} for p in row.maximizers]
        if row.printed_value is not None:
            rec["printed_value"] = row.printed_value
            rec["printed_profile"] = _profile_text(row.printed_profile)
        rec["notes"] = list(row.notes)
        payload_rows.append(rec)
        flat.append([
            row.a, row.value,
            "; ".join(map(_profile_text, row.maximizers)) if show_profiles else len(row.maximizers),
            row.printed_value, "; ".join(row.notes),
        ])
    columns = ["a", "value", "maximizers" if show_profiles else "maximizer_count", "printed", "note"]
    return OutputDocument(kind, params, {"rows": payload_rows}, columns=columns, rows=flat)


def cmd_global_table(args) -> OutputDocument:
    if args.a_max < 1:
        raise UsageError("--a-max must be >= 1")
    rows = global_table(args.a_max)
    return _global_doc("global-table", rows, {"a_max": args.a_max, "show_profiles": args.show_profiles}, args.show_profiles)


def cmd_mubar_total(args) -> OutputDocument:
    if args.a < 1:
        raise UsageError("a must be >= 1")
    return _global_doc("mubar-total", [mubar_total(args.a)], {"a": args.a}, True)


def cmd_words(args) -> OutputDocument:
    words = worst_case_words((args.a, args.b))
    recs, flat = [], []
    for w in words:
        m, marks = encode_positions(w, (args.a, args.b)) if args.b >= 1 else ((), ())
        word = " ".join(map(str, w.letters))
        recs.append({"word": word, "nu": nu_project(w), "final_a": w.final_state.a, "m": list(m),
                     "decrement_letters": [str(x) for x in marks]})
        flat.append([word, nu_project(w), w.final_state.a, " ".join(map(str, m))])
    return OutputDocument(
        "words", {"a": args.a, "b": args.b}, {"count": len(words), "words": recs},
        columns=["word", "nu", "final_a", "m"], rows=flat,
    )


def cmd_lattice(args) -> OutputDocument:
    cert = certify_lattice_volume(args.a, args.b)
    payload = {"lattice_count": lattice_count(args.a, args.b), "volume_plus": volume_plus(args.a, args.b),
               "certificate": certificate_dict(cert)}
    return OutputDocument(
        "lattice", {"a": args.a, "b": args.b}, payload,
        columns=["a", "b", "lattice_count", "volume_plus", "holds"],
        rows=[[args.a, args.b, payload["lattice_count"], payload["volume_plus"], cert.holds]],
    )


def cmd_analytic(args) -> OutputDocument:
    rep = analytic.analytic_report(args.a, args.b)
    cert = analytic.certify_stirling_below_u(args.a, args.b)
    payload = {"u": rep.u, "v": rep.v, "w": rep.w, "stirling": rep.stirling, "coarse": rep.coarse,
               "refined": rep.refined, "certificate": certificate_dict(cert)}
    return OutputDocument(
        "analytic", {"a": args.a, "b": args.b}, payload,
        columns=["quantity", "value"],
        rows=[[k, v] for k, v in payload.items() if k != "certificate"] + [["stirling<=u_b", cert.holds]],
    )


def _cert_rows(certs):
    return [[c.claim_id, c.lhs, c.relation, c.rhs, c.holds, " ".join(f"{k}={v}" for k, v in c.context.items())] for c in certs]


CERT_COLUMNS = ["claim_id", "lhs", "relation", "rhs", "holds", "context"]


def cmd_check_family(args) -> OutputDocument:
    try:
        fam = FamilyParams(args.k1, args.k2)
    except ValueError as exc:
        raise UsageError(str(exc))
    v = check_family(fam, args.a_max_direct)
    notes = list(v.assumptions)
    if fam.k2 >= 2:
        notes += hypertangent_ledger(fam).notes
    payload = {"status": v.status.value, "margin": v.margin, "M": fam.M, "d": fam.d,
               "evidence": [certificate_dict(c) for c in v.evidence], "notes": notes}
    md = (f"family 2^{fam.k1} 3^{fam.k2} (M={fam.M}, d={fam.d}): {v.status.value}, margin {v.margin}\n\n"
          + markdown_table(CERT_COLUMNS, _cert_rows(v.evidence))
          + "".join(f"\n- {n}" for n in notes) + "\n")
    return OutputDocument(
        "check-family", {"k1": args.k1, "k2": args.k2, "a_max_direct": args.a_max_direct}, payload,
        columns=CERT_COLUMNS, rows=_cert_rows(v.evidence), markdown=md,
    )


def cmd_verify_paper(args) -> OutputDocument:
    if args.grid_scale <= 0:
        raise UsageError("--grid-scale must be positive")
    bundle = certify.verify_paper(args.grid_scale, args.golden)
    summary = {name: {"total": len(g), "failed": sum(not c.holds for c in g)} for name, g in bundle.groups.items()}
    payload = {
        "ok": bundle.ok,
        "summary": summary,
        "annotations": bundle.annotations,
        "certificates": [dict(certificate_dict(c), group=name) for name, g in bundle.groups.items() for c in g],
    }
    params = dict(bundle.parameters)
    if args.golden:
        params["golden"] = str(args.golden)
    md = ["| group | certificates | failed |", "|---|---|---|"]
    md += [f"| {n} | {s['total']} | {s['failed']} |" for n, s in summary.items()]
    md.append("")
    if bundle.failures:
        md.append("Failed certificates:\n")
        md.append(markdown_table(CERT_COLUMNS, _cert_rows(bundle.failures)))
    md += [f"- {a}" for a in bundle.annotations]
    md.append(f"\nresult: {'PASS' if bundle.ok else 'FAIL'}\n")
    doc = OutputDocument(
        "certificate-bundle", params, payload,
        columns=["group"] + CERT_COLUMNS,
        rows=[[name] + r for name, g in bundle.groups.items() for r in _cert_rows(g)],
        markdown="\n".join(md),
        ok=bundle.ok,
    )
    return doc


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="markdown")
    common.add_argument("--out", type=Path, help="write the document to FILE instead of stdout")

    p = argparse.ArgumentParser(prog="rigidbounds", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("mubar", parents=[common], help="local bound mubar(a, b); '*' if a < b^2")
    s.add_argument("a", type=_nonneg)
    s.add_argument("b", type=_nonneg)
    s.set_defaults(func=cmd_mubar)

    s = sub.add_parser("local-table", parents=[common], help="table of mubar, column maxima in bold")
    s.add_argument("--a-max", type=_nonneg, default=36)
    s.add_argument("--b-max", type=_nonneg, default=7)
    s.set_defaults(func=cmd_local_table)

    s = sub.add_parser("global-table", parents=[common], help="mubar_total(a) for a = 1..a_max")
    s.add_argument("--a-max", type=_nonneg, default=36)
    s.add_argument("--show-profiles", action="store_true")
    s.set_defaults(func=cmd_global_table)

    s = sub.add_parser("mubar-total", parents=[common], help="mubar_total(a) with every maximizing profile")
    s.add_argument("a", type=_positive)
    s.set_defaults(func=cmd_mubar_total)

    s = sub.add_parser("words", parents=[common], help="worst-case word set with position encodings")
    s.add_argument("a", type=_nonneg)
    s.add_argument("b", type=_nonneg)
    s.set_defaults(func=cmd_words)

    s = sub.add_parser("lattice", parents=[common], help="lattice count of the position simplex vs volume")
    s.add_argument("a", type=_nonneg)
    s.add_argument("b", type=_positive)
    s.set_defaults(func=cmd_lattice)

    s = sub.add_parser("analytic", parents=[common], help="analytic majorants u_b, v_b, w_b and Stirling form")
    s.add_argument("a", type=_positive)
    s.add_argument("b", type=_positive)
    s.set_defaults(func=cmd_analytic)

    s = sub.add_parser("check-family", parents=[common], help="verdict for the family 2^k1 * 3^k2")
    s.add_argument("k1", type=_nonneg)
    s.add_argument("k2", type=_nonneg)
    s.add_argument("--a-max-direct", type=int, default=DEFAULT_A_MAX_DIRECT)
    s.set_defaults(func=cmd_check_family)

    s = sub.add_parser("verify-paper", parents=[common], help="run every check; exit 1 if any certificate fails")
    s.add_argument("--grid-scale", type=float, default=1.0)
    s.add_argument("--golden", type=Path, help="alternative printed-table file")
    s.set_defaults(func=cmd_verify_paper)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    try:
        doc = args.func(args)
    except (UsageError, ValueError) as exc:
        # InadmissiblePairError and DomainError are ValueErrors
        print(f"rigidbounds {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = render(doc, args.format)
    if args.out:
        args.out.write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if doc.ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
