"""Run every check against the printed tables and collect the certificates.

Groups follow the exit criteria of the tool: local table, closed forms, word
sets, lattice/volume, analytic chain, global table, exponential bounds,
family verdicts, multiplicity ledger.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from pathlib import Path

from .analytic import certify_mubar_below_u, certify_stirling_below_u, certify_u_argmax, u_monotonicity_scan
from .core import BoundCertificate, FamilyParams, InadmissiblePairError, is_admissible
from .global_bounds import global_table
from .golden import GoldenTables, load_golden
from .local_bounds import closed_form_b1, closed_form_b2, local_table, mubar
from .polytope import certify_lattice_volume, lattice_count
from .rigidity import (
    LISTED_FAMILIES,
    Status,
    certify_listed_families,
    certify_total_exponential,
    hypertangent_ledger,
    sweep_families,
)
from .words import check_prefix_free, encode_positions, in_simplex, worst_case_words

log = logging.getLogger(__name__)

# rows of the printed global table that are reported, not certified
EXCLUDED_GLOBAL_ROWS = frozenset({4})

BASE_GRID = {"words": 60, "dp": 200, "lattice": 120, "analytic": 500}


@dataclass
class Bundle:
    parameters: dict
    groups: dict[str, list[BoundCertificate]] = field(default_factory=dict)
    annotations: list[str] = field(default_factory=list)

    @property
    def certificates(self) -> list[BoundCertificate]:
        return [c for certs in self.groups.values() for c in certs]

    @property
    def failures(self) -> list[BoundCertificate]:
        return [c for c in self.certificates if not c.holds]

    @property
    def ok(self) -> bool:
        return not self.failures


def _flag(claim_id: str, ok: bool, **context) -> BoundCertificate:
    return BoundCertificate.check(claim_id, int(ok), 1, "=", **context)


def grid_limits(grid_scale: float = 1.0) -> dict[str, int]:
    if grid_scale <= 0:
        raise ValueError(f"grid scale must be positive, got {grid_scale}")
    return {k: max(1, round(v * grid_scale)) for k, v in BASE_GRID.items()}


def check_local_table(golden: GoldenTables) -> list[BoundCertificate]:
    a_max = max(a for a, _ in golden.local_cells)
    b_max = max(b for _, b in golden.local_cells)
    table = local_table(a_max, b_max)
    certs = []
    for (a, b), printed in sorted(golden.local_cells.items()):
        if printed is None:
            try:
                mubar(a, b)
                raised = False
            except InadmissiblePairError:
                raised = True
            certs.append(_flag("star-cell-inadmissible", raised, a=a, b=b))
        elif not is_admissible((a, b)):
            certs.append(_flag("printed-cell-admissible", False, a=a, b=b, printed=printed))
        else:
            certs.append(BoundCertificate.check("mubar=printed", table.value(a, b), printed, "=", a=a, b=b))
    for a in range(1, a_max + 1):
        marks = sorted(b for x, b in golden.bold if x == a)
        if len(marks) == 1:
            certs.append(BoundCertificate.check("column-max=printed-bold", table.column_max[a], marks[0], "=", a=a))
        else:
            # a column needs exactly one bold mark
            certs.append(_flag("column-max=printed-bold", False, a=a, printed_marks=len(marks)))
    defined = len(golden.defined_local_cells())
    admissible = sum(1 for (a, b) in golden.local_cells if is_admissible((a, b)))
    certs.append(BoundCertificate.check("defined-cells=admissible-cells", defined, admissible, "=", printed=defined))
    return certs


def check_closed_forms(a_max: int) -> list[BoundCertificate]:
    certs = [BoundCertificate.check("mubar(a,1)=a+1", mubar(a, 1), closed_form_b1(a), "=", a=a) for a in range(1, a_max + 1)]
    certs += [
        BoundCertificate.check("mubar(a,2)=closed-form", mubar(a, 2), closed_form_b2(a), "=", a=a)
        for a in range(4, a_max + 1)
    ]
    return certs


def check_words(a_max: int) -> list[BoundCertificate]:
    certs = []
    for a in range(a_max + 1):
        b = 0
        while b * b <= a:
            words = worst_case_words((a, b))
            certs.append(BoundCertificate.check("|W|=mubar", len(words), mubar(a, b), "=", a=a, b=b))
            certs.append(_flag("nu-images-prefix-free", check_prefix_free(words), a=a, b=b))
            if b >= 1:
                codes = [encode_positions(w, (a, b)) for w in words]
                certs.append(_flag("encoding-injective", len(set(codes)) == len(codes), a=a, b=b))
                certs.append(_flag("encoding-in-simplex", all(in_simplex(m, a, b) for m, _ in codes), a=a, b=b))
                certs.append(
                    BoundCertificate.check("|W|<=2^b*lattice-count", len(words), 2**b * lattice_count(a, b), "<=", a=a, b=b)
                )
            b += 1
    return certs


def check_lattice(a_max: int, b_max: int = 8) -> list[BoundCertificate]:
    return [
        certify_lattice_volume(a, b)
        for a in range(1, a_max + 1)
        for b in range(1, b_max + 1)
        if a >= b * b
    ]


def check_analytic(lattice_a_max: int, scan_a_max: int, table_a_max: int = 36) -> list[BoundCertificate]:
    certs = [
        certify_stirling_below_u(a, b)
        for a in range(1, lattice_a_max + 1)
        for b in range(1, 9)
        if a >= b * b
    ]
    certs += u_monotonicity_scan(scan_a_max)
    certs += [certify_u_argmax(a) for a in range(17, scan_a_max + 1)]
    certs += [
        certify_mubar_below_u(a, b)
        for a in range(1, table_a_max + 1)
        for b in range(1, 8)
        if a >= b * b
    ]
    return certs


def check_global(golden: GoldenTables) -> tuple[list[BoundCertificate], list[str]]:
    certs, notes = [], []
    rows = global_table(max(golden.global_rows), printed=golden.global_rows)
    for row in rows:
        if row.a in EXCLUDED_GLOBAL_ROWS:
            notes.append(f"global row a={row.a} excluded: " + "; ".join(row.notes or ["no discrepancy"]))
            continue
        certs.append(BoundCertificate.check("mubar_total=printed", row.value, row.printed_value, "=", a=row.a))
        certs.append(
            _flag("printed-profile-among-maximizers", row.printed_profile in row.maximizers, a=row.a, profile=str(row.printed_profile))
        )
        if row.notes:
            notes.append(f"global row a={row.a}: " + "; ".join(row.notes))
    return certs, notes


def check_exponential_bounds() -> list[BoundCertificate]:
    return [certify_total_exponential(a) for a in range(12, 37)] + certify_listed_families()


def check_families() -> list[BoundCertificate]:
    certs = []
    verdicts = sweep_families(4, 36)
    listed = set(LISTED_FAMILIES)
    for (k1, k2), v in sorted(verdicts.items(), key=lambda kv: (kv[1].family.M, kv[0])):
        m = v.family.M
        if k2 <= 1:
            certs.append(_flag("structural-verdict", v.status is Status.NOT_COVERED_STRUCTURAL, k1=k1, k2=k2))
        elif m in (10, 11):
            certs.append(
                BoundCertificate.check("established=listed", int(v.status.established), int((k1, k2) in listed), "=", k1=k1, k2=k2)
            )
        elif m >= 12:
            certs.append(_flag("established-for-M>=12", v.status.established, k1=k1, k2=k2))
    return certs


def check_ledger(k1_max: int = 30, k2_max: int = 30) -> tuple[list[BoundCertificate], list[str]]:
    certs = []
    for k2 in range(2, k2_max + 1):
        for k1 in range(k1_max + 1):
            rep = hypertangent_ledger(FamilyParams(k1, k2))
            certs += rep.certificates
            certs.append(_flag("ledger-contradiction", rep.contradiction, k1=k1, k2=k2))
    return certs, hypertangent_ledger(FamilyParams(0, 2)).notes


def verify_paper(grid_scale: float = 1.0, golden: str | Path | GoldenTables | None = None) -> Bundle:
    limits = grid_limits(grid_scale)
    tables = golden if isinstance(golden, GoldenTables) else load_golden(golden)
    bundle = Bundle(parameters={"grid_scale": grid_scale, **{f"{k}_a_max": v for k, v in limits.items()}})
    bundle.groups["local-table"] = check_local_table(tables)
    bundle.groups["closed-forms"] = check_closed_forms(limits["dp"])
    bundle.groups["words"] = check_words(limits["words"])
    bundle.groups["lattice-volume"] = check_lattice(limits["lattice"])
    bundle.groups["analytic"] = check_analytic(limits["lattice"], limits["analytic"])
    certs, notes = check_global(tables)
    bundle.groups["global-table"] = certs
    bundle.annotations += notes
    bundle.groups["exponential-bounds"] = check_exponential_bounds()
    bundle.groups["family-verdicts"] = check_families()
    certs, notes = check_ledger()
    bundle.groups["ledger"] = certs
    bundle.annotations += notes
    for name, group in bundle.groups.items():
        log.info("%s: %d certificates, %d failed", name, len(group), sum(not c.holds for c in group))
    return bundle
