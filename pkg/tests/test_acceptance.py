"""Acceptance suite: one test per numbered criterion, each at its stated tolerance and time budget.

The terminal summary prints one PASS/FAIL line per criterion.
"""

import json
import time
from contextlib import contextmanager
from importlib import resources

import pytest

from rigidbounds import global_bounds, local_bounds, polytope, words
from rigidbounds.analytic import STIRLING_REL_TOL, TABLE_REL_TOL
from rigidbounds.certify import (
    check_analytic,
    check_closed_forms,
    check_exponential_bounds,
    check_families,
    check_global,
    check_ledger,
    check_lattice,
    check_local_table,
    check_words,
    verify_paper,
)
from rigidbounds.cli import main
from rigidbounds.core import InadmissiblePairError
from rigidbounds.global_bounds import Profile, mubar_total
from rigidbounds.golden import load_golden
from rigidbounds.local_bounds import local_table, mubar
from rigidbounds.rigidity import LISTED_FAMILIES, Status, check_family, sweep_families


def cold_caches(*, keep_global=False):
    local_bounds.clear_cache()
    words._leaves.cache_clear()
    polytope._count.cache_clear()
    if not keep_global:
        global_bounds._maximize.cache_clear()


@contextmanager
def budget(seconds):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"took {elapsed:.2f} s, budget {seconds} s"


def failing(certs):
    return [str(c) for c in certs if not c.holds]


def test_criterion_1_local_table():
    golden = load_golden()
    cold_caches()
    with budget(1):
        certs = check_local_table(golden)
        table = local_table(36, 7)
    assert table.value(36, 4) == 966 and table.value(17, 3) == 68 and table.value(26, 5) == 48
    assert len(golden.defined_local_cells()) == len(table.defined_cells()) == 167
    for (a, b), printed in golden.local_cells.items():
        if printed is None:
            with pytest.raises(InadmissiblePairError):
                mubar(a, b)
    assert failing(certs) == []


def test_criterion_2_closed_forms():
    cold_caches()
    with budget(1):
        certs = check_closed_forms(200)
    assert len(certs) == 200 + 197
    assert failing(certs) == []


def test_criterion_3_words():
    cold_caches()
    with budget(20):
        certs = check_words(60)
    claims = {c.claim_id for c in certs}
    assert claims == {"|W|=mubar", "nu-images-prefix-free", "encoding-injective", "encoding-in-simplex", "|W|<=2^b*lattice-count"}
    assert failing(certs) == []


def test_criterion_4_lattice_volume():
    cold_caches()
    with budget(5):
        certs = check_lattice(120, 8)
    assert all(c.rel_tol == 0 for c in certs)
    assert failing(certs) == []


def test_criterion_5_analytic_chain():
    cold_caches()
    with budget(10):
        certs = check_analytic(120, 500, 36)
    tolerances = {c.claim_id: c.rel_tol for c in certs}
    assert tolerances["stirling<=u_b"] == STIRLING_REL_TOL
    assert tolerances["mubar<=u_b"] == TABLE_REL_TOL
    assert failing(certs) == []


def test_criterion_6_global_table():
    golden = load_golden()
    cold_caches()
    with budget(30):
        certs, notes = check_global(golden)
    extended = {28: 3002, 35: 6708, 36: 7980}
    for a, value in extended.items():
        assert golden.global_rows[a][0] == value
    assert golden.global_rows[36][1] == Profile((3,) * 12)
    assert {c.context["a"] for c in certs} == set(range(1, 37)) - {4}
    (row4,) = [n for n in notes if n.startswith("global row a=4 excluded")]
    assert "computed 8, printed 6" in row4
    assert failing(certs) == []


def test_criterion_7_exponential_and_listed():
    golden = load_golden()
    check_global(golden)
    with budget(1):
        certs = check_exponential_bounds()
    assert len(certs) == 25 + 5
    assert failing(certs) == []


def test_criterion_8_family_sweep():
    with budget(5):
        verdicts = sweep_families(4, 36)
        certs = check_families()
    established = {f for f, v in verdicts.items() if 10 <= v.family.M <= 11 and v.status.established}
    assert established == set(LISTED_FAMILIES)
    assert all(v.status.established for f, v in verdicts.items() if v.family.M >= 12 and f[1] >= 2)
    assert all(v.status is Status.NOT_COVERED_STRUCTURAL for f, v in verdicts.items() if f[1] <= 1)
    assert failing(certs) == []


def test_criterion_9_ledger(capsys):
    with budget(1):
        certs, notes = check_ledger(30, 30)
    assert {c.context["k1"] for c in certs} == set(range(31))
    assert failing(certs) == []
    assert any("3^(k2-3)" in n for n in notes)
    main(["check-family", "5", "3"])
    assert "exponent discrepancy" in capsys.readouterr().out
    assert check_family((5, 3)).status is Status.ESTABLISHED_DIRECT


def _perturbed(tmp_path, old, new):
    text = resources.files("rigidbounds").joinpath("data/printed_tables.txt").read_text()
    assert text.count(old) == 1
    path = tmp_path / "golden.txt"
    path.write_text(text.replace(old, new))
    return path


@pytest.mark.parametrize(
    "old,new,claim,context",
    [
        ("local 17 3 68", "local 17 3 69", "mubar=printed", {"a": "17", "b": "3"}),
        ("local 8 3 *", "local 8 3 5", "printed-cell-admissible", {"a": "8", "b": "3", "printed": "5"}),
        ("local 36 4 966 bold", "local 36 4 966", "column-max=printed-bold", {"a": "36", "printed_marks": "0"}),
        ("global 20 814 ", "global 20 815 ", "mubar_total=printed", {"a": "20"}),
    ],
)
def test_criterion_10_negative_control(capsys, tmp_path, old, new, claim, context):
    path = _perturbed(tmp_path, old, new)
    # the golden-table checks do not depend on the grid scale
    code = main(["verify-paper", "--golden", str(path), "--grid-scale", "0.2", "--format", "json"])
    doc = json.loads(capsys.readouterr().out)
    assert code == 1
    hits = [c for c in doc["payload"]["certificates"] if c["claim_id"] == claim and c["context"] == context]
    assert [c["holds"] for c in hits] == [False]


def test_full_run_within_budget():
    cold_caches()
    start = time.perf_counter()
    verify_paper()
    assert time.perf_counter() - start < 60
