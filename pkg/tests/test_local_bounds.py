import pytest

from rigidbounds.core import DomainError, InadmissiblePairError
from rigidbounds.golden import load_golden
from rigidbounds.local_bounds import clear_cache, closed_form_b1, closed_form_b2, local_table, mubar


@pytest.mark.parametrize(
    "a,b,value",
    [(36, 4, 966), (17, 3, 68), (26, 5, 48), (4, 2, 4), (5, 2, 6), (13, 2, 38), (36, 6, 64), (0, 0, 1), (7, 1, 8)],
)
def test_printed_values(a, b, value):
    assert mubar(a, b) == value


@pytest.mark.parametrize("a,b", [(3, 2), (8, 3), (35, 6), (48, 7)])
def test_star_cells_raise(a, b):
    with pytest.raises(InadmissiblePairError):
        mubar(a, b)


def test_negative_arguments_raise():
    with pytest.raises(InadmissiblePairError):
        mubar(-1, 0)
    with pytest.raises(InadmissiblePairError):
        mubar(5, -1)


def test_whole_printed_table():
    golden = load_golden()
    table = local_table(36, 7)
    for (a, b), printed in golden.local_cells.items():
        assert table.value(a, b) == printed, (a, b)
    assert {(a, table.column_max[a]) for a in range(1, 37)} == set(golden.bold)


def test_column_max_tie_goes_to_smallest_defect():
    t = local_table(5, 2)
    assert t.value(5, 1) == t.value(5, 2) == 6
    assert t.column_max[5] == 1


def test_defined_cell_count():
    assert len(local_table(36, 7).defined_cells()) == 167


@pytest.mark.parametrize("a_max,b_max", [(0, 3), (5, -1)])
def test_local_table_rejects_bad_ranges(a_max, b_max):
    with pytest.raises(DomainError):
        local_table(a_max, b_max)


def test_closed_forms_to_200():
    for a in range(1, 201):
        assert mubar(a, 1) == closed_form_b1(a) == a + 1
    for a in range(4, 201):
        u = a // 2
        assert mubar(a, 2) == closed_form_b2(a) == (2 + u * (u - 1) if a % 2 == 0 else 2 + u * u)


def test_closed_form_domains():
    with pytest.raises(DomainError):
        closed_form_b2(3)
    with pytest.raises(DomainError):
        closed_form_b1(-1)


def test_recursion_never_leaves_the_domain():
    # _mubar raises on any inadmissible argument, including recursive calls,
    # so evaluating every admissible pair from a cold cache proves well-foundedness.
    clear_cache()
    for a in range(201):
        b = 0
        while b * b <= a:
            assert mubar(a, b) >= 1
            b += 1


def test_monotone_in_a():
    for b in range(0, 8):
        values = [mubar(a, b) for a in range(b * b, 120)]
        assert values == sorted(values)
