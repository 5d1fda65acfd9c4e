import csv
import io

import pytest

from rainbowcycles.search import Budget
from rainbowcycles.search.table import (
    GValue,
    build_table,
    construction_cell,
    g_exact,
    implied_absent,
    table_cell,
    table_csv,
)


def test_cell_examples():
    assert table_cell(5, 8) == "x"
    assert table_cell(5, 10, {(5, 9): "X"}) == "X"
    assert table_cell(4, 7) == "o"


def test_cell_rejects():
    for n, m in [(2, 5), (5, 5), (6, 5)]:
        with pytest.raises(ValueError):
            table_cell(n, m)


def test_cell_uses_known_absent_lengths():
    # 5 and 9 absent compose to 12
    assert table_cell(5, 12, {(5, 9): "X"}) == "x"
    assert implied_absent(12, {5, 9})
    assert not implied_absent(12, {5})


def test_cell_timeout_is_blank():
    assert table_cell(7, 13, budget=Budget(max_nodes=1)) == ""


def test_constructions():
    assert construction_cell(4, 7) and construction_cell(6, 9)
    assert construction_cell(6, 8)  # 6 = 2 mod 4 and 8 is not
    assert not construction_cell(6, 10)
    assert not construction_cell(5, 7)
    assert not construction_cell(4, 8)


@pytest.fixture(scope="module")
def small_table():
    return build_table(7, 11)


def test_small_table(small_table):
    t = small_table
    assert all(t[3, m] == "x" for m in range(4, 12))
    assert [t[5, m] for m in range(6, 12)] == ["O", "O", "x", "X", "X", "x"]
    assert [t[7, m] for m in range(8, 12)] == ["O", "O", "O", "X"]
    assert t[4, 6] == "x" and t[4, 5] == "o" and t[6, 7] == "o"
    assert set(t.values()) <= {"o", "O", "x", "X"}


def test_table_csv_layout(small_table):
    rows = list(csv.reader(io.StringIO(table_csv(small_table, 7, 11))))
    assert rows[0] == ["n\\m"] + [str(m) for m in range(4, 12)]
    assert [r[0] for r in rows[1:]] == [str(n) for n in range(3, 8)]
    assert rows[3][rows[0].index("10")] == "X"
    assert rows[3][rows[0].index("5")] == ""  # n = 5 >= m


def test_g_values():
    g5 = g_exact(5)
    assert g5.exact and g5.value == 8
    assert g5.cells[9] == "X" and g5.cells[7] == "O"
    g7 = g_exact(7)
    assert g7.exact and g7.value == 11 and str(g7) == "11"


def test_g_bracket_when_out_of_time():
    g = g_exact(7, total_seconds=1e-6)
    assert not g.exact and g.lower <= 11 <= g.upper <= 2 * 49
    assert str(g) == f"[{g.lower}, {g.upper}]"
    g = g_exact(7, Budget(max_nodes=1))
    assert g.lower <= 11 <= g.upper


def test_g_with_lemmas():
    assert g_exact(5, use_lemmas=True).value == 8


def test_g_rejects():
    for n in (3, 4, 6):
        with pytest.raises(ValueError):
            g_exact(n)


def test_gvalue_type():
    assert GValue(5, 8, 8).value == 8 and GValue(5, 7, 9).value is None


# Reference table, columns n = 3..8, rows m = n+1..16, one string per column.
REFERENCE = {
    3: "xxxxxxxxxxxxx",
    4: "oxoxoxoxoxox",
    5: "OOxXXxxxxxx",
    6: "oooxoooxoo",
    7: "OOOXxXXXx",
    8: "oOoXoxoX",
}


def test_table_matches_reference():
    t = build_table(8, 16, Budget(max_seconds=60))
    for n, col in REFERENCE.items():
        assert "".join(t[n, m] for m in range(n + 1, 17)) == col, n
