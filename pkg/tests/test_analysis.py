import itertools

import pytest

from conjlogic import (
    CzChoice,
    appendix_b_check,
    compatible,
    law_report,
    law_table,
    pm_square,
)
from conjlogic.clifford import TheoryVariant

from conftest import P

Q = TheoryVariant.QUANTUM
TOY = TheoryVariant.SPEKKENS_TOY

EXPECTED_GRID = (
    ("ZI", "IZ", "ZZ"),
    ("IX", "XI", "XX"),
    ("ZX", "XZ", "YY"),
)


@pytest.mark.parametrize("variant", (Q, TOY))
def test_pm_grid_entries(variant):
    report = pm_square(variant)
    for row, expected in zip(report.square, EXPECTED_GRID):
        assert tuple(p.letters for p in row) == expected
        assert all(p.sign == 0 for p in row)


@pytest.mark.parametrize("variant", (Q, TOY))
def test_pm_lines_are_pairwise_compatible(variant):
    report = pm_square(variant)
    for constraint in report.constraints:
        for a, b in itertools.combinations(constraint.members, 2):
            assert compatible(a, b)


def test_pm_quantum_unsatisfiable():
    report = pm_square(Q)
    assert not report.satisfiable
    assert report.assignment is None
    assert report.parity_xor == 1
    parities = {c.label: c.parity for c in report.constraints}
    assert parities == {
        "row 1": 0,
        "row 2": 0,
        "row 3": 0,
        "column 1": 0,
        "column 2": 0,
        "column 3": 1,
    }


def test_pm_toy_satisfiable_with_verified_witness():
    report = pm_square(TOY)
    assert report.satisfiable
    assert report.parity_xor == 0
    assert all(c.parity == 0 for c in report.constraints)
    values = report.assignment
    flat = report.grid_flat()
    index = {(p.x, p.z): i for i, p in enumerate(flat)}
    for c in report.constraints:
        ia, ib, ic = (index[(m.x, m.z)] for m in c.members)
        assert values[ia] ^ values[ib] ^ values[ic] == c.parity


def test_pm_row1_constraint_semantics():
    report = pm_square(Q)
    row1 = report.constraints[0]
    assert [m.letters for m in row1.members] == ["ZI", "IZ", "ZZ"]
    assert row1.parity == 0


def test_pm_search_is_order_independent():
    # brute-force over all 512 assignments from the other direction
    report = pm_square(Q)
    for values in itertools.product((0, 1), repeat=9):
        flat = report.grid_flat()
        index = {(p.x, p.z): i for i, p in enumerate(flat)}
        ok = all(
            values[index[(a.x, a.z)]]
            ^ values[index[(b.x, b.z)]]
            ^ values[index[(c.x, c.z)]]
            == constraint.parity
            for constraint in report.constraints
            for a, b, c in [constraint.members]
        )
        assert not ok


# -- CZ-choice consistency ------------------------------------------------------


def test_consistency_standard():
    report = appendix_b_check(CzChoice.STANDARD)
    assert report.premise == (P("<-YYI>"), P("<-IYY>"))
    assert report.premise_reduced == (P("<-XII>"), P("<-IXI>"))
    assert report.derived == (P("<YIY>"), P("<YIY>"))
    assert not report.contradiction_found
    assert not report.state.poisoned


def test_consistency_tilde():
    report = appendix_b_check(CzChoice.TILDE)
    assert report.premise_reduced == (P("<-XII>"), P("<-IXI>"))
    assert set(report.derived) == {P("<YIY>"), P("<-YIY>")}
    assert report.contradiction_found
    assert report.state.poisoned
    assert report.state.conflicts == (P("<-YIY>"),)


def test_consistency_premise_state_is_valid_under_both_choices():
    for cz in (CzChoice.STANDARD, CzChoice.TILDE):
        report = appendix_b_check(cz)
        # the premise itself reduces to compatible single-system propositions
        assert {p.weight for p in report.premise_reduced} == {1}


# -- law tables ------------------------------------------------------------------


def _column(table, header):
    i = table.headers.index(header)
    return [row[i] for row in table.rows]


def test_e9_table_matches_inverse_law_rows():
    table = law_table("E9")
    assert table.headers == ("p", "¬p", "p∨¬p", "<I>", "p∧¬p", "<-I>")
    assert [r[0] for r in table.rows] == ["0", "1", "?"]
    assert table.rows == (
        ("0", "1", "1", "1", "0", "0"),
        ("1", "0", "1", "1", "0", "0"),
        ("?", "?", "?", "1", "?", "0"),
    )


def test_i2_table_has_27_rows_in_order():
    table = law_table("I2")
    assert len(table.rows) == 27
    # rows enumerate (p, q, r) lexicographically with 0 < ? < 1
    expected_pqr = [
        (a, b, c)
        for a in "0?1"
        for b in "0?1"
        for c in "0?1"
    ]
    assert [(r[0], r[1], r[2]) for r in table.rows] == expected_pqr
    # spot rows: object-level columns
    rows = {(r[0], r[1], r[2]): r for r in table.rows}
    assert rows[("0", "?", "0")][3:] == ("1", "0", "0", "1")
    assert rows[("?", "0", "?")][3:] == ("0", "1", "0", "1")
    assert rows[("1", "?", "0")][3:] == ("0", "0", "0", "0")
    # the law itself holds: conjunction column implies the final column
    from conjlogic.kernel import TruthValue, material_implies, TRUE

    for row in table.rows:
        conj_v = TruthValue.from_symbol(row[5])
        final_v = TruthValue.from_symbol(row[6])
        assert material_implies(conj_v, final_v) is TRUE


def test_i8_holds_on_all_27_rows():
    table = law_table("I8")
    assert len(table.rows) == 27
    from conjlogic.kernel import TruthValue, material_implies, TRUE

    for row in table.rows:
        conj_v = TruthValue.from_symbol(row[5])
        final_v = TruthValue.from_symbol(row[6])
        assert material_implies(conj_v, final_v) is TRUE


def test_e11_table_counterexample_rows():
    table = law_table("E11")
    differing = [
        (row[0], row[1])
        for row in table.rows
        if row[2] != row[3]
    ]
    assert differing == [("?", "0"), ("?", "?"), ("1", "?")]


def test_i6_table_failure_row():
    table = law_table("I6")
    final = _column(table, "[(p∨q)∧¬q]→p")
    failing = [
        (row[0], row[1]) for row, v in zip(table.rows, final) if v != "1"
    ]
    assert failing == [("0", "?")]


def test_i7_table_three_rows():
    table = law_table("I7")
    assert len(table.rows) == 3
    assert _column(table, "(¬p→<-I>)→p") == ["1", "1", "1"]


def test_contrapositive_table_matches():
    table = law_table("E12")
    assert _column(table, "p→q") == _column(table, "¬q→¬p")


def test_equivalence_table_matches():
    table = law_table("E13")
    from conjlogic.kernel import TruthValue, conj

    for row in table.rows:
        both = conj(TruthValue.from_symbol(row[3]), TruthValue.from_symbol(row[4]))
        assert str(both) == row[2]


def test_law_report_renders_every_law():
    report = law_report()
    assert len(report.tables) == 21
    text = report.to_text()
    for law_id in ("E1", "E9", "I6", "I8"):
        assert f"({law_id})" in text
    assert report.table("E9").rows[2][0] == "?"


def test_default_layout_for_untabulated_laws():
    table = law_table("E1")
    assert table.headers[0] == "p"
    assert len(table.rows) == 3
