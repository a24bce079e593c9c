import pytest

import diagwin


def test_diagonals_of_small_windows():
    assert diagwin.diagonals(1, 3, 1, 2) == ["x[1,1]", "x[1,2]"]
    assert diagwin.diagonals(2, 2, 1, 2) == ["x[1,1]*x[2,2]"]
    assert len(diagwin.diagonals(3, 8, 2, 6)) == 10


def test_row_vector_product_and_inequality():
    p = diagwin.chain_product(1, 3, "1,2:2,3")
    assert p == "<x[1,1]*x[1,2], x[1,1]*x[1,3], x[1,2]^2, x[1,2]*x[1,3]>"
    assert diagwin.ideal_product(1, 3, ["<x[1,1], x[1,2]>", "<x[1,2], x[1,3]>"]) == p
    j = diagwin.colon(3, 9, diagwin.chain_product(3, 9, "3,7:1,5"), "x[1,3]*x[2,4]*x[3,5]")
    assert not diagwin.ideal_equals(3, 9, j, diagwin.diagonal_ideal(3, 9, 1, 5))


def test_linear_quotients_of_window():
    q = diagwin.linear_quotients(3, 8, diagwin.diagonal_ideal(3, 8, 2, 6))
    assert q["linear"]
    assert len(q["order"]) == 10 and len(q["colons"]) == 9


def test_colon_lemma_sorted_and_unsorted():
    assert diagwin.verify_colon_lemma(3, 9, "1,5:3,7")["passed"]
    assert diagwin.verify_colon_lemma(3, 8, "1,7:2,8", sample=4, seed=9)["passed"]
    with pytest.raises(diagwin.WindowOrderError):
        diagwin.verify_colon_lemma(3, 9, "3,7:1,5")
    assert not diagwin.verify_colon_lemma(3, 9, "3,7:1,5", force_brute=True)["passed"]


def test_betti_and_regularity():
    t = diagwin.betti_table(1, 3, diagwin.chain_product(1, 3, "1,2:2,3"))
    assert [r["beta"] for r in t["rows"]] == [4, 4, 1]
    assert t["reg"] == 2
    cone = diagwin.betti_table(3, 8, diagwin.diagonal_ideal(3, 8, 2, 6), method="mapping-cone")
    assert [r["beta"] for r in cone["rows"]] == [10, 15, 6]
    assert diagwin.regularity(2, 4, diagwin.chain_product(2, 4, "1,3:2,4")) == 4
    assert diagwin.regularity(1, 4, "<x[1,1]*x[1,2], x[1,3]*x[1,4]>") == 3


def test_groebner_and_conjecture():
    gb = diagwin.groebner(2, 3, "1,3")
    assert len(gb["basis"]) == 3 and gb["ini_equals_J"]
    assert diagwin.groebner(2, 5, "1,4:2,5", field_char=0)["ini_equals_J"]
    v = diagwin.conjecture_check(2, 4, "1,3:2,4")
    assert v["ini_equals_J"]


def test_replay_and_errors():
    checks = diagwin.paper_replay()
    assert len(checks) == 32 and all(c["match"] for c in checks)
    with pytest.raises(diagwin.WindowConstraintError):
        diagwin.diagonals(3, 8, 5, 6)
    with pytest.raises(diagwin.ParseError):
        diagwin.colon(2, 3, "<x[1,1]", "x[1,2]")
    assert issubclass(diagwin.ResourceError, ValueError)
