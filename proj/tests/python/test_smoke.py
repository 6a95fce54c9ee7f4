"""Smoke tests for the Python bindings."""

import pygiambelli as pg


def test_conjugate():
    assert pg.conjugate("6,5,3,1") == "4,3,3,2,2,1"
    assert pg.conjugate("") == ""


def test_boxes_and_diagram():
    assert pg.boxes("6,5,3,1/4,4,3") == [(1, 5), (1, 6), (2, 5), (4, 1)]
    assert not pg.is_connected("6,5,3,1/4,4,3")
    assert pg.diagram("2,1").splitlines() == ["##", "#"]


def test_schur_poly():
    p = pg.schur_poly("2,1", 3)
    assert p[(1, 1, 1)] == 2
    assert p[(2, 1, 0)] == 1
    assert sum(p.values()) == 8
    assert pg.complete_h(0, 3) == {(0, 0, 0): 1}
    assert pg.elementary_e(4, 3) == {}


def test_decomposition_and_twist():
    d = pg.decomposition("6,5,3,1/4,4,3")
    assert d["strips"] == "{[4,5],[3,3],[1,0],[-3,-3]}"
    assert d["directions"] == "RRRRRRRR"
    t = pg.twist("6,5,3,1/4,4,3", "", -3)
    assert t["rule"] == "b'"
    assert t["directions"] == "URRRRRRR"


def test_matrices():
    assert pg.jacobi_trudi("2,1") == [["s[2]", "s[3]"], ["1", "s[1]"]]
    assert pg.canonical_matrix("6,5,3,1/4,4,3")[3] == ["s[9]", "s[7]", "s[4]", "s[1]"]
    assert pg.giambelli_determinant_check("3,3,2/1", "RRUU")


def test_glue_identity():
    assert pg.check_glue_identity("2", "1,1", 4)


def test_chain():
    result = pg.chain("6,5,3,1/4,4,3")
    assert len(result["stages"]) == 9
    assert result["stages"][0]["strips"] == "{[4,5],[3,3],[1,0],[-3,-3]}"
    report = pg.verify_chain("6,5,3,1/4,4,3")
    assert report["ok"]
