import pytest

import pyknot

TREFOIL = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"
FIGURE_EIGHT = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"


def test_trefoil_invariants():
    assert pyknot.bracket(TREFOIL) == [(20, -1), (-12, -1), (-28, 1)]
    assert pyknot.jones(TREFOIL) == [(16, -1), (12, 1), (4, 1)]
    assert pyknot.alexander(TREFOIL) == [(8, 1), (4, -1), (0, 1)]
    assert pyknot.writhe(TREFOIL) == 3
    assert pyknot.determinant(TREFOIL) == 3
    assert pyknot.tree_count(TREFOIL) == 3
    assert pyknot.state_count(TREFOIL) == 3
    assert pyknot.fox_colorings(TREFOIL, 3) == 9


def test_rendering():
    assert pyknot.render(TREFOIL, "jones") == "t + t^3 - t^4"
    assert pyknot.render(TREFOIL, "bracket") == "-A^5 - A^-3 + A^-7"
    assert pyknot.render("unknot unknot", "jones") == "-t^-1/2 - t^1/2"


def test_figure_eight_is_amphichiral():
    assert pyknot.determinant(FIGURE_EIGHT) == 5
    jones = dict(pyknot.jones(FIGURE_EIGHT))
    assert jones == {-e: c for e, c in jones.items()}


def test_khovanov_tables():
    assert pyknot.khovanov("unknot") == {(0, -1): 1, (0, 1): 1}
    assert pyknot.khovanov(TREFOIL) == {(0, 1): 1, (0, 3): 1, (2, 5): 1, (3, 9): 1}
    z2 = pyknot.khovanov(TREFOIL, "Z2")
    assert z2[(2, 7)] == 1 and z2[(3, 7)] == 1
    with pytest.raises(ValueError):
        pyknot.khovanov(TREFOIL, "Z3")


def test_tangles():
    alpha, beta = pyknot.tangle_bracket("X[1,2,3,4] NE=1 SE=2 SW=3 NW=4")
    assert alpha == [(4, 1)] and beta == [(-4, 1)]
    assert pyknot.conservation("HOLE[1,2,3,4] NW=1 NE=2 SW=3 SE=4") == (True, True)
    assert pyknot.conservation("HOLE[10,11,4,1] X[1,2,3,4] NW=10 NE=11 SW=3 SE=2") == (True, True)


def test_errors():
    with pytest.raises(pyknot.KnotError, match="^SyntaxError"):
        pyknot.jones("X[1,2,3]")
    with pytest.raises(pyknot.KnotError, match="^InvalidPattern"):
        pyknot.conservation("NW=1 NE=2 SW=3 SE=4 X[1,2,3,4]")


def test_command_line():
    code, out, err = pyknot.run(["frobnicate"])
    assert code == 2
    code, out, err = pyknot.run(["det", "missing.pd"])
    assert (code, out) == (2, "")
