"""Smoke tests for the python module: exactness of the exposed values and a
round trip through the report pipeline."""

import json

import froblim


def test_spectrum_golden():
    sp = froblim.spectrum([2, 2])
    assert sp["mu"] == 5
    assert sp["n"] == 2
    assert sp["s"] == ["0", "0", "0", "5/2", "5/2"]
    assert sp["alpha"] == ["0", "1", "2", "1/2", "3/2"]
    assert sp["runs"] == [("0", 3), ("5/2", 2)]


def test_spectrum_all_ones():
    sp = froblim.spectrum([1, 1, 1])
    assert sp["mu"] == 4
    assert sp["alpha"] == ["0", "1", "2", "3"]


def test_jordan_data():
    assert froblim.jordan_data([2, 2]) == [("0", [3]), ("1/2", [2])]
    assert froblim.jordan_data([1, 1, 1, 1]) == [("0", [5])]


def test_preprimitive_dichotomy():
    assert froblim.preprimitive([1, 1]) == (True, True, True)
    assert froblim.preprimitive([2, 2]) == (True, False, False)


def test_limit_manifold():
    m = froblim.limit_manifold(2)
    assert m["mu"] == 3
    assert m["wdvv"] is True
    assert m["homogeneity_degree"] == "1"
    assert m["homogeneity_remainder"] == "3*x1*x2"
    assert "1/2*x1^2*x3" in m["potential"]
    assert "1/2*x1*x2^2" in m["potential"]


def test_log_report():
    rep = froblim.log_report([2, 2])
    assert rep["metric_nondegenerate"] is False
    assert rep["metric_rank_at_0"] == 3
    flat, ic, gc, ec = rep["sections"]["omega0_phi"]
    assert (flat, ic, gc, ec) == (True, True, True, True)
    assert rep["sections"]["omega0_L0"][1] is False  # fails IC


def test_connection_matrices():
    m = froblim.connection_matrices([2, 2], "psi")
    assert "5*x" in m["A0"]  # the x entry of the psi polar matrix
    assert "G" not in m      # no pairing in the psi frame
    g = froblim.connection_matrices([2, 2], "omega")
    assert "x^-2" in g["G"]
    try:
        froblim.connection_matrices([2, 2], "bogus")
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError for an unknown frame")


def test_check_and_report_roundtrip():
    assert froblim.check([2, 2]) is True
    doc = json.loads(froblim.run("check", [3]))
    assert doc["pass"] is True
    assert doc["command"] == "check"
    assert doc["weights"] == [3]


def test_invalid_weights_raise():
    try:
        froblim.spectrum([0, 2])
    except ValueError:
        return
    raise AssertionError("expected ValueError for nonpositive weights")
