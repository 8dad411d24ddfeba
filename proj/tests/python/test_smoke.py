import cmath
import math

import pytest

import ordcx


def test_radius_of_mixed_family():
    rep = ordcx.radius("geom 2\ninvfact\n")
    assert rep["L"] == [2.0, 0.0]
    assert rep["rho"] == [0.5, math.inf]
    assert rep["identities"]


def test_decompose_splits_infinite_coordinates():
    parts = ordcx.decompose("[2, inf, 0]")
    assert parts["finite"] == [2.0, 0.0, 0.0]
    assert parts["infinite"] == [0.0, math.inf, 0.0]


def test_derivative_and_check():
    assert ordcx.derivative("z^2") == "2*z"
    rep = ordcx.diff_check("inv(z)", [2, 2j])
    assert rep["passed"]
    for d, c in zip(rep["derivative"], [2, 2j]):
        assert abs(d + 1 / c**2) < 1e-12


def test_evaluate_against_python():
    z = [0.3 + 0.1j, -1.5]
    got = ordcx.evaluate("z^3 + inv(z)", z)
    for g, w in zip(got, z):
        assert abs(g - (w**3 + 1 / w)) < 1e-12


def test_series_matches_closed_forms():
    rep = ordcx.series("geom 1\ninvfact\n", [0, 0], [0.5, 1j])
    assert rep["membership"] == "IN"
    assert abs(rep["value"][0] - 2) < 1e-9
    assert abs(rep["value"][1] - cmath.exp(1j)) < 1e-9
    assert ordcx.series("geom 1\n", [0], [1])["membership"] == "BOUNDARY"


def test_series_check_inside_disk():
    rep = ordcx.series_check("geom 1\n", [0], [0.5])
    assert rep["passed"]
    assert abs(rep["derivative"][0] - 4) < 1e-9
    with pytest.raises(ordcx.OutsideOpenDisk):
        ordcx.series_check("geom 1\n", [0], [1])


def test_errors_surface_as_python_exceptions():
    with pytest.raises(ordcx.ParseError):
        ordcx.derivative("z + $")
    with pytest.raises(ordcx.OutsideDomain):
        ordcx.diff_check("inv(z)", [1, 0])


def test_counterexamples_reproduce():
    names = [name for name, ok in ordcx.counterexamples() if ok]
    assert names == ["shift", "swap", "fkl-net", "linf-sigma", "disk-open"]


def test_cli_entry_point():
    code, out, err = ordcx.run(["radius", "/nonexistent/family.txt"])
    assert code == 2
    code, out, _ = ordcx.run(["decompose", "[1, inf]"])
    assert code == 0 and out.startswith("u_F=[1,0] u_inf=[0,inf]")
