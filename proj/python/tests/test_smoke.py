import json
from fractions import Fraction

import pytest

import orthoconn


def test_scalars():
    assert orthoconn.pochhammer(3, 4) == 360
    assert orthoconn.pochhammer("-2", 3) == 0
    assert orthoconn.pochhammer(Fraction(1, 2), 3) == Fraction(15, 8)
    assert orthoconn.binomial(4, 2) == 6
    with pytest.raises(orthoconn.InvalidInput):
        orthoconn.binomial(3, 5)


def test_series():
    assert orthoconn.evaluate_terminating(["-1", "-1/2"], ["1/2", 1], "1/4") == Fraction(5, 4)
    assert orthoconn.evaluate_terminating([-1, "-1/2"], [-1, "-1/2"], "-1/4") == Fraction(3, 4)
    with pytest.raises(orthoconn.NonTerminating):
        orthoconn.evaluate_terminating(["1/2"], [1], 1)


def test_polynomials():
    assert orthoconn.hermite(3) == [0, -12, 0, 8]
    assert orthoconn.hermite_via_1f1(7) == orthoconn.hermite(7)
    assert orthoconn.laguerre(2) == [1, -2, Fraction(1, 2)]
    assert orthoconn.shifted_jacobi(1, 0, 0) == [-1, 2]
    assert orthoconn.jacobi_at_one_minus_x(1, 1, 0) == [2, Fraction(-3, 2)]
    with pytest.raises(orthoconn.DenominatorPole):
        orthoconn.shifted_jacobi(1, 0, -1)


def test_connections():
    closed = orthoconn.closed_form_connection("hermite", "laguerre", 2)
    assert closed["coefficients"] == [6, -16, 8]
    assert closed["provenance"] == "Thm3.2"
    oracle = orthoconn.connection_oracle(orthoconn.hermite(2), "laguerre")
    assert oracle["coefficients"] == closed["coefficients"]
    lh = orthoconn.closed_form_connection("laguerre", "hermite", 2)
    assert lh["coefficients"] == [Fraction(5, 4), -1, Fraction(1, 8)]
    with pytest.raises(orthoconn.UnsupportedPair):
        orthoconn.closed_form_connection("laguerre", "shifted-jacobi", 2)


def test_verification():
    assert orthoconn.verify_theorem("3.4", 5)["verdict"] == "pass"
    assert orthoconn.verify_theorem("3.3", 1, [(0, 0)])["verdict"] == "pass"
    report = orthoconn.verify_theorem("3.3", 2, [(0, 0)])
    assert report["verdict"] == "fail"
    assert report["entries"][2]["first_mismatch"] == 0
    assert orthoconn.verify_theorem("3.3c", 6)["verdict"] == "pass"
    for kind in ("bilinear", "fields-wimp", "even-odd"):
        assert orthoconn.sweep_identities(kind, seed=3, cases=20)["verdict"] == "pass"


def test_cli_roundtrip():
    code, out, err = orthoconn.run_cli(["poly", "--family", "hermite", "--n", "3"])
    assert code == 0 and err == ""
    assert json.loads(out) == ["0/1", "-12/1", "0/1", "8/1"]
    code, out, err = orthoconn.run_cli(["poly", "--family", "bessel", "--n", "3"])
    assert code == 2 and out == "" and err
