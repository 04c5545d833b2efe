import json
from fractions import Fraction

import pytest

import padisc


def test_valuation_and_digits():
    assert padisc.valuation(54, 3) == 3
    assert padisc.abs_p(54, 3) == Fraction(1, 27)
    assert padisc.digits(10, 3, 4) == [1, 0, 1, 0]
    assert padisc.monna([1, 0, 1], 3) == Fraction(10, 27)


def test_big_integers_round_trip():
    big = 3**200 + 1
    assert padisc.evaluate("x^2", big) == big * big
    assert padisc.valuation(big - 1, 3) == 200


def test_classify():
    verdict = padisc.classify("x^5", 3)
    assert verdict["brute_force"]["low_discrepancy"] is False
    assert verdict["associated"]["low_discrepancy"] is True
    assert verdict["brute_force"]["derivative_root"] == 0
    assert padisc.associated("x^5", 3) == ("x", "2")


def test_discrepancy():
    values = padisc.sequence("x^3+x", 40)
    result = padisc.padic_discrepancy(values, 3)
    assert result["value"] == Fraction(1, 40)
    assert padisc.padic_discrepancy([3, 6, 9], 3)["value"] == Fraction(2, 3)
    assert padisc.real_extreme_discrepancy([Fraction(1, 3), Fraction(2, 3), Fraction(1, 9)]) == Fraction(4, 9)
    check = padisc.meijer_check(Fraction(1, 3), Fraction(4, 9), 3)
    assert check["holds"] and check["upper_bound"] == pytest.approx(2.0)


def test_pair_correlation():
    values = padisc.sequence("x", 6561)
    assert padisc.f_statistic(values, 3, Fraction(1, 2), 1) == Fraction(80, 81)
    assert padisc.threshold_level(Fraction(1, 2), 27, 1, 3) == 4


def test_tables_and_search():
    labels = {e["label"] for e in padisc.dickson_entries()}
    assert "x^6 + 2x" in labels or any(label.startswith("x^6") for label in labels)
    found = padisc.exhaustive_search(7, 4)
    match = padisc.match_against_table(found, 7)
    assert match["clean"]
    assert padisc.exhaustive_search(7, 4, workers=3) == found


def test_errors_are_value_errors():
    with pytest.raises(padisc.DomainError):
        padisc.padic_discrepancy([], 3)
    with pytest.raises(ValueError):
        padisc.render("x^")
    with pytest.raises(padisc.ParseError):
        padisc.render("x + y")


def test_cli_in_process():
    code, out, err = padisc.run_cli(["classify", "--p", "3", "x^3+x"])
    assert code == 0 and err == ""
    assert json.loads(out)["low_discrepancy"] is True
    code, _, err = padisc.run_cli(["classify", "--p", "4", "x"])
    assert code == 1 and err
