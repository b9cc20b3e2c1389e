import math

import pytest

import turanlab as tl


def test_ratio_of_x_minus_one():
    p = tl.Polynomial(1, [1])
    r = tl.turan_ratio(p)
    assert r.value == pytest.approx(0.5, abs=1e-15)
    assert r.method == "critical-points"


def test_sup_norm_and_polynomial():
    p = tl.Polynomial(1, [1, -1])
    assert p.degree == 2
    assert p(0) == -1
    v = tl.sup_norm(p)
    assert v.value == pytest.approx(1.0)
    assert abs(v.argmax) < 1e-10
    assert tl.total_variation(tl.Polynomial(1, [0, 1, -1])).value == pytest.approx(8 / (3 * math.sqrt(3)))


def test_json_round_trip():
    p = tl.sample(tl.ClassSpec(6, 2, True), 5)
    q = tl.Polynomial.from_json(p.to_json())
    assert q.zeros == p.zeros
    assert tl.is_member(q, tl.ClassSpec(6, 2, True))["member"]


def test_bounds_and_levelsets():
    assert tl.cor23_lower(10, 2) == 0.5
    assert tl.thm21_bracket(4, 0, c1=0.0279)["lower"] == pytest.approx(0.0558)
    assert tl.lemma34_bracket(13, 1)["lower"] == pytest.approx(1.0)
    rep = tl.large_logderiv_measure(tl.Polynomial(1, [0]), 4.0)
    assert rep["measure"] == pytest.approx(0.5)
    assert rep["satisfied"]
    v = tl.evaluate_verdict(tl.Polynomial(1, [1]), tl.ClassSpec(1, 1, True))
    assert v["all_pass"]


def test_search_and_constructions():
    r = tl.minimize_ratio(tl.ClassSpec(1, 0, True), budget=2000, restarts=4, seed=7)
    assert r["ratio"] == pytest.approx(0.5, abs=1e-6)
    c = tl.thm24_construct(2, 1, budget=300, restarts=1)
    assert c["ratio"]["value"] == pytest.approx(8 / (3 * math.sqrt(3)))
    rm = tl.remark_family(0.3, 5)
    assert rm["m"] == 4
    assert rm["ratio"]["value"] <= rm["predicted_bound"]


def test_errors_are_exceptions():
    with pytest.raises(tl.OutOfRegime):
        tl.thm22_lower(100, 1)
    with pytest.raises(tl.PreconditionViolation):
        tl.evaluate_verdict(tl.Polynomial(1, [2]), tl.ClassSpec(1, 0))
    with pytest.raises(tl.Error):
        tl.Polynomial(0, [1])
