import pathlib

import pytest

import lieinv

DATA = pathlib.Path(__file__).resolve().parents[2] / "data"


def test_catalog():
    names = lieinv.catalog_names()
    assert "g2" in names and "g3_7" in names
    assert len(names) == 12


def test_validate():
    assert lieinv.validate(DATA / "algebras" / "so3.json")["valid"]
    bad = lieinv.validate(DATA / "algebras" / "bad.json")
    assert not bad["valid"]
    assert bad["violation"] == [1, 2, 3, 3]


def test_g2_invariants():
    r = lieinv.invariants("g2")
    assert r["verified"]
    assert [i["label"] for i in r["invariants"]] == ["v_1", "v_12"]
    assert r["template"].endswith("= 0")


def test_parameters_and_type1():
    r = lieinv.invariants("g3_4", params={"h": "-1/3"})
    assert r["params"] == {"h": "-1/3"} and r["verified"]
    t1 = lieinv.invariants("g2", pipeline="free", m=1)
    assert t1["m"] == 1 and t1["verified"]


def test_reproduce_table():
    r = lieinv.reproduce(["2d-transitive"], seed=7)
    assert r["pass"] and len(r["rows"]) == 2
    assert r == lieinv.reproduce(["2d-transitive"], seed=7)


def test_covariant_round_trip():
    t = lieinv.to_covariant("coords: x; dep: u\nlhs: u_xx + b(u_x)\n")
    assert t["kappa"] == 3 and t["rescale_invariant"]
    back = lieinv.from_covariant("coords: x,u; dep: w\nlhs: " + t["lhs"] + "\n")
    assert lieinv.is_zero(back["lhs"] + " - (u_xx + b(u_x))", ["x"])


def test_errors_carry_module():
    with pytest.raises(lieinv.LieinvError, match=r"\[liealg\]"):
        lieinv.invariants("g9")
    with pytest.raises(lieinv.LieinvError, match=r"\[covariant\]"):
        lieinv.from_covariant("coords: x,u; dep: w\nlhs: w_xx\n")


def test_canonical():
    assert lieinv.canonical("exp(u)*exp(u)*u_x", ["x"]) == "u_x*exp(2*u)"
