import json
import os
import pathlib

import pytest

import sympal

FIXTURES = pathlib.Path(os.environ.get("SYMPAL_FIXTURE_DIR", pathlib.Path(__file__).parents[2] / "fixtures"))


def load(name):
    return json.loads((FIXTURES / name).read_text())


def sp_formula(n, q):
    m = n // 2
    out = q ** (m * m)
    for i in range(1, m + 1):
        out *= q ** (2 * i) - 1
    return out


@pytest.mark.parametrize("n,q", [(2, 5), (2, 7), (2, 25), (4, 5), (6, 3)])
def test_sp_order_matches_formula(n, q):
    assert sympal.sp_order(n, q) == sp_formula(n, q)


def test_sp_order_rejects_odd_dimension():
    assert sympal.sp_order(3, 5) is None


@pytest.mark.parametrize("name,q", [("sp2_f5.json", 5), ("sp2_f7.json", 7), ("sp2_f25.json", 25)])
def test_enumerated_orders(name, q):
    assert sympal.group_order(load(name)) == sp_formula(2, q)


def test_classify_cases():
    assert sympal.classify(load("reducible_sp4_f5.json"))["case"] == "reducible"
    induced = sympal.classify(load("induced_sp4_f5.json"))
    assert (induced["case"], induced["h"], induced["m"]) == ("induced", 2, 2)
    huge = sympal.classify(load("sp2_f25.json"))
    assert (huge["case"], huge["subfield_degree"]) == ("huge", 2)


def test_errors_carry_code():
    with pytest.raises(sympal.SympalError) as info:
        sympal.classify(load("sp2_f3.json"))
    assert info.value.code == "CharTooSmall"
    with pytest.raises(sympal.SympalError) as info:
        sympal.group_order(load("sp4_f5.json"), cap=1000)
    assert info.value.code == "CapExceeded"


def test_np_group_fixture():
    g = sympal.np_group(2, 5, 3, 7)
    assert g["irreducibility"] == "irreducible"
    assert sympal.group_order(g) == 12
    assert sympal.is_irreducible(g) == "irreducible"
    for alpha in range(1, 7):
        assert sympal.is_irreducible(sympal.np_group(2, 5, 3, 7, alpha)) == "irreducible"
    with pytest.raises(sympal.SympalError):
        sympal.np_group(2, 5, 5, 7)


def test_find_np_primes_recomputed():
    pairs = sympal.find_np_primes(2, 50)
    assert (5, 3) in pairs
    assert (7, 5) in sympal.find_np_primes(4, 50)
    for q, p in pairs:
        assert pow(q, 2, p) == 1 and q % p != 1 and p % 2 == 1


def test_regularity():
    assert sympal.check_npower_distinct(load("profile_distinct.json"))["distinct"]
    res = sympal.check_npower_distinct(load("profile_collision.json"))
    assert not res["distinct"]
    assert (res["collision"]["first"], res["collision"]["second"]) == (0, 1)
    twisted = sympal.twist_by_cyclotomic(load("profile_distinct.json"), 2)
    assert twisted["parts"][0]["weights"] == [2, 3]


def test_sweeps():
    group = {"fixture": "C7:C3"}
    report = sympal.sweep(group, "proposition")
    assert report["counterexamples"] == 0 and report["matches"] > 0
    assert sympal.sweep(group, "restriction")["trivial"] == 0
    assert sympal.sweep({"fixture": "S3"}, "mackey")["failures"] == 0
    assert "A5" in sympal.fixture_groups()


def test_run_cli():
    code, out, _ = sympal.run_cli("regularity", "--input", FIXTURES / "profile_collision.json", "--json")
    assert code == 4
    assert json.loads(out)["distinct"] is False
    assert sympal.run_cli("classify", "--input", FIXTURES / "truncated_group.json")[0] == 1
