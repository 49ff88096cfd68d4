import json
from fractions import Fraction

import pytest

import gkmod


def test_root_system():
    b2 = gkmod.RootSystem("B2")
    assert b2.rank == 2
    assert len(b2.positive_roots) == 4
    assert b2.rho_tilde == [Fraction(3, 2), Fraction(2)]
    assert len(b2.weyl_group()) == 8
    assert gkmod.RootSystem("A2").weyl_dim([1, 1]) == 8


def test_sl2_thresholds():
    a2 = gkmod.sl2_pair("A2", [2, 2])
    b2 = gkmod.sl2_pair("B2", [2, 2])
    assert gkmod.sl2_threshold(a2) == 4
    assert gkmod.sl2_threshold(b2) == 7
    assert [gkmod.is_generic(a2, [m])["holds"] for m in range(6)] == [False] * 3 + [True] * 3
    assert a2.t_form == [[Fraction(1, 8)]]


def test_witness_for_non_generic():
    a2 = gkmod.sl2_pair("A2", [2, 2])
    rep = gkmod.is_generic(a2, [2])
    assert not rep["condition2"]
    assert rep["failing_subset"] == [([2], 2), ([4], 1)]
    assert rep["failing_value"] == 0


def test_parabolic():
    a2 = gkmod.sl2_pair("A2", [2, 2])
    par = gkmod.compatible_parabolic(a2, [5])
    assert par["rho_n"] == [4]
    assert par["rho_n_perp"] == [3]
    assert (par["s"], par["r"]) == (1, 2)


def test_partitions_and_kostant():
    a2 = gkmod.sl2_pair("A2", [2, 2])
    assert gkmod.partition_count(a2, [[2], [4]], [4], [1]) == 2
    assert gkmod.partition_count(a2, [([2], 2)], [4], [1]) == 3
    assert gkmod.kostant_weights(a2, [5]) == [(0, [5]), (1, [-7])]


def test_fundseries_table():
    a2 = gkmod.sl2_pair("A2", [2, 2])
    res = gkmod.fundseries(a2, omega=[-3], cutoff="169/8")
    assert [(d[0], v) for d, v, _ in res["entries"]] == [(3, 1), (5, 1), (7, 2), (9, 2), (11, 3)]
    assert res["mu"] == [3]
    assert res["interpretation"] == "multiplicity"
    assert res["minimal_ktype_ok"]


def test_errors():
    with pytest.raises(gkmod.ValidationError):
        gkmod.sl2_pair("A2", [3, 0])
    with pytest.raises(gkmod.ParseError):
        gkmod.RootSystem("A2xx")
    with pytest.raises(gkmod.ParseError):
        gkmod.is_generic(gkmod.sl2_pair("A2", [2, 2]), [1.5])
    with pytest.raises(gkmod.CapExceeded):
        gkmod.RootSystem("B3").weyl_group(max_order=5)
    assert issubclass(gkmod.ValidationError, gkmod.Error)


def test_run_job_is_deterministic():
    cfg = "lie_type: B2\nk: sl2\nlabels: [2, 2]\nomega: -6\n"
    first = gkmod.run_job(cfg, "verify")
    second = gkmod.run_job(cfg, "verify")
    assert first == second
    code, human, machine = first
    assert code == 0
    doc = json.loads(machine)
    assert doc["verification"]["passed"] is True
    assert doc["table"]["mu"] == ["6"]
    assert "passed: true" in human
