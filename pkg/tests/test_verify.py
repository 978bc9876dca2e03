import pytest

from charposet import families as fam
from charposet import groups as gr
from charposet.errors import InvalidExponent, NotPGroup
from charposet.verify import (
    compute_I,
    sweep,
    theorem_report,
    valid_exponents,
)


def test_compute_I_cyclic(c16):
    for e in range(4):
        I = compute_I(c16, 2, e)
        assert len(I) == 2 ** (e + 1)


def test_compute_I_q8(q8):
    I = compute_I(q8, 2, 1)
    assert I.elems == gr.center(gr.whole_group(q8)).elems


def test_compute_I_elem_abelian(e222):
    assert len(compute_I(e222, 2, 1)) == 1


def test_compute_I_whole_group(q8):
    assert len(compute_I(q8, 2, 2)) == 8  # only subgroup of order 8 is G


def test_compute_I_invalid_exponent(q8):
    with pytest.raises(InvalidExponent):
        compute_I(q8, 2, 3)


def test_valid_exponents(q8, c16):
    assert valid_exponents(q8) == [0, 1, 2]
    assert valid_exponents(c16) == [0, 1, 2, 3]


def test_theorem_report_d8(d8):
    r = theorem_report(d8, None, 1)
    assert (r.I_order, r.IZ_order, r.irr_I, r.components) == (2, 2, 2, 2)
    assert r.bounds_hold and r.connected_iff_I_trivial and r.ok
    assert r.group == "D8" and r.p == 2 and r.e == 1
    assert set(r.timings) >= {"structure", "components"}


def test_theorem_report_connected(e222):
    r = theorem_report(e222, None, 1)
    assert r.I_order == 1 and r.components == 1


def test_theorem_report_c16_bounds_coincide(c16):
    r = theorem_report(c16, None, 2)
    assert r.IZ_order == r.irr_I == r.components == 8


def test_theorem_report_rejects_non_p_group():
    S3 = gr.from_permutations([(1, 0, 2), (1, 2, 0)], name="S3")
    with pytest.raises(NotPGroup):
        theorem_report(S3, None, 0)


def test_report_serialization_excludes_timings(d8):
    r = theorem_report(d8, None, 1)
    d = r.to_dict()
    assert "timings" not in d
    assert d["ok"] is True


def test_sweep_empty():
    res = sweep([])
    assert res.reports == [] and res.errors == []


def test_sweep_small():
    res = sweep(["Quaternion(8)", "Dihedral(8)", "Cyclic(2,2)"])
    assert len(res.reports) == 3 + 3 + 2
    assert not res.errors
    assert not res.violations
    keys = [(r.order, r.group, r.e) for r in res.reports]
    assert keys == sorted(keys)


def test_sweep_continues_past_bad_spec():
    res = sweep(["Cyclic(2,1)", "Bogus(1)", "Dihedral(8)"])
    assert len(res.errors) == 1
    assert res.errors[0]["kind"] == "UnknownFamily"
    assert len(res.reports) == 1 + 3


def test_sweep_explicit_levels():
    res = sweep(["Quaternion(8)"], es=[1])
    assert len(res.reports) == 1
    assert res.reports[0].e == 1
