"""Instance model, JSON schema, tolerance policy, and built-in fixtures."""

import json
import math

import pytest
from hypothesis import given

from maro import (
    FIXTURE_NAMES,
    Instance,
    InstanceError,
    Tolerance,
    dump_instance,
    fixture,
    fixture_meta,
    load_instance,
    make_instance,
)

from conftest import instances

FIG2L_DOC = """
{
  "name": "FIG2L", "n": 2,
  "decisions": ["x1", "x2"], "scenarios": ["u1", "u2", "u3"],
  "recourse": {
    "x1": {"u1": [[3, 7]], "u2": [[5, 5]], "u3": [[8, 4]]},
    "x2": {"u1": [[7, 3]], "u2": [[4, 4]], "u3": [[2, 6]]}
  }
}
"""


def test_load_fig2l_document():
    inst = load_instance(FIG2L_DOC)
    assert len(inst.decisions) == 2
    assert len(inst.scenarios) == 3
    assert inst.n == 2
    assert inst == fixture("FIG2L")
    assert inst.points("x1", "u1") == ((3.0, 7.0),)


def test_load_singleton_document():
    doc = {"name": "one", "n": 2, "decisions": ["x"], "scenarios": ["u"],
           "recourse": {"x": {"u": [[0, 0]]}}}
    inst = load_instance(json.dumps(doc))
    assert inst.points("x", "u") == ((0.0, 0.0),)


def test_empty_recourse_is_rejected_with_path():
    doc = json.loads(FIG2L_DOC)
    doc["recourse"]["x1"]["u2"] = []
    with pytest.raises(InstanceError, match=r"empty recourse set at \(x1,u2\)"):
        load_instance(json.dumps(doc))


@pytest.mark.parametrize("mutate,pattern", [
    (lambda d: d["recourse"]["x2"]["u1"].append([1, 2, 3]), r"recourse\.x2\.u1\[1\].*objectives"),
    (lambda d: d["decisions"].append("x1"), "duplicate identifier"),
    (lambda d: d["recourse"]["x1"].pop("u3"), r"missing recourse set at \(x1,u3\)"),
    (lambda d: d.update(n="2"), "must be an integer"),
    (lambda d: d.update(bogus=1), "unknown fields"),
    (lambda d: d["recourse"]["x1"]["u1"][0].__setitem__(0, "a"), "must be numbers"),
    (lambda d: d["recourse"].update(x9={"u1": [[1, 1]]}), "not a declared decision"),
])
def test_schema_violations_carry_paths(mutate, pattern):
    doc = json.loads(FIG2L_DOC)
    mutate(doc)
    with pytest.raises(InstanceError, match=pattern):
        load_instance(json.dumps(doc))


def test_not_json_is_reported():
    with pytest.raises(InstanceError, match="not valid JSON"):
        load_instance("{nope")


def test_non_finite_entry_rejected():
    with pytest.raises(InstanceError, match="non-finite"):
        make_instance("bad", 2, ["x"], ["u"], {"x": {"u": [(1.0, math.inf)]}})


def test_unknown_identifier_lookup():
    inst = fixture("FIG2L")
    with pytest.raises(InstanceError, match="unknown decision"):
        inst.points("x9", "u1")
    with pytest.raises(InstanceError, match="unknown scenario"):
        inst.points("x1", "u9")


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_fixture_round_trip(name):
    inst = fixture(name)
    again = load_instance(dump_instance(inst))
    assert again == inst


@given(instances)
def test_generated_round_trip(inst):
    assert load_instance(dump_instance(inst)) == inst


def test_seventeen_digit_serialization():
    inst = make_instance("frac", 2, ["x"], ["u"], {"x": {"u": [(0.1, 2 / 3)]}})
    again = load_instance(dump_instance(inst))
    assert again.points("x", "u") == ((0.1, 2 / 3),)
    assert "0.1000000000000000" in dump_instance(inst)


def test_fixture_coordinates_match_figures():
    assert fixture("FIG2R").points("x2", "u1") == ((2.0, 2.0),)
    fig4 = fixture("FIG4")
    assert fig4.points("x1", "u1") == fig4.points("x1", "u2")
    assert fig4.points("x1", "u1") == ((1.0, 9.0), (2.0, 8.0), (3.0, 7.0), (4.0, 6.0))
    assert fixture("FIG5").points("x3", "u2") == ((8.0, 3.0), (9.0, 2.0))
    assert fixture("FIG5").points("x1", "u1") == ((0.0, 10.0), (1.0, 9.0))


def test_sampled_flags():
    for name in FIXTURE_NAMES:
        assert fixture(name).sampled == fixture_meta(name)["sampled"]
    assert fixture("FIG4").sampled is False
    assert fixture("FIG3S").sampled is True
    # sampled flag survives serialization
    f3 = fixture("FIG3S")
    assert load_instance(dump_instance(f3)).sampled is True


def test_fig3s_sampling_density():
    f3 = fixture("FIG3S")
    assert len(f3.points("x1", "u1")) >= 50
    assert len(f3.points("x1", "u2")) >= 50
    assert f3.decisions == ("x1",)


def test_unknown_fixture():
    with pytest.raises(InstanceError, match="unknown fixture"):
        fixture("FIG9")
    with pytest.raises(InstanceError, match="unknown fixture"):
        fixture_meta("FIG9")


def test_fig6_meta_has_frozen_witnesses():
    for name in ("FIG6L", "FIG6R"):
        sep = fixture_meta(name)["separation"]
        assert set(sep) >= {"lambda", "eps", "j", "x", "eps_efficient", "ws_efficient"}
    assert fixture_meta("FIG6L")["separation"]["eps_efficient"] is True
    assert fixture_meta("FIG6R")["separation"]["ws_efficient"] is True


def test_tolerance_policy():
    tol = Tolerance(1e-6)
    assert tol.leq(1.0, 1.0 - 5e-7)
    assert not tol.leq(1.0, 1.0 - 5e-6)
    assert tol.lt(1.0, 1.0 + 5e-6)
    assert not tol.lt(1.0, 1.0 + 5e-7)
    assert tol.eq(1.0, 1.0 + 5e-7)
    # infinities compare exactly, never within slack
    assert tol.leq(-math.inf, 5.0) and tol.leq(5.0, math.inf)
    assert tol.eq(math.inf, math.inf) and not tol.lt(math.inf, math.inf)
    assert not tol.eq(math.inf, 1e300)
    with pytest.raises(ValueError):
        Tolerance(-1e-9)
    with pytest.raises(ValueError):
        Tolerance(math.inf)


def test_instance_requires_nonempty_axes():
    with pytest.raises(InstanceError, match="decisions"):
        Instance("z", 2, (), ("u",), {})
    with pytest.raises(InstanceError, match="scenarios"):
        Instance("z", 2, ("x",), (), {})
