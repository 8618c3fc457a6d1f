"""PD parsing, orientation/writhe analysis, smoothing states, cables."""

import pytest
from hypothesis import given, strategies as st

from skeinkit.diagram import (
    PDCode, adequacy, all_a, all_b, analyze, apply_state, cable,
    catalog_lookup, catalog_names, format_pd, mirror, parse_pd, plan_sweep,
    state_graph, writhe,
)
from skeinkit.errors import BudgetError, PDError

TREFOIL = "X[6,4,1,3] X[4,2,5,1] X[2,6,3,5]"


def test_parse_format_round_trip():
    pd = parse_pd(TREFOIL)
    assert len(pd) == 3
    assert parse_pd(format_pd(pd)) == pd


def test_parse_accepts_commas_between_tokens():
    a = parse_pd("X[6,4,1,3], X[4, 2, 5, 1] ,\nX[2,6,3,5]  # trefoil")
    assert a == parse_pd(TREFOIL)


def test_parse_unknot_token():
    pd = parse_pd("O")
    assert len(pd.crossings) == 0 and pd.extra_circles == 1


def test_parse_rejects_garbage():
    for bad in ("X[1,2,3]", "X[1,2,3,4,5]", "Y[1,2,3,4]",
                "X[1,2,3,x]", "x[6,4,1,3]"):
        with pytest.raises(PDError):
            parse_pd(bad)


def test_extra_circles_must_be_nonnegative():
    with pytest.raises(PDError):
        PDCode((), extra_circles=-1)


def test_analyze_rejects_unbalanced_arcs():
    # arc 1 appears four times, arc 9 never closes
    with pytest.raises(PDError):
        analyze(parse_pd("X[1,1,1,1]"))
    with pytest.raises(PDError):
        analyze(parse_pd("X[9,4,1,3] X[4,2,5,1] X[2,6,3,5]"))


def test_trefoil_structure():
    info = analyze(parse_pd(TREFOIL))
    assert info.writhe == 3
    assert info.signs == (1, 1, 1)
    assert len(info.components) == 1
    assert info.total_components == 1


def test_hopf_link_components():
    info = analyze(parse_pd("X[4,1,3,2] X[2,3,1,4]"))
    assert len(info.components) == 2


def test_writhe_catalog_values():
    expected = {"unknot": 0, "3_1": 3, "4_1": 0, "5_2": -5,
                "6_1": -2, "6_2": -2, "6_3": 0, "3_1_badequate": -4}
    for name, w in expected.items():
        assert writhe(catalog_lookup(name)) == w, name


def test_mirror_negates_writhe():
    for name in catalog_names():
        pd = catalog_lookup(name)
        assert writhe(mirror(pd)) == -writhe(pd)
        assert mirror(mirror(pd)) == pd


def test_apply_state_circle_counts():
    # positive trefoil: the all-A state traces 2 circles, all-B traces 3
    pd = parse_pd(TREFOIL)
    assert apply_state(pd, all_a(pd)).count == 2
    assert apply_state(pd, all_b(pd)).count == 3
    # one flip away from all-A merges or splits by exactly one circle
    for i in range(3):
        s = list(all_a(pd))
        s[i] = "B"
        assert abs(apply_state(pd, s).count - 2) == 1


def test_apply_state_validates_state_string():
    pd = parse_pd(TREFOIL)
    with pytest.raises(PDError):
        apply_state(pd, "AA")
    with pytest.raises(PDError):
        apply_state(pd, "AXB")


def test_alternating_circle_count_identity():
    # reduced alternating diagrams: all-A plus all-B circles = n + 2
    for name in ("3_1", "4_1", "5_2", "6_1", "6_2", "6_3"):
        pd = catalog_lookup(name)
        rep = adequacy(pd)
        assert rep.a_circles + rep.b_circles == len(pd) + 2, name


def test_adequacy_flags():
    for name in ("3_1", "4_1", "5_2", "6_1", "6_2", "6_3"):
        rep = adequacy(catalog_lookup(name))
        assert rep.a_adequate and rep.b_adequate, name
    rep = adequacy(catalog_lookup("3_1_badequate"))
    assert (rep.a_adequate, rep.b_adequate) == (False, True)


def test_state_graph_loops_pin_inadequacy():
    pd = catalog_lookup("3_1_badequate")
    assert state_graph(pd, all_a(pd)).has_loop
    assert not state_graph(pd, all_b(pd)).has_loop


def test_cable_sizes():
    pd = parse_pd(TREFOIL)
    for r in (1, 2, 3):
        c = cable(pd, r)
        assert len(c.crossings) == r * r * len(pd.crossings)
        analyze(c)  # stays a valid oriented diagram
    assert cable(pd, 1) == pd


def test_cable_of_unknot():
    pd = catalog_lookup("unknot")
    assert cable(pd, 3).extra_circles == 3


def test_plan_sweep_width_and_budget():
    pd = catalog_lookup("6_2")
    plan = plan_sweep(pd)
    assert plan.max_width <= 6
    assert sorted(plan.order) == list(range(6))
    with pytest.raises(BudgetError):
        plan_sweep(pd, max_width=plan.max_width - 1)


def test_plan_sweep_respects_explicit_order():
    pd = parse_pd(TREFOIL)
    plan = plan_sweep(pd, order=[2, 0, 1])
    assert plan.order == (2, 0, 1)


@given(st.integers(0, 2 ** 6 - 1))
def test_state_circle_bound(mask):
    # every smoothing of a 6-crossing diagram has between 1 and n+1 circles
    pd = catalog_lookup("6_2")
    state = ["AB"[(mask >> i) & 1] for i in range(6)]
    count = apply_state(pd, state).count
    assert 1 <= count <= len(pd) + 1
