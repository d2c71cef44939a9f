from fractions import Fraction

import pytest

from qbps.lattice import rep_weights
from qbps.quiver import DimensionVector, Quiver, a2_quiver, double, loop_quiver
from qbps.sod import ordered_partitions
from qbps.structure import (
    StructureError,
    dim_P,
    gorenstein_flags,
    serre_report,
    support_gate,
)

F = Fraction


def ddim(q, n):
    return DimensionVector.make(q, {"0": n})


def test_support_gate_coprime():
    q = loop_quiver(2)
    gate = support_gate(ddim(q, 2), 1, q)
    assert gate.coprime
    assert gate.witnesses == ()


def test_support_gate_zero_weight():
    q = loop_quiver(2)
    gate = support_gate(ddim(q, 2), 0, q)
    assert not gate.coprime
    assert (1, F(0)) in gate.witnesses


def test_support_gate_six_four():
    q = loop_quiver(2)
    gate = support_gate(ddim(q, 6), 4, q)
    assert not gate.coprime
    assert (3, F(2)) in gate.witnesses


def test_support_gate_parity_reported_separately():
    gate = support_gate(DimensionVector.make(a2_quiver(), {"0": 1, "1": 1}), 1,
                        a2_quiver())
    assert gate.coprime          # gcd(1, 2) = 1
    assert not gate.assum_parity  # alpha_01 = 1 is odd


def test_support_gate_requires_positive_total():
    q = loop_quiver(2)
    with pytest.raises(StructureError):
        support_gate(ddim(q, 0), 1)


@pytest.mark.parametrize("g,d,expected", [(2, 2, 10), (3, 2, 18), (2, 1, 4)])
def test_dim_p_values(g, d, expected):
    q = loop_quiver(g)
    assert dim_P(q, ddim(q, d)) == expected


def test_dim_p_not_asserted_below_two():
    q = loop_quiver(1)  # alpha = 0
    assert dim_P(q, ddim(q, 2)) is None


def test_dim_p_first_principles():
    # dim P = 2 + dim Rbar - 2 dim g, counted from the weight multisets
    for g in (2, 3):
        for n in (1, 2, 3):
            q = loop_quiver(g)
            d = ddim(q, n)
            rbar = rep_weights(q, d, "Rbar").total_count()
            gdim = rep_weights(q, d, "g").total_count()
            assert dim_P(q, d) == 2 + rbar - 2 * gdim


def test_gorenstein_truth_table():
    g3 = gorenstein_flags(loop_quiver(3), ddim(loop_quiver(3), 2))
    assert (g3.xy_gorenstein, g3.p_classical_normal, g3.p_gorenstein) == (True, True, True)
    # g = 2, d = 2: Gorenstein only through the special case
    g22 = gorenstein_flags(loop_quiver(2), ddim(loop_quiver(2), 2))
    assert g22.p_gorenstein is True
    assert g22.alpha_min == 2
    # g = 2, d = 3: alpha = 2 and dbar >= 3
    g23 = gorenstein_flags(loop_quiver(2), ddim(loop_quiver(2), 3))
    assert g23.p_gorenstein is True
    # g = 1: nothing asserted
    g1 = gorenstein_flags(loop_quiver(1), ddim(loop_quiver(1), 2))
    assert g1.xy_gorenstein is None
    assert g1.p_classical_normal is None
    assert g1.p_gorenstein is None
    # two-vertex quiver with alpha_min = 2, dbar = 2: no criterion applies
    q2 = Quiver.make(["0", "1"], [("0", "0"), ("0", "0"),
                                  ("1", "1"), ("1", "1"),
                                  ("0", "1"), ("1", "0")])
    r = gorenstein_flags(q2, DimensionVector.make(q2, {"0": 1, "1": 1}))
    assert r.alpha_min == 2
    assert r.p_classical_normal is True
    assert r.p_gorenstein is None


def test_flags_monotone_in_alpha():
    order = {None: 0, True: 1}
    prev = None
    for g in (1, 2, 3, 4):
        r = gorenstein_flags(loop_quiver(g), ddim(loop_quiver(g), 3))
        flags = (order[r.xy_gorenstein], order[r.p_classical_normal], order[r.p_gorenstein])
        if prev is not None:
            assert all(a >= b for a, b in zip(flags, prev))
        prev = flags


def test_serre_report_conjunctions():
    q3 = loop_quiver(3)
    r = serre_report(q3, ddim(q3, 2), 1)
    assert r.serre_trivial_applicable is True
    assert r.indecomposable_applicable is True
    assert r.regular_proper_applicable is True

    q2 = loop_quiver(2)
    r = serre_report(q2, ddim(q2, 2), 1)
    assert r.serre_trivial_applicable is True  # special-case Gorenstein
    r = serre_report(q2, ddim(q2, 2), 0)
    assert r.serre_trivial_applicable is False
    assert r.indecomposable_applicable is False
    assert r.regular_proper_applicable is False

    q1 = loop_quiver(1)
    r = serre_report(q1, ddim(q1, 3), 1)
    assert r.serre_trivial_applicable is False  # alpha too small


def test_codimension_bound():
    # unstable-stratum codimension for every 2-part split:
    #   sum_{a,b} d1^a d2^b alpha_{a,b} + sum_a d1^a d2^a >= dbar1 dbar2 alpha_min
    # and at least 2 once alpha_min >= 2 (the normality threshold)
    import random
    from qbps.quiver import alpha, alpha_min

    rng = random.Random(5)
    quivers = [loop_quiver(2), loop_quiver(3), double(a2_quiver()),
               Quiver.make(["0", "1"], [("0", "0"), ("1", "1"),
                                        ("0", "1"), ("1", "0"),
                                        ("0", "1"), ("1", "0")])]
    for q in quivers:
        am = alpha_min(q)
        for _ in range(40):
            d1 = {a: rng.randint(0, 3) for a in q.vertices}
            d2 = {a: rng.randint(0, 3) for a in q.vertices}
            t1 = sum(d1.values())
            t2 = sum(d2.values())
            if t1 == 0 or t2 == 0:
                continue
            lhs = sum(d1[a] * d2[b] * alpha(q, a, b)
                      for a in q.vertices for b in q.vertices)
            lhs += sum(d1[a] * d2[a] for a in q.vertices)
            assert lhs >= t1 * t2 * am
            if am >= 2:
                assert lhs >= 2


def test_report_json():
    q = loop_quiver(2)
    data = serre_report(q, ddim(q, 2), 1).to_json_dict()
    assert data["gate"] is True
    assert data["dim_P"] == 10
    assert data["flags"]["P_gorenstein"] is True
    data0 = gorenstein_flags(loop_quiver(1), ddim(loop_quiver(1), 2)).to_json_dict()
    assert data0["dim_P"] == "not_asserted"
    assert data0["flags"]["P_gorenstein"] == "unknown"
