import pytest

from qbps.quiver import (
    DimensionVector,
    Quiver,
    QuiverError,
    a2_quiver,
    alpha,
    alpha_min,
    assumption_flags,
    double,
    frame,
    is_symmetric,
    jordan_quiver,
    loop_quiver,
    triple,
    very_symmetric_companion,
)


def test_symmetric_jordan(jordan):
    assert is_symmetric(jordan)


def test_symmetric_one_way_edge():
    q = Quiver.make(["0", "1"], [("0", "1")])
    assert not is_symmetric(q)


@pytest.mark.parametrize("base", [
    a2_quiver(),
    Quiver.make(["0", "1"], [("0", "1"), ("0", "1"), ("1", "0")]),
    Quiver.make(["0", "1", "2"], [("0", "1"), ("1", "2"), ("2", "0"), ("0", "0")]),
])
def test_tripled_always_symmetric(base):
    t = triple(base)
    for a in t.vertices:
        for b in t.vertices:
            assert t.edge_count(a, b) == t.edge_count(b, a)
    assert is_symmetric(t)


def test_alpha_jordan(jordan):
    assert alpha(jordan, "0", "0") == 0


@pytest.mark.parametrize("g", [1, 2, 3, 5])
def test_alpha_g_loop(g):
    q = loop_quiver(g)
    assert alpha(q, "0", "0") == 2 * g - 2
    assert alpha_min(q) == 2 * g - 2


def test_alpha_cross_counts():
    q = Quiver.make(["0", "1"], [("0", "1")] * 3 + [("1", "0")] * 3)
    assert alpha(q, "0", "1") == 6
    assert alpha(q, "0", "1") == alpha(q, "1", "0")


def test_alpha_unknown_vertex(jordan):
    with pytest.raises(QuiverError):
        alpha(jordan, "0", "9")


def test_double_jordan(jordan):
    d = double(jordan)
    assert d.loop_count("0") == 2


def test_double_no_edges():
    q = Quiver.make(["0", "1"], [])
    assert double(q).edges == ()


def test_double_a2():
    d = double(a2_quiver())
    assert d.edge_count("0", "1") == 1
    assert d.edge_count("1", "0") == 1
    assert is_symmetric(d)


def test_double_always_symmetric():
    q = Quiver.make(["0", "1", "2"], [("0", "1"), ("0", "1"), ("1", "2"), ("2", "2")])
    assert is_symmetric(double(q))


def test_triple_jordan(jordan):
    t = triple(jordan)
    assert len(t.vertices) == 1
    assert t.loop_count("0") == 3


def test_triple_a2():
    t = triple(a2_quiver())
    assert t.edge_count("0", "1") == 1
    assert t.edge_count("1", "0") == 1
    assert t.loop_count("0") == 1
    assert t.loop_count("1") == 1


@pytest.mark.parametrize("base", [
    jordan_quiver(),
    loop_quiver(3),
    double(a2_quiver()),
    Quiver.make(["0", "1"], [("0", "1"), ("0", "1"), ("1", "0"), ("1", "0")]),
])
def test_triple_loop_counts_and_parity(base):
    t = triple(base)
    for a in base.vertices:
        assert t.loop_count(a) == 2 * base.loop_count(a) + 1
        for b in base.vertices:
            if a != b:
                assert t.edge_count(a, b) == base.edge_count(a, b) + base.edge_count(b, a)
    if assumption_flags(base).assum1:
        assert assumption_flags(t).assum11


def test_frame_jordan(jordan):
    f = frame(jordan, 1)
    assert f.vertices == ("0", "∞")
    assert f.loop_count("0") == 1
    assert f.edge_count("∞", "0") == 1


def test_frame_multiplicity():
    f = frame(loop_quiver(3), 2)
    assert f.edge_count("∞", "0") == 2


def test_frame_rejects_nonpositive(jordan):
    with pytest.raises(QuiverError):
        frame(jordan, 0)


def test_reserved_framing_vertex_rejected():
    with pytest.raises(QuiverError):
        Quiver.from_json('{"vertices":["∞"],"edges":[]}')


def test_companion_jordan_is_itself(jordan):
    comp, uspec = very_symmetric_companion(jordan, 1)
    assert comp.edges == jordan.edges
    assert uspec.is_empty()


def test_companion_three_loop_is_itself(three_loop):
    comp, uspec = very_symmetric_companion(three_loop, 3)
    assert comp.loop_count("0") == 3
    assert uspec.is_empty()


def test_companion_two_vertex_recount():
    # 1 loop at each vertex, 2 edges each way; A=3 adds one loop pair per
    # vertex and one cross pair
    q = Quiver.make(["0", "1"],
                    [("0", "0"), ("1", "1"),
                     ("0", "1"), ("0", "1"), ("1", "0"), ("1", "0")])
    comp, uspec = very_symmetric_companion(q, 3)
    for a in comp.vertices:
        for b in comp.vertices:
            assert comp.edge_count(a, b) == 3
    assert sorted(uspec.edges) == [("0", "0"), ("0", "1"), ("1", "1")]


def test_companion_minimal_A():
    q = double(a2_quiver())  # no loops (parity 0), max count 1
    comp, uspec = very_symmetric_companion(q)
    assert assumption_flags(comp).very_symmetric_A == 2
    assert uspec.edges == (("0", "0"), ("1", "1"), ("0", "1"))


def test_companion_parity_errors():
    q = triple(a2_quiver())  # odd loops
    with pytest.raises(QuiverError):
        very_symmetric_companion(q, 2)
    with pytest.raises(QuiverError):
        very_symmetric_companion(q, 0)
    mixed = Quiver.make(["0", "1"], [("0", "0"), ("0", "1"), ("1", "0")])
    with pytest.raises(QuiverError):
        very_symmetric_companion(mixed)


def test_companion_needs_symmetric():
    with pytest.raises(QuiverError):
        very_symmetric_companion(a2_quiver())


def test_dimension_vector_basics(three_loop):
    d = DimensionVector.make(three_loop, {"0": 2})
    assert d.total == 2
    assert d["0"] == 2
    with pytest.raises(QuiverError):
        DimensionVector.make(three_loop, {"1": 2})
    with pytest.raises(QuiverError):
        DimensionVector(("0",), (-1,))


def test_quiver_json_roundtrip(three_loop):
    text = '{"vertices":["0","1"],"edges":[["0","1"],["1","0"]]}'
    q = Quiver.from_json(text)
    assert Quiver.from_json_dict(q.to_json_dict()) == q
    d = DimensionVector.from_json_dict(q, {"0": 2, "1": 1})
    assert d.to_json_dict() == {"0": 2, "1": 1}


def test_assumption_flag_invariants():
    with pytest.raises(QuiverError):
        # very symmetric must imply symmetric
        from qbps.quiver import AssumptionFlags
        AssumptionFlags(symmetric=False, same_parity_loops=True, assum1=True,
                        assum11=False, very_symmetric=True, very_symmetric_A=1)
