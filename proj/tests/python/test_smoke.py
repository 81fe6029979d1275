"""End-to-end smoke tests for the Python bindings."""

import json

import commsemi as cs


def test_transformation_arithmetic():
    a = cs.Transformation([2, 1, 1])
    b = cs.Transformation.parse("[3,1,1]")
    assert str(a * b) == "[1,3,3]"
    assert a.rank == 2
    assert a.image == [1, 2]
    assert a.kernel == [[1], [2, 3]]
    assert a[1] == 2 and a[3] == 1
    assert not a.commutes(b)
    e = a.idempotent_power()
    assert e.is_idempotent
    assert cs.Transformation.identity(3).is_permutation
    assert cs.Transformation.constant(3, 2).is_constant


def test_semigroup_and_graph():
    s = cs.FiniteSemigroup.full(3)
    assert len(s) == 27
    assert s.center() == [s.index_of(cs.Transformation.identity(3))]
    g = cs.CommutingGraph.of(s)
    assert g.num_vertices == 26
    assert not g.is_connected()

    j = cs.FiniteSemigroup.ideal(4, 2)
    gj = cs.CommutingGraph.of(j)
    d = gj.diameter()
    assert not d.infinite
    assert d.value == 5
    assert gj.validate_path(d.witness)

    exported = json.loads(gj.to_json())
    assert len(exported["vertices"]) == gj.num_vertices
    assert exported["edges"]


def test_table_round_trip():
    s = cs.small_semigroup("zeroband3")
    again = cs.FiniteSemigroup.from_table_json(s.cayley_table_json())
    assert len(again) == 3
    e = again.index_of_label("e")
    f = again.index_of_label("f")
    assert again.mul(e, f) == f


def test_bands_and_lpaths():
    s0 = cs.s0_band(2)
    assert len(s0) == 11
    assert s0.is_band
    kd = cs.knit_degree(s0)
    assert kd is not None and kd[0] == 4
    holds, _ = cs.check_quasi_identity_1(s0)
    assert holds
    holds, witness = cs.check_an(s0, 5)
    assert not holds and len(witness) == 5
    naive = cs.check_an(s0, 4, "naive")
    lpath = cs.check_an(s0, 4, "lpath")
    assert naive[0] and lpath[0]


def test_witnesses_and_certificate():
    a, b = cs.tdia3_witnesses(6)
    assert cs.lower_bound_certificate(6, a, b)
    a4, b4 = cs.distance4_witnesses(5)
    assert not a4.commutes(b4)


def test_verify_report():
    report = json.loads(cs.verify("bands", max_k=2))
    assert report["version"] == cs.__version__
    assert report["checks"]
    assert all(c["status"] in ("pass", "skipped") for c in report["checks"])
