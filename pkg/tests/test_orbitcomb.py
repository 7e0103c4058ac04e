import numpy as np
import pytest

from orbitkit import liecore as L
from orbitkit import orbitcomb as C
from orbitkit.errors import InvalidLabel, MixedFamilies, UnsupportedFamily

import oracles


@pytest.mark.parametrize("p,q", [(1, 1), (2, 1), (2, 2), (3, 1), (3, 2), (3, 3), (4, 2)])
def test_signed_diagram_enumeration_matches_brute_force(p, q):
    got = {tuple(sorted((r for r in str(d).split(",")), key=lambda r: (-len(r), r)))
           for d in C.enumerate_signed_diagrams(p, q)}
    want = oracles.brute_signed_diagrams(p, q)
    assert got == want


@pytest.mark.parametrize("p,q", [(2, 2), (3, 2), (3, 3)])
def test_noticed_rule_matches_brute_force(p, q):
    for d in C.enumerate_signed_diagrams(p, q):
        rows = str(d).split(",")
        assert C.is_noticed_rule(d, "U") == oracles.noticed_by_rule(rows)


@pytest.mark.parametrize("n", [2, 4, 6, 8])
def test_type_c_partitions(n):
    got = {lab.parts for lab in C.enumerate_partitions(n, "C")}
    assert got == set(oracles.type_c_partitions(n))


def test_u22_table():
    classes = C.classify_orbits("u(2,2)")
    assert len(classes) == 10
    assert sum(c.noticed for c in classes) == 6
    for c in classes:
        assert c.noticed == c.noticed_oracle == c.centralizer_compact


@pytest.mark.parametrize("group", ["sp(4,C)", "sp(6,C)"])
def test_sp_complex_dimensions(group):
    for c in C.classify_orbits(group):
        assert c.dimension == 2 * oracles.complex_sp_orbit_dim(c.label.parts)


def test_sp4c_reference_discrepancy():
    classes = {c.label.parts: c for c in C.classify_orbits("sp(4,C)")}
    assert set(classes) == {(4,), (2, 2), (2, 1, 1), (1, 1, 1, 1)}
    assert {k for k, c in classes.items() if c.reference_noticed} == {(4,), (2, 2)}
    assert {k for k, c in classes.items() if c.noticed_oracle} == {(4,)}
    flagged = {k for k, c in classes.items() if c.discrepancies()}
    assert flagged == {(2, 2)}


@pytest.mark.parametrize("group,count,noticed", [
    ("sl(2,R)", 3, 2), ("sl(3,R)", 3, 1), ("gl(3,R)", 3, 1), ("su(2)", 1, 1),
    ("u(2,1)", 4, 3), ("su(2,2)", 10, 6), ("sl(4,R)", 7, 2)])
def test_small_tables(group, count, noticed):
    classes = C.classify_orbits(group)
    assert len(classes) == count
    assert sum(c.noticed_oracle for c in classes) == noticed
    assert all(not c.discrepancies() for c in classes)


@pytest.mark.parametrize("group", ["u(2,2)", "u(3,2)", "sp(6,C)", "sl(4,R)"])
def test_representative_round_trip(group):
    g = L.make_algebra(group)
    for lab in C.orbit_labels(g):
        x = C.representative(lab, g)
        assert L.is_nilpotent(x)
        if g.family in ("u", "su"):
            assert str(C.signed_diagram_of(x)) == str(lab)
        else:
            assert C.jordan_type(x).parts == lab.parts
        key, dim = C.nilpotent_invariant(x)
        assert dim == L.adjoint_orbit_dimension(x)


def test_sl2_orientations_are_distinct_orbits():
    g = L.sl(2)
    plus = C.representative(C.Partition((2,), 1), g)
    minus = C.representative(C.Partition((2,), -1), g)
    assert L.orbit_sheet(plus) == -L.orbit_sheet(minus)


def test_centralizer_tags():
    assert str(C.reductive_centralizer(C.SignedYoungDiagram.parse("+-,-+"), "U")) == "u(1,1)"
    cent = C.reductive_centralizer(C.Partition((2, 1, 1)), "C")
    assert not cent.compact_mod_center


def test_closure_order():
    labs = C.enumerate_partitions(4, "C")
    covers = {(str(a), str(b)) for a, b in C.closure_order(labs)}
    assert covers == {("4", "2,2"), ("2,2", "2,1,1"), ("2,1,1", "1,1,1,1")}
    with pytest.raises(MixedFamilies):
        C.closure_order([C.Partition((2,)), C.Partition((1, 1, 1))])


def test_label_parsing():
    assert str(C.parse_label("2,1,1")) == "2,1,1"
    assert str(C.parse_label("+-,-+")) == "+-,-+"
    with pytest.raises(InvalidLabel):
        C.parse_label("++")


def test_unsupported_classification():
    with pytest.raises(UnsupportedFamily):
        C.classify_orbits("sp(4,R)")


def test_levi_witness_for_non_noticed():
    g = L.make_algebra("u(2,2)")
    x = C.representative(C.SignedYoungDiagram.parse("+-,-+"), g)
    assert C.levi_witness(x) is not None
    assert not C.is_noticed_oracle(x)
    assert np.isfinite(x.norm())
