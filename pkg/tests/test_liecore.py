import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from orbitkit import liecore as L
from orbitkit.errors import (InvalidTriple, MixedAlgebras, NotInAlgebra, NotNilpotent,
                             UnsupportedFamily, ZeroNilpositive)

E = np.array([[0.0, 1.0], [0.0, 0.0]])
F = np.array([[0.0, 0.0], [1.0, 0.0]])
H = np.diag([1.0, -1.0])

ALGEBRAS = ["sl(2,R)", "sl(3,R)", "gl(3,R)", "su(2)", "u(2)", "u(2,1)", "su(2,2)",
            "sp(4,R)", "sp(4,C)"]
DIMS = {"sl(2,R)": 3, "sl(3,R)": 8, "gl(3,R)": 9, "su(2)": 3, "u(2)": 4, "u(2,1)": 9,
        "su(2,2)": 15, "sp(4,R)": 10, "sp(4,C)": 20}


@pytest.mark.parametrize("name", ALGEBRAS)
def test_dimensions(name):
    assert L.make_algebra(name).dim == DIMS[name]


@pytest.mark.parametrize("name", ALGEBRAS)
def test_jacobi_identity(name):
    g = L.make_algebra(name)
    rng = np.random.default_rng(0)
    a, b, c = (g.element(rng.normal(size=g.dim)) for _ in range(3))
    j = (L.bracket(a, L.bracket(b, c)) + L.bracket(b, L.bracket(c, a))
         + L.bracket(c, L.bracket(a, b)))
    assert np.linalg.norm(j.coords) < 1e-10


def test_ad_matches_bracket():
    g = L.make_algebra("sp(4,C)")
    rng = np.random.default_rng(1)
    x, y = g.element(rng.normal(size=g.dim)), g.element(rng.normal(size=g.dim))
    assert np.allclose(g.ad(x) @ y.coords, L.bracket(x, y).coords)


def test_not_in_algebra():
    g = L.sl(2)
    with pytest.raises(NotInAlgebra):
        g.from_matrix(np.eye(2))


def test_mixed_algebras():
    with pytest.raises(MixedAlgebras):
        L.bracket(L.sl(2).zero(), L.sl(2).zero())


def test_parse_group_rejects():
    for bad in ("so(5)", "sl(2,C)", "u(2,R)", "sp(3,R)"):
        with pytest.raises(UnsupportedFamily):
            L.make_algebra(bad)


def test_centralizer_sl2():
    g = L.sl(2)
    assert L.centralizer([g.from_matrix(F)]).dim == 1
    assert L.centralizer([g.from_matrix(H)]).dim == 1
    assert L.centralizer([g.zero()]).dim == 3
    z = L.centralizer([g.from_matrix(E)])
    assert z.contains(g.from_matrix(E))


def test_jacobson_morozov_sl2():
    g = L.sl(2)
    tr = L.jacobson_morozov(g.from_matrix(E))
    assert np.allclose(tr.H.matrix, H)
    assert np.allclose(tr.Y.matrix, F)


def test_jacobson_morozov_errors():
    g = L.sl(2)
    with pytest.raises(ZeroNilpositive):
        L.jacobson_morozov(g.zero())
    with pytest.raises(NotNilpotent):
        L.jacobson_morozov(g.from_matrix(H))
    with pytest.raises(InvalidTriple):
        L.Sl2Triple(g.from_matrix(E), g.from_matrix(2 * H), g.from_matrix(F))


def test_sp4_real_22_triple():
    g = L.sp_real(4)
    z = np.zeros((2, 2))
    x = g.from_matrix(np.block([[z, np.eye(2)], [z, z]]))
    tr = L.jacobson_morozov(x)
    assert L.centralizer([tr.X, tr.H, tr.Y]).dim == 1
    assert L.centralizer([tr.Y]).dim == 4
    assert L.adjoint_orbit_dimension(x) == 6


def test_sp4_complex_22_real_dimension():
    g = L.sp_complex(4)
    z = np.zeros((2, 2))
    x = g.from_matrix(np.block([[z, np.eye(2)], [z, z]]).astype(complex))
    assert L.adjoint_orbit_dimension(x) == 12


def test_group_conjugate_and_exp():
    g = L.sl(2)
    x = g.from_matrix(E)
    k = g.from_matrix(np.array([[0.0, 1.0], [-1.0, 0.0]]))
    rot = L.exp_element(k, np.pi)        # -identity
    assert np.allclose(rot, -np.eye(2))
    assert np.allclose(L.group_conjugate(rot, x).coords, x.coords)


def test_compactness():
    assert L.su(2).is_compact
    assert not L.sl(2).is_compact
    g = L.u(2)
    whole = L.Subspace(g, np.eye(g.dim))
    assert L.is_compact_mod_center(whole)
    h = L.sl(2)
    assert not L.is_compact_mod_center(L.Subspace(h, np.eye(h.dim)))


def test_regular_and_rank():
    g = L.sl(3)
    assert L.is_regular(g.from_matrix(np.diag([1.0, 2.0, -3.0])))
    assert not L.is_regular(g.from_matrix(np.diag([1.0, 1.0, -2.0])))
    assert L.center(L.u(2, 1)).dim == 1
    assert L.center(L.sl(3)).dim == 0


def test_orbit_sheet():
    g = L.sl(2)
    assert L.orbit_sheet(g.from_matrix(E)) == 1
    assert L.orbit_sheet(g.from_matrix(-E)) == -1
    assert L.orbit_sheet(g.from_matrix([[0.0, 1.0], [-1.0, 0.0]])) == 1
    assert L.orbit_sheet(g.from_matrix(H)) == 0


def test_subspace_intersection():
    g = L.sl(3)
    a = L.Subspace.span(g, np.eye(g.dim)[:5])
    b = L.Subspace.span(g, np.eye(g.dim)[3:])
    assert a.intersect(b).dim == 2


def test_case_basis_override():
    spec = {"group": "su(2)", "basis": [["1j", 0, 0, "-1j"], [0, 1, -1, 0], [0, "1j", "1j", 0]]}
    g = L.make_algebra(spec)
    assert g.dim == 3 and g.is_compact


@settings(max_examples=30, deadline=None)
@given(st.lists(st.floats(-3, 3), min_size=8, max_size=8),
       st.lists(st.floats(-2, 2), min_size=9, max_size=9))
def test_invariants_conjugation(coords, gmat):
    g = L.sl(3)
    x = g.element(coords)
    a = np.array(gmat).reshape(3, 3) + 4 * np.eye(3)
    y = L.group_conjugate(a, x)
    scale = max(1.0, x.norm(), y.norm())
    deg = L.invariant_degrees(g)
    diff = (L.orbit_invariants(x) - L.orbit_invariants(y)) / scale ** deg
    assert np.max(np.abs(diff)) < 1e-8


@settings(max_examples=20, deadline=None)
@given(st.lists(st.floats(-2, 2), min_size=16, max_size=16))
def test_jm_on_conjugated_nilpotents(gmat):
    g = L.sl(4)
    a = np.array(gmat).reshape(4, 4) + 5 * np.eye(4)
    n = np.diag([1.0, 1.0, 0.0], 1)
    x = g.from_matrix(a @ n @ np.linalg.inv(a))
    tr = L.jacobson_morozov(x)
    assert L.is_nilpotent(tr.Y)
