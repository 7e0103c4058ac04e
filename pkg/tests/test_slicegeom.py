import numpy as np
import pytest

from orbitkit import gold
from orbitkit import liecore as L
from orbitkit import slicegeom as S
from orbitkit.errors import (DimensionTooHigh, EmptySamples, MixedDimensions, NonRegularInput,
                             NonpositiveT, NoncompactOrbit, NotOnIntersection, UnsupportedGeometry)

import oracles

E = np.array([[0.0, 1.0], [0.0, 0.0]])


@pytest.fixture(scope="module")
def g():
    return gold.sl2()


@pytest.fixture(scope="module")
def slice_e(g):
    return S.slice_at(g.from_matrix(E))


@pytest.fixture(scope="module")
def catalog(g):
    return S.nilpotent_catalog(g)


def test_build_slice_sl2(slice_e):
    assert slice_e.dim == 1
    assert slice_e.spectrum == pytest.approx((-2.0,))
    f = slice_e.algebra.from_matrix([[0.0, 0.0], [1.0, 0.0]])
    assert slice_e.base.contains(f)


def test_build_slice_sp4():
    assert S.slice_at(gold.sp4_22()).dim == 4


@pytest.mark.parametrize("c", [0.25, 1.0, 7.0])
def test_elliptic_point(g, slice_e, c):
    inter = S.intersect_orbit_slice(gold.elliptic(c, 1, g), slice_e)
    assert inter.dimension == 0 and inter.compact
    assert len(inter.points) == 1
    assert np.allclose(inter.points[0].matrix, [[0.0, 1.0], [-c, 0.0]], atol=1e-9)
    assert inter.point_masses[0] == pytest.approx(oracles.sl2_point_mass(-c), rel=1e-9)


def test_elliptic_opposite_sheet_is_empty(g, slice_e):
    assert S.intersect_orbit_slice(gold.elliptic(1.0, -1, g), slice_e).empty


@pytest.mark.parametrize("a", [0.5, 1.5, 3.0])
def test_hyperbolic_point(g, slice_e, a):
    inter = S.intersect_orbit_slice(gold.hyperbolic(a, g), slice_e)
    assert len(inter.points) == 1
    s = inter.points[0].matrix[1, 0]
    assert s == pytest.approx(a * a, rel=1e-9)
    assert inter.point_masses[0] == pytest.approx(oracles.sl2_point_mass(a * a), rel=1e-9)


def test_orbit_meets_own_slice_exactly(g, slice_e):
    e = g.from_matrix(E)
    inter = S.intersect_orbit_slice(e, slice_e)
    assert len(inter.points) == 1
    assert np.array_equal(inter.points[0].coords, e.coords)


def test_zero_slice_noncompact(g):
    inter = S.intersect_orbit_slice(gold.elliptic(1.0, 1, g), S.zero_slice(g))
    assert inter.dimension == 2
    assert not inter.empty
    assert not inter.compact
    assert S.slice_volume(gold.elliptic(1.0, 1, g), S.zero_slice(g), inter) == float("inf")


def test_su2_sphere_volume():
    h = gold.su2()
    nu = gold.quantized(1, h)
    inter = S.intersect_orbit_slice(nu, S.zero_slice(h))
    assert inter.compact and inter.dimension == 2
    assert S.slice_volume(nu, S.zero_slice(h), inter) == pytest.approx(2.0, rel=1e-8)


def test_gamma_scaling():
    g = gold.sl2()
    tr = L.jacobson_morozov(g.from_matrix(E))
    assert np.allclose(S.gamma_scaling(1.0, tr), np.eye(2))
    assert np.allclose(S.gamma_scaling(4.0, tr), np.diag([0.5, 2.0]))
    with pytest.raises(NonpositiveT):
        S.gamma_scaling(0.0, tr)


@pytest.mark.parametrize("t", [0.25, 4.0])
def test_scaling_identity(g, slice_e, t):
    nu = gold.elliptic(2.0, 1, g)
    xi = S.intersect_orbit_slice(nu, slice_e).points[0]
    moved = S.scale_point(xi, t, slice_e)
    direct = S.intersect_orbit_slice(t * nu, slice_e).points[0]
    assert np.linalg.norm(moved.coords - direct.coords) < 1e-7


def test_canonical_density_scaling():
    h = gold.su2()
    nu = gold.quantized(2, h)
    vecs = S.tangent_basis(nu)
    for t in (0.5, 3.0):
        a = S.canonical_form_value(t * nu, t * vecs)
        b = S.canonical_form_value(nu, vecs)
        assert a == pytest.approx(t * b, rel=1e-10)


def test_canonical_density_constant_on_sphere():
    h = gold.su2()
    nu = gold.quantized(1, h)
    rng = np.random.default_rng(3)
    vals = []
    for _ in range(4):
        a = L.exp_element(h.element(rng.normal(size=3)))
        vals.append(S.canonical_density(L.group_conjugate(a, nu)))
    assert np.ptp(vals) < 1e-10 * vals[0]


def test_canonical_density_nilpotent(g):
    d = S.canonical_density(g.from_matrix(E))
    assert np.isfinite(d) and d > 0


def test_rao_density_rejects_off_points(g, slice_e):
    with pytest.raises(NotOnIntersection):
        S.rao_density(g.from_matrix([[0.0, 1.0], [-3.0, 0.0]]), gold.elliptic(1.0, 1, g), slice_e)


def test_dimension_too_high():
    g = L.sl(3)
    with pytest.raises(DimensionTooHigh):
        S.intersect_orbit_slice(g.from_matrix(np.diag([1.0, 2.0, -3.0])), S.zero_slice(g))


def test_unsupported_geometry():
    g = L.sl(3)
    x = g.from_matrix(np.diag([1.0, 0.0], 1))   # minimal orbit, slice of dimension 4
    nu = g.from_matrix(np.diag([1.0, 1.0], 1))  # principal nilpotent, d = 2
    with pytest.raises(UnsupportedGeometry):
        S.intersect_orbit_slice(nu, S.slice_at(x))


def test_symplectic_volume():
    h = gold.su2()
    for k in range(4):
        assert S.symplectic_volume(gold.quantized(k, h)) == pytest.approx(k + 1, abs=1e-9)
    assert S.symplectic_volume(2 * gold.quantized(2, h)) == pytest.approx(6.0, abs=1e-9)
    assert S.symplectic_volume(h.zero()) == 1.0
    u2 = L.u(2)
    nu = u2.from_matrix(np.diag([2.5j, 0.5j]))
    assert S.symplectic_volume(nu) == pytest.approx(2.0, abs=1e-9)
    with pytest.raises(NoncompactOrbit):
        S.symplectic_volume(gold.elliptic(1.0, 1))


def test_wavefront_su2():
    h = gold.su2()
    cyc = S.wavefront_cycle([gold.quantized(3, h)], S.nilpotent_catalog(h))
    assert list(cyc.as_dict()) == ["+,+"]
    assert cyc.as_dict()["+,+"] == pytest.approx(4.0, rel=1e-8)


def test_wavefront_sl2(g, catalog):
    ell = S.wavefront_cycle([gold.elliptic(1.0, 1, g)], catalog).as_dict()
    assert set(ell) == {"2[+]"} and ell["2[+]"] == pytest.approx(1.0, rel=1e-9)
    hyp = S.wavefront_cycle([gold.hyperbolic(1.0, g)], catalog).as_dict()
    assert set(hyp) == {"2[+]", "2[-]"}
    assert all(v == pytest.approx(1.0, rel=1e-9) for v in hyp.values())
    both = S.wavefront_cycle([gold.elliptic(1.0, 1, g), gold.elliptic(1.0, -1, g)], catalog)
    assert set(both.as_dict()) == {"2[+]", "2[-]"}


def test_wavefront_rejects_non_regular(g, catalog):
    with pytest.raises(NonRegularInput):
        S.wavefront_cycle([g.zero()], catalog)


def test_wavefront_mixed_dimensions(g):
    # a hand-made catalog with the zero slice shrunk so that it looks compact
    e = g.from_matrix(E)
    fake_zero = S.CatalogEntry("0", g.zero(), S.slice_at(e))
    cat = [S.catalog_entry("2[+]", e), fake_zero]
    with pytest.raises(MixedDimensions):
        S.wavefront_cycle([gold.elliptic(1.0, 1, g)], cat)


def test_wavefront_cycle_validation():
    with pytest.raises(ValueError):
        S.WaveFrontCycle((("a", 1.0), ("a", 2.0)))
    with pytest.raises(ValueError):
        S.WaveFrontCycle((("a", 0.0),))


def test_center_check_sl2(g, slice_e):
    tr = slice_e.triple
    levi = L.centralizer([tr.X, tr.H, tr.Y])
    samples = S.slice_regular_samples(slice_e, 3)
    assert S.lemma41_check(slice_e, levi, samples).dim == 0
    with pytest.raises(EmptySamples):
        S.lemma41_check(slice_e, levi, [])


def test_center_check_sp4_monotone():
    x = gold.sp4_22()
    s = S.slice_at(x)
    tr = s.triple
    levi = L.centralizer([tr.X, tr.H, tr.Y])
    samples = S.slice_regular_samples(s, 5)
    dims = [S.lemma41_check(s, levi, samples[:k]).dim for k in range(1, 6)]
    assert dims == sorted(dims, reverse=True)
    assert dims[-1] == L.center(x.algebra).dim == 0


@pytest.mark.parametrize("t", [0.1, 1.0, 10.0])
def test_nonemptiness_scale_invariant(g, catalog, t):
    for nu in (gold.elliptic(1.0, 1, g), gold.hyperbolic(1.0, g)):
        for entry in catalog:
            a = S.intersect_orbit_slice(nu, entry.slice).empty
            b = S.intersect_orbit_slice(t * nu, entry.slice).empty
            assert a == b
