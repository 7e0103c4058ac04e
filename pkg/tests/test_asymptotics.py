import numpy as np
import pytest
from scipy import integrate

from orbitkit import asymptotics as A
from orbitkit import gold
from orbitkit import liecore as L
from orbitkit import slicegeom as S
from orbitkit.errors import NoncompactOrbit, NotRegular, UnsupportedOrbit

import oracles


def gauss(g, m, w):
    return A.TestFunction("gaussian", g.from_matrix(np.asarray(m)), w)


def test_test_function_validation():
    g = gold.sl2()
    with pytest.raises(ValueError):
        A.TestFunction("gaussian", g.zero(), 0.0)
    with pytest.raises(ValueError):
        A.TestFunction("box", g.zero(), 1.0)
    bump = A.TestFunction("bump", g.zero(), 1.0)
    assert bump(np.zeros((2, 2))) == pytest.approx(1.0)
    assert bump(np.eye(2)) == 0.0


def test_far_gaussian_is_negligible():
    h = gold.su2()
    f = gauss(h, np.diag([40j, -40j]), 0.1)
    assert abs(A.orbital_integral(gold.quantized(1, h), f)) < 1e-30


def test_wide_gaussian_tends_to_volume():
    h = gold.su2()
    nu = gold.quantized(2, h)
    vals = [A.orbital_integral(nu, gauss(h, np.zeros((2, 2)), w)) for w in (1e2, 1e3)]
    assert vals[-1] == pytest.approx(S.symplectic_volume(nu), rel=1e-5)
    assert abs(vals[-1] - 3.0) < abs(vals[0] - 3.0)


def test_sphere_integral_against_dblquad():
    h = gold.su2()
    r = 1.0
    nu = gold.quantized(1, h)
    f = gauss(h, np.array([[0.3j, 0.4], [-0.4, -0.3j]]), 0.8)

    # sphere of radius r in the (i s3, s1-type, s2-type) coordinates; density r sin(theta) / 2pi
    def integrand(theta, phi):
        a, b, c = r * np.cos(theta), r * np.sin(theta) * np.cos(phi), r * np.sin(theta) * np.sin(phi)
        p = np.array([[1j * a, b + 1j * c], [-b + 1j * c, -1j * a]])
        return float(f(p)) * r * np.sin(theta) / (2 * np.pi)

    ref, _ = integrate.dblquad(integrand, 0, 2 * np.pi, 0, np.pi, epsabs=1e-12, epsrel=1e-12)
    assert A.orbital_integral(nu, f) == pytest.approx(ref, rel=1e-8)


@pytest.mark.parametrize("nu_kind", ["elliptic", "hyperbolic", "nilpotent"])
def test_linearity(nu_kind):
    g = gold.sl2()
    nu = {"elliptic": gold.elliptic(1.0, 1, g), "hyperbolic": gold.hyperbolic(1.0, g),
          "nilpotent": g.from_matrix([[0.0, 1.0], [0.0, 0.0]])}[nu_kind]
    f1 = gauss(g, [[0.2, 0.1], [0.0, -0.2]], 0.9)
    f2 = gauss(g, [[0.0, 0.5], [-0.5, 0.0]], 0.6)
    total = A.orbital_integral(nu, [f1, f2])
    parts = A.orbital_integral(nu, f1) + A.orbital_integral(nu, f2)
    assert total == pytest.approx(parts, rel=1e-6, abs=1e-8)


def test_noncompact_needs_gaussians():
    g = gold.sl2()
    with pytest.raises(UnsupportedOrbit):
        A.orbital_integral(gold.elliptic(1.0, 1, g), A.TestFunction("bump", g.zero(), 1.0))


def test_hyperboloid_against_direct_quadrature():
    # elliptic sheet det = 1 as a graph over the (a, s) plane: x = [[a, b], [c, -a]],
    # b - c = 2 sqrt(1 + a^2 + ((b + c)/2)^2); canonical measure = da ds / (2 pi |b - c| / 2)
    g = gold.sl2()
    f = gauss(g, [[0.3, 0.2], [0.1, -0.3]], 0.7)

    def integrand(s, a):
        m = np.sqrt(1 + a * a + s * s)
        p = np.array([[a, s + m], [s - m, -a]])
        return float(f(p)) / (2 * np.pi * m)

    ref, _ = integrate.dblquad(integrand, -8, 8, -8, 8, epsabs=1e-11, epsrel=1e-10)
    assert A.orbital_integral(gold.elliptic(1.0, 1, g), f) == pytest.approx(ref, rel=1e-6)


def test_limit_formula_su2():
    h = gold.su2()
    rep = A.limit_formula_check(gold.quantized(1, h), S.nilpotent_catalog(h), gold.fbank_su2(h)[:2])
    assert rep.n_predicted == 1.0
    assert max(rep.exponent_errors) < 0.05
    assert max(rep.rel_errors) < 0.05
    assert rep.t_grid == A.T_GRID
    assert len(rep.rows()) == 2 * len(A.T_GRID)


def test_limit_formula_rejects_non_regular():
    g = gold.sl2()
    with pytest.raises(NotRegular):
        A.limit_formula_check(g.zero(), S.nilpotent_catalog(g), gold.fbank_sl2(g))


def test_chamber_checks():
    g = gold.sl2()
    cat = S.nilpotent_catalog(g)
    same = A.chamber_invariance_check(gold.elliptic(1.0, 1, g), gold.elliptic(4.0, 1, g), cat, True)
    assert same.equal and same.consistent
    opp = A.chamber_invariance_check(gold.elliptic(1.0, 1, g), gold.elliptic(1.0, -1, g), cat, False)
    assert not opp.equal and opp.consistent
    assert opp.set_nu == {"2[+]", "1,1"} and opp.set_lambda == {"2[-]", "1,1"}
    nu = gold.hyperbolic(2.0, g)
    assert A.chamber_invariance_check(nu, nu, cat).equal
    with pytest.raises(NotRegular):
        A.chamber_invariance_check(g.zero(), nu, cat)


@pytest.mark.parametrize("k,rho", [(0, 0.3), (1, 1.1), (3, 2.5), (5, 0.05)])
def test_fourier_closed_form(k, rho):
    h = gold.su2()
    nu = gold.quantized(k, h)
    rng = np.random.default_rng(k)
    a = L.exp_element(h.element(rng.normal(size=3)))
    x = L.group_conjugate(a, h.from_matrix(np.diag([1j * rho, -1j * rho])))
    val = A.orbit_fourier(nu, x)
    ref = oracles.su2_fourier_exact((k + 1) / 2, rho)
    assert abs(val - ref) <= 1e-8 * max(1.0, abs(ref))
    assert A.sphere_fourier_closed_form(nu, x) == pytest.approx(ref, rel=1e-10, abs=1e-12)


def test_fourier_u2_center_phase():
    u2 = L.u(2)
    nu = u2.from_matrix(np.diag([2.0j, 0.0]))
    x = u2.from_matrix(np.diag([0.7j, 0.1j]))
    assert A.orbit_fourier(nu, x) == pytest.approx(A.sphere_fourier_closed_form(nu, x), abs=1e-10)


def test_fourier_at_zero_and_noncompact():
    h = gold.su2()
    nu = gold.quantized(4, h)
    assert A.orbit_fourier(nu, h.zero()) == pytest.approx(S.symplectic_volume(nu), abs=1e-8)
    g = gold.sl2()
    with pytest.raises(NoncompactOrbit):
        A.orbit_fourier(gold.elliptic(1.0, 1, g), g.zero())
