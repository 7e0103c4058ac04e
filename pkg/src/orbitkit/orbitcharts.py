"""Group-coordinate charts on the coadjoint orbits of su(2), u(2) and sl(2,R).

A chart is ``p(phi, tau) = Ad(exp(phi W1) exp(tau W2)) nu0`` with ``phi`` in
``[0, 2 pi)``.  Both chart tangent vectors are brackets with p, so the
Kostant-Kirillov form is evaluated without solving for preimages::

    omega_p([W1, p], [Ad(exp(phi W1)) W2, p]) = <p, [W1, Ad(exp(phi W1)) W2]>

and the canonical density in chart coordinates is the absolute value of
that number over 2 pi.
"""

from dataclasses import dataclass

import numpy as np

from .errors import UnsupportedOrbit
from .liecore import orbit_sheet

K = np.array([[0.0, 1.0], [-1.0, 0.0]])
U = np.array([[0.0, 1.0], [1.0, 0.0]])
H = np.array([[1.0, 0.0], [0.0, -1.0]])
E = np.array([[0.0, 1.0], [0.0, 0.0]])
I_SIGMA3 = np.diag([1j, -1j])
I_SIGMA2 = K.astype(complex)


@dataclass(frozen=True, eq=False)
class OrbitChart:
    kind: str           # "point", "sphere", "elliptic", "hyperbolic", "nilpotent"
    base: np.ndarray    # nu0, a point of the orbit
    angular: np.ndarray
    radial: np.ndarray
    lower: float
    upper: float

    @property
    def compact(self):
        return self.kind in ("point", "sphere")

    @property
    def dimension(self):
        return 0 if self.kind == "point" else 2


def _expm_batch(w, s):
    """``exp(s_j w)`` for a diagonalizable ``w`` and an array of parameters."""
    lam, v = np.linalg.eig(w)
    vinv = np.linalg.inv(v)
    s = np.asarray(s, dtype=float)
    out = np.einsum("ik,...k,kj->...ij", v, np.exp(np.multiply.outer(s, lam)), vinv)
    return out if np.iscomplexobj(w) else out.real


def orbit_chart(nu):
    """Chart on the orbit through ``nu``; UnsupportedOrbit outside the desk cases."""
    g = nu.algebra
    m = np.asarray(nu.matrix)
    scale = max(1.0, nu.norm())
    if g.family in ("su", "u") and g.n == 2 and g.q == 0:
        z = np.trace(m) / 2
        rest = m - z * np.eye(2)
        r = float(np.sqrt(max(np.linalg.det(rest).real, 0.0)))
        if r <= 1e-12 * scale:
            return OrbitChart("point", m.astype(complex), I_SIGMA3 / 2, I_SIGMA2 / 2, 0.0, 0.0)
        base = z * np.eye(2) + r * I_SIGMA3
        return OrbitChart("sphere", base, I_SIGMA3 / 2, I_SIGMA2 / 2, 0.0, np.pi)
    if g.family == "sl" and g.n == 2:
        det = float(np.linalg.det(m))
        if nu.norm() == 0:
            return OrbitChart("point", m.astype(float), K / 2, U / 2, 0.0, 0.0)
        if det > 1e-12 * scale ** 2:
            eps = orbit_sheet(nu)
            return OrbitChart("elliptic", eps * np.sqrt(det) * K, K / 2, U / 2, 0.0, np.inf)
        if det < -1e-12 * scale ** 2:
            return OrbitChart("hyperbolic", np.sqrt(-det) * H, K / 2, U / 2, -np.inf, np.inf)
        eps = orbit_sheet(nu)
        return OrbitChart("nilpotent", eps * E, K / 2, H / 2, -np.inf, np.inf)
    raise UnsupportedOrbit(f"no orbit chart for {g.name}")


def radial_points(chart, taus):
    """``Ad(exp(tau W2)) nu0`` for an array of tau."""
    a = _expm_batch(chart.radial, taus)
    ainv = _expm_batch(chart.radial, -np.asarray(taus, dtype=float))
    return a @ chart.base @ ainv


def radial_norm(chart, taus):
    """Frobenius norm of chart points; independent of phi."""
    return np.linalg.norm(radial_points(chart, taus), axis=(-2, -1))


def chart_points(chart, phis, taus):
    """Orbit points on the ``(phi, tau)`` grid, shape ``(len(phis), len(taus), n, n)``."""
    inner = radial_points(chart, taus)
    r = _expm_batch(chart.angular, phis)
    rinv = _expm_batch(chart.angular, -np.asarray(phis, dtype=float))
    return np.einsum("pij,tjk,pkl->ptil", r, inner, rinv)


def chart_density(chart, phis, taus, points=None):
    """Canonical (Liouville) density in chart coordinates on the grid."""
    if points is None:
        points = chart_points(chart, phis, taus)
    r = _expm_batch(chart.angular, phis)
    rinv = _expm_batch(chart.angular, -np.asarray(phis, dtype=float))
    w2 = np.einsum("pij,jk,pkl->pil", r, chart.radial, rinv)
    q = np.einsum("ij,pjk->pik", chart.angular, w2) - np.einsum("pij,jk->pik", w2, chart.angular)
    val = np.einsum("ptij,pji->pt", points, q)
    return np.abs(val.real) / (2 * np.pi)


def density_bound_constant(chart):
    """C with ``density <= C * |p| / (2 pi)`` on every chart point."""
    return 2 * np.linalg.norm(chart.angular) * np.linalg.norm(chart.radial)
