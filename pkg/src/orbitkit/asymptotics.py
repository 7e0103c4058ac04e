"""Orbital integrals, the small-t limit of O_{t nu}, chamber checks, orbit Fourier transforms.

All orbital integrals use the canonical (Liouville) measure and the
group-coordinate charts of :mod:`orbitkit.orbitcharts`.
"""

from dataclasses import dataclass, field

import numpy as np

from . import liecore, orbitcharts, slicegeom
from .errors import NoncompactOrbit, NotRegular, TailBoundViolation, UnsupportedOrbit

T_GRID = tuple(2.0 ** -k for k in range(2, 10))
TAIL_TOL = 1e-6
TAIL_FLOOR = 1e-30


@dataclass(frozen=True, eq=False)
class TestFunction:
    """Gaussian ``exp(-|x-c|^2 / (2 w^2))`` or bump ``exp(1 - 1/(1 - |x-c|^2/w^2))`` (Frobenius norm)."""

    __test__ = False   # not a pytest class

    kind: str
    center: liecore.Element
    width: float

    def __post_init__(self):
        if self.kind not in ("gaussian", "bump"):
            raise ValueError(f"unknown test function kind {self.kind!r}")
        if not self.width > 0:
            raise ValueError("width must be positive")

    def __call__(self, points):
        p = np.asarray(points)
        d2 = np.sum(np.abs(p - np.asarray(self.center.matrix)) ** 2, axis=(-2, -1))
        w2 = self.width ** 2
        if self.kind == "gaussian":
            return np.exp(-d2 / (2 * w2))
        out = np.zeros_like(d2, dtype=float)
        inside = d2 < w2
        out[inside] = np.exp(1 - 1 / (1 - d2[inside] / w2))
        return out


def _as_list(f):
    return list(f) if isinstance(f, (list, tuple)) else [f]


def _evaluate(fs, points):
    return sum(f(points) for f in fs)


def _sphere_integral(chart, fs, n):
    x, w = np.polynomial.legendre.leggauss(n)
    theta = chart.lower + (chart.upper - chart.lower) * (x + 1) / 2
    w = w * (chart.upper - chart.lower) / 2
    phi = np.arange(2 * n) * np.pi / n
    pts = orbitcharts.chart_points(chart, phi, theta)
    dens = orbitcharts.chart_density(chart, phi, theta, pts)
    return float(np.sum(_evaluate(fs, pts) * dens * w[None, :]) * np.pi / n)


def _panel_nodes(a, b, h, order=10):
    npan = max(1, int(np.ceil((b - a) / h)))
    edges = np.linspace(a, b, npan + 1)
    x, w = np.polynomial.legendre.leggauss(order)
    half = np.diff(edges) / 2
    mid = (edges[:-1] + edges[1:]) / 2
    return (mid[:, None] + half[:, None] * x).ravel(), (half[:, None] * w).ravel()


def _line_integral(chart, fs, a, b, h, n_phi):
    taus, wt = _panel_nodes(a, b, h)
    phi = np.arange(n_phi) * 2 * np.pi / n_phi
    total = 0.0
    for chunk in range(0, taus.size, 512):
        t = taus[chunk:chunk + 512]
        pts = orbitcharts.chart_points(chart, phi, t)
        dens = orbitcharts.chart_density(chart, phi, t, pts)
        total += np.sum(_evaluate(fs, pts) * dens * wt[None, chunk:chunk + 512])
    return float(total * 2 * np.pi / n_phi)


def _upper_tail(chart, fs, T, step=0.05):
    """Bound on the integral over ``tau >= T`` (left Riemann sum of a decreasing majorant)."""
    c = orbitcharts.density_bound_constant(chart)
    taus = T + step * np.arange(4000)
    rho = orbitcharts.radial_norm(chart, np.minimum(taus, 700.0))
    env = sum(np.exp(-np.maximum(rho - f.center.norm(), 0.0) ** 2 / (2 * f.width ** 2)) for f in fs)
    return float(step * np.sum(c * rho * env))


def _tail_start(chart, fs):
    """Smallest T on a unit grid where the majorant is decreasing and the gaussians are negligible."""
    need = max(f.center.norm() + 8 * f.width for f in fs)
    T = 0.0
    while orbitcharts.radial_norm(chart, [T])[0] < need:
        T += 0.5
        if T > 700:
            raise TailBoundViolation("orbit does not leave the support region")
    return T


def orbital_integral(nu, f, tail_tol=TAIL_TOL):
    """``integral of f over O_nu`` for the canonical measure; f may be a list (summed)."""
    fs = _as_list(f)
    chart = orbitcharts.orbit_chart(nu)
    if chart.kind == "point":
        return float(_evaluate(fs, np.asarray(nu.matrix)))
    if chart.compact:
        r = max(np.linalg.norm(chart.base), 1e-300)
        n = max(32, int(np.ceil(8 * r / min(f.width for f in fs))))
        prev = _sphere_integral(chart, fs, n)
        while n < 1024:
            n *= 2
            cur = _sphere_integral(chart, fs, n)
            if abs(cur - prev) <= 1e-12 * max(abs(cur), TAIL_FLOOR):
                return cur
            prev = cur
        return prev
    if any(g.kind != "gaussian" for g in fs):
        raise UnsupportedOrbit("noncompact orbits take gaussian test functions only")
    hi = _tail_start(chart, fs)
    wmin = min(g.width for g in fs)
    rmax = max(g.center.norm() + 8 * g.width for g in fs)
    h = min(0.125, wmin / rmax)
    n_phi = int(min(2048, max(128, 16 * np.ceil(rmax / wmin))))
    c = orbitcharts.density_bound_constant(chart)
    if chart.kind == "nilpotent":
        lo = np.log(1e-3 / np.linalg.norm(chart.base))
    elif chart.kind == "hyperbolic":
        lo = -hi
    else:
        lo = chart.lower
    for _ in range(60):
        value = _line_integral(chart, fs, lo, hi, h, n_phi)
        up = _upper_tail(chart, fs, hi)
        if chart.kind == "hyperbolic":
            low = up
        elif chart.kind == "nilpotent":
            low = c * len(fs) * orbitcharts.radial_norm(chart, [lo])[0]
        else:
            low = 0.0
        budget = tail_tol * abs(value) + TAIL_FLOOR
        if up + low <= budget:
            return value
        if up > budget / 2:
            hi += 1.0
            if chart.kind == "hyperbolic":
                lo = -hi
        if chart.kind == "nilpotent" and low > budget / 2:
            lo -= 2.0
    raise TailBoundViolation(f"tail bound {up + low:.3g} exceeds {tail_tol} x {value:.3g}")


# --- limit formula ------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class AsymptoticReport:
    t_grid: tuple
    pairings: tuple          # one tuple of <O_{t nu}, f> per test function
    n_fitted: tuple
    n_predicted: float
    coef_fitted: tuple
    coef_richardson: tuple
    coef_predicted: tuple
    maximal: tuple           # (label, volume) of the maximal orbits in N_nu
    rel_errors: tuple = field(default=())

    @property
    def exponent_errors(self):
        return tuple(abs(n - self.n_predicted) for n in self.n_fitted)

    def passed(self, exp_tol=0.05, coef_tol=0.05):
        return (max(self.exponent_errors) < exp_tol and max(self.rel_errors) < coef_tol)

    def rows(self):
        """``(function index, t, pairing)`` rows for TSV output."""
        return [(i, t, p) for i, ps in enumerate(self.pairings) for t, p in zip(self.t_grid, ps)]


def asymptotic_cone(nu, catalog, box=slicegeom.BOX):
    """Catalog entries whose slice meets O_nu, with their intersections."""
    out = []
    for entry in catalog:
        inter = slicegeom.intersect_orbit_slice(nu, entry.slice, box)
        if not inter.empty:
            out.append((entry, inter))
    return out


def _fit(t, p, n):
    t = np.asarray(t[-3:])
    p = np.asarray(p[-3:])
    slope = np.polyfit(np.log(t), np.log(np.abs(p)), 1)[0]
    a = p * t ** (-n)
    coef = np.linalg.lstsq(np.vstack([np.ones(3), t]).T, a, rcond=None)[0][0]
    rich = 2 * a[-1] - a[-2]
    return float(slope), float(coef), float(rich)


def limit_formula_check(nu, catalog, fbank, t_grid=T_GRID, box=slicegeom.BOX):
    if not liecore.is_regular(nu):
        raise NotRegular(repr(nu))
    t_grid = tuple(t_grid)
    if any(b >= a for a, b in zip(t_grid, t_grid[1:])):
        raise ValueError("t grid must decrease strictly")
    cone = asymptotic_cone(nu, catalog, box)
    dim_n = max(e.dimension for e, _ in cone)
    maximal = [(e, i) for e, i in cone if e.dimension == dim_n]
    vols = [(e, slicegeom.slice_volume(nu, e.slice, i, box)) for e, i in maximal]
    n = 0.5 * (liecore.adjoint_orbit_dimension(nu) - dim_n)
    pairings, nfit, cfit, crich, cpred, errs = [], [], [], [], [], []
    for f in fbank:
        ps = tuple(orbital_integral(t * nu, f) for t in t_grid)
        slope, coef, rich = _fit(t_grid, ps, n)
        pred = sum(v * orbital_integral(e.element, f) for e, v in vols)
        pairings.append(ps)
        nfit.append(slope)
        cfit.append(coef)
        crich.append(rich)
        cpred.append(float(pred))
        errs.append(abs(coef - pred) / abs(pred))
    return AsymptoticReport(t_grid, tuple(pairings), tuple(nfit), n, tuple(cfit), tuple(crich),
                            tuple(cpred), tuple((e.label, v) for e, v in vols), tuple(errs))


# --- chambers ----------------------------------------------------------------

@dataclass(frozen=True)
class ChamberReport:
    equal: bool
    set_nu: frozenset
    set_lambda: frozenset
    same_chamber: object = None

    @property
    def consistent(self):
        """Whether the verdict matches the caller's chamber flag (None if no flag)."""
        if self.same_chamber is None:
            return None
        return self.equal == bool(self.same_chamber)


def chamber_invariance_check(nu, lam, catalog, same_chamber=None, box=slicegeom.BOX):
    for x in (nu, lam):
        if not liecore.is_regular(x):
            raise NotRegular(repr(x))
    a = frozenset(e.label for e, _ in asymptotic_cone(nu, catalog, box))
    b = frozenset(e.label for e, _ in asymptotic_cone(lam, catalog, box))
    return ChamberReport(a == b, a, b, same_chamber)


# --- Fourier transforms of compact orbits --------------------------------------

def orbit_fourier(nu, x):
    """``integral over O_nu of exp(i <p, x>)`` with the canonical measure."""
    chart = orbitcharts.orbit_chart(nu)
    xm = np.asarray(x.matrix)
    if chart.kind == "point":
        return complex(np.exp(1j * np.trace(np.asarray(nu.matrix) @ xm).real))
    if not chart.compact:
        raise NoncompactOrbit("Fourier transform of a noncompact orbit is not a function")
    bound = np.linalg.norm(chart.base) * np.linalg.norm(xm)
    n = 32 + 2 * int(np.ceil(bound))
    xg, w = np.polynomial.legendre.leggauss(n)
    theta = chart.lower + (chart.upper - chart.lower) * (xg + 1) / 2
    w = w * (chart.upper - chart.lower) / 2
    phi = np.arange(2 * n) * np.pi / n
    pts = orbitcharts.chart_points(chart, phi, theta)
    dens = orbitcharts.chart_density(chart, phi, theta, pts)
    pair = np.einsum("ptij,ji->pt", pts, xm).real
    return complex(np.sum(np.exp(1j * pair) * dens * w[None, :]) * np.pi / n)


def sphere_fourier_closed_form(nu, x):
    """``exp(i <z_nu, z_x>) sin(2 r rho) / rho`` for u(2)/su(2); eigenvalues ``+-i r``, ``+-i rho``.

    Written as the two-point sum ``(e^{2 i r rho} - e^{-2 i r rho}) / (2 i rho)``.
    """
    m, xm = np.asarray(nu.matrix), np.asarray(x.matrix)
    zn, zx = np.trace(m) / 2, np.trace(xm) / 2
    r = np.sqrt(max(np.linalg.det(m - zn * np.eye(2)).real, 0.0))
    rho = np.sqrt(max(np.linalg.det(xm - zx * np.eye(2)).real, 0.0))
    phase = np.exp(1j * (2 * zn * zx).real)
    if r < 1e-12:
        return complex(phase)
    if rho < 1e-12:
        return complex(phase * 2 * r)
    return complex(phase * (np.exp(2j * r * rho) - np.exp(-2j * r * rho)) / (2j * rho))
