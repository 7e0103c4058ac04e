"""Slodowy slices, orbit-slice intersections and the quotient measure on them.

Slice coordinates are Euclidean coordinates against an orthonormal basis
(in algebra coordinates) of ``Z_g(Y)``.  Reference Lebesgue measures on
tangent spaces come from the Frobenius inner product ``Re tr(a b^*)``; the
trace form is indefinite on noncompact algebras and degenerate on the
tangent spaces of nilpotent orbits, so it cannot serve as a metric there.
"""

from dataclasses import dataclass, field

import numpy as np
import scipy.linalg
from scipy.optimize import least_squares
from scipy.stats import qmc

from . import liecore
from .errors import (DegenerateForm, DimensionTooHigh, EmptySamples, MixedDimensions,
                     NonRegularInput, NonpositiveT, NoncompactOrbit, NotOnIntersection,
                     SpectrumViolation, TransversalityFailure, UnsupportedGeometry)
from .liecore import (Subspace, adjoint_orbit_dimension, centralizer, charpoly,
                      is_regular, orbit_sheet)
from . import orbitcharts

BOX = 1e3
INV_TOL = 1e-8
SPECTRUM_TOL = 1e-8
MAX_DIM = 2


# --- slices -------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class SlodowySlice:
    """Affine slice ``X + Z_g(Y)``; ``triple`` is None for the zero orbit (slice = g)."""

    triple: object
    base: Subspace
    offset: liecore.Element
    spectrum: tuple

    @property
    def algebra(self):
        return self.base.algebra

    @property
    def dim(self):
        return self.base.dim

    def point(self, s):
        s = np.asarray(s, dtype=float)
        return self.algebra.element(self.offset.coords + s @ self.base.vectors)

    def coordinates(self, x):
        """Slice coordinates of x; NotOnIntersection if x is off the affine slice."""
        d = x.coords - self.offset.coords
        s = self.base.vectors @ d
        if np.linalg.norm(d - s @ self.base.vectors) > 1e-8 * max(1.0, np.linalg.norm(d)):
            raise NotOnIntersection("point is not on the slice")
        return s

    def contains(self, x, tol=1e-8):
        d = x.coords - self.offset.coords
        return np.linalg.norm(d - self.base.project(d)) <= tol * max(1.0, np.linalg.norm(d))


def build_slice(triple):
    g = triple.algebra
    base = centralizer([triple.Y])
    adh = g.ad(triple.H)
    m = base.vectors @ adh @ base.vectors.T
    ev = np.sort(np.linalg.eigvals(m).real)
    if ev.size and ev[-1] > SPECTRUM_TOL:
        raise SpectrumViolation(f"ad_H has eigenvalue {ev[-1]:.3g} > 0 on Z_g(Y)")
    return SlodowySlice(triple, base, triple.X, tuple(float(e) for e in ev))


def zero_slice(algebra):
    """Slice at the zero orbit: all of g."""
    base = Subspace(algebra, np.eye(algebra.dim))
    return SlodowySlice(None, base, algebra.zero(), tuple(0.0 for _ in range(algebra.dim)))


def slice_at(x):
    if x.norm() == 0:
        return zero_slice(x.algebra)
    return build_slice(liecore.jacobson_morozov(x))


def gamma_scaling(t, triple):
    """``exp(-1/2 log(t) H)``."""
    if not t > 0:
        raise NonpositiveT(f"t must be positive, got {t}")
    if triple is None:
        raise ValueError("the zero slice has no triple")
    return scipy.linalg.expm(-0.5 * np.log(t) * np.asarray(triple.H.matrix))


def scale_point(xi, t, slice_):
    """``X + t * gamma_t (xi - X) gamma_t^{-1}``, the dilation carrying O_nu into O_{t nu}."""
    x = slice_.offset
    if slice_.triple is None:
        return t * xi
    gam = gamma_scaling(t, slice_.triple)
    d = gam @ (xi.matrix - x.matrix) @ np.linalg.inv(gam)
    return xi.algebra.from_matrix(x.matrix + t * d)


# --- orbit targets and membership ----------------------------------------------

@dataclass(frozen=True, eq=False)
class _Target:
    nu: liecore.Element
    inv: np.ndarray
    deg: np.ndarray
    dim: int
    sheet: int

    @classmethod
    def of(cls, nu):
        g = nu.algebra
        return cls(nu, liecore.orbit_invariants(nu), liecore.invariant_degrees(g),
                   adjoint_orbit_dimension(nu), orbit_sheet(nu))


def _invariants_of_matrix(g, m):
    c = charpoly(m)
    if g.complex_entries:
        return np.concatenate([c.real, c.imag])
    return np.real(c).astype(float)


def _inv_residual(target, m, scale):
    g = target.nu.algebra
    return (_invariants_of_matrix(g, m) - target.inv) / scale ** target.deg


def on_orbit(x, target, tol=None):
    """Invariant match plus orbit-dimension and sheet equality."""
    tol = INV_TOL if tol is None else tol
    if not isinstance(target, _Target):
        target = _Target.of(target)
    scale = max(1.0, target.nu.norm(), x.norm())
    r = _inv_residual(target, x.matrix, scale)
    if np.max(np.abs(r)) > tol:
        return False
    return adjoint_orbit_dimension(x) == target.dim and orbit_sheet(x) == target.sheet


# --- intersections --------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class SliceIntersection:
    slice: SlodowySlice
    nu: liecore.Element
    dimension: int
    points: tuple
    compact: bool
    point_masses: tuple = None
    escape: tuple = field(default=(), repr=False)   # witnesses of unboundedness

    @property
    def empty(self):
        return len(self.points) == 0


def _seeds(k, box):
    radii = np.geomspace(1e-2, box, 6)
    out = [np.zeros(k)]
    for i in range(k):
        for r in radii:
            e = np.zeros(k)
            e[i] = r
            out += [e, -e]
    if k > 1:
        h = qmc.Halton(d=k, scramble=False).random(6 * k + 1)[1:] * 2 - 1
        for r in (1.0, 10.0):
            out += list(r * h)
    return out


def _slice_matrices(slice_):
    g = slice_.algebra
    return np.asarray(slice_.offset.matrix), np.tensordot(slice_.base.vectors, g.basis, axes=1)


def _dedupe(points, tol=1e-6):
    kept = []
    for s in points:
        if all(np.linalg.norm(s - t) > tol * max(1.0, np.linalg.norm(t)) for t in kept):
            kept.append(s)
    return kept


def _newton_points(slice_, target, box, sphere=None, seeds=None):
    """Newton from deterministic seeds; returns verified slice coordinates."""
    k = slice_.dim
    x0m, bm = _slice_matrices(slice_)
    scale = max(1.0, target.nu.norm())

    def resid(s):
        m = x0m + np.tensordot(s, bm, axes=1)
        sc = max(scale, np.linalg.norm(m))
        r = _inv_residual(target, m, sc)
        if sphere is not None:
            r = np.append(r, (np.linalg.norm(s) - sphere) / sphere)
        return r

    found = []
    for s0 in (seeds if seeds is not None else _seeds(k, box)):
        try:
            sol = least_squares(resid, s0, method="trf", xtol=1e-15, ftol=1e-15,
                                gtol=1e-15, max_nfev=60 * max(k, 1))
        except (ValueError, np.linalg.LinAlgError):
            continue
        s = sol.x
        if not np.all(np.isfinite(s)) or np.linalg.norm(s) > box * (1 + 1e-9):
            continue
        if np.max(np.abs(resid(s))) > INV_TOL:
            continue
        if on_orbit(slice_.point(s), target):
            found.append(s)
    return _dedupe(found)


def _ray_roots(slice_, target, u, box):
    """Positive r <= box with X + r u on the orbit (u in slice coordinates)."""
    g = slice_.algebra
    x0m, bm = _slice_matrices(slice_)
    um = np.tensordot(u, bm, axes=1)
    n = g.n
    scale = max(1.0, target.nu.norm())
    nodes = scale * np.arange(n + 1, dtype=float)
    vals = np.array([_invariants_of_matrix(g, x0m + r * um) - target.inv for r in nodes])
    cands = []
    for j in range(vals.shape[1]):
        coef = np.polyfit(nodes, vals[:, j], n)
        if np.max(np.abs(coef)) <= 1e-12 * scale ** target.deg[j]:
            continue
        for z in np.roots(np.trim_zeros(coef, "f")):
            if abs(z.imag) <= 1e-6 * max(1.0, abs(z)) and 0 < z.real <= box:
                cands.append(z.real)
    out = []
    for r in sorted(cands):
        if out and abs(r - out[-1]) <= 1e-7 * max(1.0, r):
            continue
        if on_orbit(slice_.point(r * u), target):
            out.append(r)
    return out


def _sphere_dirs(k, n_theta, n_phi):
    """Direction grid and its (theta, phi) nodes for a 2- or 3-dimensional base."""
    if k == 2:
        phi = np.arange(n_phi) * 2 * np.pi / n_phi
        return phi, np.stack([np.cos(phi), np.sin(phi)], axis=-1)
    x, _ = np.polynomial.legendre.leggauss(n_theta)
    theta = np.pi * (x + 1) / 2
    phi = np.arange(n_phi) * 2 * np.pi / n_phi
    tt, pp = np.meshgrid(theta, phi, indexing="ij")
    dirs = np.stack([np.sin(tt) * np.cos(pp), np.sin(tt) * np.sin(pp), np.cos(tt)], axis=-1)
    return (theta, phi), dirs


def _nilpotent_directions(slice_, box):
    """Unit slice directions u with X + r u asymptotically nilpotent (lazily)."""
    g = slice_.algebra
    k = slice_.dim
    _, bm = _slice_matrices(slice_)

    def resid(u):
        m = np.tensordot(u, bm, axes=1)
        return np.append(_invariants_of_matrix(g, m), np.linalg.norm(u) - 1.0)

    seeds = list(np.eye(k)) + list(-np.eye(k))
    if slice_.triple is not None:
        adh = g.ad(slice_.triple.H)
        m = slice_.base.vectors @ adh @ slice_.base.vectors.T
        _, vecs = np.linalg.eig(m)
        for v in vecs.T:
            v = v.real
            if np.linalg.norm(v) > 0:
                seeds += [v / np.linalg.norm(v), -v / np.linalg.norm(v)]
    if k > 1:
        h = qmc.Halton(d=k, scramble=False).random(12 * k + 1)[1:] * 2 - 1
        seeds += [v / np.linalg.norm(v) for v in h if np.linalg.norm(v) > 0]
    found = []
    for s0 in seeds:
        sol = least_squares(resid, s0, method="trf", xtol=1e-12, ftol=1e-12, gtol=1e-12,
                            max_nfev=50 * k)
        if np.max(np.abs(resid(sol.x))) < 1e-9:
            u = sol.x / np.linalg.norm(sol.x)
            if all(np.linalg.norm(u - v) > 1e-4 for v in found):
                found.append(u)
                yield u


def _escape_witnesses(slice_, target, box):
    """Points of the intersection at radius ``box`` near nilpotent directions."""
    for w in _nilpotent_directions(slice_, box):
        pts = _newton_points(slice_, target, box, sphere=box, seeds=[box * w])
        if pts:
            return (pts[0],)
    return ()


def intersection_dimension(nu, slice_):
    return adjoint_orbit_dimension(nu) - adjoint_orbit_dimension(slice_.offset)


def intersect_orbit_slice(nu, slice_, box=BOX):
    """Solve ``O_nu  cap  S_X`` inside the box of radius ``box`` in slice coordinates."""
    target = _Target.of(nu)
    d = intersection_dimension(nu, slice_)
    if d < 0:
        return SliceIntersection(slice_, nu, d, (), True, ())
    if d > MAX_DIM:
        raise DimensionTooHigh(f"intersection dimension {d} > {MAX_DIM}")
    if d == 0:
        pts = tuple(slice_.point(s) for s in _newton_points(slice_, target, box))
        masses = tuple(rao_density(p, nu, slice_, check=False) for p in pts)
        return SliceIntersection(slice_, nu, 0, pts, True, masses)
    if slice_.dim != d + 1:
        raise UnsupportedGeometry(f"{d}-dimensional intersection in a {slice_.dim}-dimensional slice")
    _, dirs = _sphere_dirs(slice_.dim, 8, 16)
    pts = []
    for u in dirs.reshape(-1, slice_.dim):
        pts += [slice_.point(r * u) for r in _ray_roots(slice_, target, u, box)]
    escape = _escape_witnesses(slice_, target, box) if pts else ()
    return SliceIntersection(slice_, nu, d, tuple(pts), not escape, None,
                             tuple(slice_.point(s) for s in escape))


# --- canonical measures ----------------------------------------------------------

def _frobenius_gram(g, vecs):
    mats = np.tensordot(np.atleast_2d(vecs), g.basis, axes=1)
    return np.einsum("aij,bij->ab", mats, mats.conj()).real


def _omega(xi, vecs):
    """Matrix of the Kostant-Kirillov form at xi on tangent vectors (coordinate rows)."""
    g = xi.algebra
    vecs = np.atleast_2d(np.asarray(vecs, dtype=float))
    adxi = g.ad(xi)
    z, *_ = np.linalg.lstsq(-adxi, vecs.T, rcond=None)
    resid = np.linalg.norm(-adxi @ z - vecs.T)
    if resid > 1e-7 * max(1.0, np.linalg.norm(vecs)):
        raise DegenerateForm(f"vectors are not tangent to the orbit (residual {resid:.2e})")
    vm = np.tensordot(vecs, g.basis, axes=1)
    zm = np.tensordot(z.T, g.basis, axes=1)
    # omega(v_i, v_j) = <xi, [Z_i, Z_j]> = -<v_i, Z_j>
    om = -np.einsum("aij,bji->ab", vm, zm).real
    return 0.5 * (om - om.T)


def canonical_form_value(xi, vecs):
    """``|omega^m / (m! (2 pi)^m)|`` evaluated on the 2m vectors ``vecs``."""
    vecs = np.atleast_2d(np.asarray(vecs, dtype=float))
    if vecs.shape[0] == 0:
        return 1.0
    if vecs.shape[0] % 2:
        raise DegenerateForm("odd number of tangent vectors")
    m = vecs.shape[0] // 2
    return float(np.sqrt(abs(np.linalg.det(_omega(xi, vecs)))) / (2 * np.pi) ** m)


def _as_coords(vectors):
    return np.atleast_2d(np.array([v.coords if isinstance(v, liecore.Element) else v
                                   for v in vectors], dtype=float))


def tangent_basis(xi):
    """Orthonormal (coordinate-Euclidean) rows spanning ``[g, xi]``."""
    a = xi.algebra.ad(xi)
    u, s, _ = np.linalg.svd(a)
    r = int(np.sum(s > liecore.RANK_CUTOFF * s[0])) if s.size and s[0] > 0 else 0
    return u[:, :r].T


def canonical_density(nu, tangent=None):
    """Canonical density at nu against the Frobenius Lebesgue measure on ``T O_nu``."""
    g = nu.algebra
    vecs = tangent_basis(nu) if tangent is None else _as_coords(tangent)
    if vecs.shape[0] != adjoint_orbit_dimension(nu):
        raise DegenerateForm("tangent basis does not span [g, nu]")
    if vecs.shape[0] == 0:
        return 1.0
    gram = _frobenius_gram(g, vecs)
    lchol = np.linalg.cholesky(gram)
    ortho = np.linalg.solve(lchol, vecs)
    om = _omega(nu, ortho)
    if abs(np.linalg.det(om)) < 1e-12:
        raise DegenerateForm("Kostant-Kirillov form is degenerate on the given basis")
    return float(np.sqrt(abs(np.linalg.det(om))) / (2 * np.pi) ** (vecs.shape[0] // 2))


def _slice_projection(slice_):
    """Coordinate matrix of the projection g -> [g, X] along Z_g(Y)."""
    g = slice_.algebra
    a = tangent_basis(slice_.offset) if slice_.offset.norm() else np.zeros((0, g.dim))
    if a.shape[0] == 0:
        return a, np.zeros((g.dim, g.dim))
    m = np.hstack([a.T, slice_.base.vectors.T])
    if m.shape[1] != g.dim or np.linalg.matrix_rank(m) < g.dim:
        raise TransversalityFailure("[g, X] and Z_g(Y) do not split g")
    minv = np.linalg.inv(m)
    return a, a.T @ minv[: a.shape[0]]


def intersection_tangent(xi, slice_):
    """Orthonormal rows spanning ``[g, xi]  cap  Z_g(Y)`` and a complement within ``[g, xi]``."""
    t = tangent_basis(xi)
    a, proj = _slice_projection(slice_)
    pt = proj @ t.T
    if a.shape[0] and liecore.numerical_rank(pt) < a.shape[0]:
        raise TransversalityFailure("orbit is not transverse to the slice")
    ker = liecore.nullspace(pt) if a.shape[0] else np.eye(t.shape[0])
    k = ker @ t
    comp = liecore.nullspace(ker) @ t if ker.shape[0] < t.shape[0] else np.zeros((0, t.shape[1]))
    return k, comp, proj


def rao_density(point, nu, slice_, frame=None, check=True):
    """Density of the quotient measure ``m_{nu,X}`` at a point of ``O_nu  cap  S_X``.

    With ``frame`` (d tangent vectors of the intersection) the value is
    relative to the parallelotope they span; otherwise relative to the
    Frobenius Lebesgue measure on the intersection.  For d = 0 this is the
    point mass.
    """
    if check:
        if not slice_.contains(point) or not on_orbit(point, nu):
            raise NotOnIntersection(repr(point))
    k, comp, proj = intersection_tangent(point, slice_)
    if frame is None:
        frame = k
        norm = np.sqrt(np.linalg.det(_frobenius_gram(point.algebra, k))) if k.shape[0] else 1.0
    else:
        frame = _as_coords(frame)
        norm = 1.0
    num = canonical_form_value(point, np.vstack([frame, comp]))
    den = canonical_form_value(slice_.offset, (proj @ comp.T).T) if comp.shape[0] else 1.0
    if den == 0:
        raise TransversalityFailure("projected tangent vectors are degenerate")
    return float(num / den / norm)


# --- volumes -----------------------------------------------------------------------

def _chart_frame(slice_, xi, r, u, du):
    """Tangent vector of the radial chart: ``d/dq (X + r(q) u(q))`` with unknown r'."""
    k, _, _ = intersection_tangent(xi, slice_)
    bv = slice_.base.vectors
    uc = u @ bv
    rhs = r * (du @ bv)
    m = np.hstack([k.T, -uc[:, None]])
    sol, *_ = np.linalg.lstsq(m, rhs, rcond=None)
    return sol[-1] * uc + rhs


def _radial_integral(nu, slice_, target, n_theta, box):
    k = slice_.dim
    if k == 2:
        phi, dirs = _sphere_dirs(2, 0, 2 * n_theta)
        total = 0.0
        for p, u in zip(phi, dirs):
            du = np.array([-np.sin(p), np.cos(p)])
            for r in _ray_roots(slice_, target, u, box):
                xi = slice_.point(r * u)
                f = _chart_frame(slice_, xi, r, u, du)
                total += rao_density(xi, nu, slice_, frame=[f], check=False)
        return total * 2 * np.pi / len(phi)
    (theta, phi), dirs = _sphere_dirs(3, n_theta, 2 * n_theta)
    _, w = np.polynomial.legendre.leggauss(n_theta)
    w = w * np.pi / 2
    total = 0.0
    for i, t in enumerate(theta):
        for j, p in enumerate(phi):
            u = dirs[i, j]
            dt = np.array([np.cos(t) * np.cos(p), np.cos(t) * np.sin(p), -np.sin(t)])
            dp = np.array([-np.sin(t) * np.sin(p), np.sin(t) * np.cos(p), 0.0])
            roots = _ray_roots(slice_, target, u, box)
            if len(roots) > 1:
                raise UnsupportedGeometry("intersection is not star-shaped about X")
            for r in roots:
                xi = slice_.point(r * u)
                f1 = _chart_frame(slice_, xi, r, u, dt)
                f2 = _chart_frame(slice_, xi, r, u, dp)
                total += w[i] * rao_density(xi, nu, slice_, frame=[f1, f2], check=False)
    return total * 2 * np.pi / len(phi)


def slice_volume(nu, slice_, intersection=None, box=BOX, rtol=1e-6, max_nodes=64):
    """``vol(O_nu  cap  S_X)`` for the quotient measure; ``inf`` if not compact."""
    inter = intersection or intersect_orbit_slice(nu, slice_, box)
    if inter.empty:
        return 0.0
    if not inter.compact:
        return float("inf")
    if inter.dimension == 0:
        return float(sum(inter.point_masses))
    if inter.dimension > MAX_DIM:
        raise DimensionTooHigh(str(inter.dimension))
    target = _Target.of(nu)
    n = 8
    prev = _radial_integral(nu, slice_, target, n, box)
    while n < max_nodes:
        n *= 2
        cur = _radial_integral(nu, slice_, target, n, box)
        if abs(cur - prev) <= rtol * abs(cur):
            return float(cur)
        prev = cur
    return float(prev)


def symplectic_volume(nu, n_theta=48, n_phi=48):
    """Canonical volume of a compact coadjoint orbit of su(2) or u(2)."""
    chart = orbitcharts.orbit_chart(nu)
    if not chart.compact:
        raise NoncompactOrbit(f"orbit of {nu!r} is not compact")
    if chart.kind == "point":
        return 1.0
    x, w = np.polynomial.legendre.leggauss(n_theta)
    theta = chart.lower + (chart.upper - chart.lower) * (x + 1) / 2
    w = w * (chart.upper - chart.lower) / 2
    phi = np.arange(n_phi) * 2 * np.pi / n_phi
    dens = orbitcharts.chart_density(chart, phi, theta)
    return float(np.sum(dens * w[None, :]) * 2 * np.pi / n_phi)


# --- wave front cycle ---------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class CatalogEntry:
    label: str
    element: liecore.Element
    slice: SlodowySlice

    @property
    def dimension(self):
        return adjoint_orbit_dimension(self.element)


def catalog_entry(label, x):
    return CatalogEntry(str(label), x, slice_at(x))


def nilpotent_catalog(algebra):
    """Catalog entries for every nilpotent orbit of a classifiable algebra."""
    from .orbitcomb import orbit_labels, representative
    g = liecore.make_algebra(algebra)
    return [catalog_entry(lab, representative(lab, g)) for lab in orbit_labels(g)]


@dataclass(frozen=True)
class RegularInput:
    orbits: tuple

    def __post_init__(self):
        orbits = tuple(self.orbits)
        object.__setattr__(self, "orbits", orbits)
        if not orbits:
            raise NonRegularInput("empty orbit list")
        for nu in orbits:
            if not is_regular(nu):
                raise NonRegularInput(f"{nu!r} is not regular")


@dataclass(frozen=True)
class WaveFrontCycle:
    terms: tuple
    evidence: tuple = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        labels = [lab for lab, _ in self.terms]
        if len(set(labels)) != len(labels):
            raise ValueError("duplicate labels in wave front cycle")
        for lab, c in self.terms:
            if not c > 0:
                raise ValueError(f"coefficient of {lab} must be positive, got {c}")

    def as_dict(self):
        return dict(self.terms)


def wavefront_cycle(data, catalog, box=BOX):
    """Assemble ``sum vol(O_pi  cap  S_X) O_X`` over the admissible nilpotent orbits."""
    if not isinstance(data, RegularInput):
        data = RegularInput(tuple(data))
    terms, evidence, dims = [], [], {}
    for entry in catalog:
        inters = [intersect_orbit_slice(nu, entry.slice, box) for nu in data.orbits]
        nonempty = any(not i.empty for i in inters)
        compact = all(i.compact for i in inters)
        keep = nonempty and compact
        vols = [slice_volume(nu, entry.slice, i, box) for nu, i in zip(data.orbits, inters)] \
            if keep else []
        evidence.append({
            "label": entry.label,
            "dimension": entry.dimension,
            "nonempty": [not i.empty for i in inters],
            "compact": [bool(i.compact) for i in inters],
            "intersection_dimension": [i.dimension for i in inters],
            "volumes": vols,
            "kept": keep,
        })
        if keep:
            terms.append((entry.label, float(sum(vols))))
            dims[entry.label] = entry.dimension
    if len(set(dims.values())) > 1:
        raise MixedDimensions(f"kept orbits have dimensions {dims}")
    return WaveFrontCycle(tuple(terms), tuple(evidence))


# --- Lemma-4.1 style centre check ---------------------------------------------------

def slice_regular_samples(slice_, count, radius=1.0):
    """Deterministic regular points of the slice near X (Halton design)."""
    k = slice_.dim
    pts = qmc.Halton(d=k, scramble=False).random(8 * count + 1)[1:] * 2 - 1
    out = []
    for s in pts:
        x = slice_.point(radius * s)
        if is_regular(x):
            out.append(x)
            if len(out) == count:
                break
    return out


def lemma41_check(slice_, levi, samples):
    """Intersection over samples of ``Z(l)  cap  Z_l(xi)``."""
    samples = list(samples)
    if not samples:
        raise EmptySamples("no sample points")
    g = levi.algebra
    if levi.dim == 0:
        return levi
    zl = levi.intersect(centralizer(levi.elements()))
    out = zl
    for xi in samples:
        out = out.intersect(centralizer([xi]))
        if out.dim == 0:
            break
    return Subspace(g, out.vectors)
