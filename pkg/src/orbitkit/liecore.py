"""Matrix realizations of small classical Lie algebras.

Every algebra is handled as a *real* Lie algebra.  Complex algebras such as
sp(2n, C) carry the doubled real basis ``(b_1, ..., b_k, i b_1, ..., i b_k)``.
Elements are coordinate vectors against that basis and the identification
g = g* is made through the real trace form ``<a, b> = Re tr(ab)``.

Basis conventions (fixed, so coordinates in golden files are reproducible):

* ``gl(n,R)``: the elementary matrices ``E_ij`` in row-major order.
* ``sl(n,R)``: off-diagonal ``E_ij`` in row-major order, then
  ``E_kk - E_{k+1,k+1}``.
* ``u(p,q)``: for the Hermitian form ``J = diag(I_p, -I_q)``; first
  ``i E_kk``, then for each pair ``i < j`` either ``E_ij - E_ji`` and
  ``i(E_ij + E_ji)`` (same block) or ``E_ij + E_ji`` and ``i(E_ij - E_ji)``
  (mixed blocks).  ``su(p,q)`` replaces the diagonal part by
  ``i(E_kk - E_{k+1,k+1})``; ``su(n)`` is ``su(n,0)``.
* ``sp(2n,R)``: for ``J = [[0, I], [-I, 0]]``; the ``[[A, 0], [0, -A^T]]``
  block from ``E_ij``, then symmetric upper-right blocks, then symmetric
  lower-left blocks (pairs ``i <= j``).
* ``sp(2n,C)``: the real sp basis followed by ``i`` times it.
"""

import re
from dataclasses import dataclass
from functools import cached_property

import numpy as np
import scipy.linalg

from .errors import (InvalidTriple, MixedAlgebras, NoSolution, NotInAlgebra,
                     NotNilpotent, UnsupportedFamily, ZeroNilpositive)

RANK_CUTOFF = 1e-9
COORD_TOL = 1e-8
TRIPLE_TOL = 1e-10
JM_TOL = 1e-8

FAMILIES = ("gl", "sl", "u", "su", "sp_r", "sp_c")


def _unit(n, i, j, dtype=float):
    e = np.zeros((n, n), dtype=dtype)
    e[i, j] = 1
    return e


def _gl_basis(n):
    return [_unit(n, i, j) for i in range(n) for j in range(n)]


def _sl_basis(n):
    out = [_unit(n, i, j) for i in range(n) for j in range(n) if i != j]
    out += [_unit(n, k, k) - _unit(n, k + 1, k + 1) for k in range(n - 1)]
    return out


def _u_basis(p, q, special=False):
    n = p + q
    e = lambda i, j: _unit(n, i, j, complex)
    if special:
        out = [1j * (e(k, k) - e(k + 1, k + 1)) for k in range(n - 1)]
    else:
        out = [1j * e(k, k) for k in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if (i < p) == (j < p):
                out += [e(i, j) - e(j, i), 1j * (e(i, j) + e(j, i))]
            else:
                out += [e(i, j) + e(j, i), 1j * (e(i, j) - e(j, i))]
    return out


def _sp_basis(n):
    m = 2 * n
    out = []
    for i in range(n):
        for j in range(n):
            a = np.zeros((m, m))
            a[i, j] = 1
            a[n + j, n + i] = -1
            out.append(a)
    for upper in (True, False):
        for i in range(n):
            for j in range(i, n):
                s = np.zeros((m, m))
                r, c = (i, n + j) if upper else (n + i, j)
                r2, c2 = (j, n + i) if upper else (n + j, i)
                s[r, c] = 1
                s[r2, c2] = 1
                out.append(s)
    return out


def symplectic_form(n):
    """The standard ``2n x 2n`` skew form ``[[0, I], [-I, 0]]``."""
    return np.block([[np.zeros((n, n)), np.eye(n)], [-np.eye(n), np.zeros((n, n))]])


def hermitian_form(p, q):
    return np.diag([1.0] * p + [-1.0] * q)


def _flatten(mats):
    """Real flattening ``(..., n, n) -> (..., 2 n^2)`` (real part, imag part)."""
    mats = np.asarray(mats)
    re_ = mats.real.reshape(mats.shape[:-2] + (-1,))
    im_ = np.imag(mats).reshape(mats.shape[:-2] + (-1,))
    return np.concatenate([re_, im_], axis=-1)


def nullspace(a, cutoff=RANK_CUTOFF):
    """Orthonormal rows spanning the kernel of ``a`` (relative SVD cutoff)."""
    a = np.atleast_2d(np.asarray(a, dtype=float))
    ncols = a.shape[1]
    if a.size == 0:
        return np.eye(ncols)
    _, s, vt = np.linalg.svd(a, full_matrices=True)
    if s.size == 0 or s[0] == 0.0:
        return np.eye(ncols)
    r = int(np.sum(s > cutoff * s[0]))
    return vt[r:]


def numerical_rank(a, cutoff=RANK_CUTOFF):
    a = np.atleast_2d(np.asarray(a))
    if a.size == 0:
        return 0
    s = np.linalg.svd(a, compute_uv=False)
    if s[0] == 0.0:
        return 0
    return int(np.sum(s > cutoff * s[0]))


class MatrixLieAlgebra:
    """A real Lie algebra of ``n x n`` matrices with a fixed basis.

    Arrays held by the instance are made read-only; treat the object as an
    immutable value.
    """

    def __init__(self, family, n, basis, *, p=None, q=None, name=None, rank=None,
                 check=True):
        if family not in FAMILIES:
            raise UnsupportedFamily(family)
        basis = np.array(basis)
        if np.iscomplexobj(basis) and np.allclose(basis.imag, 0):
            basis = basis.real
        self.family = family
        self.n = int(n)
        self.p, self.q = p, q
        self.name = name or family
        self.complex_entries = bool(np.iscomplexobj(basis))
        self.basis = basis
        self.dim = basis.shape[0]
        self._flat = _flatten(basis).T  # (2 n^2, dim)
        self._pinv = np.linalg.pinv(self._flat)
        prods = np.einsum("aij,bji->ab", basis, basis)
        self.traceform = np.ascontiguousarray(prods.real)
        self.rank = rank
        for arr in (self.basis, self._flat, self._pinv, self.traceform):
            arr.setflags(write=False)
        if check:
            self._check()

    def _check(self):
        if numerical_rank(self._flat) != self.dim:
            raise ValueError(f"{self.name}: basis matrices are linearly dependent")
        if abs(np.linalg.det(self.traceform)) <= 1e-10:
            raise ValueError(f"{self.name}: trace form is degenerate")
        comm = (np.einsum("aij,bjk->abik", self.basis, self.basis)
                - np.einsum("bij,ajk->abik", self.basis, self.basis))
        flat = _flatten(comm.reshape((-1, self.n, self.n))).T
        resid = flat - self._flat @ (self._pinv @ flat)
        if np.max(np.abs(resid), initial=0.0) > 1e-10:
            raise ValueError(f"{self.name}: basis is not closed under the bracket")

    def __repr__(self):
        return f"MatrixLieAlgebra({self.name}, dim={self.dim})"

    @property
    def dtype(self):
        return complex if self.complex_entries else float

    def element(self, coords):
        c = np.array(coords, dtype=float).reshape(self.dim)
        return Element(self, c)

    def zero(self):
        return self.element(np.zeros(self.dim))

    def basis_element(self, i):
        return self.element(np.eye(self.dim)[i])

    def coords_of(self, matrix, tol=COORD_TOL):
        m = np.asarray(matrix)
        flat = _flatten(m)
        c = self._pinv @ flat
        resid = np.linalg.norm(self._flat @ c - flat)
        scale = max(1.0, np.linalg.norm(flat))
        if resid > tol * scale:
            raise NotInAlgebra(f"matrix leaves {self.name} (residual {resid:.2e})")
        return c

    def from_matrix(self, matrix, tol=COORD_TOL):
        return self.element(self.coords_of(matrix, tol))

    def matrix_of(self, coords):
        return np.tensordot(np.asarray(coords, dtype=float), self.basis, axes=1)

    def ad(self, x):
        """Matrix of ``ad x`` in basis coordinates (column j = [x, b_j])."""
        m = x.matrix
        comm = np.einsum("ij,bjk->bik", m, self.basis) - np.einsum("bij,jk->bik", self.basis, m)
        return self._pinv @ _flatten(comm).T

    def form(self, a, b):
        return float(a.coords @ self.traceform @ b.coords)

    @cached_property
    def is_compact(self):
        """True if the trace form is negative definite (compact real form)."""
        return bool(np.all(np.linalg.eigvalsh(self.traceform) < 0))


@dataclass(frozen=True, eq=False)
class Element:
    algebra: MatrixLieAlgebra
    coords: np.ndarray

    def __post_init__(self):
        self.coords.setflags(write=False)

    @cached_property
    def matrix(self):
        m = self.algebra.matrix_of(self.coords)
        m.setflags(write=False)
        return m

    def _same(self, other):
        if other.algebra is not self.algebra:
            raise MixedAlgebras(f"{self.algebra.name} vs {other.algebra.name}")

    def __add__(self, other):
        self._same(other)
        return self.algebra.element(self.coords + other.coords)

    def __sub__(self, other):
        self._same(other)
        return self.algebra.element(self.coords - other.coords)

    def __neg__(self):
        return self.algebra.element(-self.coords)

    def __mul__(self, s):
        return self.algebra.element(float(s) * self.coords)

    __rmul__ = __mul__

    def norm(self):
        """Frobenius norm of the matrix."""
        return float(np.linalg.norm(self.matrix))

    def __repr__(self):
        return f"Element({self.algebra.name}, {np.round(self.coords, 12).tolist()})"


@dataclass(frozen=True, eq=False)
class Subspace:
    """Subspace of an algebra, spanned by Euclidean-orthonormal coordinate rows."""

    algebra: MatrixLieAlgebra
    vectors: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.vectors, dtype=float).reshape(-1, self.algebra.dim)
        object.__setattr__(self, "vectors", v)
        v.setflags(write=False)

    @classmethod
    def span(cls, algebra, vectors):
        v = np.asarray(vectors, dtype=float).reshape(-1, algebra.dim)
        if v.shape[0] == 0:
            return cls(algebra, v)
        u, s, _ = np.linalg.svd(v.T, full_matrices=False)
        if s[0] == 0:
            return cls(algebra, np.zeros((0, algebra.dim)))
        r = int(np.sum(s > RANK_CUTOFF * s[0]))
        return cls(algebra, u[:, :r].T)

    @property
    def dim(self):
        return self.vectors.shape[0]

    def elements(self):
        return [self.algebra.element(v) for v in self.vectors]

    def project(self, coords):
        return self.vectors.T @ (self.vectors @ coords)

    def contains(self, x, tol=1e-8):
        c = x.coords if isinstance(x, Element) else np.asarray(x)
        return np.linalg.norm(c - self.project(c)) <= tol * max(1.0, np.linalg.norm(c))

    def intersect(self, other):
        if other.algebra is not self.algebra:
            raise MixedAlgebras("subspaces of different algebras")
        if self.dim == 0 or other.dim == 0:
            return Subspace(self.algebra, np.zeros((0, self.algebra.dim)))
        # a in self, b in other with A^T a = B^T b
        k = nullspace(np.hstack([self.vectors.T, -other.vectors.T]))
        return Subspace.span(self.algebra, k[:, : self.dim] @ self.vectors)


@dataclass(frozen=True, eq=False)
class Sl2Triple:
    X: Element
    H: Element
    Y: Element

    def __post_init__(self):
        self.X._same(self.H)
        self.X._same(self.Y)
        scale = max(1.0, self.X.norm(), self.H.norm(), self.Y.norm()) ** 2
        checks = {
            "[H,X]=2X": bracket(self.H, self.X) - 2 * self.X,
            "[H,Y]=-2Y": bracket(self.H, self.Y) + 2 * self.Y,
            "[X,Y]=H": bracket(self.X, self.Y) - self.H,
        }
        for name, r in checks.items():
            if np.linalg.norm(r.coords) > TRIPLE_TOL * scale:
                raise InvalidTriple(f"{name} residual {np.linalg.norm(r.coords):.2e}")
        for name, e in (("X", self.X), ("Y", self.Y)):
            if not is_nilpotent(e):
                raise InvalidTriple(f"{name} is not nilpotent")

    @property
    def algebra(self):
        return self.X.algebra


# --- operations -------------------------------------------------------------

def bracket(a, b):
    """``[a, b] = ab - ba`` expressed in basis coordinates."""
    a._same(b)
    return a.algebra.from_matrix(a.matrix @ b.matrix - b.matrix @ a.matrix)


def centralizer(elements, algebra=None):
    """Simultaneous kernel ``{w : [w, e] = 0 for all e}`` as a Subspace."""
    elements = list(elements)
    if not elements:
        raise ValueError("centralizer needs at least one element")
    g = elements[0].algebra
    if algebra is not None and algebra is not g:
        raise MixedAlgebras("element does not belong to the given algebra")
    for e in elements[1:]:
        elements[0]._same(e)
    stacked = np.vstack([g.ad(e) for e in elements])
    return Subspace(g, nullspace(stacked))


def adjoint_orbit_dimension(x):
    """Real dimension of the adjoint orbit through ``x`` (= rank of ad x)."""
    return numerical_rank(x.algebra.ad(x))


def is_nilpotent(x, tol=1e-10):
    m = x.matrix
    nrm = np.linalg.norm(m)
    if nrm == 0:
        return True
    power = np.linalg.matrix_power(m / nrm, x.algebra.n)
    return bool(np.max(np.abs(power)) < tol)


def jacobson_morozov(x):
    """Complete a nonzero nilpotent ``x`` to an sl2-triple ``(x, H, Y)``.

    H is taken in the image of ad x with ``[H, x] = 2x``; Y then solves the
    linear system ``[x, Y] = H``, ``[H, Y] = -2Y``.
    """
    g = x.algebra
    if x.norm() == 0:
        raise ZeroNilpositive("the zero element has no sl2-triple")
    if not is_nilpotent(x):
        raise NotNilpotent(repr(x))
    adx = g.ad(x)
    scale = max(1.0, x.norm())
    z = np.linalg.lstsq(adx @ adx, -2 * x.coords, rcond=None)[0]
    h = adx @ z
    if np.linalg.norm(adx @ h + 2 * x.coords) > JM_TOL * scale ** 3:
        raise NoSolution("no H with [H, X] = 2X in im(ad X)")
    H = g.element(h)
    adh = g.ad(H)
    lhs = np.vstack([adx, adh + 2 * np.eye(g.dim)])
    rhs = np.concatenate([h, np.zeros(g.dim)])
    y = np.linalg.lstsq(lhs, rhs, rcond=None)[0]
    if np.linalg.norm(lhs @ y - rhs) > JM_TOL * max(1.0, np.linalg.norm(h)) * scale:
        raise NoSolution("no Y with [X, Y] = H and [H, Y] = -2Y")
    return Sl2Triple(x, H, g.element(y))


def group_conjugate(g, x):
    """Coordinates of ``g x g^{-1}``."""
    g = np.asarray(g)
    m = g @ x.matrix @ np.linalg.inv(g)
    return x.algebra.from_matrix(m)


def exp_element(x, t=1.0):
    """Group element ``exp(t x)`` as a matrix."""
    return scipy.linalg.expm(t * x.matrix)


def charpoly(matrix):
    """Coefficients ``c_1..c_n`` of ``det(lambda - A) = lambda^n + c_1 lambda^{n-1} + ...``.

    Faddeev-LeVerrier recursion; exact for exact input up to float rounding.
    """
    a = np.asarray(matrix)
    n = a.shape[0]
    m = np.eye(n, dtype=a.dtype)
    out = []
    for k in range(1, n + 1):
        am = a @ m
        c = -np.trace(am) / k
        out.append(c)
        m = am + c * np.eye(n)
    return np.array(out)


def orbit_invariants(x):
    """Characteristic-polynomial coefficients of x, flattened to reals."""
    c = charpoly(x.matrix)
    if x.algebra.complex_entries:
        return np.concatenate([c.real, c.imag])
    return np.real(c).astype(float)


def invariant_degrees(algebra):
    """Homogeneity degree of each entry of ``orbit_invariants``."""
    d = np.arange(1, algebra.n + 1)
    return np.concatenate([d, d]) if algebra.complex_entries else d


def orbit_sheet(x, tol=1e-9):
    """Discrete orbit invariant not seen by the characteristic polynomial.

    For sl(2,R) the elliptic and nonzero nilpotent orbits come in pairs
    (upper/lower sheet of the cone); the sign of ``b - c`` for
    ``x = [[a, b], [c, -a]]`` separates them.  Returns +1/-1 there and 0
    otherwise (including all other algebras).
    """
    g = x.algebra
    if g.family != "sl" or g.n != 2:
        return 0
    (a, b), (c, _) = x.matrix
    scale = max(1.0, x.norm()) ** 2
    if x.norm() == 0 or a * a + b * c > tol * scale:
        return 0
    return 1 if b - c > 0 else -1


def is_regular(x):
    return centralizer([x]).dim == x.algebra.rank


def center(algebra):
    return centralizer([algebra.basis_element(i) for i in range(algebra.dim)])


def is_compact_mod_center(sub):
    """Whether the subalgebra ``sub`` is compact modulo the center of g.

    Uses the trace form: a subalgebra is compact iff the (invariant) form
    is negative definite on it.  The center of g is split off first through
    its trace-form orthogonal complement.
    """
    g = sub.algebra
    if sub.dim == 0:
        return True
    z = center(g)
    vecs = sub.vectors
    if z.dim:
        k = nullspace(z.vectors @ g.traceform @ vecs.T)
        vecs = k @ vecs
    if vecs.shape[0] == 0:
        return True
    f = vecs @ g.traceform @ vecs.T
    ev = np.linalg.eigvalsh(0.5 * (f + f.T))
    return bool(np.all(ev < -1e-9 * max(1.0, np.max(np.abs(ev)))))


def reductive_centralizer_subspace(x, triple=None):
    """Lie algebra of ``Z_G{X,H,Y}`` (all of g when x = 0)."""
    if x.norm() == 0:
        return centralizer([x])
    triple = triple or jacobson_morozov(x)
    return centralizer([triple.X, triple.H, triple.Y])


# --- family constructors ----------------------------------------------------

def sl(n):
    return MatrixLieAlgebra("sl", n, _sl_basis(n), name=f"sl({n},R)", rank=n - 1)


def gl(n):
    return MatrixLieAlgebra("gl", n, _gl_basis(n), name=f"gl({n},R)", rank=n)


def u(p, q=0):
    return MatrixLieAlgebra("u", p + q, _u_basis(p, q), p=p, q=q,
                            name=f"u({p},{q})", rank=p + q)


def su(p, q=0):
    name = f"su({p})" if q == 0 else f"su({p},{q})"
    return MatrixLieAlgebra("su", p + q, _u_basis(p, q, special=True), p=p, q=q,
                            name=name, rank=p + q - 1)


def sp_real(m):
    if m % 2:
        raise UnsupportedFamily("sp(m) needs even m")
    return MatrixLieAlgebra("sp_r", m, _sp_basis(m // 2), name=f"sp({m},R)", rank=m // 2)


def sp_complex(m):
    if m % 2:
        raise UnsupportedFamily("sp(m) needs even m")
    b = _sp_basis(m // 2)
    basis = [x.astype(complex) for x in b] + [1j * x for x in b]
    return MatrixLieAlgebra("sp_c", m, basis, name=f"sp({m},C)", rank=m)


_GROUP_RE = re.compile(r"^\s*(sl|gl|su|u|sp)\s*\(\s*(\d+)\s*(?:,\s*(\d+|R|C)\s*)?\)\s*$", re.I)


def parse_group(spec):
    """Parse strings such as ``sl(2,R)``, ``u(2,2)``, ``su(2)``, ``sp(4,C)``.

    Returns ``(family, args)`` where ``args`` are the integer parameters.
    """
    m = _GROUP_RE.match(spec)
    if not m:
        raise UnsupportedFamily(f"cannot parse group {spec!r}")
    fam, a, b = m.group(1).lower(), int(m.group(2)), m.group(3)
    b = b.upper() if b and not b.isdigit() else b
    if fam in ("sl", "gl"):
        if b not in (None, "R"):
            raise UnsupportedFamily(f"{spec}: only real forms of sl/gl are supported")
        return fam, (a,)
    if fam in ("u", "su"):
        if b in ("R", "C"):
            raise UnsupportedFamily(spec)
        return fam, (a, int(b) if b else 0)
    if b == "C":
        return "sp_c", (a,)
    if b in (None, "R"):
        return "sp_r", (a,)
    raise UnsupportedFamily(spec)


_CONSTRUCTORS = {"sl": sl, "gl": gl, "u": u, "su": su, "sp_r": sp_real, "sp_c": sp_complex}


def make_algebra(spec):
    """Build an algebra from a group string or a declarative mapping.

    Mapping keys: ``family`` (group-string family such as ``sl`` or ``sp_c``),
    ``n`` or ``p``/``q``, and optionally ``basis``: a list of row-major
    entry lists (complex entries may be given as strings like ``"1j"``).
    """
    if isinstance(spec, MatrixLieAlgebra):
        return spec
    if isinstance(spec, str):
        fam, args = parse_group(spec)
        return _CONSTRUCTORS[fam](*args)
    spec = dict(spec)
    if "group" in spec:
        base = make_algebra(spec["group"])
    else:
        fam = spec["family"]
        if fam not in _CONSTRUCTORS:
            raise UnsupportedFamily(fam)
        if fam in ("u", "su"):
            base = _CONSTRUCTORS[fam](int(spec["p"]), int(spec.get("q", 0)))
        else:
            base = _CONSTRUCTORS[fam](int(spec["n"]))
    if "basis" not in spec:
        return base
    n = base.n
    mats = [np.array([complex(v) for v in row], dtype=complex).reshape(n, n)
            for row in spec["basis"]]
    return MatrixLieAlgebra(base.family, n, mats, p=base.p, q=base.q,
                            name=base.name, rank=base.rank)
