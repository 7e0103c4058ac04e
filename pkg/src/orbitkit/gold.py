"""Gold cases and the property suites behind ``orbitkit verify``.

Each suite returns a list of plain records
``{"suite", "case", "check", "value", "tol", "passed"}``.
"""

import numpy as np

from . import asymptotics, liecore, slicegeom
from .asymptotics import TestFunction

SUITES = ("slices", "scaling", "limits", "chambers", "lemma41", "kirillov")


# --- gold elements ---------------------------------------------------------------

def sl2():
    return liecore.make_algebra("sl(2,R)")


def su2():
    return liecore.make_algebra("su(2)")


def elliptic(c=1.0, sign=1, g=None):
    """``sign * [[0, 1], [-c, 0]]``-type element with determinant c (upper sheet for sign=+1)."""
    g = g or sl2()
    s = np.sqrt(c)
    return g.from_matrix(sign * np.array([[0.0, s], [-s, 0.0]]))


def hyperbolic(a=1.0, g=None):
    g = g or sl2()
    return g.from_matrix(np.diag([a, -a]))


def quantized(k, g=None):
    """su(2) element whose orbit has canonical volume k + 1."""
    g = g or su2()
    r = (k + 1) / 2
    return g.from_matrix(np.diag([1j * r, -1j * r]))


def sp4_22(g=None):
    """A {2,2}-type nilpotent of sp(4,R): ``[[0, I], [0, 0]]``."""
    g = g or liecore.make_algebra("sp(4,R)")
    z = np.zeros((2, 2))
    return g.from_matrix(np.block([[z, np.eye(2)], [z, z]]))


def fbank_sl2(g=None):
    g = g or sl2()
    spec = [([[0, 0], [0, 0]], 1.0), ([[0.3, 0.5], [0.1, -0.3]], 0.8),
            ([[0, 1], [0, 0]], 0.7), ([[0.2, 0], [0.4, -0.2]], 1.2),
            ([[-0.1, 0.3], [-0.2, 0.1]], 0.9)]
    return [TestFunction("gaussian", g.from_matrix(np.array(c, float)), w) for c, w in spec]


def fbank_su2(g=None):
    g = g or su2()
    spec = [(np.zeros((2, 2)), 1.0), (np.diag([0.3j, -0.3j]), 0.7),
            (np.array([[0, 0.5], [-0.5, 0]]), 1.1),
            (np.array([[0.2j, 0.1], [-0.1, -0.2j]]), 0.6), (np.zeros((2, 2)), 0.5)]
    return [TestFunction("gaussian", g.from_matrix(c), w) for c, w in spec]


def limit_cases():
    g, h = sl2(), su2()
    return [
        ("su(2) regular", quantized(1, h), slicegeom.nilpotent_catalog(h), fbank_su2(h)),
        ("sl(2,R) elliptic", elliptic(1.0, 1, g), slicegeom.nilpotent_catalog(g), fbank_sl2(g)),
        ("sl(2,R) hyperbolic", hyperbolic(1.0, g), slicegeom.nilpotent_catalog(g), fbank_sl2(g)),
    ]


# --- suites ------------------------------------------------------------------------

def _rec(suite, case, check, value, tol, passed):
    return {"suite": suite, "case": case, "check": check,
            "value": value if isinstance(value, (str, bool, int)) or value is None else float(value),
            "tol": tol, "passed": bool(passed)}


def suite_slices():
    out = []
    g = sl2()
    tr = liecore.jacobson_morozov(g.from_matrix([[0.0, 1.0], [0.0, 0.0]]))
    s = slicegeom.build_slice(tr)
    out.append(_rec("slices", "sl(2,R) e", "base dimension 1, ad_H eigenvalue -2",
                    f"{s.dim} {s.spectrum}", None,
                    s.dim == 1 and abs(s.spectrum[0] + 2) < 1e-10))
    s4 = slicegeom.slice_at(sp4_22())
    out.append(_rec("slices", "sp(4,R) {2,2}", "base dimension 4", s4.dim, None, s4.dim == 4))
    for group in ("sl(2,R)", "su(2)", "sl(3,R)"):
        for entry in slicegeom.nilpotent_catalog(group):
            inter = slicegeom.intersect_orbit_slice(entry.element, entry.slice)
            err = max((np.linalg.norm(p.coords - entry.element.coords) for p in inter.points),
                      default=np.inf)
            out.append(_rec("slices", f"{group} {entry.label}", "O_X meets S_X exactly in {X}",
                            err, 0.0, len(inter.points) == 1 and err == 0.0))
    cat = slicegeom.nilpotent_catalog(g)
    for name, nu in (("elliptic+", elliptic(1.0, 1, g)), ("elliptic-", elliptic(1.0, -1, g)),
                     ("hyperbolic", hyperbolic(1.0, g))):
        for entry in cat:
            flags = [not slicegeom.intersect_orbit_slice(t * nu, entry.slice).empty
                     for t in (0.1, 1.0, 10.0)]
            out.append(_rec("slices", f"sl(2,R) {name} at {entry.label}",
                            "nonemptiness independent of t in {0.1, 1, 10}",
                            str(flags), None, len(set(flags)) == 1))
    return out


def suite_scaling():
    out = []
    g = sl2()
    cat = {e.label: e for e in slicegeom.nilpotent_catalog(g)}
    cases = [("elliptic+", elliptic(2.0, 1, g), "2[+]"), ("elliptic-", elliptic(0.5, -1, g), "2[-]"),
             ("hyperbolic", hyperbolic(1.5, g), "2[+]"), ("hyperbolic", hyperbolic(1.5, g), "2[-]")]
    for name, nu, lab in cases:
        s = cat[lab].slice
        base = slicegeom.intersect_orbit_slice(nu, s)
        vol = slicegeom.slice_volume(nu, s, base)
        for t in (0.25, 4.0):
            scaled = slicegeom.intersect_orbit_slice(t * nu, s)
            moved = [slicegeom.scale_point(p, t, s) for p in base.points]
            err = _match_error(moved, scaled.points)
            out.append(_rec("scaling", f"{name} at {lab}, t={t}", "scaled points solve O_tnu",
                            err, 1e-7, err <= 1e-7))
        for t in (0.25, 1.0, 4.0):
            v = slicegeom.slice_volume(t * nu, s)
            rel = abs(v - vol) / vol
            out.append(_rec("scaling", f"{name} at {lab}, t={t}", "t^-m vol invariant (m=0)",
                            rel, 1e-6, rel <= 1e-6))
    h = su2()
    nu = quantized(1, h)
    z = slicegeom.zero_slice(h)
    vol = slicegeom.slice_volume(nu, z)
    for t in (0.25, 4.0):
        v = slicegeom.slice_volume(t * nu, z) / t
        rel = abs(v - vol) / vol
        out.append(_rec("scaling", f"su(2) sphere, t={t}", "t^-m vol invariant (m=1)",
                        rel, 2e-2, rel <= 2e-2))
    return out


def _match_error(a, b):
    if len(a) != len(b):
        return np.inf
    if not a:
        return 0.0
    return max(min(np.linalg.norm(p.coords - q.coords) / max(1.0, p.norm()) for q in b) for p in a)


def suite_limits():
    out = []
    for name, nu, cat, fb in limit_cases():
        rep = asymptotics.limit_formula_check(nu, cat, fb)
        out.append(_rec("limits", name, "fitted exponent", max(rep.exponent_errors), 0.05,
                        max(rep.exponent_errors) < 0.05))
        out.append(_rec("limits", name, "leading coefficient", max(rep.rel_errors), 0.05,
                        max(rep.rel_errors) < 0.05))
    return out


def suite_chambers():
    g = sl2()
    cat = slicegeom.nilpotent_catalog(g)
    out = []
    pairs = [("same upper", elliptic(1.0, 1, g), elliptic(3.0, 1, g), True),
             ("same lower", elliptic(0.5, -1, g), elliptic(2.0, -1, g), True),
             ("opposite", elliptic(1.0, 1, g), elliptic(1.0, -1, g), False),
             ("identical", hyperbolic(1.0, g), hyperbolic(1.0, g), True)]
    for name, a, b, same in pairs:
        rep = asymptotics.chamber_invariance_check(a, b, cat, same)
        back = asymptotics.chamber_invariance_check(b, a, cat, same)
        out.append(_rec("chambers", name, "index sets equal iff same chamber",
                        f"{sorted(rep.set_nu)} vs {sorted(rep.set_lambda)}", None, rep.consistent))
        out.append(_rec("chambers", name, "symmetric in (nu, lambda)", back.equal, None,
                        back.equal == rep.equal))
    path = [elliptic(c, 1, g) for c in (0.5, 1.0, 2.0, 4.0)]
    sets = [frozenset(e.label for e, _ in asymptotics.asymptotic_cone(p, cat)) for p in path]
    out.append(_rec("chambers", "upper sheet path", "transitive along a chamber path",
                    len(set(sets)), None, len(set(sets)) == 1))
    return out


def suite_lemma41():
    out = []
    for name, x in (("sl(2,R) e", sl2().from_matrix([[0.0, 1.0], [0.0, 0.0]])),
                    ("sp(4,R) {2,2}", sp4_22())):
        s = slicegeom.slice_at(x)
        tr = s.triple
        levi = liecore.centralizer([tr.X, tr.H, tr.Y])
        zdim = liecore.center(x.algebra).dim
        for n in (3, 5):
            sub = slicegeom.lemma41_check(s, levi, slicegeom.slice_regular_samples(s, n))
            out.append(_rec("lemma41", f"{name}, {n} samples", "dimension equals dim Z(g)",
                            sub.dim, zdim, sub.dim == zdim))
    return out


def suite_kirillov():
    out = []
    h = su2()
    for k in range(6):
        v = slicegeom.symplectic_volume(quantized(k, h))
        out.append(_rec("kirillov", f"su(2) k={k}", "volume equals k+1", v, 1e-6,
                        abs(v - (k + 1)) < 1e-6))
    v = slicegeom.symplectic_volume(h.zero())
    out.append(_rec("kirillov", "su(2) zero", "point orbit has volume 1", v, 0.0, v == 1.0))
    return out


def run_suite(name):
    fn = {"slices": suite_slices, "scaling": suite_scaling, "limits": suite_limits,
          "chambers": suite_chambers, "lemma41": suite_lemma41, "kirillov": suite_kirillov}
    if name not in fn:
        raise KeyError(name)
    return fn[name]()
