"""Combinatorial classification of nilpotent orbits.

Labels are partitions (types A and C) or signed Young diagrams (u(p,q)).
The noticed predicate is computed twice: by the combinatorial rule on the
reductive centralizer, and by a brute-force scan over the standard proper
Levi subalgebras.  Both verdicts are kept; nothing reconciles them.
"""

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import liecore
from .errors import (InvalidLabel, MixedFamilies, NotNilpotent,
                     UnsupportedFamily)
from .liecore import (adjoint_orbit_dimension, hermitian_form, is_compact_mod_center,
                      is_nilpotent, reductive_centralizer_subspace)

# Noticed sets stated outright in the source material, kept as reference data.
REFERENCE_NOTICED = {
    "sp(4,C)": {(4,), (2, 2)},
}


# --- labels -----------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple
    orientation: int = 0  # +-1 for the two SL(n,R)-orbits of an all-even partition

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise InvalidLabel(f"non-positive part in {parts}")
        if list(parts) != sorted(parts, reverse=True):
            raise InvalidLabel(f"parts not weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def total(self):
        return sum(self.parts)

    @property
    def partition(self):
        return self

    def multiplicities(self):
        out = {}
        for p in self.parts:
            out[p] = out.get(p, 0) + 1
        return out

    def dominates(self, other):
        """Dominance order: every partial sum of self is >= that of other."""
        a = np.cumsum(self.parts + (0,) * len(other.parts))
        b = np.cumsum(other.parts + (0,) * len(self.parts))
        k = max(len(a), len(b))
        a = np.pad(a, (0, k - len(a)), mode="edge")
        b = np.pad(b, (0, k - len(b)), mode="edge")
        return bool(np.all(a >= b))

    def __str__(self):
        s = ",".join(map(str, self.parts))
        return s + {0: "", 1: "[+]", -1: "[-]"}[self.orientation]


def _row_string(length, sign):
    return "".join("+-"[(k + (sign < 0)) % 2] for k in range(length))


def _row_counts(length, sign):
    big, small = (length + 1) // 2, length // 2
    return (big, small) if sign > 0 else (small, big)


@dataclass(frozen=True)
class SignedYoungDiagram:
    """Rows ``(length, starting sign)``; signs alternate along each row."""

    rows: tuple

    def __post_init__(self):
        rows = tuple((int(d), 1 if s > 0 else -1) for d, s in self.rows)
        if any(d <= 0 for d, _ in rows):
            raise InvalidLabel(f"empty row in {rows}")
        object.__setattr__(self, "rows", tuple(sorted(rows, key=lambda r: (-r[0], -r[1]))))

    @classmethod
    def parse(cls, text):
        rows = []
        for tok in text.split(","):
            tok = tok.strip()
            if not tok or any(c not in "+-" for c in tok):
                raise InvalidLabel(f"bad row {tok!r}")
            if any(tok[k] == tok[k + 1] for k in range(len(tok) - 1)):
                raise InvalidLabel(f"signs must alternate: {tok!r}")
            rows.append((len(tok), 1 if tok[0] == "+" else -1))
        return cls(tuple(rows))

    @property
    def signature(self):
        p = sum(_row_counts(d, s)[0] for d, s in self.rows)
        q = sum(_row_counts(d, s)[1] for d, s in self.rows)
        return p, q

    @property
    def partition(self):
        return Partition(tuple(d for d, _ in self.rows))

    @property
    def total(self):
        return sum(d for d, _ in self.rows)

    def __str__(self):
        return ",".join(_row_string(d, s) for d, s in self.rows)


def parse_label(text):
    text = text.strip()
    if text and text[0] in "+-":
        return SignedYoungDiagram.parse(text)
    orient = 0
    if text.endswith("[+]"):
        orient, text = 1, text[:-3]
    elif text.endswith("[-]"):
        orient, text = -1, text[:-3]
    try:
        parts = tuple(int(t) for t in text.replace("{", "").replace("}", "").split(","))
    except ValueError as exc:
        raise InvalidLabel(text) from exc
    return Partition(tuple(sorted(parts, reverse=True)), orient)


@dataclass(frozen=True)
class CentralizerType:
    factors: tuple  # ((tag, m) | ("u", (a, b)), ...)
    compact_mod_center: bool

    def __str__(self):
        if not self.factors:
            return "1"
        out = []
        for tag, par in self.factors:
            if tag == "u":
                out.append(f"u({par[0]},{par[1]})")
            elif tag == "gl":
                out.append(f"gl({par},R)")
            else:
                out.append(f"{tag}({par},C)")
        return " x ".join(out)


def factors_compact(factors, family):
    """Compactness modulo Z(G) recomputed from the factor list."""
    if family == "A":
        return len(factors) == 1 and factors[0] == ("gl", 1)
    for tag, par in factors:
        if tag == "u" and min(par) > 0:
            return False
        if tag == "o" and par > 1:
            return False
        if tag == "sp" and par > 0:
            return False
        if tag == "gl":
            return False
    return True


@dataclass(frozen=True, eq=False)
class OrbitClass:
    label: object
    dimension: int
    centralizer: CentralizerType
    noticed: bool                  # combinatorial rule
    noticed_oracle: bool           # standard-Levi scan
    centralizer_compact: bool      # trace-form test on Z_g{X,H,Y}
    reference_noticed: object = None   # reference verdict, when one is stated
    representative: object = field(default=None, repr=False)

    def discrepancies(self):
        verdicts = {"rule": self.noticed, "oracle": self.noticed_oracle,
                    "centralizer": self.centralizer_compact}
        if self.reference_noticed is not None:
            verdicts["reference"] = self.reference_noticed
        if len(set(verdicts.values())) == 1:
            return {}
        return verdicts


# --- enumeration ------------------------------------------------------------

def _family_type(family):
    f = str(family).strip().lower().replace("type", "").strip()
    if f in ("a", "sl", "gl"):
        return "A"
    if f in ("c", "sp", "sp_r", "sp_c"):
        return "C"
    if f in ("u", "su"):
        return "U"
    raise UnsupportedFamily(str(family))


def _all_partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _all_partitions(n - k, k):
            yield (k,) + rest


def is_valid_partition(parts, family):
    if _family_type(family) != "C":
        return True
    mult = Partition(tuple(parts)).multiplicities()
    return all(m % 2 == 0 for d, m in mult.items() if d % 2 == 1)


def enumerate_partitions(total, family):
    """All partitions valid for the family, lexicographically descending.

    Type A admits every partition; type C requires odd parts to occur with
    even multiplicity.
    """
    if total < 1:
        raise ValueError("total must be >= 1")
    fam = _family_type(family)
    if fam == "U":
        raise UnsupportedFamily("use enumerate_signed_diagrams for u(p,q)")
    return [Partition(p) for p in _all_partitions(total) if is_valid_partition(p, fam)]


def enumerate_signed_diagrams(p, q):
    """Canonical signed Young diagrams of signature ``(p, q)``."""
    if p < 0 or q < 0 or p + q < 1:
        raise ValueError("need p, q >= 0 and p + q >= 1")
    out = []
    for parts in _all_partitions(p + q):
        mult = Partition(parts).multiplicities()
        lengths = sorted(mult, reverse=True)
        for choice in itertools.product(*[range(mult[d] + 1) for d in lengths]):
            rows = []
            for d, k in zip(lengths, choice):
                rows += [(d, 1)] * k + [(d, -1)] * (mult[d] - k)
            sd = SignedYoungDiagram(tuple(rows))
            if sd.signature == (p, q):
                out.append(sd)
    return out


def reductive_centralizer(label, family=None):
    """Factor list of the reductive centralizer attached to a label.

    u(p,q): one ``u(p_d, q_d)`` per row length d.  Type C: ``sp(m_d)`` for
    odd d and ``o(m_d)`` for even d.  Type A: ``gl(m_d, R)``.
    """
    if isinstance(label, SignedYoungDiagram):
        counts = {}
        for d, s in label.rows:
            a, b = counts.get(d, (0, 0))
            counts[d] = (a + (s > 0), b + (s < 0))
        factors = tuple(("u", counts[d]) for d in sorted(counts, reverse=True))
        return CentralizerType(factors, factors_compact(factors, "U"))
    if not isinstance(label, Partition):
        raise InvalidLabel(repr(label))
    fam = _family_type(family or "A")
    mult = label.multiplicities()
    if fam == "C":
        if not is_valid_partition(label.parts, "C"):
            raise InvalidLabel(f"{label}: odd parts need even multiplicity")
        factors = tuple((("sp" if d % 2 else "o"), m) for d, m in
                        sorted(mult.items(), reverse=True))
    elif fam == "A":
        factors = tuple(("gl", m) for d, m in sorted(mult.items(), reverse=True))
    else:
        raise InvalidLabel(f"partition label for family {family}")
    return CentralizerType(factors, factors_compact(factors, fam))


def is_noticed_rule(label, family=None):
    """Combinatorial noticed predicate.

    For signed diagrams: every group of equal-length rows starts with one
    sign.  For partitions: the reductive centralizer is compact modulo the
    center.
    """
    if isinstance(label, SignedYoungDiagram):
        starts = {}
        for d, s in label.rows:
            starts.setdefault(d, set()).add(s)
        return all(len(v) == 1 for v in starts.values())
    return reductive_centralizer(label, family).compact_mod_center


# --- representatives ----------------------------------------------------------

def _jordan_block_matrix(parts, n=None):
    n = n or sum(parts)
    m = np.zeros((n, n))
    pos = 0
    for d in parts:
        for a in range(d - 1):
            m[pos + a, pos + a + 1] = 1.0
        pos += d
    return m


def _type_c_matrix(parts, npairs=None):
    """Nilpotent in sp(2n) (standard form J) with the given Jordan type."""
    npairs = npairs if npairs is not None else sum(parts) // 2
    m = np.zeros((2 * npairs, 2 * npairs))
    j0 = 0
    mult = Partition(tuple(parts)).multiplicities()
    for d in sorted(mult, reverse=True):
        if d % 2 == 0:
            for _ in range(mult[d]):
                # chain v_0..v_{d-1}; v_a = e_{j0+a}, v_{d-1-a} = (-1)^a f_{j0+a}
                pos, sg = {}, {}
                for a in range(d // 2):
                    pos[a], sg[a] = j0 + a, 1.0
                    pos[d - 1 - a], sg[d - 1 - a] = npairs + j0 + a, (-1.0) ** a
                for a in range(d - 1):
                    m[pos[a + 1], pos[a]] = sg[a + 1] * sg[a]
                j0 += d // 2
        else:
            for _ in range(mult[d] // 2):
                for a in range(d - 1):
                    m[j0 + a + 1, j0 + a] = 1.0
                    m[npairs + j0 + a, npairs + j0 + a + 1] = -1.0
                j0 += d
    return m


def _signed_matrix(label):
    """Nilpotent X in u(p,q) (form J = diag(I_p, -I_q)) for a signed diagram."""
    n = label.total
    nmat = np.zeros((n, n))
    form = np.zeros((n, n))
    pos = 0
    for d, s in label.rows:
        for a in range(d - 1):
            nmat[pos + a + 1, pos + a] = 1.0
        for a in range(d):
            form[pos + a, pos + d - 1 - a] = s
        pos += d
    lam, vec = np.linalg.eigh(form)
    order = np.argsort(-lam)
    lam, vec = lam[order], vec[:, order]
    t = np.diag(np.sqrt(np.abs(lam))) @ vec.T
    return -1j * (t @ nmat @ np.linalg.inv(t))


def representative(label, algebra):
    """A nilpotent Element of ``algebra`` in the orbit named by ``label``."""
    g = liecore.make_algebra(algebra)
    if isinstance(label, SignedYoungDiagram):
        if g.family not in ("u", "su") or label.signature != (g.p, g.q):
            raise InvalidLabel(f"{label} does not fit {g.name}")
        return g.from_matrix(_signed_matrix(label))
    if label.total != g.n:
        raise InvalidLabel(f"{label} does not fit {g.name}")
    if g.family in ("gl", "sl"):
        m = _jordan_block_matrix(label.parts)
        if label.orientation < 0:
            flip = np.diag([-1.0] + [1.0] * (g.n - 1))
            m = flip @ m @ flip
        return g.from_matrix(m)
    if g.family in ("sp_r", "sp_c"):
        if not is_valid_partition(label.parts, "C"):
            raise InvalidLabel(f"{label} is not a type C partition")
        return g.from_matrix(_type_c_matrix(label.parts).astype(g.dtype))
    raise UnsupportedFamily(g.name)


# --- numerical invariants of nilpotents ------------------------------------

def _kernel(a, cutoff=1e-9):
    a = np.asarray(a)
    _, s, vh = np.linalg.svd(a)
    r = int(np.sum(s > cutoff))
    return vh[r:].conj().T


def jordan_type(x):
    """Jordan type of a nilpotent element, from ranks of matrix powers."""
    if not is_nilpotent(x):
        raise NotNilpotent(repr(x))
    m = np.asarray(x.matrix, dtype=complex)
    nrm = np.linalg.norm(m)
    n = m.shape[0]
    if nrm == 0:
        return Partition((1,) * n)
    m = m / nrm
    ranks = [n]
    power = np.eye(n, dtype=complex)
    while ranks[-1] > 0:
        power = power @ m
        ranks.append(int(np.sum(np.linalg.svd(power, compute_uv=False) > 1e-8)))
    at_least = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    parts = []
    for k in range(len(at_least)):
        exactly = at_least[k] - (at_least[k + 1] if k + 1 < len(at_least) else 0)
        parts += [k + 1] * exactly
    return Partition(tuple(sorted(parts, reverse=True)))


def signed_diagram_of(x):
    """Signed Young diagram of a nilpotent in u(p,q) / su(p,q).

    With N = iX (self-adjoint for the form J) the Hermitian form
    ``(v, w) -> <N^{d-1} v, w>`` on ker N^d has signature equal to the counts
    of length-d rows starting with + and -.
    """
    g = x.algebra
    if g.family not in ("u", "su"):
        raise UnsupportedFamily(g.name)
    jt = jordan_type(x)
    j = hermitian_form(g.p, g.q)
    nrm = x.norm()
    if nrm == 0:
        return SignedYoungDiagram(tuple((1, 1) for _ in range(g.p)) +
                                  tuple((1, -1) for _ in range(g.q)))
    nmat = 1j * np.asarray(x.matrix) / nrm
    rows = []
    for d, mult in jt.multiplicities().items():
        b = _kernel(np.linalg.matrix_power(nmat, d))
        h = b.conj().T @ j @ np.linalg.matrix_power(nmat, d - 1) @ b
        ev = np.linalg.eigvalsh(0.5 * (h + h.conj().T))
        tol = 1e-8 * max(1.0, np.max(np.abs(ev)))
        pos, neg = int(np.sum(ev > tol)), int(np.sum(ev < -tol))
        if pos + neg != mult:
            raise InvalidLabel(f"sign form for rows of length {d} has rank {pos + neg} != {mult}")
        rows += [(d, 1)] * pos + [(d, -1)] * neg
    return SignedYoungDiagram(tuple(rows))


def nilpotent_invariant(x):
    """Complete orbit invariant used by the Levi oracle."""
    g = x.algebra
    if g.family in ("u", "su"):
        key = str(signed_diagram_of(x))
    else:
        key = str(jordan_type(x))
    return key, adjoint_orbit_dimension(x)


# --- Levi oracle --------------------------------------------------------------

def _standard_levi_nilpotents_A(g):
    n = g.n
    for blocks in _all_partitions(n):
        if len(blocks) < 2:
            continue
        for parts in itertools.product(*[list(_all_partitions(b)) for b in blocks]):
            m = np.zeros((n, n))
            pos = 0
            for b, lam in zip(blocks, parts):
                m[pos:pos + b, pos:pos + b] = _jordan_block_matrix(lam)
                pos += b
            yield ("gl" + "x".join(map(str, blocks)), g.from_matrix(m))


def _standard_levi_nilpotents_C(g):
    npairs = g.n // 2
    for k in range(1, npairs + 1):
        for blocks in _all_partitions(k):
            rest = npairs - k
            sp_parts = ([()] if rest == 0 else
                        [p for p in _all_partitions(2 * rest) if is_valid_partition(p, "C")])
            gl_parts = [list(_all_partitions(b)) for b in blocks]
            for lams in itertools.product(*gl_parts):
                for mu in sp_parts:
                    m = np.zeros((2 * npairs, 2 * npairs))
                    pos = 0
                    for b, lam in zip(blocks, lams):
                        a = _jordan_block_matrix(lam)
                        m[pos:pos + b, pos:pos + b] = a
                        m[npairs + pos:npairs + pos + b, npairs + pos:npairs + pos + b] = -a.T
                        pos += b
                    if rest:
                        sub = _type_c_matrix(mu, rest)
                        idx = list(range(k, npairs)) + list(range(npairs + k, 2 * npairs))
                        m[np.ix_(idx, idx)] = sub
                    name = "gl" + "x".join(map(str, blocks)) + f"+sp{2 * rest}"
                    yield name, g.from_matrix(m.astype(g.dtype))


def _standard_levi_nilpotents_U(g):
    p, q = g.p, g.q
    n = p + q
    for k in range(1, min(p, q) + 1):
        w = np.zeros((n, n))
        for j in range(k):
            w[j, j] = w[p + j, j] = 1 / np.sqrt(2)
            w[j, k + j] = 1 / np.sqrt(2)
            w[p + j, k + j] = -1 / np.sqrt(2)
        rest = list(range(k, p)) + list(range(p + k, n))
        for c, r in enumerate(rest):
            w[r, 2 * k + c] = 1.0
        winv = np.linalg.inv(w)
        p2, q2 = p - k, q - k
        inner = [None] if p2 + q2 == 0 else enumerate_signed_diagrams(p2, q2)
        for blocks in _all_partitions(k):
            for lams in itertools.product(*[list(_all_partitions(b)) for b in blocks]):
                a = np.zeros((k, k))
                pos = 0
                for b, lam in zip(blocks, lams):
                    a[pos:pos + b, pos:pos + b] = _jordan_block_matrix(lam)
                    pos += b
                for sd in inner:
                    m = np.zeros((n, n), dtype=complex)
                    m[:k, :k] = a
                    m[k:2 * k, k:2 * k] = -a.T
                    if sd is not None:
                        m[2 * k:, 2 * k:] = _signed_matrix(sd)
                    name = "gl" + "x".join(map(str, blocks)) + f"+u({p2},{q2})"
                    yield name, g.from_matrix(w @ m @ winv)


@lru_cache(maxsize=None)
def _levi_invariants(name):
    g = liecore.make_algebra(name)
    if g.family in ("gl", "sl"):
        gen = _standard_levi_nilpotents_A(g)
    elif g.family == "sp_c":
        gen = _standard_levi_nilpotents_C(g)
    elif g.family in ("u", "su"):
        gen = _standard_levi_nilpotents_U(g)
    else:
        raise UnsupportedFamily(f"no Levi oracle for {name}")
    out = {}
    for levi, x in gen:
        out.setdefault(nilpotent_invariant(x), levi)
    return out


def levi_witness(x):
    """Name of a proper standard Levi meeting the orbit of x, or None."""
    if not is_nilpotent(x):
        raise NotNilpotent(repr(x))
    return _levi_invariants(x.algebra.name).get(nilpotent_invariant(x))


def is_noticed_oracle(x, algebra=None):
    """Noticed iff no proper standard Levi contains a nilpotent in the orbit of x."""
    if algebra is not None and liecore.make_algebra(algebra).name != x.algebra.name:
        raise ValueError("element does not belong to the given algebra")
    return levi_witness(x) is None


# --- classification -----------------------------------------------------------

def orbit_labels(algebra):
    g = liecore.make_algebra(algebra)
    if g.family in ("u", "su"):
        return enumerate_signed_diagrams(g.p, g.q)
    if g.family == "sp_c":
        return enumerate_partitions(g.n, "C")
    if g.family == "gl":
        return enumerate_partitions(g.n, "A")
    if g.family == "sl":
        out = []
        for lab in enumerate_partitions(g.n, "A"):
            if all(d % 2 == 0 for d in lab.parts):
                out += [Partition(lab.parts, 1), Partition(lab.parts, -1)]
            else:
                out.append(lab)
        return out
    raise UnsupportedFamily(f"classification of {g.name} is not supported")


def classify_orbits(group):
    """Full nilpotent orbit table for a supported group."""
    g = liecore.make_algebra(group)
    fam = {"u": "U", "su": "U", "sp_c": "C", "gl": "A", "sl": "A"}.get(g.family)
    if fam is None:
        raise UnsupportedFamily(g.name)
    reference = REFERENCE_NOTICED.get(g.name)
    out = []
    for lab in orbit_labels(g):
        x = representative(lab, g)
        cent = reductive_centralizer(lab, fam)
        rule = is_noticed_rule(lab, fam)
        claimed = None
        if reference is not None:
            claimed = lab.parts in reference
        elif fam == "U":
            claimed = rule
        out.append(OrbitClass(
            label=lab,
            dimension=adjoint_orbit_dimension(x),
            centralizer=cent,
            noticed=rule,
            noticed_oracle=is_noticed_oracle(x),
            centralizer_compact=is_compact_mod_center(reductive_centralizer_subspace(x)),
            reference_noticed=claimed,
            representative=x,
        ))
    return out


def closure_order(labels):
    """Covering pairs ``(upper, lower)`` of the dominance order on partitions."""
    labels = list(labels)
    if not labels:
        return []
    kinds = {type(lab) for lab in labels}
    totals = {lab.total for lab in labels}
    if len(kinds) > 1 or len(totals) > 1:
        raise MixedFamilies("labels from different families or sizes")

    def below(a, b):
        pa, pb = a.partition, b.partition
        return pa.parts != pb.parts and pb.dominates(pa)

    covers = []
    for a in labels:
        for b in labels:
            if below(a, b) and not any(below(a, c) and below(c, b) for c in labels):
                covers.append((b, a))
    return covers
