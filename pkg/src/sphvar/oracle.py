"""Brute-force local models: truncated series, stratum labels, coset sums.

Everything here is enumerated over F = F_p((t)) for a small prime p: matrices
have truncated-series entries, orbit labels are read off valuations, and
Hecke operators act through explicit left-coset lists.  The enumeration core
is independent of the symbolic engine; only the Satake comparison at the
bottom imports it, and that comparison is the point of the module.

Precision policy: callers pass prec = 2 * height + 4 (plus the operator
degree when convolving repeatedly).  All valuations and elementary divisors
appearing at a given height are bounded by height + degree, so this leaves
room for one inversion, which costs twice the valuation.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction


class PrecisionError(ArithmeticError):
    """A valuation or coefficient was requested beyond the known precision."""


def _inv_mod(c, p):
    return pow(c, p - 2, p)


@dataclass(frozen=True)
class TruncSeries:
    """Laurent series over F_p with all coefficients known below t^prec."""

    p: int
    prec: int
    terms: tuple  # ((exp, coeff), ...) sorted, 0 < coeff < p, exp < prec

    @staticmethod
    def of(p, prec, items):
        acc = {}
        for e, c in (items.items() if isinstance(items, dict) else items):
            acc[int(e)] = (acc.get(int(e), 0) + int(c)) % p
        return TruncSeries(p, int(prec),
                           tuple(sorted((e, c) for e, c in acc.items()
                                        if c and e < prec)))

    @staticmethod
    def const(p, prec, c):
        return TruncSeries.of(p, prec, {0: c})

    @staticmethod
    def t_pow(p, prec, e, c=1):
        return TruncSeries.of(p, prec, {e: c})

    def is_zero(self):
        # zero to the stated precision; exact zeroness is not decidable
        return not self.terms

    def val(self):
        if not self.terms:
            raise PrecisionError("series is 0 mod t^%d" % self.prec)
        return self.terms[0][0]

    def _lead(self):
        return self.terms[0][0] if self.terms else self.prec

    def __add__(self, other):
        assert self.p == other.p
        prec = min(self.prec, other.prec)
        return TruncSeries.of(self.p, prec,
                              list(self.terms) + list(other.terms))

    def __neg__(self):
        return TruncSeries(self.p, self.prec,
                           tuple((e, self.p - c) for e, c in self.terms))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        assert self.p == other.p
        prec = min(self.prec + other._lead(), other.prec + self._lead())
        acc = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                if e1 + e2 < prec:
                    acc[e1 + e2] = (acc.get(e1 + e2, 0) + c1 * c2) % self.p
        return TruncSeries(self.p, prec,
                           tuple(sorted((e, c) for e, c in acc.items() if c)))

    def inverse(self):
        v = self.val()
        n = self.prec - v
        if n <= v:
            raise PrecisionError("no room to invert at valuation %d" % v)
        c = {e - v: x for e, x in self.terms}
        u = _inv_mod(c[0], self.p)
        out = {0: u}
        for k in range(1, n):
            s = sum(c.get(i, 0) * out[k - i] for i in range(1, k + 1)) % self.p
            out[k] = (-u * s) % self.p
        return TruncSeries.of(self.p, self.prec - 2 * v,
                              {e - v: x for e, x in out.items()})


# ---------------------------------------------------------------------------
# matrices with series entries

def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    assert len(a[0]) == k
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = a[i][0] * b[0][j]
            for s in range(1, k):
                acc = acc + a[i][s] * b[s][j]
            row.append(acc)
        out.append(row)
    return out


def vec_mat(v, m):
    return tuple(mat_mul([list(v)], m)[0])


def mat_det(m):
    n = len(m)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = None
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * mat_det(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total


def mat_inv(m):
    n = len(m)
    di = mat_det(m).inverse()
    if n == 1:
        return [[di]]
    out = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [row[:j] + row[j + 1:] for k, row in enumerate(m) if k != i]
            c = mat_det(minor) * di
            out[j][i] = c if (i + j) % 2 == 0 else -c
    return out


def mat_id(p, prec, n):
    one = TruncSeries.const(p, prec, 1)
    zero = TruncSeries.of(p, prec, {})
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


# ---------------------------------------------------------------------------
# lattice points of the model spaces and their orbit labels

SPACES = ("A2", "UGL2", "MAT2", "PPGL3")


@dataclass(frozen=True)
class LatticePoint:
    """A point of one of the model spaces; MAT2 stores entries row-major."""

    space: str
    coords: tuple


def stratum_point(space, label, p, prec):
    """An explicit representative of the stratum with the given label."""
    zero = TruncSeries.of(p, prec, {})

    def t(e):
        return TruncSeries.t_pow(p, prec, e)

    if space == "A2":
        (n,) = label
        return LatticePoint("A2", (zero, t(n)))
    if space == "UGL2":
        a, b = label
        return LatticePoint("UGL2", (zero, t(a), t(b)))
    if space == "MAT2":
        a, k = label
        assert 2 * a <= k, "min valuation exceeds the complementary divisor"
        return LatticePoint("MAT2", (t(a), zero, zero, t(k - a)))
    if space == "PPGL3":
        n, m = label
        return LatticePoint("PPGL3", (zero, zero, t(n), t(m)))
    raise ValueError("unknown space %r" % (space,))


def _vec_val(entries):
    vals = [e.val() for e in entries if e.terms]
    floor = min((e.prec for e in entries if not e.terms), default=None)
    if not vals:
        raise PrecisionError("vector is 0 mod t^%d" % floor)
    v = min(vals)
    if floor is not None and floor <= v:
        raise PrecisionError("an entry is only known mod t^%d" % floor)
    return v


def orbit_invariant(x: LatticePoint):
    """The stratum label: valuation data separating hyperspecial orbits.

    A2: minimal coordinate valuation.  UGL2 and PPGL3: (minimal valuation of
    the row vector, valuation of the twisting scalar).  MAT2: (minimal entry
    valuation, determinant valuation), an equivalent encoding of the
    elementary divisors.
    """
    c = x.coords
    if x.space == "A2":
        return (_vec_val(c),)
    if x.space == "UGL2":
        return (_vec_val(c[:2]), c[2].val())
    if x.space == "MAT2":
        det = c[0] * c[3] - c[1] * c[2]
        return (_vec_val(c), det.val())
    if x.space == "PPGL3":
        return (_vec_val(c[:3]), c[3].val())
    raise ValueError("unknown space %r" % (x.space,))


def right_translate(x: LatticePoint, g):
    if x.space == "A2":
        return LatticePoint("A2", vec_mat(x.coords, g))
    if x.space == "UGL2":
        v = vec_mat(x.coords[:2], g)
        return LatticePoint("UGL2", v + (x.coords[2] * mat_det(g),))
    if x.space == "MAT2":
        m = mat_mul([[x.coords[0], x.coords[1]],
                     [x.coords[2], x.coords[3]]], g)
        return LatticePoint("MAT2", (m[0][0], m[0][1], m[1][0], m[1][1]))
    if x.space == "PPGL3":
        v = vec_mat(x.coords[:3], g)
        return LatticePoint("PPGL3", v + (x.coords[3] * mat_det(g),))
    raise ValueError("unknown space %r" % (x.space,))


def left_translate(x: LatticePoint, g):
    assert x.space == "MAT2", "only the matrix space carries a left action"
    m = mat_mul(g, [[x.coords[0], x.coords[1]],
                    [x.coords[2], x.coords[3]]])
    return LatticePoint("MAT2", (m[0][0], m[0][1], m[1][0], m[1][1]))


# ---------------------------------------------------------------------------
# coset lists for the supported bi-invariant operators

def _proj_points(p, n):
    # normalized representatives: first nonzero coordinate equals 1
    pts = []
    for v in itertools.product(range(p), repeat=n):
        nz = [i for i, c in enumerate(v) if c]
        if nz and v[nz[0]] == 1:
            pts.append(v)
    return pts


def coset_reps(group, op, p, prec):
    """Left-coset representatives g_i with K g K = union of g_i K.

    GL2: unit, t1 (degree one, p+1 cosets), central.
    GL3: unit, t1 (p^2+p+1 cosets, one per residue P^2 point), wedge (the
    (1,1,0) operator, inverses of the t1 list times the uniformizer),
    central.
    """
    one = TruncSeries.const(p, prec, 1)
    zero = TruncSeries.of(p, prec, {})
    pi = TruncSeries.t_pow(p, prec, 1)
    if group == "GL2":
        if op == "unit":
            return [mat_id(p, prec, 2)]
        if op == "t1":
            reps = [[[pi, TruncSeries.const(p, prec, j)], [zero, one]]
                    for j in range(p)]
            reps.append([[one, zero], [zero, pi]])
            return reps
        if op == "central":
            return [[[pi, zero], [zero, pi]]]
    if group == "GL3":
        if op == "unit":
            return [mat_id(p, prec, 3)]
        if op in ("t1", "wedge"):
            reps = []
            for phi in _proj_points(p, 3):
                piv = next(i for i, c in enumerate(phi) if c)
                rows = []
                for i in range(3):
                    if i == piv:
                        rows.append([pi if j == piv else zero for j in range(3)])
                    else:
                        row = [zero] * 3
                        row[i] = row[i] + one
                        row[piv] = row[piv] - TruncSeries.const(p, prec, phi[i])
                        rows.append(row)
                reps.append(rows)
            if op == "t1":
                return reps
            return [[[pi * e for e in row] for row in mat_inv(b)] for b in reps]
        if op == "central":
            return [[[pi if i == j else zero for j in range(3)]
                     for i in range(3)]]
    raise ValueError("unknown operator %r for %s" % (op, group))


# ---------------------------------------------------------------------------
# convolution by coset sums

def transition_counts(space, reps, labels, p, prec, inverse=False):
    """{(source label, target label): multiplicity} under x -> x g_i,
    or x -> x g_i^{-1} with inverse set."""
    gs = [mat_inv(g) for g in reps] if inverse else reps
    out = {}
    for l in labels:
        x = stratum_point(space, l, p, prec)
        assert orbit_invariant(x) == tuple(l)
        for g in gs:
            mu = orbit_invariant(right_translate(x, g))
            key = (tuple(l), mu)
            out[key] = out.get(key, 0) + 1
    return out


def hecke_convolve(reps, f, space, labels, p, prec, inverse=False):
    """(h * f) per stratum label, h given by its coset list:
    (h * f)(x) = sum_i f(x g_i); values outside f count as zero."""
    counts = transition_counts(space, reps, labels, p, prec, inverse)
    out = {}
    for (l, mu), c in counts.items():
        if mu in f:
            out[l] = out.get(l, 0) + c * f[mu]
    return {l: v for l, v in out.items() if v}


def gj_recursion_mismatches(p, height=4, degree=4):
    """Standard-L recursion on the matrix space: F_0 = 1 at the unit
    stratum, F_i = T1 * F_{i-1} - p * (Z * F_{i-2}), with the inverse
    orientation so supports stay integral.  The local identity forces
    F_i == indicator of determinant valuation i; returns what breaks."""
    prec = 2 * (height + degree) + 4
    t1 = coset_reps("GL2", "t1", p, prec)
    z = coset_reps("GL2", "central", p, prec)
    labels = [(a, k) for k in range(degree + 1) for a in range(k // 2 + 1)]
    fs = [{(0, 0): 1}]
    bad = []
    for i in range(1, degree + 1):
        f = hecke_convolve(t1, fs[i - 1], "MAT2", labels, p, prec, inverse=True)
        if i >= 2:
            g = hecke_convolve(z, fs[i - 2], "MAT2", labels, p, prec,
                               inverse=True)
            for l, v in g.items():
                f[l] = f.get(l, 0) - p * v
        f = {l: v for l, v in f.items() if v}
        fs.append(f)
        for l in labels:
            want = 1 if l[1] == i else 0
            if f.get(l, 0) != want:
                bad.append((i, l, f.get(l, 0)))
    return bad


def mat2_coset_label_counts(p, prec, kmax):
    """Hermite forms [[t^a, u], [0, t^c]], u mod t^c, enumerate the left
    cosets inside the integral nondegenerate matrices; bucketed by label."""
    out = {}
    zero = TruncSeries.of(p, prec, {})
    for k in range(kmax + 1):
        for a in range(k + 1):
            c = k - a
            for coeffs in itertools.product(range(p), repeat=c):
                u = TruncSeries.of(p, prec, dict(enumerate(coeffs)))
                x = LatticePoint("MAT2", (TruncSeries.t_pow(p, prec, a), u,
                                          zero, TruncSeries.t_pow(p, prec, c)))
                lab = orbit_invariant(x)
                out[lab] = out.get(lab, 0) + 1
    return out


def det_count_series(p, prec, kmax):
    """Number of lattice cosets with determinant valuation 0..kmax."""
    counts = mat2_coset_label_counts(p, prec, kmax)
    return [sum(c for (a, k), c in counts.items() if k == i)
            for i in range(kmax + 1)]


def integral_table(space, height, p, prec):
    """All-ones table on the integral strata of a smooth closure, each
    stratum witnessed by an explicit representative."""
    if space == "A2":
        labs = [(n,) for n in range(height + 1)]
    elif space == "UGL2":
        labs = [(a, 0) for a in range(height + 1)]
    elif space == "PPGL3":
        labs = [(n, 0) for n in range(height + 1)]
    elif space == "MAT2":
        labs = [(a, k) for k in range(height + 1)
                for a in range(k // 2 + 1) if a + k <= height]
    else:
        raise ValueError("no integral model for %r" % (space,))
    out = {}
    for l in labs:
        assert orbit_invariant(stratum_point(space, l, p, prec)) == l
        out[l] = 1
    return out


# ---------------------------------------------------------------------------
# randomized well-definedness and interpolation checks

def random_unimodular(rng, p, prec, n):
    while True:
        m = [[TruncSeries.of(p, prec,
                             {e: rng.randrange(p) for e in range(prec)})
              for _ in range(n)] for _ in range(n)]
        d = mat_det(m)
        if d.terms and d.val() == 0:
            return m


def translate_invariance_mismatches(space, label, p, prec, trials, seed=0):
    """orbit_invariant must be constant on random hyperspecial translates;
    the matrix space is checked on both sides."""
    rng = random.Random(seed)
    x = stratum_point(space, label, p, prec)
    n = 3 if space == "PPGL3" else 2
    bad = []
    for i in range(trials):
        y = right_translate(x, random_unimodular(rng, p, prec, n))
        if space == "MAT2":
            y = left_translate(y, random_unimodular(rng, p, prec, 2))
        got = orbit_invariant(y)
        if got != tuple(label):
            bad.append((i, got))
    return bad


def interpolates(values, degree):
    """Counts at several q fit a single polynomial of the stated degree:
    Lagrange fit on the first degree+1 points, exact check on the rest."""
    qs = sorted(values)
    base = qs[:degree + 1]

    def predict(x):
        total = Fraction(0)
        for i, qi in enumerate(base):
            term = Fraction(values[qi])
            for j, qj in enumerate(base):
                if i != j:
                    term *= Fraction(x - qj, qi - qj)
            total += term
        return total

    return all(predict(q) == values[q] for q in qs)


# ---------------------------------------------------------------------------
# comparison against the symbolic engine

_OPS = {
    "UGL2": ("unit", "t1", "central"),
    "PPGL3": ("unit", "t1", "wedge", "central"),
}


def satake_mismatches(op, space, height, q):
    """Coset-sum counts vs the symbolic shift action on every stratum pair
    in the window; an empty list means the two sides agree exactly."""
    # the symbolic side, kept out of the enumeration core above
    from .engine import (BorelRoute, PPRoute, borel_shifts, minuscule_satake,
                         pp_shifts)
    from .geometry import LatticeMap
    from .rootdata import root_datum

    if space not in _OPS:
        raise ValueError("unknown space %r" % (space,))
    if op not in _OPS[space]:
        raise ValueError("unknown operator %r for %s" % (op, space))
    prec = 2 * height + 4
    if space == "UGL2":
        route = BorelRoute(root_datum("GL", 2), LatticeMap.of([(0, 1), (1, 1)]))
        mu = {"unit": (0, 0), "t1": (1, 0), "central": (1, 1)}[op]
        shifts = borel_shifts(route, minuscule_satake(route.group, mu))
        reps = coset_reps("GL2", op, q, prec)
    else:
        route = PPRoute(root_datum("GL", 3), (0,),
                        LatticeMap.of([(0, 0, 1), (1, 1, 1)]))
        mu = {"unit": (0, 0, 0), "t1": (1, 0, 0), "wedge": (1, 1, 0),
              "central": (1, 1, 1)}[op]
        shifts = pp_shifts(route, minuscule_satake(route.group, mu))
        reps = coset_reps("GL3", op, q, prec)

    window = [l for l in itertools.product(range(-height, height + 1), repeat=2)
              if abs(l[0]) + abs(l[1]) <= height]
    counts = transition_counts(space, reps, window, q, prec)
    bad = []
    for l in window:
        want = {}
        for s, c in shifts:
            tgt = tuple(a + b for a, b in zip(l, s))
            want[tgt] = want.get(tgt, 0) + c.specialize(q)
        want = {k: v for k, v in want.items() if v}
        got = {m: c for (l2, m), c in counts.items() if l2 == l}
        if got != want:
            bad.append((l, sorted(got.items()), sorted(want.items())))
    return bad


def satake_compatibility_check(op, space, height, q) -> bool:
    return not satake_mismatches(op, space, height, q)
