"""Basic functions, unramified Hecke shifts, local L-factors, distance bounds.

Everything is exact.  Symbolic tables hold QLaurent values (Laurent
polynomials in q^(1/2)); specialization to a rational prime power goes
through Fraction.  Strata of an embedding are addressed by integer labels,
and every computation route carries the lattice map from cocharacter data
to labels, so independent routes for the same space produce tables that can
be compared entry by entry.

Conventions fixed by the test suite rather than by derivation:
  * delta_P^(1/2) at a cocharacter point contributes q^(-<rho_P, coweight>);
    the smooth plane case forces this sign.
  * evaluation of a residual character beta at the rho_M-shifted torus point
    contributes q^(KAPPA*<2 rho_M, beta>/2); KAPPA is the single global sign
    below, and the suite asserts that exactly one choice survives the
    brute-force coset checks.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chars import QLaurent, WeightChar, decompose, kostant_counts, sym_powers_upto
from .geometry import (Cone, GE, GT, LatticeMap, LinearSystem, as_vec, feasible,
                       hilbert_basis_pointed, int_vec, inverse_unimodular,
                       lattice_points, primitive, saturation_quotient, vdot)
from .rootdata import ParabolicDatum, RootDatum, dual_datum, levi_datum

KAPPA = 1


# ---------------------------------------------------------------------------
# computation routes

@dataclass(frozen=True)
class BorelRoute:
    """Full-flag route: strata are cocharacters of the acting group.

    label_map sends cocharacter coordinates to stratum labels and must be
    square unimodular, so every label determines its cocharacter.
    """

    group: RootDatum
    label_map: LatticeMap


@dataclass(frozen=True)
class PPRoute:
    """Derived-parabolic route: strata live in the Levi coweight quotient.

    label_map is defined on ambient cocharacter coordinates and must kill
    the Levi coroots, so labels are well defined on quotient classes.
    """

    group: RootDatum
    levi: tuple
    label_map: LatticeMap

    def parabolic(self) -> ParabolicDatum:
        p = ParabolicDatum(self.group, self.levi)
        for bv in p.levi.simple_coroots:
            if any(x != 0 for x in self.label_map.apply(bv)):
                raise ValueError("label map does not kill Levi coroot %r" % (bv,))
        return p


@dataclass(frozen=True)
class SmoothRoute:
    """Smooth affine closure: the basic function is the indicator of X(o)."""


@dataclass(frozen=True)
class TransportRoute:
    """Reuse a partner entry's table through an identification of closures.

    iota maps labels of this space to labels of the partner space.
    """

    partner: str
    iota: LatticeMap


# ---------------------------------------------------------------------------
# the dual radical and its f-fixed subspace

@dataclass(frozen=True)
class DualRadicalRep:
    """Coroots outside the Levi, tagged with central image and grade.

    weights: tuple of (coroot, theta_bar, m) where theta_bar is the class in
    the Levi coweight quotient and m = <2 rho_M, coroot> is the principal
    grade.
    """

    parabolic: ParabolicDatum
    weights: tuple


@dataclass(frozen=True)
class FFixedRep:
    """Lowest-weight lines of the principal sl2-strings in the dual radical.

    entries: tuple of (theta_bar, m, multiplicity) with m <= 0 the lowest
    grade of the string; multiplicity is d_m - d_{m-2} for the grade counts
    d of the class.
    """

    parabolic: ParabolicDatum
    entries: tuple

    def total_multiplicity(self) -> int:
        return sum(mult for _, _, mult in self.entries)


def dual_radical(p: ParabolicDatum) -> DualRadicalRep:
    if not p.radical_pairs:
        raise ValueError("no radical: the Levi is the whole group")
    weights = []
    for _, bv in p.radical_pairs:
        tb = p.pi(bv)
        if all(x == 0 for x in tb):
            raise ValueError("radical coroot %r has trivial central image" % (bv,))
        weights.append((tuple(int(x) for x in bv), tb, p.grade(bv)))
    return DualRadicalRep(p, tuple(sorted(weights)))


def f_fixed(r: DualRadicalRep) -> FFixedRep:
    by_class = {}
    for _, tb, m in r.weights:
        by_class.setdefault(tb, {})
        by_class[tb][m] = by_class[tb].get(m, 0) + 1
    entries = []
    for tb in sorted(by_class):
        d = by_class[tb]
        if any(d.get(m, 0) != d.get(-m, 0) for m in d):
            raise ValueError("not an sl2-character: asymmetric grades at %r" % (tb,))
        # string lowest weights by differencing along each parity chain
        for m in range(min(d), 1):
            mult = d.get(m, 0) - d.get(m - 2, 0)
            if mult < 0:
                raise ValueError("not an sl2-character: grade gap at %r" % (tb,))
            if mult:
                entries.append((tb, m, mult))
    return FFixedRep(r.parabolic, tuple(entries))


def _external_char(ff: FFixedRep) -> WeightChar:
    # quotient coordinates extended by one grade coordinate
    return WeightChar.of([(tb + (m,), mult) for tb, m, mult in ff.entries])


# ---------------------------------------------------------------------------
# basic function tables

@dataclass(frozen=True)
class BasicFunctionTable:
    """Finitely supported map from stratum labels to exact q-Laurent values."""

    datum_name: str
    case: str
    rank: int
    values: tuple  # ((label, QLaurent), ...) sorted by label
    truncation: int
    height: int

    @staticmethod
    def of(datum_name, case, rank, mapping, truncation, height) -> "BasicFunctionTable":
        items = mapping.items() if isinstance(mapping, dict) else mapping
        vals = tuple(sorted((tuple(int(x) for x in l), v) for l, v in items
                            if not v.is_zero()))
        for l, _ in vals:
            assert len(l) == rank, "label %r has wrong rank" % (l,)
        return BasicFunctionTable(datum_name, case, rank, vals, truncation, height)

    def value(self, label) -> QLaurent:
        label = tuple(int(x) for x in label)
        for l, v in self.values:
            if l == label:
                return v
        return QLaurent.zero()

    def rows(self):
        return self.values

    def support(self):
        return [l for l, _ in self.values]

    def specialize(self, q0):
        return {l: v.specialize(q0) for l, v in self.values}


def _truncation_default(group: RootDatum, lifted_gens, height: int) -> int:
    m = 1
    for g in lifted_gens:
        e = abs(vdot(group.rho, as_vec(g)))
        m = max(m, int(e) + (0 if e.denominator == 1 else 1))
    return height * m + 2


def basic_function_borel(datum, route: BorelRoute, height: int) -> BasicFunctionTable:
    """Table over all labels of l1-norm <= height by the Kostant-count formula.

    Phi0(lam) = q^(-<rho,lam>) * sum_i q^(-i) * K_i(-lam), K_i the number of
    multisets of i positive coroots with the given sum; the series is finite
    per stratum.
    """
    g = route.group
    mat = [list(r) for r in route.label_map.rows]
    if route.label_map.m != route.label_map.n or route.label_map.n != g.rank:
        raise ValueError("label map is not square of the group rank")
    minv = LatticeMap.of(inverse_unimodular(mat))
    coroots = [bv for _, bv in g.positive_pairs]
    table = {}
    for label in lattice_points(Cone.full(g.rank), height):
        lam = minv.apply(label)
        counts = kostant_counts(g.simple_coroots, coroots,
                                tuple(-x for x in lam))
        if not counts:
            continue
        e = -vdot(g.rho, as_vec(lam))
        table[label] = QLaurent.of({e - i: c for i, c in counts.items()})
    trunc = _truncation_default(g, coroots, height)
    return BasicFunctionTable.of(datum.name, "UP-Borel", g.rank, table, trunc, height)


def basic_function_pp(datum, route: PPRoute, height: int,
                      kappa: int = KAPPA) -> BasicFunctionTable:
    """Table over the antidominant stratum monoid for a derived parabolic.

    Phi0(theta) = q^(-<rho_P, lift(theta)>) * sum_i q^(-i) * c_i(-theta)
    where c_i collects the Sym^i coefficients of the f-fixed character with
    each grade-m line contributing q^(kappa*m/2).
    """
    if kappa not in (1, -1):
        raise ValueError("kappa must be +1 or -1")
    p = route.parabolic()
    ff = f_fixed(dual_radical(p))
    chi = _external_char(ff)
    gens = [g for g in p.monoid_generators if any(x != 0 for x in g)]
    downs = []
    for g in gens:
        d = tuple(-x for x in route.label_map.apply(p.lift(g)))
        if all(x == 0 for x in d) or any(x < 0 for x in d):
            raise ValueError("stratum generator %r has non-monotone label shift %r"
                             % (g, d))
        downs.append(d)

    strata = {}

    def enumerate_strata(idx, theta, label, used):
        if idx == len(gens):
            if label in strata and strata[label] != theta:
                raise ValueError("label %r reached by two strata" % (label,))
            strata[label] = theta
            return
        step = sum(downs[idx])
        n = 0
        while used + n * step <= height:
            enumerate_strata(
                idx + 1,
                tuple(t - n * gi for t, gi in zip(theta, gens[idx])),
                tuple(l + n * di for l, di in zip(label, downs[idx])),
                used + n * step)
            n += 1

    qrank = len(gens[0]) if gens else p.datum.rank
    enumerate_strata(0, (0,) * qrank, (0,) * route.label_map.m, 0)

    # each Sym step moves the label l1-norm by at least 1, so i <= height
    sym = sym_powers_upto(chi, height)
    table = {}
    for label, theta in sorted(strata.items()):
        target = tuple(-x for x in theta)
        acc = {}
        for i, s in enumerate(sym):
            for w, mult in s.weights:
                if w[:-1] == target:
                    e = Fraction(kappa * w[-1], 2) - i
                    acc[e] = acc.get(e, 0) + mult
        val = QLaurent.of(acc)
        if val.is_zero():
            continue
        table[label] = QLaurent.q_pow(-p.rho_p_pair(theta)) * val
    trunc = _truncation_default(p.datum, [p.lift(g) for g in gens], height)
    return BasicFunctionTable.of(datum.name, "PP-general", route.label_map.m,
                                 table, trunc, height)


def basic_function_smooth(datum, height: int) -> BasicFunctionTable:
    """Indicator of the integral strata: 1 on lattice points of V cap C(X)."""
    if datum.colored_cone is None:
        raise ValueError("smooth rule needs a colored cone on %s" % datum.name)
    inside = datum.valuation_cone.intersect(datum.colored_cone.cone)
    table = {tuple(l): QLaurent.one() for l in lattice_points(inside, height)}
    return BasicFunctionTable.of(datum.name, "smooth", datum.rank, table, 0, height)


def transport_height(datum, route: TransportRoute, height: int) -> int:
    """Partner height needed so every transported label is tabulated."""
    if datum.colored_cone is None:
        raise ValueError("transport needs a colored cone on %s" % datum.name)
    inside = datum.valuation_cone.intersect(datum.colored_cone.cone)
    best = 0
    for l in lattice_points(inside, height):
        best = max(best, sum(abs(x) for x in route.iota.apply(l)))
    return best


def basic_function_transport(datum, route: TransportRoute,
                             partner_table: BasicFunctionTable,
                             height: int) -> BasicFunctionTable:
    """Pull the partner's table back along the label identification iota."""
    if datum.colored_cone is None:
        raise ValueError("transport needs a colored cone on %s" % datum.name)
    if transport_height(datum, route, height) > partner_table.height:
        raise ValueError("partner table of %s is too short" % route.partner)
    inside = datum.valuation_cone.intersect(datum.colored_cone.cone)
    table = {}
    for l in lattice_points(inside, height):
        v = partner_table.value(route.iota.apply(l))
        if not v.is_zero():
            table[tuple(l)] = v
    return BasicFunctionTable.of(datum.name, "transport", datum.rank, table,
                                 partner_table.truncation, height)


# ---------------------------------------------------------------------------
# Satake shifts of minuscule and central Hecke operators

def minuscule_satake(rd: RootDatum, mu) -> dict:
    """Satake transform of the basis operator at mu: q^<rho,mu> * sum over W.mu.

    Valid exactly when the coweight is minuscule or central, where the Weyl
    orbit exhausts the weights of the dual representation.
    """
    dom = rd.dominant_cochar(mu)
    for a, _ in rd.positive_pairs:
        if vdot(as_vec(a), as_vec(dom)) > 1:
            raise ValueError("coweight %r is neither minuscule nor central" % (mu,))
    e = vdot(rd.rho, as_vec(dom))
    return {lam: QLaurent.q_pow(e) for lam in rd.weyl_orbit_cochar(dom)}


def borel_shifts(route: BorelRoute, satake: dict):
    """Shift list [(label shift, coefficient)] acting by
    (h*f)(l) = sum coeff * f(l + shift)."""
    out = []
    for lam, c in sorted(satake.items()):
        e = vdot(route.group.rho, as_vec(lam))
        out.append((route.label_map.apply(lam), c * QLaurent.q_pow(e)))
    return out


def pp_shifts(route: PPRoute, satake: dict, kappa: int = KAPPA):
    """Shift list on quotient labels: the Satake polynomial is restricted by
    z^lam -> q^(kappa*<rho_M,lam>) z^(pi(lam)) and regrouped by class."""
    p = route.parabolic()
    by = {}
    for lam, c in satake.items():
        tb = p.pi(lam)
        e = kappa * vdot(p.rho_m, as_vec(lam))
        by[tb] = by.get(tb, QLaurent.zero()) + c * QLaurent.q_pow(e)
    out = []
    for tb in sorted(by):
        if by[tb].is_zero():
            continue
        shift = route.label_map.apply(p.lift(tb))
        out.append((shift, by[tb] * QLaurent.q_pow(p.rho_p_pair(tb))))
    return out


def apply_shifts(shifts, f: dict) -> dict:
    """Convolve a finitely supported label function with a shift list."""
    out = {}
    for shift, coeff in shifts:
        for l, v in f.items():
            if not isinstance(v, QLaurent):
                v = QLaurent.of({0: int(v)})
            k = tuple(a - b for a, b in zip(l, shift))
            out[k] = out.get(k, QLaurent.zero()) + coeff * v
    return {k: v for k, v in out.items() if not v.is_zero()}


# ---------------------------------------------------------------------------
# graded multiplicity data for a general Levi

def basic_function_graded(p: ParabolicDatum, bound: int):
    """[(i, ((highest weight, mult), ...))] for Sym^i of the dual radical,
    decomposed under the dual group of the Levi, i <= bound.

    For a non-abelian Levi the pointwise stratum values are not derivable
    from this data alone; the graded decomposition is the exact content.
    """
    if bound < 0:
        raise ValueError("degree bound must be >= 0")
    if not p.radical_pairs:
        raise ValueError("no radical: the Levi is the whole group")
    rad = WeightChar.of([(tuple(int(x) for x in bv), 1) for _, bv in p.radical_pairs])
    md = dual_datum(levi_datum(p.datum, p.levi_indices))
    return [(i, tuple(decompose(md, s)))
            for i, s in enumerate(sym_powers_upto(rad, bound))]


# ---------------------------------------------------------------------------
# local L-factors

@dataclass(frozen=True)
class LFactor:
    """Product over monomials of 1/(1 - c * q^e * T), T the formal variable.

    monomials: ((coefficient, q-exponent), ...) with repetition; coefficients
    are Fractions, or symbol names in stored metadata form.
    """

    monomials: tuple

    def is_symbolic(self) -> bool:
        return any(isinstance(c, str) for c, _ in self.monomials)

    def expand(self, bound: int, q0) -> list:
        """Coefficients of T^0..T^bound as Fractions, at q = q0."""
        if self.is_symbolic():
            raise ValueError("cannot expand a symbolic L-factor; resolve first")
        out = [Fraction(1)] + [Fraction(0)] * bound
        for c, e in self.monomials:
            # exact value of c * q0^e, including half-integral e
            m = Fraction(c) * QLaurent.q_pow(e).specialize(q0)
            for k in range(1, bound + 1):
                out[k] = out[k] + m * out[k - 1]
        return out


def _omega_value(point: dict, tb) -> Fraction:
    val = Fraction(1)
    for i, x in enumerate(tb):
        key = "t%d" % (i + 1)
        if key not in point:
            raise ValueError("missing coordinate %s" % key)
        c = Fraction(point[key])
        if c == 0:
            raise ValueError("zero coordinate %s" % key)
        val *= c ** int(x)
    return val


def local_lfactor(rep, point: dict, kappa: int = KAPPA) -> LFactor:
    """L-factor of an FFixedRep or DualRadicalRep at the character omega given
    by coordinate values point['t1'], ..., with the rho_M shift."""
    if isinstance(rep, FFixedRep):
        items = [(tb, m, mult) for tb, m, mult in rep.entries]
    elif isinstance(rep, DualRadicalRep):
        items = [(tb, m, 1) for _, tb, m in rep.weights]
    else:
        raise ValueError("unsupported representation %r" % (rep,))
    mons = []
    for tb, m, mult in items:
        c = _omega_value(point, tb)
        mons.extend([(c, Fraction(kappa * m, 2))] * mult)
    return LFactor(tuple(mons))


def lfactor_from_monomials(stored, point: dict) -> LFactor:
    """Resolve symbolic monomials ((name or rational, q-exponent), ...)."""
    mons = []
    for c, e in stored:
        if isinstance(c, str):
            if c not in point:
                raise ValueError("missing coordinate %s" % c)
            c = Fraction(point[c])
            if c == 0:
                raise ValueError("zero coordinate in L-factor point")
        else:
            c = Fraction(c)
        mons.append((c, Fraction(e)))
    return LFactor(tuple(mons))


# ---------------------------------------------------------------------------
# growth certificates and toric distance

def growth_certificate(table: BasicFunctionTable, hints=()):
    """A rational chi with deg_q Phi0(l) <= <chi, l> on every tabulated
    stratum, or None when the linear program is infeasible (inconclusive
    at finite height)."""
    rows = [(l, v.degree()) for l, v in table.rows()]
    r = table.rank
    for chi in [(0,) * r] + [tuple(Fraction(x) for x in h) for h in hints]:
        if all(vdot(as_vec(chi), as_vec(l)) >= d for l, d in rows):
            return tuple(Fraction(x) for x in chi)
    if not rows:
        return (Fraction(0),) * r
    # homogenized: <chi, l> - d*t >= 0 with t > 0, then divide by t
    cons = [((0,) * r + (1,), GT)]
    for l, d in rows:
        cons.append((tuple(2 * x for x in l) + (-int(2 * d),), GE))
    w = feasible(LinearSystem.of(cons))
    if w is None:
        return None
    chi = tuple(Fraction(w[i], w[r]) for i in range(r))
    assert all(vdot(as_vec(chi), as_vec(l)) >= d for l, d in rows)
    return chi


def toric_distance(datum, label, q0) -> Fraction:
    """q0^(-min_i <chi_i, label>) over the ideal-generating characters of the
    boundary in the toric model: the Hilbert basis of the dual of C(X),
    taken modulo the characters vanishing identically on C(X)."""
    if datum.colored_cone is None:
        raise ValueError("no colored cone on %s" % datum.name)
    c = datum.colored_cone.cone
    lab = as_vec(tuple(int(x) for x in label))
    if not c.contains(lab):
        raise ValueError("label %r is outside the embedding cone" % (label,))
    dual = c.dual()
    lin = [int_vec(primitive(v)) for v in dual.lineality_basis()]
    proj, sect = saturation_quotient(lin, c.n)
    img = proj.image_cone(dual)
    basis = hilbert_basis_pointed(img, max_rank=4)
    if not basis:
        return Fraction(1)
    best = None
    for h in basis:
        chi = sect.apply(h)
        e = vdot(as_vec(chi), lab)
        assert e.denominator == 1 and e >= 0
        best = int(e) if best is None else min(best, int(e))
    return Fraction(q0) ** (-best)
