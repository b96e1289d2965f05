"""Spherical-variety data and its combinatorial criteria.

A SphericalDatum is pure input data: the character lattice of X inside the
ambient torus character lattice, the valuation cone, the colors with their
images, the Levi roots and spherical roots, and optionally a colored cone
and little Weyl group generators. All criteria here (colored-cone validity,
affineness, wavefront, induction, negligibility) are exact rational
computations on that data.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .geometry import (Cone, EQ, GE, GT, LT, LatticeMap, LinearSystem,
                       feasible, lattice_points, matrix_rank, primitive,
                       torsion_order, vdot)
from .rootdata import RootDatum


@dataclass(frozen=True)
class ColoredCone:
    """A cone in Lambda_X tensor Q together with a subset of color labels."""

    cone: Cone
    colors: tuple

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(self.colors))

    def same_as(self, other: "ColoredCone") -> bool:
        return self.cone == other.cone and set(self.colors) == set(other.colors)


@dataclass(frozen=True)
class SphericalDatum:
    name: str
    ambient: RootDatum
    rank: int
    lattice_map: LatticeMap          # X(X) -> X(A), columns are a basis of X(X)
    valuation_cone: Cone             # in Lambda_X tensor Q
    colors: tuple = ()               # of (label, rho(D) in Lambda_X)
    levi_roots: tuple = ()           # indices into ambient.simple_roots
    spherical_roots: tuple = ()      # intrinsic vectors in X(X) coordinates
    little_weyl: tuple = None        # optional matrix generators of W_X
    colored_cone: ColoredCone = None

    def __post_init__(self):
        colors = tuple((str(lbl), tuple(int(x) for x in rho))
                       for lbl, rho in self.colors)
        object.__setattr__(self, "colors", colors)
        object.__setattr__(self, "levi_roots", tuple(sorted(int(i) for i in self.levi_roots)))
        object.__setattr__(self, "spherical_roots",
                           tuple(tuple(int(x) for x in g) for g in self.spherical_roots))
        if self.little_weyl is not None:
            object.__setattr__(self, "little_weyl",
                               tuple(tuple(tuple(int(x) for x in row) for row in m)
                                     for m in self.little_weyl))
        if self.lattice_map.m != self.ambient.rank or self.lattice_map.n != self.rank:
            raise ValueError("lattice map must be (ambient rank) x (rank)")
        if self.valuation_cone.n != self.rank:
            raise ValueError("valuation cone lives in the wrong dimension")
        for lbl, rho in colors:
            if len(rho) != self.rank:
                raise ValueError("color %s has a bad coordinate length" % lbl)
        for i in self.levi_roots:
            if not 0 <= i < self.ambient.nsimple:
                raise ValueError("Levi root index %d out of range" % i)
        for g in self.spherical_roots:
            if len(g) != self.rank:
                raise ValueError("spherical root %r has a bad length" % (g,))
            for v in self.valuation_cone.generators:
                if vdot([int(x) for x in g], v) > 0:
                    raise ValueError(
                        "spherical root %r pairs > 0 with a valuation generator" % (g,))
        chamber = antidominant_cochar_chamber(self.ambient)
        img = self.lattice_map.transpose().image_cone(chamber)
        if not self.valuation_cone.contains_cone(img):
            raise ValueError("valuation cone misses the antidominant chamber image")
        if self.little_weyl is not None:
            self._check_fundamental_domain()

    def _check_fundamental_domain(self):
        # sampled orbits of W_X must meet the valuation cone only once
        samples = list(self.valuation_cone.generators)
        if len(samples) >= 2:
            samples.append(tuple(a + b for a, b in zip(samples[0], samples[1])))
        for v in samples:
            if all(x == 0 for x in v):
                continue
            orbit = _matrix_orbit(v, self.little_weyl)
            hits = [w for w in orbit if self.valuation_cone.contains(w)]
            if any(w != tuple(v) for w in hits):
                raise ValueError("little Weyl sample orbit meets the cone twice")

    def color_map(self):
        return dict(self.colors)

    def rho_image(self, labels):
        cmap = self.color_map()
        out = []
        for lbl in labels:
            if lbl not in cmap:
                raise ValueError("unknown color label %r" % (lbl,))
            out.append(cmap[lbl])
        return out

    def ambient_spherical_roots(self):
        return [self.lattice_map.apply(g) for g in self.spherical_roots]


def _matrix_orbit(v, mats):
    seen = {tuple(v)}
    frontier = [tuple(v)]
    while frontier:
        nxt = []
        for w in frontier:
            for m in mats:
                u = tuple(sum(m[i][j] * w[j] for j in range(len(w)))
                          for i in range(len(w)))
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
        assert len(seen) <= 1024, "little Weyl orbit does not close"
    return seen


def antidominant_cochar_chamber(rd: RootDatum) -> Cone:
    """Cocharacters pairing <= 0 with every simple root."""
    return Cone.from_inequalities([tuple(-x for x in a) for a in rd.simple_roots],
                                  rd.rank)


# ---------------------------------------------------------------------------
# colored cones

def validate_colored_cone(d: SphericalDatum, cc: ColoredCone):
    """(valid, diagnostic). Diagnostic names the first failed condition."""
    if cc.cone.n != d.rank:
        raise ValueError("colored cone lives in the wrong dimension")
    rho_f = d.rho_image(cc.colors)
    if not cc.cone.is_strictly_convex():
        return False, "condition (i): cone contains a line"
    hull = Cone(d.rank, tuple(tuple(v) for v in
                              list(rho_f) + list(d.valuation_cone.generators)))
    for g in cc.cone.generators:
        if not hull.contains(g):
            return False, "condition (i): generator outside cone(rho(F) + V)"
    for v in rho_f:
        if not cc.cone.contains(v):
            return False, "condition (i): cone does not contain rho(F)"
    if not _relint_meets(cc.cone, d.valuation_cone):
        return False, "condition (ii): relative interior misses the valuation cone"
    for v in rho_f:
        if all(x == 0 for x in v):
            return False, "condition (iii): 0 in rho(F)"
    return True, "valid"


def _relint_meets(c: Cone, v: Cone) -> bool:
    """Does the relative interior of c meet v? Exact homogeneous LP."""
    if not c.generators:
        return True  # relint({0}) = {0}, contained in every cone
    gens = list(c.generators)
    vgens = list(v.generators)
    k, m, n = len(gens), len(vgens), c.n
    cons = []
    for coord in range(n):
        row = [g[coord] for g in gens] + [-w[coord] for w in vgens]
        cons.append((tuple(row), EQ))
    for i in range(k):
        e = [0] * (k + m)
        e[i] = 1
        cons.append((tuple(e), GT))
    for j in range(m):
        e = [0] * (k + m)
        e[k + j] = 1
        cons.append((tuple(e), GE))
    return feasible(LinearSystem.of(cons)) is not None


def is_affine(d: SphericalDatum, cc: ColoredCone):
    """(affine, witness chi or None) for the embedding given by cc."""
    ok, diag = validate_colored_cone(d, cc)
    if not ok:
        raise ValueError("invalid colored cone: " + diag)
    outside = [rho for lbl, rho in d.colors if lbl not in set(cc.colors)]
    cons = []
    for g in d.valuation_cone.generators:
        cons.append((tuple(g), GE))
    for g in cc.cone.generators:
        cons.append((tuple(g), EQ))
    for rho in outside:
        cons.append((tuple(rho), LT))
    if not cons:
        return True, (0,) * d.rank
    wit = feasible(LinearSystem.of(cons))
    if wit is None:
        return False, None
    if wit == ():
        return True, (0,) * d.rank
    return True, wit


def affine_closure_data(d: SphericalDatum) -> ColoredCone:
    """Colored cone of the affine closure of the open orbit."""
    rhos = [rho for _, rho in d.colors]
    for rho in rhos:
        if all(x == 0 for x in rho):
            raise ValueError("not quasi-affine: a color maps to 0")
    if not Cone(d.rank, tuple(rhos)).is_strictly_convex():
        raise ValueError("not quasi-affine: color cone contains a line")
    ineqs = [tuple(g) for g in d.valuation_cone.generators] + \
            [tuple(-x for x in rho) for rho in rhos]
    R = Cone.from_inequalities(ineqs, d.rank)
    rays, lin = R.rays_and_lineality()
    chi0 = tuple(map(sum, zip(*rays))) if rays else (0,) * d.rank
    F = tuple(lbl for lbl, rho in d.colors if vdot(rho, chi0) == 0)
    candidate = ColoredCone(Cone(d.rank, tuple(d.rho_image(F))), F)
    ok, _ = validate_colored_cone(d, candidate)
    if ok:
        return candidate
    # fall back to adding the part of V killed by chi0
    vpart = d.valuation_cone.intersect(
        Cone.from_inequalities([chi0, tuple(-x for x in chi0)], d.rank))
    gens = tuple(d.rho_image(F)) + vpart.generators
    candidate = ColoredCone(Cone(d.rank, gens), F)
    ok, diag = validate_colored_cone(d, candidate)
    if not ok:
        raise ValueError("affine closure data is not a valid colored cone: " + diag)
    return candidate


# ---------------------------------------------------------------------------
# criteria

def is_wavefront(d: SphericalDatum) -> bool:
    chamber = antidominant_cochar_chamber(d.ambient)
    img = d.lattice_map.transpose().image_cone(chamber)
    return img == d.valuation_cone


def arithmetic_multiplicity(d: SphericalDatum) -> int:
    return torsion_order(d.lattice_map)


def enumerate_orbits(d: SphericalDatum, height: int, integral_only: bool = False):
    """Representatives lambda-check in Lambda_X of strata up to the height."""
    if integral_only:
        if d.colored_cone is None:
            raise ValueError("integral orbit enumeration needs a colored cone")
        region = d.valuation_cone.intersect(d.colored_cone.cone)
    else:
        region = d.valuation_cone
    return lattice_points(region, height)


def support(rd: RootDatum, weights) -> tuple:
    """Indices of the simple roots spanning the given ambient weights."""
    idx = set()
    for w in weights:
        exp = rd.simple_root_expansion(w)
        if exp is None:
            raise ValueError("weight %r lies outside the root span" % (w,))
        idx.update(i for i, c in enumerate(exp) if c != 0)
    return tuple(sorted(idx))


def parabolic_induction(d: SphericalDatum):
    """Delta_P = Delta(X) + support(spherical roots) when proper, else None."""
    idx = set(d.levi_roots)
    idx.update(support(d.ambient, d.ambient_spherical_roots()))
    if len(idx) >= d.ambient.nsimple:
        return None
    return tuple(sorted(idx))


def _central_image_rows(d: SphericalDatum):
    dual = d.lattice_map.transpose()
    return [dual.apply(z) for z in d.ambient.central_cochar_basis()]


def negligible_orbit_check(d: SphericalDatum):
    """(ok, certificate) for the boundary-degeneration orbit criterion.

    Hypothesis: wavefront, and the lineality of the valuation cone is
    central (comes from the center of the ambient group).
    """
    if not is_wavefront(d):
        raise ValueError("hypothesis not met: datum is not wavefront")
    central = _central_image_rows(d)
    lin = d.valuation_cone.lineality_basis()
    base_rank = matrix_rank(central)
    for v in lin:
        if matrix_rank(central + [v]) != base_rank:
            raise ValueError("hypothesis not met: non-central lineality in V")
    gammas = d.ambient_spherical_roots()
    nroots = len(gammas)
    levi = set(d.levi_roots)
    outside = [i for i in range(d.ambient.nsimple) if i not in levi]
    cert = {}
    for size in range(nroots):  # proper subsets only
        for theta in itertools.combinations(range(nroots), size):
            supp = set(support(d.ambient, [gammas[i] for i in theta]))
            witness = next((a for a in outside if a not in supp), None)
            if witness is None:
                return False, {theta: None}
            cert[theta] = witness
    return True, cert


def aut_lineality(d: SphericalDatum):
    """(rank of the lineality lattice, lineality intersected with C(X))."""
    lin = d.valuation_cone.lineality_basis()
    rank = len(lin)
    if d.colored_cone is None:
        return rank, None
    gens = [tuple(int(x) for x in primitive(v)) for v in lin]
    lin_cone = Cone(d.rank, tuple(gens + [tuple(-x for x in g) for g in gens]))
    return rank, lin_cone.intersect(d.colored_cone.cone)
