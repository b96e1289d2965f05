"""Root data for split reductive groups, with exact lattice bookkeeping.

A root datum is given by simple roots inside the character lattice Z^rank
and simple coroots inside the cocharacter lattice, the pairing between the
two being the standard dot product. Everything else (positive roots, Weyl
group, dominance, parabolic quotients) is derived by reflection closure, so
custom ambient groups (products with tori, similitude groups) go through
the same code path as the classical families.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .geometry import (
    as_vec, kernel_basis, matrix_rank, primitive, saturation_quotient,
    solve_linear, vdot,
)

_CLOSURE_CAP = 4096  # plenty for rank <= 7; guards non-crystallographic input


def _idot(u, v) -> int:
    return sum(a * b for a, b in zip(u, v))


@dataclass(frozen=True)
class RootDatum:
    """Simple roots / coroots of a split group in fixed lattice coordinates."""

    name: str
    rank: int
    simple_roots: tuple
    simple_coroots: tuple

    def __post_init__(self):
        roots = tuple(tuple(int(x) for x in a) for a in self.simple_roots)
        coroots = tuple(tuple(int(x) for x in a) for a in self.simple_coroots)
        object.__setattr__(self, "simple_roots", roots)
        object.__setattr__(self, "simple_coroots", coroots)
        if len(roots) != len(coroots):
            raise ValueError("simple roots and coroots must pair up")
        for a in roots + coroots:
            if len(a) != self.rank:
                raise ValueError("coordinate length != rank")
        for a, av in zip(roots, coroots):
            if _idot(a, av) != 2:
                raise ValueError("<alpha, alpha^> != 2 for %r / %r" % (a, av))
        if roots and matrix_rank([as_vec(a) for a in roots]) != len(roots):
            raise ValueError("simple roots are linearly dependent")

    @property
    def nsimple(self) -> int:
        return len(self.simple_roots)

    # -- roots ---------------------------------------------------------
    @cached_property
    def _all_pairs(self):
        pairs = set(zip(self.simple_roots, self.simple_coroots))
        frontier = list(pairs)
        while frontier:
            nxt = []
            for b, bv in frontier:
                for a, av in zip(self.simple_roots, self.simple_coroots):
                    c1 = _idot(b, av)
                    c2 = _idot(a, bv)
                    nb = tuple(x - c1 * y for x, y in zip(b, a))
                    nbv = tuple(x - c2 * y for x, y in zip(bv, av))
                    if (nb, nbv) not in pairs:
                        pairs.add((nb, nbv))
                        nxt.append((nb, nbv))
            if len(pairs) > _CLOSURE_CAP:
                raise ValueError("root system does not close; bad input data")
            frontier = nxt
        return pairs

    def simple_root_expansion(self, v):
        """Coefficients of v in the simple roots, or None if outside the span."""
        v = as_vec(v)
        if not self.simple_roots:
            return () if all(x == 0 for x in v) else None
        cols = [as_vec(col) for col in zip(*self.simple_roots)]
        sol = solve_linear(cols, v)
        if sol is None:
            return None
        # simple roots are independent, so the solution is the expansion
        for i in range(self.rank):
            if sum(sol[j] * self.simple_roots[j][i] for j in range(self.nsimple)) != v[i]:
                return None
        return sol

    @cached_property
    def positive_pairs(self):
        out = []
        for b, bv in sorted(self._all_pairs):
            exp = self.simple_root_expansion(b)
            assert exp is not None, "root outside simple-root span"
            if all(c >= 0 for c in exp):
                out.append((b, bv))
        return tuple(out)

    def positive_roots(self):
        return tuple(b for b, _ in self.positive_pairs)

    def positive_coroots(self):
        return tuple(bv for _, bv in self.positive_pairs)

    @cached_property
    def rho(self):
        """Half sum of positive roots, as a Fraction tuple."""
        out = [Fraction(0)] * self.rank
        for b, _ in self.positive_pairs:
            for i, x in enumerate(b):
                out[i] += Fraction(x, 2)
        return tuple(out)

    @cached_property
    def cartan(self):
        """cartan[i][j] = <alpha_j, alpha_i^>."""
        return tuple(tuple(_idot(aj, avi) for aj in self.simple_roots)
                     for avi in self.simple_coroots)

    # -- Weyl group ------------------------------------------------------
    def _reflection_matrices(self, side: str):
        n = self.rank
        mats = []
        for a, av in zip(self.simple_roots, self.simple_coroots):
            if side == "char":
                # x -> x - <x, av> a
                m = tuple(tuple((1 if i == j else 0) - a[i] * av[j]
                                for j in range(n)) for i in range(n))
            else:
                # y -> y - <a, y> av
                m = tuple(tuple((1 if i == j else 0) - av[i] * a[j]
                                for j in range(n)) for i in range(n))
            mats.append(m)
        return mats

    def _weyl_closure(self, side: str):
        n = self.rank
        ident = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        gens = self._reflection_matrices(side)
        seen = {ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for m in frontier:
                for g in gens:
                    prod = tuple(tuple(sum(g[i][k] * m[k][j] for k in range(n))
                                       for j in range(n)) for i in range(n))
                    if prod not in seen:
                        seen.add(prod)
                        nxt.append(prod)
            if len(seen) > _CLOSURE_CAP:
                raise ValueError("Weyl group too large; bad input data")
            frontier = nxt
        return tuple(sorted(seen))

    @cached_property
    def weyl_char(self):
        return self._weyl_closure("char")

    @cached_property
    def weyl_cochar(self):
        return self._weyl_closure("cochar")

    def weyl_order(self) -> int:
        return len(self.weyl_cochar)

    def weyl_orbit_cochar(self, v):
        return _orbit(v, list(zip(self.simple_roots, self.simple_coroots)), "cochar")

    def weyl_orbit_char(self, v):
        return _orbit(v, list(zip(self.simple_roots, self.simple_coroots)), "char")

    # -- dominance -------------------------------------------------------
    def is_dominant_char(self, v) -> bool:
        return all(vdot(as_vec(v), as_vec(av)) >= 0 for av in self.simple_coroots)

    def is_dominant_cochar(self, v) -> bool:
        return all(vdot(as_vec(a), as_vec(v)) >= 0 for a in self.simple_roots)

    def dominant_cochar(self, v):
        """The dominant Weyl-chamber representative of a cocharacter."""
        v = tuple(int(x) for x in v)
        while True:
            for a, av in zip(self.simple_roots, self.simple_coroots):
                c = _idot(a, v)
                if c < 0:
                    v = tuple(x - c * y for x, y in zip(v, av))
                    break
            else:
                return v

    def dominant_char(self, v):
        v = tuple(int(x) for x in v)
        while True:
            for a, av in zip(self.simple_roots, self.simple_coroots):
                c = _idot(v, av)
                if c < 0:
                    v = tuple(x - c * y for x, y in zip(v, a))
                    break
            else:
                return v

    def central_cochar_basis(self):
        """Basis of the cocharacters killed by every root (the center rank)."""
        basis = kernel_basis([as_vec(a) for a in self.simple_roots], self.rank)
        return tuple(tuple(int(x) for x in primitive(b)) for b in basis)


def _orbit(v, pairs, side):
    v0 = tuple(int(x) for x in v)
    seen = {v0}
    frontier = [v0]
    while frontier:
        nxt = []
        for w in frontier:
            for a, av in pairs:
                if side == "cochar":
                    c = _idot(a, w)
                    u = tuple(x - c * y for x, y in zip(w, av))
                else:
                    c = _idot(w, av)
                    u = tuple(x - c * y for x, y in zip(w, a))
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return tuple(sorted(seen))


# ---------------------------------------------------------------------------
# builders

def _chain_cartan(m: int):
    return [[2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(m)]
            for i in range(m)]


def _unit(n, i, c=1):
    e = [0] * n
    e[i] = c
    return tuple(e)


def root_datum(kind: str, n: int) -> RootDatum:
    """Standard split groups in their usual coordinates.

    T(n) torus; GL(n) and the similitude group GSp(n), n even, use the
    e-basis with an extra similitude coordinate for GSp; SL(n) lives in
    fundamental-weight coordinates (roots are Cartan columns, coroots are
    unit vectors) and PGL(n) in root coordinates (the transpose setup);
    B/C/D(n) are the odd orthogonal, symplectic and even orthogonal groups
    in the e-basis; G(2) is in fundamental-weight coordinates.
    """
    k = kind.upper()
    if k == "T":
        return RootDatum("t%d" % n, n, (), ())
    if k == "GL":
        simples = [tuple((1 if j == i else (-1 if j == i + 1 else 0)) for j in range(n))
                   for i in range(n - 1)]
        return RootDatum("gl%d" % n, n, tuple(simples), tuple(simples))
    if k == "SL":
        m = n - 1
        A = _chain_cartan(m)
        roots = [tuple(A[i][j] for i in range(m)) for j in range(m)]
        coroots = [_unit(m, j) for j in range(m)]
        return RootDatum("sl%d" % n, m, tuple(roots), tuple(coroots))
    if k == "PGL":
        m = n - 1
        A = _chain_cartan(m)
        roots = [_unit(m, j) for j in range(m)]
        coroots = [tuple(A[j][i] for i in range(m)) for j in range(m)]
        return RootDatum("pgl%d" % n, m, tuple(roots), tuple(coroots))
    if k in ("B", "C", "D"):
        simples = [tuple((1 if j == i else (-1 if j == i + 1 else 0)) for j in range(n))
                   for i in range(n - 1)]
        if k == "B":
            if n < 2:
                raise ValueError("B needs rank >= 2")
            roots = simples + [_unit(n, n - 1)]
            coroots = simples + [_unit(n, n - 1, 2)]
        elif k == "C":
            if n < 2:
                raise ValueError("C needs rank >= 2")
            roots = simples + [_unit(n, n - 1, 2)]
            coroots = simples + [_unit(n, n - 1)]
        else:
            if n < 3:
                raise ValueError("D needs rank >= 3")
            last = tuple((1 if j in (n - 2, n - 1) else 0) for j in range(n))
            roots = simples + [last]
            coroots = simples + [last]
        return RootDatum("%s%d" % (k.lower(), n), n, tuple(roots), tuple(coroots))
    if k == "G":
        if n != 2:
            raise ValueError("G exists only in rank 2")
        roots = ((2, -3), (-1, 2))
        coroots = ((1, 0), (0, 1))
        return RootDatum("g2", 2, roots, coroots)
    if k == "GSP":
        if n % 2 != 0 or n < 2:
            raise ValueError("GSp needs an even size >= 2")
        p = n // 2
        rank = p + 1  # (x_1..x_p, similitude)
        simples = [tuple((1 if j == i else (-1 if j == i + 1 else 0)) for j in range(rank))
                   for i in range(p - 1)]
        long_root = tuple((2 if j == p - 1 else (-1 if j == p else 0)) for j in range(rank))
        roots = simples + [long_root]
        coroots = simples + [_unit(rank, p - 1)]
        return RootDatum("gsp%d" % n, rank, tuple(roots), tuple(coroots))
    raise ValueError("unknown group kind %r" % (kind,))


def product_datum(*data: RootDatum) -> RootDatum:
    rank = sum(d.rank for d in data)
    roots, coroots = [], []
    off = 0
    for d in data:
        for a, av in zip(d.simple_roots, d.simple_coroots):
            roots.append((0,) * off + a + (0,) * (rank - off - d.rank))
            coroots.append((0,) * off + av + (0,) * (rank - off - d.rank))
        off += d.rank
    return RootDatum("x".join(d.name for d in data), rank, tuple(roots), tuple(coroots))


def dual_datum(d: RootDatum) -> RootDatum:
    return RootDatum(d.name + "v", d.rank, d.simple_coroots, d.simple_roots)


def levi_datum(d: RootDatum, indices) -> RootDatum:
    indices = tuple(sorted(set(int(i) for i in indices)))
    for i in indices:
        if not 0 <= i < d.nsimple:
            raise ValueError("bad simple-root index %d" % i)
    return RootDatum(
        "%s[%s]" % (d.name, ",".join(str(i) for i in indices)), d.rank,
        tuple(d.simple_roots[i] for i in indices),
        tuple(d.simple_coroots[i] for i in indices))


# ---------------------------------------------------------------------------
# parabolic data

@dataclass(frozen=True)
class ParabolicDatum:
    """A standard parabolic P = M U inside the group of `datum`.

    Carries the coweight lattice of the Levi quotient Lambda = X_*(T) mod
    the saturated span of the M-coroots, together with a section, the
    rho-shifts, and the coroots of the unipotent radical with their
    2rho_M-grades.
    """

    datum: RootDatum
    levi_indices: tuple

    def __post_init__(self):
        idx = tuple(sorted(set(int(i) for i in self.levi_indices)))
        object.__setattr__(self, "levi_indices", idx)
        for i in idx:
            if not 0 <= i < self.datum.nsimple:
                raise ValueError("bad Levi index %d" % i)

    @cached_property
    def levi(self) -> RootDatum:
        return levi_datum(self.datum, self.levi_indices)

    @cached_property
    def rho(self):
        return self.datum.rho

    @cached_property
    def rho_m(self):
        return self.levi.rho

    @cached_property
    def rho_p(self):
        rp = tuple(a - b for a, b in zip(self.datum.rho, self.levi.rho))
        for av in self.levi.simple_coroots:
            assert vdot(rp, as_vec(av)) == 0, "rho_P not orthogonal to Levi coroots"
        return rp

    @cached_property
    def radical_pairs(self):
        """Positive (root, coroot) pairs of G outside the Levi."""
        levi_roots = {b for b, _ in self.levi.positive_pairs}
        return tuple(p for p in self.datum.positive_pairs if p[0] not in levi_roots)

    @cached_property
    def quotient(self):
        """(proj, section) onto the Levi-quotient coweight lattice."""
        return saturation_quotient(list(self.levi.simple_coroots), self.datum.rank)

    def pi(self, v):
        return self.quotient[0].apply(tuple(int(x) for x in v))

    def lift(self, theta):
        return self.quotient[1].apply(tuple(int(x) for x in theta))

    def grade(self, coroot) -> int:
        g = 2 * vdot(self.rho_m, as_vec(coroot))
        assert g.denominator == 1
        return int(g)

    def rho_p_pair(self, theta) -> Fraction:
        """<rho_P, lift(theta)>; independent of the choice of lift."""
        return vdot(self.rho_p, as_vec(self.lift(theta)))

    @cached_property
    def monoid_generators(self):
        """Images of the radical coroots, deduplicated, sorted."""
        return tuple(sorted({self.pi(bv) for _, bv in self.radical_pairs}))
