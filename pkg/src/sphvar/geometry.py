"""Exact rational polyhedral geometry.

Vectors are tuples of fractions.Fraction, cones are stored by finite
generator lists in Q^n, and every decision procedure here is exact: no
floating point anywhere. The facet description of a cone is obtained by a
subset-kernel enumeration over the constraint rows; at the dimensions this
package works in (n <= 7, generator counts in the teens) that is both exact
and fast, and it sidesteps the adjacency bookkeeping of incremental double
description.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

Vec = tuple  # tuple of Fraction, fixed length


def vec(*entries) -> Vec:
    return tuple(Fraction(x) for x in entries)


def as_vec(entries) -> Vec:
    return tuple(Fraction(x) for x in entries)


def vadd(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Vec, v: Vec) -> Vec:
    return tuple(a - b for a, b in zip(u, v))


def vneg(u: Vec) -> Vec:
    return tuple(-a for a in u)


def vscale(c, u: Vec) -> Vec:
    c = Fraction(c)
    return tuple(c * a for a in u)


def vdot(u: Vec, v: Vec) -> Fraction:
    if len(u) != len(v):
        raise ValueError("dimension mismatch: %d vs %d" % (len(u), len(v)))
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def is_zero_vec(u: Vec) -> bool:
    return all(a == 0 for a in u)


def zero_vec(n: int) -> Vec:
    return (Fraction(0),) * n


def primitive(v: Vec) -> Vec:
    """Scale by a positive rational so entries are coprime integers.

    Direction is preserved (rays must not flip). Zero maps to zero.
    """
    if is_zero_vec(v):
        return tuple(Fraction(0) for _ in v)
    den = 1
    for a in v:
        den = den * a.denominator // gcd(den, a.denominator)
    ints = [int(a * den) for a in v]
    g = 0
    for a in ints:
        g = gcd(g, abs(a))
    return tuple(Fraction(a // g) for a in ints)


def int_vec(v: Vec) -> tuple:
    out = []
    for a in v:
        if a.denominator != 1:
            raise ValueError("not an integer vector: %r" % (v,))
        out.append(int(a))
    return tuple(out)


# ---------------------------------------------------------------------------
# Rational matrix routines (rows are tuples of Fraction)

def row_echelon(rows):
    """Reduced row echelon form. Returns (rows, pivot_columns)."""
    work = [list(map(Fraction, r)) for r in rows]
    if not work:
        return [], []
    ncols = len(work[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(work)) if work[i][c] != 0), None)
        if pr is None:
            continue
        work[r], work[pr] = work[pr], work[r]
        pv = work[r][c]
        work[r] = [x / pv for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return [tuple(row) for row in work[:r]], pivots


def matrix_rank(rows) -> int:
    return len(row_echelon(rows)[1])


def kernel_basis(rows, n: int):
    """Basis of {x in Q^n : <row, x> = 0 for every row}."""
    ech, piv = row_echelon(rows)
    free = [c for c in range(n) if c not in piv]
    basis = []
    for fc in free:
        x = [Fraction(0)] * n
        x[fc] = Fraction(1)
        for r, pc in enumerate(piv):
            x[pc] = -ech[r][fc]
        basis.append(tuple(x))
    return basis


def solve_linear(rows, rhs):
    """One exact solution x of rows . x = rhs, or None if inconsistent."""
    if not rows:
        return zero_vec(0)
    n = len(rows[0])
    aug = [tuple(r) + (b,) for r, b in zip(rows, rhs)]
    ech, piv = row_echelon(aug)
    for r in ech:
        if all(a == 0 for a in r[:n]) and r[n] != 0:
            return None
    x = [Fraction(0)] * n
    for r, pc in enumerate(piv):
        if pc == n:
            return None
        x[pc] = ech[r][n]
    return tuple(x)


def reduce_mod_rowspace(v: Vec, ech_rows, pivots) -> Vec:
    out = list(v)
    for r, pc in enumerate(pivots):
        if out[pc] != 0:
            f = out[pc]
            out = [x - f * y for x, y in zip(out, ech_rows[r])]
    return tuple(out)


# ---------------------------------------------------------------------------
# Cones

def _halfspace_gens(rows, n: int):
    """Generators of {y in Q^n : <a, y> >= 0 for all a in rows}.

    Returns (rays, lineality_basis). Every extreme ray modulo the lineality
    space lies on a face cut out by a rank-(d-1) subset of the rows, where
    d is the codimension of the lineality; enumerating those subsets is
    exhaustive and exact.
    """
    rows = [primitive(as_vec(r)) for r in rows]
    rows = [r for r in rows if not is_zero_vec(r)]
    seen = set()
    arows = []
    for r in rows:
        if r not in seen:
            seen.add(r)
            arows.append(r)
    lin = kernel_basis(arows, n)
    d = n - len(lin)
    if d == 0:
        return [], [primitive(b) for b in lin]
    lin_ech, lin_piv = row_echelon(lin)
    rays = []
    rayset = set()
    for sub in itertools.combinations(range(len(arows)), d - 1):
        subrows = [arows[i] for i in sub]
        if matrix_rank(subrows) != d - 1:
            continue
        ker = kernel_basis(subrows, n)
        # pick a kernel vector independent from the lineality space
        y = None
        for k in ker:
            rem = reduce_mod_rowspace(k, lin_ech, lin_piv)
            if not is_zero_vec(rem):
                y = rem
                break
        if y is None:
            continue
        for cand in (y, vneg(y)):
            if all(vdot(a, cand) >= 0 for a in arows):
                p = primitive(cand)
                if p not in rayset:
                    rayset.add(p)
                    rays.append(p)
                break
    return rays, [primitive(b) for b in lin]


class Cone:
    """Rational polyhedral cone, stored by generators in Q^n."""

    __slots__ = ("n", "generators", "_dual_gens")

    def __init__(self, n: int, generators=()):
        gens = []
        seen = set()
        for g in generators:
            g = as_vec(g)
            if len(g) != n:
                raise ValueError("generator dimension %d != ambient %d" % (len(g), n))
            p = primitive(g)
            if is_zero_vec(p) or p in seen:
                continue
            seen.add(p)
            gens.append(p)
        self.n = n
        self.generators = tuple(sorted(gens))
        self._dual_gens = None

    # -- constructors -------------------------------------------------
    @staticmethod
    def zero(n: int) -> "Cone":
        return Cone(n, ())

    @staticmethod
    def full(n: int) -> "Cone":
        gens = []
        for i in range(n):
            e = [0] * n
            e[i] = 1
            gens.append(tuple(e))
            e2 = list(e)
            e2[i] = -1
            gens.append(tuple(e2))
        return Cone(n, gens)

    @staticmethod
    def orthant(n: int) -> "Cone":
        gens = []
        for i in range(n):
            e = [0] * n
            e[i] = 1
            gens.append(tuple(e))
        return Cone(n, gens)

    @staticmethod
    def from_inequalities(rows, n: int) -> "Cone":
        rays, lin = _halfspace_gens(rows, n)
        gens = list(rays)
        for b in lin:
            gens.append(b)
            gens.append(vneg(b))
        return Cone(n, gens)

    # -- structure ----------------------------------------------------
    def dual_generators(self):
        if self._dual_gens is None:
            rays, lin = _halfspace_gens(self.generators, self.n)
            gens = list(rays)
            for b in lin:
                gens.append(b)
                gens.append(vneg(b))
            self._dual_gens = tuple(sorted(gens))
        return self._dual_gens

    def dual(self) -> "Cone":
        return Cone(self.n, self.dual_generators())

    def contains(self, v) -> bool:
        v = as_vec(v)
        if len(v) != self.n:
            raise ValueError("point dimension %d != ambient %d" % (len(v), self.n))
        return all(vdot(y, v) >= 0 for y in self.dual_generators())

    def contains_cone(self, other: "Cone") -> bool:
        return all(self.contains(g) for g in other.generators)

    def __eq__(self, other):
        if not isinstance(other, Cone) or self.n != other.n:
            return NotImplemented
        return self.contains_cone(other) and other.contains_cone(self)

    def __repr__(self):
        return "Cone(%d, %s)" % (self.n, [tuple(map(int, map(Fraction, g))) if all(a.denominator == 1 for a in g) else g for g in self.generators])

    def dim(self) -> int:
        if not self.generators:
            return 0
        return matrix_rank(self.generators)

    def lineality_basis(self):
        # lineality = orthogonal complement of the dual cone's span
        return kernel_basis(self.dual_generators(), self.n)

    def lineality_rank(self) -> int:
        return len(self.lineality_basis())

    def is_strictly_convex(self) -> bool:
        return self.lineality_rank() == 0

    def relative_interior_contains(self, v) -> bool:
        v = as_vec(v)
        if not self.contains(v):
            return False
        for y in self.dual_generators():
            if vdot(y, v) == 0:
                # a dual generator vanishing at v must vanish on the cone
                if any(vdot(y, g) != 0 for g in self.generators):
                    return False
        return True

    def intersect(self, other: "Cone") -> "Cone":
        if self.n != other.n:
            raise ValueError("ambient mismatch")
        rows = list(self.dual_generators()) + list(other.dual_generators())
        return Cone.from_inequalities(rows, self.n)

    def rays_and_lineality(self):
        """Minimal description: extreme rays mod lineality, lineality basis."""
        return _halfspace_gens(self.dual_generators(), self.n)


def dual_cone(c: Cone) -> Cone:
    return c.dual()


def is_strictly_convex(c: Cone) -> bool:
    return c.is_strictly_convex()


def relative_interior_contains(c: Cone, v) -> bool:
    return c.relative_interior_contains(v)


def lattice_points(c: Cone, height: int):
    """All integer points of c with l1 norm <= height, lexicographic order."""
    if height < 0:
        raise ValueError("height must be >= 0")
    n = c.n
    out = []
    point = [0] * n

    def rec(i, budget):
        if i == n:
            if c.contains(tuple(Fraction(x) for x in point)):
                out.append(tuple(point))
            return
        for x in range(-budget, budget + 1):
            point[i] = x
            rec(i + 1, budget - abs(x))
        point[i] = 0

    rec(0, height)
    out.sort()
    return out


# ---------------------------------------------------------------------------
# Linear systems and Fourier-Motzkin elimination

GE, GT, EQ, LT, LE = ">=0", ">0", "=0", "<0", "<=0"
_RELATIONS = (GE, GT, EQ, LT, LE)


@dataclass(frozen=True)
class Constraint:
    normal: Vec
    relation: str

    def holds(self, x) -> bool:
        v = vdot(self.normal, x)
        return {GE: v >= 0, GT: v > 0, EQ: v == 0, LT: v < 0, LE: v <= 0}[self.relation]


@dataclass(frozen=True)
class LinearSystem:
    constraints: tuple

    @staticmethod
    def of(items) -> "LinearSystem":
        cs = []
        for normal, rel in items:
            if rel not in _RELATIONS:
                raise ValueError("unknown relation %r" % (rel,))
            cs.append(Constraint(as_vec(normal), rel))
        dims = {len(c.normal) for c in cs}
        if len(dims) > 1:
            raise ValueError("constraints of mixed dimension")
        return LinearSystem(tuple(cs))

    @property
    def dim(self) -> int:
        return len(self.constraints[0].normal) if self.constraints else 0


def _to_ge_form(sys: LinearSystem):
    """Rewrite as a list of (normal, strict) meaning <normal, x> >(=) 0."""
    out = []
    for c in sys.constraints:
        a = c.normal
        if c.relation == GE:
            out.append((a, False))
        elif c.relation == GT:
            out.append((a, True))
        elif c.relation == LE:
            out.append((vneg(a), False))
        elif c.relation == LT:
            out.append((vneg(a), True))
        elif c.relation == EQ:
            out.append((a, False))
            out.append((vneg(a), False))
    return out


def _fm_filter(cons):
    """Drop trivial rows; return None if an all-zero strict row appears."""
    kept = []
    seen = set()
    for a, s in cons:
        if is_zero_vec(a):
            if s:
                return None
            continue
        key = (primitive(a), s)
        if key in seen:
            continue
        seen.add(key)
        kept.append((key[0], s))
    return kept


def feasible_ge(cons, n):
    """Witness for a system of homogeneous >=/>-constraints, or None.

    Fourier-Motzkin elimination with strict flags carried symbolically; the
    witness is rebuilt by back substitution, choosing midpoints or unit
    offsets inside each one-dimensional feasibility interval.
    """
    levels = []
    cur = _fm_filter(cons)
    if cur is None:
        return None
    for k in range(n - 1, -1, -1):
        levels.append(cur)
        nxt = []
        pos, neg = [], []
        for a, s in cur:
            ak = a[k]
            if ak == 0:
                nxt.append((a[:k] + a[k + 1:], s))
            elif ak > 0:
                pos.append((a, s))
            else:
                neg.append((a, s))
        for (p, sp), (q, sq) in itertools.product(pos, neg):
            comb = vadd(vscale(p[k], q), vscale(-q[k], p))
            nxt.append((comb[:k] + comb[k + 1:], sp or sq))
        cur = _fm_filter(nxt)
        if cur is None:
            return None
    # back-substitute
    x = []
    for cons_k in reversed(levels):
        # cons_k constrains variables 0..j where j = index being chosen now
        j = len(x)
        lo = hi = None  # (value, strict)
        for a, s in cons_k:
            aj = a[j]
            if aj == 0:
                continue
            rest = sum((a[i] * x[i] for i in range(j)), Fraction(0))
            bound = -rest / aj
            if aj > 0:
                if lo is None or bound > lo[0] or (bound == lo[0] and s):
                    lo = (bound, s)
            else:
                if hi is None or bound < hi[0] or (bound == hi[0] and s):
                    hi = (bound, s)
        if lo is None and hi is None:
            x.append(Fraction(0))
        elif hi is None:
            x.append(lo[0] + 1 if lo[1] else lo[0])
        elif lo is None:
            x.append(hi[0] - 1 if hi[1] else hi[0])
        else:
            if lo[0] < hi[0]:
                x.append((lo[0] + hi[0]) / 2)
            else:
                assert lo[0] == hi[0] and not lo[1] and not hi[1], \
                    "Fourier-Motzkin feasibility contradicted at back substitution"
                x.append(lo[0])
    return tuple(x)


def feasible(sys: LinearSystem):
    """Exact witness for a (possibly strict) homogeneous system, or None.

    The witness is scaled to an integer vector; homogeneity makes any
    positive multiple of a solution a solution.
    """
    if not sys.constraints:
        return ()
    n = sys.dim
    w = feasible_ge(_to_ge_form(sys), n)
    if w is None:
        return None
    den = 1
    for a in w:
        den = den * a.denominator // gcd(den, a.denominator)
    w = tuple(int(a * den) for a in w)
    for c in sys.constraints:
        assert c.holds(w), "witness fails %r" % (c,)
    return w


# ---------------------------------------------------------------------------
# Integer lattice algebra

def smith_normal_form(mat):
    """U, D, V with U*mat*V = D diagonal, U and V unimodular, ints only."""
    A = [list(map(int, row)) for row in mat]
    m = len(A)
    n = len(A[0]) if m else 0
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in A:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def addmul_row(dst, src, c):
        A[dst] = [a + c * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a + c * b for a, b in zip(U[dst], U[src])]

    def addmul_col(dst, src, c):
        for r in A:
            r[dst] += c * r[src]
        for r in V:
            r[dst] += c * r[src]

    t = 0
    while t < min(m, n):
        # nonzero pivot of least absolute value in the corner submatrix
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] != 0 and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        for i in range(t + 1, m):
            addmul_row(i, t, -(A[i][t] // A[t][t]))
        for j in range(t + 1, n):
            addmul_col(j, t, -(A[t][j] // A[t][t]))
        if any(A[i][t] != 0 for i in range(t + 1, m)) or \
           any(A[t][j] != 0 for j in range(t + 1, n)):
            # remainders are smaller than the pivot: reselect and repeat
            continue
        # enforce d_t | every entry of the remaining submatrix
        viol = None
        for i in range(t + 1, m):
            if any(A[i][j] % A[t][t] != 0 for j in range(t + 1, n)):
                viol = i
                break
        if viol is not None:
            addmul_row(t, viol, 1)
            continue
        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            U[t] = [-a for a in U[t]]
        t += 1
    return U, A, V


def elementary_divisors(mat):
    _, D, _ = smith_normal_form(mat)
    out = []
    for i in range(min(len(D), len(D[0]) if D else 0)):
        if D[i][i] != 0:
            out.append(abs(D[i][i]))
    return out


@dataclass(frozen=True)
class LatticeMap:
    """Integer matrix m x n as a map Z^n -> Z^m, v |-> rows . v."""

    rows: tuple

    @staticmethod
    def of(rows) -> "LatticeMap":
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        widths = {len(r) for r in rows}
        if len(widths) > 1:
            raise ValueError("ragged matrix")
        return LatticeMap(rows)

    @staticmethod
    def identity(n: int) -> "LatticeMap":
        return LatticeMap.of([[int(i == j) for j in range(n)] for i in range(n)])

    @property
    def m(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def apply(self, v):
        # a 0-row map (projection onto the trivial lattice) accepts anything
        if self.rows and len(v) != self.n:
            raise ValueError("bad vector length")
        return tuple(sum(r[j] * v[j] for j in range(self.n)) for r in self.rows)

    def apply_frac(self, v) -> Vec:
        v = as_vec(v)
        if self.rows and len(v) != self.n:
            raise ValueError("bad vector length")
        return tuple(sum((Fraction(r[j]) * v[j] for j in range(self.n)), Fraction(0))
                     for r in self.rows)

    def transpose(self) -> "LatticeMap":
        return LatticeMap.of(list(zip(*self.rows))) if self.rows else LatticeMap.of([])

    def compose(self, other: "LatticeMap") -> "LatticeMap":
        # self . other
        return LatticeMap.of([
            [sum(self.rows[i][k] * other.rows[k][j] for k in range(self.n))
             for j in range(other.n)]
            for i in range(self.m)])

    def rank(self) -> int:
        return matrix_rank([as_vec(r) for r in self.rows])

    def is_injective(self) -> bool:
        return self.rank() == self.n

    def image_cone(self, c: Cone) -> Cone:
        return Cone(self.m, [self.apply_frac(g) for g in c.generators])


def torsion_order(m: LatticeMap) -> int:
    """Order of the torsion subgroup of coker(m); m must be injective."""
    if not m.is_injective():
        raise ValueError("lattice map is not injective")
    out = 1
    for d in elementary_divisors(m.rows):
        out *= d
    return out


def inverse_unimodular(mat):
    """Exact inverse of a square integer matrix with det +-1, as int rows."""
    n = len(mat)
    aug = [list(map(Fraction, mat[i])) + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    ech, piv = row_echelon(aug)
    if piv != list(range(n)):
        raise ValueError("matrix is singular")
    inv = []
    for i in range(n):
        row = ech[i][n:]
        if any(a.denominator != 1 for a in row):
            raise ValueError("matrix is not unimodular")
        inv.append(tuple(int(a) for a in row))
    return inv


def saturation_quotient(vectors, n: int):
    """Projection of Z^n onto Z^n / saturation(span(vectors)).

    Returns (proj, section): proj is a LatticeMap Z^n -> Z^(n-r) whose kernel
    is the saturation of the integer span, and section is a right inverse.
    """
    vecs = [tuple(int(x) for x in v) for v in vectors if not all(c == 0 for c in v)]
    if not vecs:
        return LatticeMap.identity(n), LatticeMap.identity(n)
    U, D, V = smith_normal_form(vecs)
    r = sum(1 for i in range(min(len(D), n)) if D[i][i] != 0)
    # x . V has support in the first r coordinates exactly on the saturation
    Vinv = inverse_unimodular(V)
    proj_rows = [[V[i][j] for i in range(n)] for j in range(r, n)]      # (x.V)[r:]
    sect_rows = [[Vinv[r + j][i] for j in range(n - r)] for i in range(n)]  # y.Vinv
    return LatticeMap.of(proj_rows), LatticeMap.of(sect_rows)


# ---------------------------------------------------------------------------
# Hilbert bases (pointed cones of small rank)

def hilbert_basis_pointed(c: Cone, max_rank: int = 4):
    """Minimal monoid generators of c cap Z^n for a pointed cone c.

    Candidates are the integer points of the parallelepipeds spanned by the
    maximal linearly independent subsets of the extreme rays (Caratheodory),
    pruned to irreducible elements.
    """
    if not c.is_strictly_convex():
        raise ValueError("cone has lineality; Hilbert basis undefined")
    d = c.dim()
    if d > max_rank:
        raise ValueError("unsupported rank %d for Hilbert basis" % d)
    rays, lin = c.rays_and_lineality()
    assert not lin
    rays = [int_vec(r) for r in rays]
    if not rays:
        return []
    n = c.n
    cands = set(rays)
    for sub in itertools.combinations(rays, d):
        subf = [as_vec(s) for s in sub]
        if matrix_rank(subf) != d:
            continue
        # bounding box of the parallelepiped {sum t_i r_i : 0 <= t_i <= 1}
        lo = [0] * n
        hi = [0] * n
        for i in range(n):
            for s in sub:
                if s[i] < 0:
                    lo[i] += s[i]
                else:
                    hi[i] += s[i]
        cols = list(zip(*subf))  # n rows of length d

        def inside(pt):
            coeffs = solve_linear(cols, as_vec(pt))
            if coeffs is None:
                return False
            if any(t < 0 or t > 1 for t in coeffs):
                return False
            # pt must equal sum t_i r_i exactly (cols may be rank d < n rows)
            for i in range(n):
                if sum((coeffs[j] * subf[j][i] for j in range(d)), Fraction(0)) != pt[i]:
                    return False
            return True

        def scan(i, pt):
            if i == n:
                t = tuple(pt)
                if any(t) and inside(t):
                    cands.add(t)
                return
            for x in range(lo[i], hi[i] + 1):
                pt.append(x)
                scan(i + 1, pt)
                pt.pop()

        scan(0, [])
    cand_list = sorted(cands)
    basis = []
    for x in cand_list:
        reducible = False
        for y in cand_list:
            if y == x:
                continue
            diff = tuple(a - b for a, b in zip(x, y))
            if all(a == 0 for a in diff):
                continue
            if c.contains(tuple(Fraction(a) for a in diff)):
                reducible = True
                break
        if not reducible:
            basis.append(x)
    return basis
