"""Weight characters, multiplicities, and exact q-power scalars.

QLaurent is a Laurent polynomial in q^(1/2) with integer coefficients,
stored sparsely by exponent. WeightChar is a finitely supported integer
multiplicity map on a fixed lattice Z^n; symmetric and exterior powers go
through Newton's identities on Adams operations, and irreducible characters
through Freudenthal's recursion with the sum-over-positive-coroots form.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .rootdata import RootDatum, _idot


def _fexp(e) -> Fraction:
    e = Fraction(e)
    if e.denominator not in (1, 2):
        raise ValueError("exponent %s is not half-integral" % e)
    return e


@dataclass(frozen=True)
class QLaurent:
    """Sparse Laurent polynomial in q^(1/2): terms ((exponent, coeff), ...)."""

    terms: tuple

    @staticmethod
    def of(mapping) -> "QLaurent":
        items = []
        for e, c in (mapping.items() if isinstance(mapping, dict) else mapping):
            c = int(c)
            if c != 0:
                items.append((_fexp(e), c))
        agg = {}
        for e, c in items:
            agg[e] = agg.get(e, 0) + c
        return QLaurent(tuple(sorted(((e, c) for e, c in agg.items() if c != 0),
                                     reverse=True)))

    @staticmethod
    def zero() -> "QLaurent":
        return QLaurent(())

    @staticmethod
    def one() -> "QLaurent":
        return QLaurent.of({0: 1})

    @staticmethod
    def q_pow(e, coeff=1) -> "QLaurent":
        return QLaurent.of({e: coeff})

    def __add__(self, other: "QLaurent") -> "QLaurent":
        d = dict(self.terms)
        for e, c in other.terms:
            d[e] = d.get(e, 0) + c
        return QLaurent.of(d)

    def __sub__(self, other: "QLaurent") -> "QLaurent":
        d = dict(self.terms)
        for e, c in other.terms:
            d[e] = d.get(e, 0) - c
        return QLaurent.of(d)

    def __mul__(self, other: "QLaurent") -> "QLaurent":
        d = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                k = e1 + e2
                d[k] = d.get(k, 0) + c1 * c2
        return QLaurent.of(d)

    def scale(self, c: int) -> "QLaurent":
        return QLaurent.of({e: c * v for e, v in self.terms})

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self):
        """Largest exponent, or None for the zero polynomial."""
        return self.terms[0][0] if self.terms else None

    def specialize(self, q0) -> Fraction:
        q0 = Fraction(q0)
        if q0 <= 0:
            raise ValueError("q must be positive")
        out = Fraction(0)
        for e, c in self.terms:
            if e.denominator == 1:
                out += c * q0 ** int(e)
            else:
                # half-integral exponent: exact only when q0 is a square
                r = _exact_sqrt(q0)
                out += c * r ** int(2 * e)
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for i, (e, c) in enumerate(self.terms):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                if e == 1:
                    qs = "q"
                else:
                    qs = "q^%s" % (e,)
                body = qs if mag == 1 else "%d %s" % (mag, qs)
            if i == 0:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append("%s %s" % (sign, body))
        return " ".join(parts)


def _exact_sqrt(x: Fraction) -> Fraction:
    num = _isqrt_exact(x.numerator)
    den = _isqrt_exact(x.denominator)
    if num is None or den is None:
        raise ValueError("specializing a half-integral power needs a square q")
    return Fraction(num, den)


def _isqrt_exact(n: int):
    r = int(n ** 0.5)
    for c in (r - 1, r, r + 1):
        if c >= 0 and c * c == n:
            return c
    return None


# ---------------------------------------------------------------------------
# weight characters

@dataclass(frozen=True)
class WeightChar:
    """Finitely supported weight -> multiplicity map on a lattice Z^n."""

    weights: tuple  # sorted ((weight tuple, mult), ...)

    @staticmethod
    def of(mapping) -> "WeightChar":
        agg = {}
        for w, m in (mapping.items() if isinstance(mapping, dict) else mapping):
            w = tuple(int(x) for x in w)
            m = int(m)
            agg[w] = agg.get(w, 0) + m
        return WeightChar(tuple(sorted((w, m) for w, m in agg.items() if m != 0)))

    @staticmethod
    def unit(n: int) -> "WeightChar":
        return WeightChar.of({(0,) * n: 1})

    def as_dict(self):
        return dict(self.weights)

    def dim(self) -> int:
        return sum(m for _, m in self.weights)

    def support(self):
        return [w for w, _ in self.weights]

    def __add__(self, other: "WeightChar") -> "WeightChar":
        d = self.as_dict()
        for w, m in other.weights:
            d[w] = d.get(w, 0) + m
        return WeightChar.of(d)

    def __sub__(self, other: "WeightChar") -> "WeightChar":
        d = self.as_dict()
        for w, m in other.weights:
            d[w] = d.get(w, 0) - m
        return WeightChar.of(d)

    def __mul__(self, other: "WeightChar") -> "WeightChar":
        d = {}
        for w1, m1 in self.weights:
            for w2, m2 in other.weights:
                w = tuple(a + b for a, b in zip(w1, w2))
                d[w] = d.get(w, 0) + m1 * m2
        return WeightChar.of(d)

    def scale(self, c: int) -> "WeightChar":
        return WeightChar.of({w: c * m for w, m in self.weights})

    def adams(self, k: int) -> "WeightChar":
        """psi^k: weight w goes to k*w, multiplicities unchanged."""
        return WeightChar.of({tuple(k * x for x in w): m for w, m in self.weights})

    def mult(self, w) -> int:
        w = tuple(int(x) for x in w)
        return self.as_dict().get(w, 0)

    def is_zero(self) -> bool:
        return not self.weights


def _newton_powers(chi: WeightChar, imax: int, signed: bool):
    """h_0..h_imax (signed=False) or e_0..e_imax (signed=True) by Newton."""
    if imax < 0:
        raise ValueError("power index must be >= 0")
    n = len(chi.weights[0][0]) if chi.weights else 0
    # intermediate coefficients are fractions; integrality is restored at the end
    out = [{(0,) * n: Fraction(1)}]
    psis = [None] + [chi.adams(k) for k in range(1, imax + 1)]
    for i in range(1, imax + 1):
        acc = {}
        for k in range(1, i + 1):
            sgn = (-1) ** (k - 1) if signed else 1
            for w1, m1 in psis[k].weights:
                for w2, m2 in out[i - k].items():
                    w = tuple(a + b for a, b in zip(w1, w2))
                    acc[w] = acc.get(w, Fraction(0)) + sgn * m1 * m2
        out.append({w: v / i for w, v in acc.items() if v != 0})
    result = []
    for d in out:
        ints = {}
        for w, v in d.items():
            assert v.denominator == 1, "Newton identity produced a non-integer"
            if v != 0:
                ints[w] = int(v)
        result.append(WeightChar.of(ints))
    return result


def sym_power(chi: WeightChar, i: int) -> WeightChar:
    if i < 0:
        raise ValueError("symmetric power index must be >= 0")
    return _newton_powers(chi, i, signed=False)[i]


def ext_power(chi: WeightChar, i: int) -> WeightChar:
    if i < 0:
        raise ValueError("exterior power index must be >= 0")
    return _newton_powers(chi, i, signed=True)[i]


def sym_powers_upto(chi: WeightChar, imax: int):
    return _newton_powers(chi, imax, signed=False)


# ---------------------------------------------------------------------------
# Kostant counts

def kostant_counts(simple_coroots, coroots, target):
    """{number of parts i: #multisets of i positive coroots summing to target}.

    Depth-first count over the coroot list in a fixed order, memoized on
    (index, remaining). A remainder is viable only while it expands as a
    nonnegative integer combination of the simple coroots, which also bounds
    the recursion depth by the coroot height of the target.
    """
    from .geometry import solve_linear

    simple_coroots = [tuple(int(x) for x in c) for c in simple_coroots]
    coroots = [tuple(int(x) for x in c) for c in coroots]
    target = tuple(int(x) for x in target)
    n = len(target)
    rows = [[c[j] for c in simple_coroots] for j in range(n)]

    def viable(v):
        sol = solve_linear(rows, list(v))
        if sol is None:
            return False
        return all(x.denominator == 1 and x >= 0 for x in sol)

    if not viable(target):
        return {}

    memo = {}

    def rec(idx, rem):
        if all(x == 0 for x in rem):
            return {0: 1}
        if idx == len(coroots):
            return {}
        key = (idx, rem)
        if key in memo:
            return memo[key]
        out = dict(rec(idx + 1, rem))
        nrem = tuple(a - b for a, b in zip(rem, coroots[idx]))
        if viable(nrem):
            for parts, cnt in rec(idx, nrem).items():
                out[parts + 1] = out.get(parts + 1, 0) + cnt
        memo[key] = out
        return out

    return rec(0, target)


# ---------------------------------------------------------------------------
# Freudenthal and irreducible characters

def _bform(rd: RootDatum):
    pcs = rd.positive_coroots()

    def B(x, y):
        return sum(_idot(x, bv) * _idot(y, bv) for bv in pcs)
    return B


def _nat_root_expansion(rd: RootDatum, v):
    """Coefficients of v in simple roots if all are nonnegative integers."""
    exp = rd.simple_root_expansion(v)
    if exp is None:
        return None
    out = []
    for c in exp:
        if c.denominator != 1 or c < 0:
            return None
        out.append(int(c))
    return tuple(out)


def freudenthal_multiplicity(rd: RootDatum, lam, mu) -> int:
    """Weight multiplicity dim V_lam[mu] by Freudenthal's recursion."""
    lam = tuple(int(x) for x in lam)
    mu = tuple(int(x) for x in mu)
    if not rd.is_dominant_char(lam):
        raise ValueError("highest weight %r is not dominant" % (lam,))
    B = _bform(rd)
    rho2 = tuple(int(2 * x) for x in rd.rho)  # 2*rho is integral

    memo = {}

    def mult(w):
        wd = rd.dominant_char(w)
        if wd == lam:
            return 1
        if _nat_root_expansion(rd, tuple(a - b for a, b in zip(lam, wd))) is None:
            return 0
        if wd in memo:
            return memo[wd]
        memo[wd] = 0  # guards accidental cycles; real value set below
        num = 0
        for a, _ in rd.positive_pairs:
            k = 1
            while True:
                w2 = tuple(x + k * y for x, y in zip(wd, a))
                if _nat_root_expansion(rd, tuple(p - s for p, s in zip(lam, w2))) is None:
                    break
                m2 = mult(w2)
                if m2:
                    num += B(w2, a) * m2
                k += 1
        # denominator B(lam+rho,lam+rho) - B(wd+rho,wd+rho) = B(lam+wd+2rho, lam-wd)
        lhs = tuple(a + b for a, b in zip(lam, wd))
        lhs = tuple(x + y for x, y in zip(lhs, rho2))
        diff = tuple(a - b for a, b in zip(lam, wd))
        den = B(lhs, diff)
        assert den > 0, "Freudenthal denominator must be positive"
        val = Fraction(2 * num, den)
        assert val.denominator == 1 and val >= 0
        memo[wd] = int(val)
        return memo[wd]

    return mult(mu)


def weyl_dim(rd: RootDatum, lam) -> int:
    lam = tuple(int(x) for x in lam)
    if not rd.is_dominant_char(lam):
        raise ValueError("highest weight %r is not dominant" % (lam,))
    num = den = Fraction(1)
    for _, bv in rd.positive_pairs:
        num *= sum((l + r) * b for l, r, b in zip(lam, rd.rho, bv))
        den *= sum(r * b for r, b in zip(rd.rho, bv))
    if not rd.positive_pairs:
        return 1
    v = num / den
    assert v.denominator == 1 and v > 0
    return int(v)


def irrep_char(rd: RootDatum, lam) -> WeightChar:
    """Full character of the irreducible with highest weight lam."""
    lam = tuple(int(x) for x in lam)
    if not rd.is_dominant_char(lam):
        raise ValueError("highest weight %r is not dominant" % (lam,))
    lowest = tuple(-x for x in rd.dominant_char(tuple(-x for x in lam)))
    span = _nat_root_expansion(rd, tuple(a - b for a, b in zip(lam, lowest)))
    assert span is not None
    total = sum(span)
    k = rd.nsimple
    out = {}

    def scan(j, budget, drop):
        if j == k:
            w = tuple(l - d for l, d in zip(lam, drop))
            m = freudenthal_multiplicity(rd, lam, w)
            if m:
                out[w] = m
            return
        for c in range(budget + 1):
            scan(j + 1, budget - c,
                 tuple(d + c * a for d, a in zip(drop, rd.simple_roots[j])))

    scan(0, total, (0,) * rd.rank)
    chi = WeightChar.of(out)
    assert chi.dim() == weyl_dim(rd, lam), "character misses the Weyl dimension"
    return chi


def decompose(rd: RootDatum, chi: WeightChar):
    """Write chi as a nonnegative sum of irreducible characters.

    Greedy subtraction at a dominant support point that is maximal in the
    root order (so no other support point dominates it), lexicographically
    largest among the maximal ones; raises if chi is not a true character.
    """
    work = chi.as_dict()
    out = []
    while any(work.values()):
        doms = [w for w, m in work.items() if m != 0 and rd.is_dominant_char(w)]
        if not doms:
            raise ValueError("not a true character: no dominant leading term")
        def dominated(w):
            return any(v != w and
                       _nat_root_expansion(rd, tuple(a - b for a, b in zip(v, w)))
                       is not None for v in doms)
        tops = [w for w in doms if not dominated(w)]
        w = max(tops)
        m = work[w]
        if m < 0:
            raise ValueError("not a true character: negative multiplicity at %r" % (w,))
        piece = irrep_char(rd, w)
        for u, mu in piece.weights:
            work[u] = work.get(u, 0) - m * mu
        out.append((w, m))
    if any(v != 0 for v in work.values()):
        raise ValueError("not a true character: nonzero remainder")
    return sorted(out)
