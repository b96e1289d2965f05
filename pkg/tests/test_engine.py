import itertools
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from sphvar.chars import QLaurent
from sphvar.geometry import Cone, LatticeMap
from sphvar.rootdata import ParabolicDatum, root_datum, product_datum
from sphvar.spherical import ColoredCone, SphericalDatum
from sphvar.engine import (BasicFunctionTable, BorelRoute, DualRadicalRep,
                           FFixedRep, LFactor, PPRoute, TransportRoute,
                           apply_shifts, basic_function_borel,
                           basic_function_graded, basic_function_pp,
                           basic_function_smooth, basic_function_transport,
                           borel_shifts, dual_radical, f_fixed,
                           growth_certificate, lfactor_from_monomials,
                           local_lfactor, minuscule_satake, pp_shifts,
                           toric_distance, transport_height)

ONE = QLaurent.one()


def a2_datum():
    """The affine plane under T(1) x SL(2)."""
    return SphericalDatum(
        name="a2", ambient=product_datum(root_datum("T", 1), root_datum("SL", 2)),
        rank=1, lattice_map=LatticeMap.of([(1,), (1,)]),
        valuation_cone=Cone(1, ((1,), (-1,))),
        colors=(("D", (1,)),),
        colored_cone=ColoredCone(Cone(1, ((1,),)), ("D",)))


def a2_routes():
    sl2 = root_datum("SL", 2)
    m = LatticeMap.of([(-1,)])
    return BorelRoute(sl2, m), PPRoute(sl2, (), m)


def borel_gl2_datum():
    return SphericalDatum(
        name="borel-gl2", ambient=product_datum(root_datum("T", 2), root_datum("GL", 2)),
        rank=2, lattice_map=LatticeMap.of([(0, -1), (-1, -1), (0, 1), (1, 1)]),
        valuation_cone=Cone.full(2),
        colors=(("D", (1, 0)),),
        colored_cone=ColoredCone(Cone(2, ((1, 0),)), ("D",)))


def borel_gl2_route():
    return BorelRoute(root_datum("GL", 2), LatticeMap.of([(0, 1), (1, 1)]))


def borel_sl3_datum():
    return SphericalDatum(
        name="borel-sl3", ambient=product_datum(root_datum("T", 2), root_datum("SL", 3)),
        rank=2, lattice_map=LatticeMap.of([(0, 1), (1, 0), (0, -1), (-1, 0)]),
        valuation_cone=Cone.full(2),
        colors=(("D1", (1, 0)), ("D2", (0, 1))),
        colored_cone=ColoredCone(Cone(2, ((1, 0), (0, 1))), ("D1", "D2")))


def borel_sl3_routes():
    sl3 = root_datum("SL", 3)
    m = LatticeMap.of([(0, -1), (-1, 0)])
    return BorelRoute(sl3, m), PPRoute(sl3, (), m)


def pp_gl3_datum():
    return SphericalDatum(
        name="pp-gl3", ambient=product_datum(root_datum("T", 2), root_datum("GL", 3)),
        rank=2, lattice_map=LatticeMap.of([(0, 1), (1, 1), (0, 1), (0, 1), (1, 1)]),
        valuation_cone=Cone.full(2),
        colors=(("D", (1, 0)),), levi_roots=(0,),
        colored_cone=ColoredCone(Cone(2, ((1, 0),)), ("D",)))


def pp_gl3_route():
    return PPRoute(root_datum("GL", 3), (0,), LatticeMap.of([(0, 0, 1), (1, 1, 1)]))


def siegel_datum():
    return SphericalDatum(
        name="siegel-gsp6", ambient=product_datum(root_datum("T", 2), root_datum("GSP", 6)),
        rank=2,
        lattice_map=LatticeMap.of([(0, 1), (1, 1), (-1, 0), (-1, 0), (-1, 0), (3, 1)]),
        valuation_cone=Cone.full(2),
        colors=(("DY", (1, 0)),), levi_roots=(0, 1),
        colored_cone=ColoredCone(Cone(2, ((1, 0),)), ("DY",)))


def siegel_route():
    return PPRoute(root_datum("GSP", 6), (0, 1),
                   LatticeMap.of([(-1, -1, -1, 3), (0, 0, 0, 1)]))


def triple_datum():
    from sphvar.rootdata import RootDatum
    a1triple = RootDatum(
        "a1triple", 5,
        ((1, -1, 0, 0, 0), (-1, -1, 2, 0, 0), (-1, -1, 0, 2, 0)),
        ((1, -1, 0, 0, 0), (0, 0, 1, 0, 0), (0, 0, 0, 1, 0)))
    return SphericalDatum(
        name="triple-product", ambient=a1triple, rank=5,
        lattice_map=LatticeMap.identity(5),
        valuation_cone=Cone.from_inequalities(
            [(-1, 1, 0, 0, 0), (1, 1, -2, 0, 0), (1, 1, 0, -2, 0)], 5),
        colors=(("D1", (1, 0, 0, 0, 1)), ("D2", (0, 1, 1, 0, 1)),
                ("D3", (0, 1, 0, 1, 1)), ("D4", (0, -1, 0, 0, -1))),
        spherical_roots=((1, -1, 0, 0, 0), (-1, -1, 2, 0, 0), (-1, -1, 0, 2, 0)),
        colored_cone=ColoredCone(
            Cone(5, ((1, 0, 0, 0, 1), (0, 1, 1, 0, 1), (0, 1, 0, 1, 1),
                     (0, -1, 0, 0, -1))),
            ("D1", "D2", "D3", "D4")))


def triple_route():
    return TransportRoute("siegel-gsp6",
                          LatticeMap.of([(1, 0, 1, 1, -1), (1, 1, 0, 0, -1)]))


def hecke_datum():
    return SphericalDatum(
        name="hecke-gl2", ambient=product_datum(root_datum("T", 1), root_datum("PGL", 2)),
        rank=2, lattice_map=LatticeMap.identity(2),
        valuation_cone=Cone(2, ((1, 0), (-1, 0), (0, -1))),
        colors=(("D1", (1, 1)), ("D2", (-1, 1))),
        spherical_roots=((0, 1),), little_weyl=(((1, 0), (0, -1)),),
        colored_cone=ColoredCone(Cone(2, ()), ()))


def gj2_datum():
    return SphericalDatum(
        name="godement-jacquet-2",
        ambient=product_datum(root_datum("GL", 2), root_datum("GL", 2)),
        rank=2, lattice_map=LatticeMap.of([(0, -1), (-1, -1), (1, 1), (0, 1)]),
        valuation_cone=Cone(2, ((1, 2), (-1, -2), (-1, 0))),
        colors=(("D", (1, 0)),),
        spherical_roots=((2, -1),),
        colored_cone=ColoredCone(Cone(2, ((1, 0), (0, 1))), ("D",)))


def a1_datum():
    return SphericalDatum(
        name="a1-gl1", ambient=root_datum("T", 1), rank=1,
        lattice_map=LatticeMap.of([(1,)]),
        valuation_cone=Cone(1, ((1,), (-1,))),
        colored_cone=ColoredCone(Cone(1, ((1,),)), ()))


def torus5_datum():
    return SphericalDatum(
        name="t5", ambient=root_datum("T", 5), rank=5,
        lattice_map=LatticeMap.identity(5),
        valuation_cone=Cone.full(5),
        colored_cone=ColoredCone(
            Cone(5, tuple(tuple(1 if j == i else 0 for j in range(5))
                          for i in range(5))), ()))


def no_cone_datum():
    return SphericalDatum(
        name="bare", ambient=root_datum("T", 2), rank=2,
        lattice_map=LatticeMap.identity(2),
        valuation_cone=Cone.full(2))


# ---------------------------------------------------------------------------
# dual radical and f-fixed data

def test_dual_radical_needs_radical():
    gl2 = root_datum("GL", 2)
    with pytest.raises(ValueError, match="no radical"):
        dual_radical(ParabolicDatum(gl2, (0,)))


def test_dual_radical_gl3():
    r = dual_radical(ParabolicDatum(root_datum("GL", 3), (0,)))
    assert r.weights == (((0, 1, -1), (1, -1), -1), ((1, 0, -1), (1, -1), 1))


def test_dual_radical_gl4_grades():
    r = dual_radical(ParabolicDatum(root_datum("GL", 4), (0, 2)))
    assert sorted(m for _, _, m in r.weights) == [-2, 0, 0, 2]
    assert {tb for _, tb, _ in r.weights} == {(1, -1)}


def test_f_fixed_sl2_borel():
    ff = f_fixed(dual_radical(ParabolicDatum(root_datum("SL", 2), ())))
    assert ff.entries == (((1,), 0, 1),)


def test_f_fixed_gl3_mirabolic():
    ff = f_fixed(dual_radical(ParabolicDatum(root_datum("GL", 3), (0,))))
    assert ff.entries == (((1, -1), -1, 1),)
    assert ff.total_multiplicity() == 1


def test_f_fixed_gl4_two_strings():
    # grades 0, 2, -2, 0 in one class: strings with lowest weights -2 and 0
    ff = f_fixed(dual_radical(ParabolicDatum(root_datum("GL", 4), (0, 2))))
    assert ff.entries == (((1, -1), -2, 1), ((1, -1), 0, 1))
    assert ff.total_multiplicity() == 2


def test_f_fixed_sp4_siegel():
    ff = f_fixed(dual_radical(ParabolicDatum(root_datum("C", 2), (0,))))
    assert ff.entries == (((1,), -1, 1), ((2,), 0, 1))


def test_f_fixed_gsp6_siegel():
    ff = f_fixed(dual_radical(ParabolicDatum(root_datum("GSP", 6), (0, 1))))
    assert ff.entries == (((1, 0), -2, 1), ((2, 0), -2, 1))


def test_f_fixed_rejects_asymmetric_grades():
    p = ParabolicDatum(root_datum("GL", 3), (0,))
    bad = DualRadicalRep(p, (((1, 0, -1), (1, -1), 1),))
    with pytest.raises(ValueError, match="asymmetric"):
        f_fixed(bad)


def test_f_fixed_rejects_grade_gaps():
    p = ParabolicDatum(root_datum("GL", 3), (0,))
    bad = DualRadicalRep(p, (((1, 0, -1), (1, -1), 3), ((0, 1, -1), (1, -1), -3)))
    with pytest.raises(ValueError, match="grade gap"):
        f_fixed(bad)


def test_f_fixed_counts_levi_constituents():
    # string count equals the number of dual-Levi constituents of the radical
    from sphvar.chars import WeightChar, decompose
    from sphvar.rootdata import dual_datum, levi_datum
    for kind, n, levi in (("GL", 3, (0,)), ("C", 2, (0,))):
        p = ParabolicDatum(root_datum(kind, n), levi)
        ff = f_fixed(dual_radical(p))
        rad = WeightChar.of([(tuple(int(x) for x in bv), 1)
                             for _, bv in p.radical_pairs])
        md = dual_datum(levi_datum(p.datum, p.levi_indices))
        assert ff.total_multiplicity() == len(decompose(md, rad))


# ---------------------------------------------------------------------------
# basic function tables, Borel route

def test_borel_a2_all_ones_to_height_ten():
    route, _ = a2_routes()
    tb = basic_function_borel(a2_datum(), route, 10)
    assert tb.support() == [(n,) for n in range(11)]
    assert all(v == ONE for _, v in tb.rows())
    assert tb.value((-1,)).is_zero()
    assert tb.case == "UP-Borel"


def test_borel_gl2_ray():
    tb = basic_function_borel(borel_gl2_datum(), borel_gl2_route(), 6)
    assert tb.support() == [(a, 0) for a in range(7)]
    assert all(v == ONE for _, v in tb.rows())


def test_borel_sl3_values():
    tb = basic_function_borel(borel_sl3_datum(), borel_sl3_routes()[0], 6)
    assert tb.value((0, 0)) == ONE
    assert str(tb.value((1, 1))) == "q + 1"
    assert str(tb.value((2, 1))) == "q + 1"
    assert str(tb.value((1, 2))) == "q + 1"
    assert str(tb.value((2, 2))) == "q^2 + q + 1"
    for m in range(1, 7):
        assert tb.value((m, 0)) == ONE
        assert tb.value((0, m)) == ONE
    assert all(x >= 0 for l in tb.support() for x in l)
    assert tb.truncation == 14


def test_borel_label_map_must_be_square():
    gl2 = root_datum("GL", 2)
    with pytest.raises(ValueError, match="square"):
        basic_function_borel(borel_gl2_datum(),
                             BorelRoute(gl2, LatticeMap.of([(1, 0)])), 2)


def test_borel_label_map_must_be_unimodular():
    gl2 = root_datum("GL", 2)
    with pytest.raises(ValueError, match="unimodular"):
        basic_function_borel(borel_gl2_datum(),
                             BorelRoute(gl2, LatticeMap.of([(2, 0), (0, 1)])), 2)


# ---------------------------------------------------------------------------
# basic function tables, derived parabolic route

def test_pp_matches_borel_sl2():
    borel, pp = a2_routes()
    d = a2_datum()
    t1 = basic_function_borel(d, borel, 10)
    t2 = basic_function_pp(d, pp, 10)
    assert t1.values == t2.values


def test_pp_matches_borel_sl3():
    borel, pp = borel_sl3_routes()
    d = borel_sl3_datum()
    t1 = basic_function_borel(d, borel, 6)
    t2 = basic_function_pp(d, pp, 6)
    assert t1.values == t2.values
    assert t2.case == "PP-general"


def test_pp_gl3_sign_dependence():
    d = pp_gl3_datum()
    route = pp_gl3_route()
    plus = basic_function_pp(d, route, 4, kappa=1)
    minus = basic_function_pp(d, route, 4, kappa=-1)
    assert plus.support() == [(n, 0) for n in range(5)]
    assert all(v == ONE for _, v in plus.rows())
    for n in range(5):
        assert minus.value((n, 0)) == QLaurent.q_pow(n)


def test_pp_rejects_other_kappa():
    with pytest.raises(ValueError, match="kappa"):
        basic_function_pp(pp_gl3_datum(), pp_gl3_route(), 2, kappa=0)


def test_pp_siegel_values():
    tb = basic_function_pp(siegel_datum(), siegel_route(), 4)
    assert [(l, str(v)) for l, v in tb.rows()] == [
        ((0, 0), "1"), ((1, 0), "1"), ((2, 0), "q^2 + 1"),
        ((3, 0), "q^2 + 1"), ((4, 0), "q^4 + q^2 + 1")]


def test_pp_label_map_must_kill_levi():
    route = PPRoute(root_datum("GL", 3), (0,),
                    LatticeMap.of([(1, 0, 0), (0, 0, 1)]))
    with pytest.raises(ValueError, match="kill Levi"):
        basic_function_pp(pp_gl3_datum(), route, 2)


def test_pp_rejects_non_monotone_labels():
    route = PPRoute(root_datum("GL", 3), (0,),
                    LatticeMap.of([(0, 0, -1), (1, 1, 1)]))
    with pytest.raises(ValueError, match="non-monotone"):
        basic_function_pp(pp_gl3_datum(), route, 2)


# ---------------------------------------------------------------------------
# smooth and transported tables

def test_smooth_hecke_is_origin_only():
    tb = basic_function_smooth(hecke_datum(), 6)
    assert tb.rows() == (((0, 0), ONE),)


def test_smooth_gj2_support():
    tb = basic_function_smooth(gj2_datum(), 4)
    assert tb.support() == [(0, 0), (0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3)]
    assert all(v == ONE for _, v in tb.rows())


def test_smooth_needs_colored_cone():
    with pytest.raises(ValueError, match="colored cone"):
        basic_function_smooth(no_cone_datum(), 2)


def test_transport_height_is_small():
    assert transport_height(triple_datum(), triple_route(), 6) == 1


def test_transport_pulls_back_partner_values():
    d = triple_datum()
    route = triple_route()
    partner = basic_function_pp(siegel_datum(), siegel_route(), 2)
    tb = basic_function_transport(d, route, partner, 6)
    assert len(tb.rows()) == 5
    assert all(v == ONE for _, v in tb.rows())
    assert tb.value((0, 0, 0, 0, 0)) == ONE
    assert tb.case == "transport"


def test_transport_rejects_short_partner():
    partner = basic_function_pp(siegel_datum(), siegel_route(), 0)
    with pytest.raises(ValueError, match="too short"):
        basic_function_transport(triple_datum(), triple_route(), partner, 6)


def test_table_mechanics():
    tb = BasicFunctionTable.of("toy", "smooth", 1,
                               {(0,): ONE, (1,): QLaurent.zero()}, 0, 1)
    assert tb.support() == [(0,)]
    assert tb.value((1,)).is_zero()
    sp = basic_function_borel(borel_sl3_datum(), borel_sl3_routes()[0], 3).specialize(2)
    assert sp[(1, 1)] == 3


# ---------------------------------------------------------------------------
# Satake shifts

def test_minuscule_satake_gl2():
    gl2 = root_datum("GL", 2)
    s = minuscule_satake(gl2, (1, 0))
    assert set(s) == {(1, 0), (0, 1)}
    assert all(str(v) == "q^1/2" for v in s.values())
    c = minuscule_satake(gl2, (1, 1))
    assert c == {(1, 1): ONE}


def test_minuscule_satake_rejects_higher_weights():
    with pytest.raises(ValueError, match="minuscule"):
        minuscule_satake(root_datum("GL", 2), (2, 0))
    with pytest.raises(ValueError, match="minuscule"):
        minuscule_satake(root_datum("SL", 2), (1,))


def test_borel_shifts_gl2():
    route = borel_gl2_route()
    h = borel_shifts(route, minuscule_satake(route.group, (1, 0)))
    assert h == [((1, 1), ONE), ((0, 1), QLaurent.q_pow(1))]
    z = borel_shifts(route, minuscule_satake(route.group, (1, 1)))
    assert z == [((1, 2), ONE)]


def test_pp_shifts_gl3():
    route = pp_gl3_route()
    s = minuscule_satake(route.group, (1, 0, 0))
    for kappa in (1, -1):
        h = dict(pp_shifts(route, s, kappa))
        assert set(h) == {(0, 1), (1, 1)}
        assert h[(1, 1)] == ONE
        assert str(h[(0, 1)]) == "q^2 + q"


def test_apply_shifts_orientation():
    route = borel_gl2_route()
    h = borel_shifts(route, minuscule_satake(route.group, (1, 0)))
    out = apply_shifts(h, {(2, 1): 1})
    assert out == {(1, 0): ONE, (2, 0): QLaurent.q_pow(1)}


def test_shifts_commute():
    route = borel_gl2_route()
    h1 = borel_shifts(route, minuscule_satake(route.group, (1, 0)))
    h2 = borel_shifts(route, minuscule_satake(route.group, (1, 1)))
    f = {(0, 0): 1, (2, 1): 1}
    a = apply_shifts(h2, apply_shifts(h1, f))
    b = apply_shifts(h1, apply_shifts(h2, f))
    assert a == b


@settings(max_examples=60, deadline=None)
@given(st.integers(-3, 3), st.integers(-3, 3))
def test_minuscule_orbit_coefficients_equal(a, b):
    gl2 = root_datum("GL", 2)
    assume(abs(a - b) <= 1)
    s = minuscule_satake(gl2, (a, b))
    assert set(s) == set(gl2.weyl_orbit_cochar(gl2.dominant_cochar((a, b))))
    assert len({str(v) for v in s.values()}) == 1
    mass = sum(v.specialize(1) for _, v in borel_shifts(borel_gl2_route(), s))
    assert mass == len(s)


# ---------------------------------------------------------------------------
# graded decompositions for a general Levi

def test_graded_sl2_borel():
    p = ParabolicDatum(root_datum("SL", 2), ())
    assert basic_function_graded(p, 3) == [(i, (((i,), 1),)) for i in range(4)]


def test_graded_gl3_mirabolic():
    p = ParabolicDatum(root_datum("GL", 3), (0,))
    assert basic_function_graded(p, 2) == [
        (0, (((0, 0, 0), 1),)),
        (1, (((1, 0, -1), 1),)),
        (2, (((2, 0, -2), 1),))]


def test_graded_rejects_bad_input():
    p = ParabolicDatum(root_datum("GL", 3), (0,))
    with pytest.raises(ValueError, match="degree bound"):
        basic_function_graded(p, -1)
    with pytest.raises(ValueError, match="no radical"):
        basic_function_graded(ParabolicDatum(root_datum("GL", 2), (0,)), 2)


# ---------------------------------------------------------------------------
# local L-factors

def test_lfactor_sl2_geometric_series():
    ff = f_fixed(dual_radical(ParabolicDatum(root_datum("SL", 2), ())))
    lf = local_lfactor(ff, {"t1": Fraction(2, 3)})
    assert lf.monomials == ((Fraction(2, 3), Fraction(0)),)
    assert lf.expand(4, 2) == [Fraction(2, 3) ** k for k in range(5)]


def test_lfactor_empty_rep_is_one():
    p = ParabolicDatum(root_datum("GL", 3), (0,))
    lf = local_lfactor(FFixedRep(p, ()), {})
    assert lf.expand(3, 2) == [1, 0, 0, 0]


def test_lfactor_expand_matches_sym_powers():
    ff = f_fixed(dual_radical(ParabolicDatum(root_datum("GSP", 6), (0, 1))))
    lf = local_lfactor(ff, {"t1": 2, "t2": 5})
    assert lf.monomials == ((Fraction(2), Fraction(-1)), (Fraction(4), Fraction(-1)))
    for q0 in (2, 3):
        vals = [Fraction(c) * Fraction(q0) ** int(e) for c, e in lf.monomials]
        got = lf.expand(5, q0)
        for k in range(6):
            brute = sum(
                _prod(pick)
                for pick in itertools.combinations_with_replacement(vals, k))
            assert got[k] == brute


def _prod(xs):
    out = Fraction(1)
    for x in xs:
        out *= x
    return out


def test_lfactor_half_exponents_need_square_q():
    ff = f_fixed(dual_radical(ParabolicDatum(root_datum("GL", 3), (0,))))
    lf = local_lfactor(ff, {"t1": 2, "t2": 3})
    assert lf.monomials == ((Fraction(2, 3), Fraction(-1, 2)),)
    assert lf.expand(3, 4) == [Fraction(3) ** -k for k in range(4)]
    with pytest.raises(ValueError, match="square"):
        lf.expand(3, 2)


def test_lfactor_full_radical_rep():
    r = dual_radical(ParabolicDatum(root_datum("GL", 3), (0,)))
    lf = local_lfactor(r, {"t1": 2, "t2": 3})
    assert sorted(lf.monomials) == [
        (Fraction(2, 3), Fraction(-1, 2)), (Fraction(2, 3), Fraction(1, 2))]


def test_lfactor_point_errors():
    ff = f_fixed(dual_radical(ParabolicDatum(root_datum("GL", 3), (0,))))
    with pytest.raises(ValueError, match="missing coordinate t1"):
        local_lfactor(ff, {})
    with pytest.raises(ValueError, match="zero coordinate t1"):
        local_lfactor(ff, {"t1": 0, "t2": 1})
    with pytest.raises(ValueError, match="unsupported representation"):
        local_lfactor("nonsense", {})


def test_lfactor_from_stored_monomials():
    stored = (("a1", Fraction(1, 2)), ("a2", Fraction(1, 2)))
    lf = lfactor_from_monomials(stored, {"a1": Fraction(1, 2), "a2": 3})
    assert lf.expand(2, 4) == [1, 7, 43]
    with pytest.raises(ValueError, match="missing coordinate a2"):
        lfactor_from_monomials(stored, {"a1": 1})
    sym = LFactor(stored)
    assert sym.is_symbolic()
    with pytest.raises(ValueError, match="symbolic"):
        sym.expand(2, 4)


# ---------------------------------------------------------------------------
# growth certificates and toric distance

def test_growth_certificate_all_ones():
    tb = basic_function_smooth(gj2_datum(), 4)
    assert growth_certificate(tb) == (Fraction(0), Fraction(0))


def test_growth_certificate_accepts_hint():
    tb = basic_function_borel(borel_sl3_datum(), borel_sl3_routes()[0], 6)
    assert growth_certificate(tb, hints=((1, 1),)) == (Fraction(1), Fraction(1))


def test_growth_certificate_searches():
    tb = basic_function_borel(borel_sl3_datum(), borel_sl3_routes()[0], 6)
    chi = growth_certificate(tb)
    assert chi is not None
    for l, v in tb.rows():
        assert sum(c * x for c, x in zip(chi, l)) >= v.degree()


def test_growth_certificate_inconclusive():
    tb = BasicFunctionTable.of(
        "toy", "smooth", 1,
        {(n,): QLaurent.q_pow(abs(n)) for n in range(-2, 3)}, 0, 2)
    assert growth_certificate(tb) is None


def test_growth_certificate_empty_table():
    tb = BasicFunctionTable.of("toy", "smooth", 2, {}, 0, 0)
    assert growth_certificate(tb) == (Fraction(0), Fraction(0))


def test_toric_distance_line():
    d = a1_datum()
    for n in range(4):
        assert toric_distance(d, (n,), 3) == Fraction(3) ** -n
    with pytest.raises(ValueError, match="outside"):
        toric_distance(d, (-1,), 3)


def test_toric_distance_quotients_lineality():
    d = borel_gl2_datum()
    assert toric_distance(d, (2, 0), 2) == Fraction(1, 4)
    assert toric_distance(d, (0, 0), 2) == 1


def test_toric_distance_trivial_cone():
    assert toric_distance(hecke_datum(), (0, 0), 5) == 1


def test_toric_distance_needs_colored_cone():
    with pytest.raises(ValueError, match="no colored cone"):
        toric_distance(no_cone_datum(), (0, 0), 2)


def test_toric_distance_rank_limit():
    with pytest.raises(ValueError, match="unsupported rank"):
        toric_distance(torus5_datum(), (0, 0, 0, 0, 0), 2)


def test_distance_bounds_table_values():
    # |Phi0| at q0 is within d^-2 of the boundary distance on these tables
    sieg = basic_function_pp(siegel_datum(), siegel_route(), 6)
    sl3 = basic_function_borel(borel_sl3_datum(), borel_sl3_routes()[0], 6)
    for datum, tb in ((siegel_datum(), sieg), (borel_sl3_datum(), sl3)):
        for q0 in (2, 3):
            for l, v in tb.specialize(q0).items():
                dist = toric_distance(datum, l, q0)
                assert abs(v) <= dist ** -2
