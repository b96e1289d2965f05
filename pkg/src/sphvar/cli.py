"""Command line around the lattice, table, and enumeration layers.

Input documents are JSON (schema 1) describing one spherical datum:

    {"schema": 1, "name": "...",
     "group": {"name", "rank", "simple_roots", "simple_coroots"}
              | {"type": "GL", "rank": 3} | {"factors": [group, ...]},
     "rank": r, "lattice_map": [[...], ...],
     "valuation_cone": {"generators": [[...], ...]}
                       | {"inequalities": [[...], ...]},
     "colors": [{"label": "D", "rho": [...]}, ...],
     "levi_roots": [...], "spherical_roots": [[...], ...],
     "little_weyl": [[[...]]] | null, "colored_cone": {...} | null}

Table commands derive their route from the document: the lattice_map rows
sitting in the non-torus coordinate block, transposed, are the label
functionals on that block's cocharacters.  Borel tables additionally need
this block square and unimodular; both table cases need a horospherical
datum (no spherical roots).

Output is tab-separated; labels print as comma-joined integers and values as
canonical q-Laurent strings unless a numeric --q (or SPH_Q_DEFAULT) asks for
specialization.  Exit codes: 0 pass, 1 mathematical failure, 2 bad input.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import catalog as _catalog
from . import oracle as _oracle
from .engine import (BorelRoute, KAPPA, PPRoute, TransportRoute,
                     basic_function_borel, basic_function_graded,
                     basic_function_pp, dual_radical, f_fixed,
                     growth_certificate, local_lfactor)
from .geometry import Cone, LatticeMap
from .rootdata import ParabolicDatum, RootDatum, product_datum, root_datum
from .spherical import (ColoredCone, SphericalDatum, arithmetic_multiplicity,
                        aut_lineality, enumerate_orbits, is_affine,
                        is_wavefront, negligible_orbit_check,
                        parabolic_induction, validate_colored_cone)

SCHEMA = 1


class InputError(Exception):
    """Bad document or bad request; maps to exit code 2."""


# ---------------------------------------------------------------------------
# documents

def _ivec(v, what):
    try:
        return tuple(int(x) for x in v)
    except (TypeError, ValueError):
        raise InputError("%s must be a list of integers, got %r" % (what, v))


def _imat(m, what):
    if not isinstance(m, (list, tuple)):
        raise InputError("%s must be a list of rows" % what)
    return tuple(_ivec(r, what + " row") for r in m)


def parse_group(obj) -> RootDatum:
    if not isinstance(obj, dict):
        raise InputError("group must be an object")
    if "factors" in obj:
        factors = obj["factors"]
        if not factors:
            raise InputError("group.factors must be nonempty")
        return product_datum(*(parse_group(f) for f in factors))
    if "simple_roots" in obj:
        try:
            return RootDatum(str(obj.get("name", "custom")), int(obj["rank"]),
                             _imat(obj["simple_roots"], "simple_roots"),
                             _imat(obj["simple_coroots"], "simple_coroots"))
        except (KeyError, ValueError) as e:
            raise InputError("bad group: %s" % e)
    try:
        return root_datum(str(obj["type"]), int(obj["rank"]))
    except (KeyError, ValueError) as e:
        raise InputError("bad group: %s" % e)


def render_group(rd: RootDatum) -> dict:
    return {"name": rd.name, "rank": rd.rank,
            "simple_roots": [list(a) for a in rd.simple_roots],
            "simple_coroots": [list(a) for a in rd.simple_coroots]}


def _parse_cone(obj, rank, what) -> Cone:
    if not isinstance(obj, dict):
        raise InputError("%s must be an object" % what)
    n = int(obj.get("dim", rank))
    try:
        if "inequalities" in obj:
            return Cone.from_inequalities(
                _imat(obj["inequalities"], what + ".inequalities"), n)
        return Cone(n, _imat(obj.get("generators", ()), what + ".generators"))
    except ValueError as e:
        raise InputError("bad %s: %s" % (what, e))


def parse_document(obj) -> SphericalDatum:
    if not isinstance(obj, dict):
        raise InputError("document must be a JSON object")
    if obj.get("schema") != SCHEMA:
        raise InputError("unsupported schema %r (want %d)"
                         % (obj.get("schema"), SCHEMA))
    for key in ("name", "group", "rank", "lattice_map", "valuation_cone"):
        if key not in obj:
            raise InputError("document is missing %r" % key)
    rank = int(obj["rank"])
    colors = []
    for c in obj.get("colors", ()):
        if not isinstance(c, dict) or "label" not in c or "rho" not in c:
            raise InputError("colors entries need label and rho")
        colors.append((str(c["label"]), _ivec(c["rho"], "rho")))
    lw = obj.get("little_weyl")
    if lw is not None:
        lw = tuple(_imat(m, "little_weyl matrix") for m in lw)
    cc = obj.get("colored_cone")
    if cc is not None:
        cc = ColoredCone(_parse_cone(cc, rank, "colored_cone"),
                         tuple(str(x) for x in cc.get("colors", ())))
    try:
        return SphericalDatum(
            name=str(obj["name"]),
            ambient=parse_group(obj["group"]),
            rank=rank,
            lattice_map=LatticeMap.of(_imat(obj["lattice_map"],
                                            "lattice_map")),
            valuation_cone=_parse_cone(obj["valuation_cone"], rank,
                                       "valuation_cone"),
            colors=tuple(colors),
            levi_roots=_ivec(obj.get("levi_roots", ()), "levi_roots"),
            spherical_roots=_imat(obj.get("spherical_roots", ()),
                                  "spherical_roots"),
            little_weyl=lw,
            colored_cone=cc)
    except ValueError as e:
        raise InputError("inconsistent document: %s" % e)


def _cone_rows(cone: Cone):
    # generators are primitive, so integral even when Fraction-typed
    return [[int(x) for x in g] for g in cone.generators]


def render_document(d: SphericalDatum) -> dict:
    cc = None
    if d.colored_cone is not None:
        cc = {"generators": _cone_rows(d.colored_cone.cone),
              "colors": list(d.colored_cone.colors)}
    return {
        "schema": SCHEMA,
        "name": d.name,
        "group": render_group(d.ambient),
        "rank": d.rank,
        "lattice_map": [list(r) for r in d.lattice_map.rows],
        "valuation_cone": {"generators": _cone_rows(d.valuation_cone)},
        "colors": [{"label": lbl, "rho": list(rho)} for lbl, rho in d.colors],
        "levi_roots": list(d.levi_roots),
        "spherical_roots": [list(g) for g in d.spherical_roots],
        "little_weyl": ([[list(r) for r in m] for m in d.little_weyl]
                        if d.little_weyl is not None else None),
        "colored_cone": cc,
    }


def load_document(path) -> SphericalDatum:
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except OSError as e:
        raise InputError("cannot read %s: %s" % (path, e))
    except json.JSONDecodeError as e:
        raise InputError("%s is not JSON: %s" % (path, e))
    return parse_document(obj)


# ---------------------------------------------------------------------------
# route derivation

def _torus_split(rd: RootDatum):
    """(block datum, block coordinates): the non-torus coordinate block, or
    the whole group when there are no roots."""
    if not rd.simple_roots:
        return rd, tuple(range(rd.rank))
    touched = [j for j in range(rd.rank)
               if any(a[j] for a in rd.simple_roots)
               or any(av[j] for av in rd.simple_coroots)]
    if len(touched) == rd.rank:
        return rd, tuple(touched)
    block = RootDatum(
        rd.name + "-g", len(touched),
        tuple(tuple(a[j] for j in touched) for a in rd.simple_roots),
        tuple(tuple(av[j] for j in touched) for av in rd.simple_coroots))
    return block, tuple(touched)


def _derived_labels(d: SphericalDatum):
    """(block datum, label functionals): transpose of the block's rows."""
    block, coords = _torus_split(d.ambient)
    rows = [d.lattice_map.rows[j] for j in coords]
    functionals = [tuple(row[i] for row in rows) for i in range(d.rank)]
    return block, LatticeMap.of(functionals)


def _require_horospherical(d: SphericalDatum, what):
    if d.spherical_roots:
        raise InputError("%s needs a horospherical datum; %s has %d "
                         "spherical roots" % (what, d.name,
                                              len(d.spherical_roots)))


# ---------------------------------------------------------------------------
# formatting

def _fmt_label(l):
    return ",".join(str(x) for x in l)


def _parse_q(text):
    if text is None:
        text = os.environ.get("SPH_Q_DEFAULT", "sym")
    if text == "sym":
        return None
    try:
        q0 = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise InputError("--q must be 'sym' or a rational, got %r" % text)
    if q0 <= 0:
        raise InputError("--q must be positive, got %r" % text)
    return q0


def _fmt_frac(x) -> str:
    return str(x)


# ---------------------------------------------------------------------------
# commands

def cmd_describe(args) -> int:
    d = load_document(args.file)
    print("name\t%s" % d.name)
    print("ambient\t%s" % d.ambient.name)
    print("rank\t%d" % d.rank)
    print("colors\t%d" % len(d.colors))
    print("spherical-roots\t%d" % len(d.spherical_roots))
    print("wavefront\t%s" % str(is_wavefront(d)).lower())
    print("arithmetic-multiplicity\t%d" % arithmetic_multiplicity(d))
    lin_rank, lin_cone = aut_lineality(d)
    print("aut-lineality-rank\t%d" % lin_rank)
    if lin_cone is not None:
        print("aut-lineality-in-cone\t%s"
              % (" ".join(_fmt_label(g) for g in lin_cone.generators) or "-"))
    ind = parabolic_induction(d)
    print("parabolic-induction\t%s"
          % ("-" if ind is None else (_fmt_label(ind) or "B")))
    if d.colored_cone is not None:
        pts = enumerate_orbits(d, 2, integral_only=True)
        print("integral-strata-h2\t%s"
              % " ".join(_fmt_label(l) for l in pts))
    return 0


def cmd_check(args) -> int:
    d = load_document(args.file)
    which = args.which
    if which in ("colored-cone", "affine") and d.colored_cone is None:
        raise InputError("document has no colored cone")
    if which == "colored-cone":
        ok, diag = validate_colored_cone(d, d.colored_cone)
        print("colored-cone\t%s\t%s" % ("pass" if ok else "fail", diag))
        return 0 if ok else 1
    if which == "affine":
        try:
            ok, wit = is_affine(d, d.colored_cone)
        except ValueError as e:
            raise InputError(str(e))
        detail = _fmt_label(wit) if ok and wit is not None else "-"
        print("affine\t%s\t%s" % ("pass" if ok else "fail", detail))
        return 0 if ok else 1
    if which == "wavefront":
        ok = is_wavefront(d)
        print("wavefront\t%s" % ("pass" if ok else "fail"))
        return 0 if ok else 1
    if which == "induced":
        ind = parabolic_induction(d)
        if ind is None:
            print("induced\tfail\tnot parabolically induced")
            return 1
        print("induced\tpass\t%s" % (_fmt_label(ind) or "B"))
        return 0
    if which == "negligible":
        try:
            ok, cert = negligible_orbit_check(d)
        except ValueError as e:
            raise InputError(str(e))
        print("negligible\t%s\t%d subsets" % ("pass" if ok else "fail",
                                              len(cert)))
        return 0 if ok else 1
    raise InputError("unknown check %r" % which)


def cmd_orbits(args) -> int:
    d = load_document(args.file)
    try:
        pts = enumerate_orbits(d, args.height, integral_only=args.integral)
    except ValueError as e:
        raise InputError(str(e))
    for l in pts:
        print(_fmt_label(l))
    return 0


def _specialized_rows(table, q0):
    rows = []
    for l, v in table.values:
        if q0 is None:
            rows.append((l, str(v)))
            continue
        try:
            rows.append((l, _fmt_frac(v.specialize(q0))))
        except ValueError as e:
            raise InputError(str(e))
    return rows


def cmd_basicfn(args) -> int:
    d = load_document(args.file)
    q0 = _parse_q(args.q)
    if args.case == "graded":
        block, _ = _torus_split(d.ambient)
        try:
            p = ParabolicDatum(block, tuple(d.levi_roots))
            graded = basic_function_graded(p, args.height)
        except ValueError as e:
            raise InputError(str(e))
        for i, parts in graded:
            for hw, mult in parts:
                print("%d\t%s\t%d" % (i, _fmt_label(hw), mult))
        return 0
    _require_horospherical(d, "a basic-function table")
    if d.colored_cone is None:
        raise InputError("basicfn needs a colored cone")
    block, labels = _derived_labels(d)
    try:
        if args.case == "borel":
            table = basic_function_borel(d, BorelRoute(block, labels),
                                         args.height)
        else:
            route = PPRoute(block, tuple(d.levi_roots), labels)
            table = basic_function_pp(d, route, args.height)
    except ValueError as e:
        raise InputError(str(e))
    if args.json:
        doc = {"schema": SCHEMA, "datum": table.datum_name,
               "case": table.case, "rank": table.rank,
               "height": table.height, "truncation": table.truncation,
               "q": "sym" if q0 is None else str(q0),
               "rows": [{"label": list(l), "value": v}
                        for l, v in _specialized_rows(table, q0)]}
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        for l, v in _specialized_rows(table, q0):
            print("%s\t%s" % (_fmt_label(l), v))
    return 0


def _parse_point(text) -> dict:
    point = {}
    if not text:
        return point
    for item in text.split(","):
        if "=" not in item:
            raise InputError("--point items look like t1=2, got %r" % item)
        key, _, val = item.partition("=")
        try:
            point[key.strip()] = Fraction(val)
        except (ValueError, ZeroDivisionError):
            raise InputError("bad coordinate value %r" % val)
    return point


def cmd_lf(args) -> int:
    d = load_document(args.file)
    _require_horospherical(d, "a local L-factor")
    block, _ = _torus_split(d.ambient)
    point = _parse_point(args.point)
    try:
        rep = dual_radical(ParabolicDatum(block, tuple(d.levi_roots)))
        if args.rep == "u_P_f":
            rep = f_fixed(rep)
        lf = local_lfactor(rep, point, kappa=args.kappa)
    except ValueError as e:
        raise InputError(str(e))
    for c, e in lf.monomials:
        print("monomial\t%s\t%s" % (_fmt_frac(c), _fmt_frac(e)))
    if args.expand is not None:
        q0 = _parse_q(args.q)
        if q0 is None:
            raise InputError("--expand needs a numeric --q")
        try:
            series = lf.expand(args.expand, q0)
        except ValueError as e:
            raise InputError(str(e))
        for k, c in enumerate(series):
            print("T^%d\t%s" % (k, _fmt_frac(c)))
    return 0


def _catalog_checks(entry, height=4):
    """[(check, status, detail)] with status pass/fail/skip."""
    rows = []
    d = entry.datum
    ok, diag = validate_colored_cone(d, d.colored_cone)
    rows.append(("colored-cone", "pass" if ok else "fail", diag))
    wf = is_wavefront(d)
    rows.append(("wavefront-flag", "pass" if wf == entry.wavefront_expected
                 else "fail", "computed %s" % wf))
    mult = arithmetic_multiplicity(d)
    rows.append(("multiplicity", "pass" if mult == 1 else "fail", str(mult)))
    try:
        neg, _ = negligible_orbit_check(d)
        rows.append(("negligible", "pass" if neg else "fail", ""))
    except ValueError as e:
        rows.append(("negligible", "skip", str(e)))
    ind = parabolic_induction(d)
    if entry.reductive_stabilizer:
        rows.append(("induction", "pass" if ind is None else "fail",
                     "reductive stabilizer"))
    elif entry.preflag_case in ("U_P", "PP"):
        rows.append(("induction", "pass" if ind == d.levi_roots else "fail",
                     "want Levi %s" % (d.levi_roots,)))
    else:
        rows.append(("induction", "skip", "no contract for %s"
                     % entry.preflag_case))
    if not entry.routes:
        rows.append(("table", "skip", "no route"))
        return rows
    table = _catalog.basic_table(entry, height)
    rows.append(("table", "pass" if table.values else "fail",
                 "%d rows" % len(table.values)))
    if entry.smooth_expected:
        trivial = all(str(v) == "1" for _, v in table.values)
        rows.append(("smooth-values", "pass" if trivial else "fail", ""))
    if any(isinstance(r, TransportRoute) for r in entry.routes):
        ok, diag = _catalog.transport_coincidence(entry)
        rows.append(("transport-cones", "pass" if ok else "fail", diag))
    hints = (entry.growth_hint,) if entry.growth_hint else ()
    cert = growth_certificate(table, hints=hints)
    rows.append(("growth", "pass" if cert is not None else "fail",
                 "" if cert is None else _fmt_label(cert)))
    return rows


def cmd_catalog(args) -> int:
    if args.action == "list":
        for key in _catalog.list_entries():
            e = _catalog.load(key)
            print("%s\t%s\t%s" % (key, e.preflag_case, e.provenance))
        return 0
    try:
        entry = _catalog.load(args.key)
    except ValueError as e:
        raise InputError(str(e))
    if args.action == "show":
        if args.json:
            print(json.dumps(render_document(entry.datum), indent=2,
                             sort_keys=True))
            return 0
        print("key\t%s" % entry.key)
        print("provenance\t%s" % entry.provenance)
        print("case\t%s" % entry.preflag_case)
        print("reductive-stabilizer\t%s"
              % str(entry.reductive_stabilizer).lower())
        print("wavefront\t%s" % str(entry.wavefront_expected).lower())
        print("smooth\t%s" % str(entry.smooth_expected).lower())
        print("routes\t%s" % (",".join(type(r).__name__
                                       for r in entry.routes) or "-"))
        lv = entry.expected_lvalue
        if lv is None:
            print("l-value\t-")
        else:
            num = " ".join("%s@%s" % (name, shift)
                           for name, shift in lv.numerator)
            den = " ".join("%s@%s" % (name, shift)
                           for name, shift in lv.denominator)
            print("l-value\t%s%s%s" % (num, (" / " + den) if den else "",
                                       " (conjectural)" if lv.conjectural
                                       else ""))
        return 0
    if args.action == "test":
        rows = _catalog_checks(entry, height=args.height)
        for name, status, detail in rows:
            print("%s\t%s\t%s" % (name, status, detail))
        return 1 if any(s == "fail" for _, s, _ in rows) else 0
    raise InputError("unknown catalog action %r" % args.action)


# ---------------------------------------------------------------------------
# oracle checks

def _sample_labels(space, height):
    out = []
    if space == "A2":
        return [(n,) for n in range(height + 1)]
    if space in ("UGL2", "PPGL3"):
        return [(a, b) for a in range(height + 1)
                for b in range(height + 1 - a)]
    if space == "MAT2":
        for k in range(height + 1):
            for a in range(k // 2 + 1):
                if a + k <= height:
                    out.append((a, k))
        return out
    raise InputError("unknown space %r" % space)


def _check_orbit_invariance(qs, height, trials):
    h = min(height, 3)
    out = []
    for q in qs:
        prec = 2 * h + 8
        mism = []
        for space in _oracle.SPACES:
            for i, lab in enumerate(_sample_labels(space, h)):
                bad = _oracle.translate_invariance_mismatches(
                    space, lab, q, prec, trials, seed=31 * i + q)
                mism.extend((space, lab, got) for _, got in bad)
        out.append(("q=%d" % q, mism))
    return out


def _check_representatives(qs, height, trials):
    out = []
    for q in qs:
        prec = 2 * height + 4
        mism = []
        for space in _oracle.SPACES:
            for lab in _sample_labels(space, height):
                got = _oracle.orbit_invariant(
                    _oracle.stratum_point(space, lab, q, prec))
                if got != lab:
                    mism.append((space, lab, got))
        out.append(("q=%d" % q, mism))
    return out


def _check_satake(space, ops):
    def run(qs, height, trials):
        out = []
        for q in qs:
            for op in ops:
                mism = _oracle.satake_mismatches(op, space, height, q)
                out.append(("q=%d op=%s" % (q, op), mism))
        return out
    return run


def _check_gj(qs, height, trials):
    return [("q=%d" % q, _oracle.gj_recursion_mismatches(q, height=height))
            for q in qs]


def _check_interpolation(qs, height, trials):
    panel = (2, 3, 5, 7)
    prec = 10
    cases = []
    counts = {q: _oracle.transition_counts(
        "UGL2", _oracle.coset_reps("GL2", "t1", q, prec), [(0, 0)], q, prec)
        for q in panel}
    cases.append(("gl2-t1", {q: c[((0, 0), (0, 1))]
                             for q, c in counts.items()}, 1))
    counts = {q: _oracle.transition_counts(
        "PPGL3", _oracle.coset_reps("GL3", "t1", q, prec), [(0, 0)], q, prec)
        for q in panel}
    cases.append(("gl3-t1", {q: c[((0, 0), (0, 1))]
                             for q, c in counts.items()}, 2))
    counts = {q: _oracle.transition_counts(
        "PPGL3", _oracle.coset_reps("GL3", "wedge", q, prec), [(0, 0)], q,
        prec) for q in panel}
    cases.append(("gl3-wedge-long", {q: c[((0, 0), (0, 2))]
                                     for q, c in counts.items()}, 2))
    cases.append(("gl3-wedge-short", {q: c[((0, 0), (1, 2))]
                                      for q, c in counts.items()}, 1))
    herm = {q: _oracle.mat2_coset_label_counts(q, 12, 2) for q in panel}
    cases.append(("mat2-cosets", {q: h[(0, 2)] for q, h in herm.items()}, 2))
    mism = [(name, values, deg) for name, values, deg in cases
            if not _oracle.interpolates(values, deg)]
    return [("q=%s" % ",".join(str(q) for q in panel), mism)]


ORACLE_CHECKS = {
    "orbit-invariance": (_check_orbit_invariance, 3),
    "representatives": (_check_representatives, 4),
    "satake-ugl2": (_check_satake("UGL2", ("unit", "t1", "central")), 4),
    "satake-ppgl3": (_check_satake("PPGL3",
                                   ("unit", "t1", "wedge", "central")), 2),
    "gj-recursion": (_check_gj, 4),
    "interpolation": (_check_interpolation, 4),
}


def cmd_oracle(args) -> int:
    if args.name not in ORACLE_CHECKS:
        raise InputError("unknown oracle check %r; available: %s"
                         % (args.name, ", ".join(sorted(ORACLE_CHECKS))))
    try:
        qs = tuple(int(x) for x in args.q.split(","))
    except ValueError:
        raise InputError("--q must be comma-joined primes, got %r" % args.q)
    for q in qs:
        if q < 2 or any(q % k == 0 for k in range(2, q)):
            raise InputError("--q entries must be primes, got %d" % q)
    fn, default_height = ORACLE_CHECKS[args.name]
    height = args.height if args.height is not None else default_height
    if height < 0:
        raise InputError("--height must be >= 0")
    failed = False
    for unit, mism in fn(qs, height, args.trials):
        status = "pass" if not mism else "fail"
        failed = failed or bool(mism)
        print("%s\t%s\t%s" % (args.name, unit, status))
        for row in mism:
            print("mismatch\t%s" % (row,))
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# wiring

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="sphvar",
        description="exact invariants and unramified tables of spherical "
                    "varieties")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("describe", help="summarize a datum document")
    p.add_argument("file")
    p.set_defaults(fn=cmd_describe)

    p = sub.add_parser("check", help="run one classification check")
    p.add_argument("file")
    p.add_argument("--which", required=True,
                   choices=("colored-cone", "affine", "wavefront", "induced",
                            "negligible"))
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("orbits", help="enumerate stratum labels by height")
    p.add_argument("file")
    p.add_argument("--height", type=int, required=True)
    p.add_argument("--integral", action="store_true",
                   help="restrict to the colored-cone window")
    p.set_defaults(fn=cmd_orbits)

    p = sub.add_parser("basicfn", help="tabulate the basic function")
    p.add_argument("file")
    p.add_argument("--case", required=True, choices=("borel", "pp", "graded"))
    p.add_argument("--height", type=int, required=True)
    p.add_argument("--q", default=None,
                   help="'sym' or a rational; default SPH_Q_DEFAULT or sym")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_basicfn)

    p = sub.add_parser("lf", help="local L-factor of the dual radical")
    p.add_argument("file")
    p.add_argument("--rep", required=True, choices=("u_P", "u_P_f"))
    p.add_argument("--point", default="",
                   help="comma-joined coordinates, e.g. t1=2,t2=1/3")
    p.add_argument("--kappa", type=int, default=KAPPA)
    p.add_argument("--expand", type=int, default=None,
                   help="print the series through T^N (needs numeric --q)")
    p.add_argument("--q", default=None)
    p.set_defaults(fn=cmd_lf)

    p = sub.add_parser("catalog", help="worked examples")
    p.add_argument("action", choices=("list", "show", "test"))
    p.add_argument("key", nargs="?")
    p.add_argument("--json", action="store_true",
                   help="with show: emit the datum as an input document")
    p.add_argument("--height", type=int, default=4)
    p.set_defaults(fn=cmd_catalog)

    p = sub.add_parser("oracle", help="brute-force double checks")
    p.add_argument("run", choices=("run",))
    p.add_argument("name")
    p.add_argument("--q", default="2,3")
    p.add_argument("--height", type=int, default=None)
    p.add_argument("--trials", type=int, default=500,
                   help="random translates per tested point")
    p.set_defaults(fn=cmd_oracle)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "catalog" and args.action in ("show", "test") \
            and not args.key:
        print("error: catalog %s needs a key" % args.action, file=sys.stderr)
        return 2
    try:
        return args.fn(args)
    except InputError as e:
        print("error: %s" % e, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
