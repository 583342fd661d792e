"""Acceptance suite: every criterion is exact (integer/rational equality).

Each test prints one PASS line when its assertions go through; run with
`pytest tests/test_acceptance.py -v -s` to see the per-criterion lines.
"""

import ast
import pathlib
import random
from fractions import Fraction

import borelcurve
from borelcurve.action import (ActionModel, check_fixed_point_return,
                               component_parametrization, exp_e, fixed_points,
                               principal_model, sl2_family_checks, validate)
from borelcurve.chern import chern_membership, chern_subalgebra_verdict, chern_tuple, tangent_bundle
from borelcurve.curve import (betti_numbers, build_curve_ring,
                              default_degree_bound, ideal_hilbert, restrict)
from borelcurve.exactalg import HomTuple, Poly
from borelcurve.gkm import gkm_ordinary_betti, principal_verdict
from borelcurve.rootsystems import (heights, km_poincare, poincare_from_degrees,
                                    positive_roots, weyl_length_genfun)

ORACLE_SYSTEMS = [("A", 1), ("A", 2), ("A", 3), ("A", 4), ("B", 2), ("B", 3),
                  ("C", 3), ("D", 4), ("G2", 2)]


def _ok(num: int, message: str) -> None:
    print(f"ACCEPTANCE {num:02d} PASS: {message}")


def test_c01_kostant_macdonald_oracle_equivalence():
    for family, rank in ORACLE_SYSTEMS:
        rs = positive_roots(family, rank)
        assert km_poincare(rs) == weyl_length_genfun(family, rank), (family, rank)
    labels = [f if f in ("G2", "F4") else f"{f}{r}" for f, r in ORACLE_SYSTEMS]
    _ok(1, "product formula equals Weyl enumeration for " + ", ".join(labels))


def test_c02_product_formula_consistency():
    for family, rank in ORACLE_SYSTEMS:
        rs = positive_roots(family, rank)
        assert poincare_from_degrees(heights(rs)) == km_poincare(rs)
    for n in range(1, 7):
        poly = poincare_from_degrees(list(range(1, n + 1)))
        assert poly.coeffs == (1,) * (n + 1)
        cr = build_curve_ring(principal_model(n))
        assert betti_numbers(cr) == list(poly.coeffs)
    _ok(2, "degree products match heights and curve Betti numbers up to P^6")


def test_c03_plane_golden_run(plane_model, plane_ring):
    assert fixed_points(plane_model) == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    comps = [component_parametrization(plane_model, j) for j in (1, 2, 3)]
    assert comps[0].chart_coords == (Poly(), Poly())
    assert comps[1].chart_coords == (Poly.variable(), Poly())
    assert comps[2].chart_coords == (Poly.monomial(2, 1), Poly.monomial(2, 2))
    w1, w2 = comps[2].chart_coords
    assert 2 * w2 == w1**2
    assert plane_ring.algebra.hilbert_function(3) == [1, 2, 3, 3]
    assert betti_numbers(plane_ring) == [1, 1, 1]
    _ok(3, "P^2 run: fixed points, parametrizations (0,0), (v,0), (2v,2v^2), "
           "2w2 = w1^2, Hilbert [1,2,3,3], Betti [1,1,1]")


def test_c04_plane_non_principality(plane_ring, curves_union_graph):
    assert gkm_ordinary_betti(curves_union_graph) == [1, 2, 0]
    verdict = principal_verdict(plane_ring, curves_union_graph)
    assert verdict.status == "NotPrincipal"
    assert verdict.witness == 1
    assert verdict.image_hilbert[1] < verdict.gkm_hilbert[1]
    _ok(4, "union of invariant curves: Betti [1,2,0], NotPrincipal at degree 1")


def test_c05_chern_obstruction(curves_union_graph):
    gens = [HomTuple(1, (1, -1, -1)), HomTuple(1, (1, 1, 1))]
    verdict = chern_subalgebra_verdict(gens, curves_union_graph)
    assert verdict.status == "NotPrincipal"
    assert verdict.witness == 1
    _ok(5, "classes of shape (f, -f, -f) and (f, f, f) span a proper subalgebra, "
           "witness degree 1")


def test_c06_fixed_point_return_property():
    rng = random.Random(20260810)
    for n in range(1, 7):
        model = principal_model(n)
        for j in range(1, n + 2):
            for _ in range(100):
                v0 = Fraction(0)
                while v0 == 0:
                    v0 = Fraction(rng.randint(-30, 30), rng.randint(1, 24))
                assert check_fixed_point_return(model, j, v0)
    _ok(6, "inverse unipotent flow returns every component point to its fixed "
           "point (P^1..P^6, 100 random parameters each)")


def test_c07_sl2_identities():
    report = sl2_family_checks()
    assert report == {
        "torus_conjugation_identity": "ok",
        "trace_section_identity": "ok",
        "family_limits_unipotent_up_to_sign": "ok",
        "s_at_zero_in_unipotent_lie_algebra": "ok",
    }
    _ok(7, "2x2 conjugation identity, s(v) = vW - 2N, unipotent limits, s(0) = -2N")


def test_c08_ideal_ranks():
    for n in (2, 3):
        cr = build_curve_ring(principal_model(n))
        r = n + 1
        bound = default_degree_bound(cr)
        total = cr.algebra.hilbert_function(bound)
        for mask in range(1, 2**r - 1):
            labels = [i + 1 for i in range(r) if mask >> i & 1]
            kernel = ideal_hilbert(cr, labels, bound)
            assert kernel[-1] == r - len(labels)
            assert kernel == sorted(kernel)
            image = restrict(cr, labels).hilbert_function(bound)
            assert [a + b for a, b in zip(image, kernel)] == total
    _ok(8, "ideal ranks stabilize at |X^T| - |Y^T| with exact rank-nullity "
           "bookkeeping on P^2 and P^3")


def test_c09_chern_regularity(plane_ring):
    for n in range(1, 5):
        cr = build_curve_ring(principal_model(n))
        bundle = tangent_bundle(cr.model)
        for k in range(n + 1):
            assert chern_membership(bundle, k, cr)
    c1 = chern_tuple(tangent_bundle(plane_ring.model), 1, plane_ring)
    assert c1 == HomTuple(1, (6, 0, -6))
    assert plane_ring.algebra.member(c1)
    _ok(9, "tangent Chern classes are regular for P^1..P^4; c1(P^2) = (6,0,-6)")


def _assert_no_float_paths():
    package_dir = pathlib.Path(borelcurve.__file__).parent
    allowed_math_names = {"factorial"}
    for path in sorted(package_dir.glob("*.py")):
        tree = ast.parse(path.read_text(), filename=str(path))
        for node in ast.walk(tree):
            if isinstance(node, ast.Constant) and isinstance(node.value, float):
                raise AssertionError(f"float literal in {path.name}:{node.lineno}")
            if (isinstance(node, ast.Call) and isinstance(node.func, ast.Name)
                    and node.func.id == "float"):
                # isinstance(x, float) guards are fine; conversions are not
                raise AssertionError(f"float conversion in {path.name}:{node.lineno}")
            if isinstance(node, ast.Import):
                for alias in node.names:
                    root = alias.name.split(".")[0]
                    assert root not in ("numpy", "scipy", "math", "random", "cmath"), (
                        f"{alias.name} imported in {path.name}")
            if isinstance(node, ast.ImportFrom) and node.module:
                root = node.module.split(".")[0]
                if root == "math":
                    names = {alias.name for alias in node.names}
                    assert names <= allowed_math_names, (
                        f"non-exact math import {names} in {path.name}")
                assert root not in ("numpy", "scipy", "random", "cmath"), (
                    f"{node.module} imported in {path.name}")


def test_c10_exactness_suite():
    _assert_no_float_paths()

    rng = random.Random(987654321)
    rings = {n: build_curve_ring(principal_model(n)) for n in (2, 3, 4)}
    # 600 cases: random combinations of basis tuples reproduce themselves exactly
    for _ in range(600):
        cr = rings[rng.choice((2, 3, 4))]
        d = rng.randint(0, 8)
        basis = cr.algebra.graded_basis(d)
        mix = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in basis]
        target = [Fraction(0)] * cr.r
        for c, b in zip(mix, basis):
            target = [x + c * y for x, y in zip(target, b.coeffs)]
        t = HomTuple(d, tuple(target))
        assert cr.algebra.member(t)
        coords = cr.algebra.coordinates(t)
        recon = [Fraction(0)] * cr.r
        for c, b in zip(coords, basis):
            recon = [x + c * y for x, y in zip(recon, b.coeffs)]
        assert tuple(recon) == t.coeffs
        assert all(isinstance(x, Fraction) for x in coords)

    # 400 cases: parametrizations re-substitute through the exponential exactly
    for _ in range(400):
        n = rng.randint(1, 5)
        scale = Fraction(0)
        while scale == 0:
            scale = Fraction(rng.randint(-6, 6), rng.randint(1, 6))
        e = tuple(tuple(scale if j == i + 1 else Fraction(0) for j in range(n + 1))
                  for i in range(n + 1))
        model = validate(ActionModel(n, tuple(n - 2 * i for i in range(n + 1)), e))
        j = rng.randint(1, n + 1)
        v0 = Fraction(0)
        while v0 == 0:
            v0 = Fraction(rng.randint(-12, 12), rng.randint(1, 12))
        comp = component_parametrization(model, j)
        column = [row[j - 1] for row in exp_e(model, 1 / v0)]
        direct = [c / column[0] for c in column[1:]]
        assert [p(v0) for p in comp.chart_coords] == direct
        assert all(isinstance(x, Fraction) for x in direct)

    _ok(10, "no floating-point path in the package; 1000 randomized exact "
            "re-substitution checks pass")
