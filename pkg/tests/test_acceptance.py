"""End-to-end acceptance checks, one test per criterion.

Each test prints a single ``criterion N: PASS|FAIL`` line (visible even with
output capture on) and then asserts the criterion at its stated tolerance.
"""

import itertools
import math
import time
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mdzeta.cone import (
    Ordering,
    RealCone,
    Truncation,
    UpperCone,
    cone_compare,
    enumerate_imaginary,
    enumerate_real,
)
from mdzeta.field import Signature, galois_conj, make_field, parse_element
from mdzeta.identity import derive_mzv_relation, derive_relation, verify_numeric
from mdzeta.numeric import (
    PolylogPoint,
    eval_mzv,
    evaluate_many,
    quadrature_f11_check,
    quadrature_lemma_check,
)
from mdzeta.symbolic import (
    LinearCombo,
    Variant,
    diagram_count,
    integral_shuffle,
    interleavings,
    mzv,
    mzv_stuffle,
    parse_combo,
    shuffle_diagrams,
    stuffle_imaginary,
    stuffle_real,
    sub,
    sup1,
)

pytestmark = pytest.mark.acceptance


@pytest.fixture
def report(capsys):
    def emit(n: int, ok: bool, detail: str) -> None:
        with capsys.disabled():
            print(f"\ncriterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")

    return emit


@pytest.fixture(scope="module")
def root2_cone():
    k = make_field(2)
    return RealCone(k, parse_element(k, "2+w"), parse_element(k, "2-w"))


@pytest.fixture(scope="module")
def gaussian_upper():
    return UpperCone(make_field(-1))


def test_criterion_1_shuffle_exactness(report):
    start = time.perf_counter()
    diagrams = shuffle_diagrams((2, 2), (2, 2))
    combo = integral_shuffle((2, 2), (2, 2))
    elapsed = time.perf_counter() - start
    expected = parse_combo(
        "2*z1(2,2;2,2) + 8*z1(1,3;1,3) + 4*z1(1,3;2,2) + 4*z1(2,2;1,3)"
        " + 2*zr(2,2;2,2) + 8*zr(1,3;1,3) + 4*zr(1,3;2,2) + 4*zr(2,2;1,3)"
    )
    ok = len(diagrams) == 36 and combo == expected and elapsed < 1.0
    report(1, ok, f"{len(diagrams)} diagrams, exact={combo == expected}, {elapsed:.3f}s")
    assert ok


def test_criterion_2_stuffle_exactness(report):
    imaginary = stuffle_imaginary((2, 2), (2, 2)) == parse_combo("z(4;4) + 2*z1(2,2;2,2)")
    generic = stuffle_real(("a", "c"), ("b", "d"))
    real = len(generic) == 9 and {str(s) for s in generic.symbols()} == {
        "z(a+b;c+d)",
        "s1(a,b;c,d)", "s1(b,a;d,c)",
        "sr(a,b;c,d)", "sr(b,a;d,c)",
        "s01(a,b;c,d)", "s01(b,a;d,c)",
        "s10(a,b;c,d)", "s10(b,a;d,c)",
    } and all(c == 1 for _, c in generic.items())
    three = mzv_stuffle(mzv("m1"), mzv("m2")) == LinearCombo({mzv("m1", "m2"): 1, mzv("m2", "m1"): 1, mzv("m1+m2"): 1})
    five = mzv_stuffle(mzv("m1"), mzv("m2", "m3")) == LinearCombo(
        {
            mzv("m1", "m2", "m3"): 1,
            mzv("m1+m2", "m3"): 1,
            mzv("m2", "m1", "m3"): 1,
            mzv("m2", "m1+m3"): 1,
            mzv("m2", "m3", "m1"): 1,
        }
    )
    ok = imaginary and real and three and five
    report(2, ok, f"imaginary={imaginary} real9={real} mzv3={three} mzv5={five}")
    assert ok


def test_criterion_3_mzv_double_shuffle(report):
    start = time.perf_counter()
    residual = abs(4 * eval_mzv(mzv(1, 3), 5000).value - eval_mzv(mzv(4), 5000).value)
    elapsed = time.perf_counter() - start
    ok = residual <= 1e-6 and elapsed < 5.0
    report(3, ok, f"|4 mzv(1,3) - mzv(4)| = {residual:.3e} at N=5000, {elapsed:.2f}s")
    assert ok
    assert verify_numeric(derive_mzv_relation(mzv(2), mzv(2)), None, Truncation.cutoff(5000)).verdict == "pass"


def test_criterion_4_real_quadratic_relation(report, root2_cone):
    start = time.perf_counter()
    rel = derive_relation(Signature.REAL, (2, 2), (2, 2))
    shells = [Truncation.shell(s) for s in (40, 60, 80)]
    rep = verify_numeric(rel, root2_cone, shells[-1], truncations=shells)
    elapsed = time.perf_counter() - start
    ratio = rep.residual / rep.reference
    ok = rep.decreasing and ratio <= 1e-3 and elapsed < 120
    res = ", ".join(f"{r:.3e}" for r in rep.residuals)
    report(4, ok, f"residuals [{res}], relative {ratio:.3e}, {elapsed:.1f}s")
    assert ok


def test_criterion_5_imaginary_quadratic_relation(report, gaussian_upper):
    start = time.perf_counter()
    rel = derive_relation(Signature.IMAGINARY, (2, 2), (2, 2))
    radii = [Truncation.radius(r) for r in (30, 45, 60)]
    rep = verify_numeric(rel, gaussian_upper, radii[-1], truncations=radii, with_printed=True)
    elapsed = time.perf_counter() - start
    ratio = rep.residual / rep.reference
    printed_factor = rep.printed_residuals[-1] / rep.residual
    ok = rep.decreasing and ratio <= 1e-2 and printed_factor >= 10 and elapsed < 120
    res = ", ".join(f"{r:.3e}" for r in rep.residuals)
    report(
        5, ok,
        f"residuals [{res}], relative {ratio:.3e}, printed variant {rep.printed_residuals[-1]:.3e}"
        f" ({printed_factor:.1e}x), {elapsed:.1f}s",
    )
    assert ok


def test_criterion_6_coordinate_constrained_equals_pair_sum(report, root2_cone):
    # Sub1 scans pairs alpha < beta coordinatewise; Sup1 scans independent pairs (alpha, gamma).
    left, right = sub(Variant.SUB1, 2, 2, 2, 2), sup1(2, 2, 2, 2)
    res = evaluate_many(root2_cone, [left, right], Truncation.shell(60))
    a, b = res[left].value.real, res[right].value.real
    rel = abs(a - b) / abs(b)
    ok = rel <= 1e-3
    report(6, ok, f"s1={a:.6e} z1={b:.6e} relative {rel:.3e} (tails {res[left].tail_estimate:.1e}, {res[right].tail_estimate:.1e})")
    assert ok


def test_criterion_7_symmetries(report, gaussian_upper):
    t = Truncation.radius(40)
    res = evaluate_many(gaussian_upper, [sup1(1, 3, 2, 2), sup1(2, 2, 1, 3)], t)
    x, y = res[sup1(1, 3, 2, 2)].value, res[sup1(2, 2, 1, 3)].value
    conj = abs(x.conjugate() - y) / abs(y)

    k = make_field(2)
    mu = parse_element(k, "2+w")
    cone = RealCone(k, mu, galois_conj(mu))
    res = evaluate_many(cone, [sup1(1, 3, 2, 2), sup1(2, 2, 1, 3)], Truncation.shell(60))
    p, q = res[sup1(1, 3, 2, 2)].value, res[sup1(2, 2, 1, 3)].value
    galois = abs(p - q) / abs(q)
    ok = conj <= 1e-12 and galois <= 1e-12
    report(7, ok, f"conjugation {conj:.2e}, Galois swap {galois:.2e}")
    assert ok


def test_criterion_8_quadrature_oracles(report, root2_cone):
    grid = [quadrature_lemma_check(k, u)[2] for k in (0.5, 1.0, 2.0) for u in (0.1, 0.5, 1.0)]
    quad, closed, err = quadrature_f11_check(root2_cone, PolylogPoint(1.0, 1.0), Truncation.shell(30))
    rel = err / abs(closed)
    ok = max(grid) <= 1e-9 and rel <= 1e-3
    report(8, ok, f"lemma grid max error {max(grid):.2e}, f11 relative error {rel:.2e}")
    assert ok


def _criterion_9_properties(root2_cone, gaussian_upper) -> dict:
    checks = {}
    checks["interleavings"] = len(interleavings(2, 2)) == math.comb(4, 2) == 6 and diagram_count((2, 2), (2, 2)) == 36
    weights_ok = coeff_ok = True
    for a, c, b, d in itertools.product(range(1, 4), repeat=4):
        combo = integral_shuffle((a, c), (b, d))
        weights_ok &= all(s.weights == (a + b, c + d) for s in combo.symbols())
        coeff_ok &= combo.coefficient_sum() == diagram_count((a, c), (b, d))
        for s in stuffle_real((a, c), (b, d)).symbols() + stuffle_imaginary((a, c), (b, d)).symbols():
            weights_ok &= s.weights == (a + b, c + d)
    checks["weights"] = weights_ok
    checks["coefficient_sum"] = coeff_ok

    x = integral_shuffle((2, 2), (2, 2))
    y = stuffle_real((2, 3), (2, 1))
    z = stuffle_imaginary((1, 3), (3, 1))
    half = Fraction(1, 2)
    checks["combo_laws"] = (
        (x + y) + z == x + (y + z)
        and x + y == y + x
        and (x - x).is_zero()
        and (x + y).scale(half) == x.scale(half) + y.scale(half)
        and x.scale(2).scale(half) == x
    )

    elems = enumerate_real(root2_cone, Truncation.shell(12))
    checks["injective"] = len({e.element for e in elems}) == len(elems)
    pts = enumerate_imaginary(gaussian_upper.field, Truncation.radius(4))

    order_ok = True
    for p, q in itertools.product(pts, repeat=2):
        pq = cone_compare(gaussian_upper, p, q)
        order_ok &= (pq is Ordering.EQUAL) == (p == q)
        order_ok &= pq == Ordering(-cone_compare(gaussian_upper, q, p))
    for p, q, r in itertools.product(pts[:12], repeat=3):
        if cone_compare(gaussian_upper, p, q) is Ordering.LESS and cone_compare(gaussian_upper, q, r) is Ordering.LESS:
            order_ok &= cone_compare(gaussian_upper, p, r) is Ordering.LESS
    checks["total_order"] = order_ok
    return checks


def test_criterion_9_exact_properties(report, root2_cone, gaussian_upper):
    checks = _criterion_9_properties(root2_cone, gaussian_upper)
    ok = all(checks.values())
    report(9, ok, ", ".join(f"{k}={v}" for k, v in checks.items()))
    assert ok


@settings(max_examples=50, deadline=None)
@given(st.tuples(*[st.integers(1, 5)] * 4))
def test_criterion_9_shuffle_property_sweep(exps):
    a, c, b, d = exps
    combo = integral_shuffle((a, c), (b, d))
    assert combo.coefficient_sum() == math.comb(a + b, a) * math.comb(c + d, c)
    assert all(s.weights == (a + b, c + d) for s in combo.symbols())
