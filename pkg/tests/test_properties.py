import math
import random
from fractions import Fraction as F

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from circlekit.centers import CenterId, Triangle, center, cevian_foot_rank_k, harmonic_conjugate, isogonal_conjugate
from circlekit.circles import droz_farny, lemoine_circle, radical_circle_excircles, six_point_circle
from circlekit.kernel import (
    Circle,
    Point,
    circle_through,
    circles_orthogonal,
    dist,
    dist2,
    pole_of_line,
    polar_line,
    power_of_point,
    radical_axis,
)
from circlekit.registry.sampling import Sampler, triangle_ok

coord = st.floats(-10, 10, allow_nan=False, allow_infinity=False)
ratl = st.fractions(min_value=-10, max_value=10, max_denominator=50)


@st.composite
def triangles(draw, exact=False):
    s = ratl if exact else coord
    A, B, C = (Point(draw(s), draw(s)) for _ in range(3))
    # the kernel keeps an absolute tolerance floor, so skip microscopic triangles
    assume(max(dist2(A, B), dist2(B, C), dist2(C, A)) > 1e-4)
    assume(triangle_ok(A, B, C))
    return Triangle(A, B, C)


@given(triangles())
def test_euler_relations(T):
    G, O, H, N = (center(T, c) for c in ("centroid", "circumcenter", "orthocenter", "nine_point"))
    s = math.sqrt(T.R2)
    assert dist(H - O, (G - O) * 3) <= 1e-9 * s
    assert dist(N, (O + H) / 2) <= 1e-9 * s


@given(triangles(exact=True))
@settings(max_examples=50)
def test_sylvester_exact(T):
    O, H = center(T, "circumcenter"), center(T, "orthocenter")
    assert H - O == T.A + T.B + T.C - O * 3


@given(triangles(exact=True))
@settings(max_examples=50)
def test_power_of_K_exact(T):
    K = center(T, CenterId.SYMMEDIAN_POINT)
    RL2 = lemoine_circle(T, "second").circle.r2
    L = (center(T, "circumcenter") + K) / 2
    first = Circle(L, (T.R2 + RL2) / 4)
    assert power_of_point(K, first) == -RL2
    assert power_of_point(K, T.circumcircle()) == -3 * RL2


@given(triangles())
def test_isogonal_involution(T):
    P = center(T, "centroid") * 0.6 + T.A * 0.4
    Q = isogonal_conjugate(T, P)
    assume(power_of_point(Q, T.circumcircle()) < -1e-3 * T.R2)
    assert dist(isogonal_conjugate(T, Q), P) <= 1e-7 * math.sqrt(T.R2)


@given(triangles(exact=True), st.integers(0, 4))
@settings(max_examples=50)
def test_ceva_rank_k_exact(T, k):
    k = 2 * k
    feet = [cevian_foot_rank_k(T, v, k) for v in "ABC"]
    A, B, C = T.vertices
    Da, Db, Dc = feet
    # Ceva: (BDa/DaC)(CDb/DbA)(ADc/DcB) = 1, squared
    prod = dist2(B, Da) * dist2(C, Db) * dist2(A, Dc)
    assert prod == dist2(Da, C) * dist2(Db, A) * dist2(Dc, B)


@given(triangles(exact=True), st.integers(1, 3))
@settings(max_examples=50)
def test_menelaus_external_feet_exact(T, k):
    k = 2 * k
    A, B, C = T.vertices
    ext = []
    for v, (P, Q) in zip("ABC", ((B, C), (C, A), (A, B))):
        X = cevian_foot_rank_k(T, v, k)
        assume(dist2(X, (P + Q) / 2) != 0)
        ext.append(harmonic_conjugate(X, P, Q))
    assume(not any(X.at_infinity for X in ext))
    E1, E2, E3 = ext
    assert (E2.x - E1.x) * (E3.y - E1.y) - (E2.y - E1.y) * (E3.x - E1.x) == 0


@given(triangles(exact=True))
@settings(max_examples=50)
def test_droz_farny_identity_exact(T):
    O, H = center(T, "circumcenter"), center(T, "orthocenter")
    assert droz_farny(T, "second").circle.r2 == (T.R2 + dist2(O, H)) / 2
    assert dist2(O, H) == 9 * T.R2 - T.sum_sq


@given(st.integers(0, 2**32))
@settings(max_examples=30)
def test_spieker_equal_powers_exact(seed):
    T = Triangle(*Sampler(random.Random(seed), exact=True).heronian_triangle())
    pw = radical_circle_excircles(T).metadata["powers"]
    assert all(isinstance(p, F) for p in pw)
    assert pw[0] == pw[1] == pw[2]


@given(ratl, ratl, st.fractions(min_value=F(1, 10), max_value=10, max_denominator=50), ratl, ratl)
def test_orthogonal_family_exact(x, y, r2, px, py):
    C1 = Circle(Point(x, y), r2)
    P = Point(px, py)
    pw = power_of_point(P, C1)
    assume(pw > 0)
    # the circle about an outside point with radius² = its power cuts C1 orthogonally
    assert circles_orthogonal(C1, Circle(P, pw)) == 0


@given(ratl, ratl, st.fractions(min_value=F(1, 10), max_value=10, max_denominator=50), ratl, ratl)
def test_pole_polar_inverse_exact(x, y, r2, px, py):
    C = Circle(Point(x, y), r2)
    P = Point(px, py)
    assume(P != C.center)
    assert pole_of_line(polar_line(P, C), C) == P


@given(st.lists(st.tuples(ratl, ratl, st.fractions(min_value=F(1, 10), max_value=10, max_denominator=20)), min_size=3, max_size=3))
@settings(max_examples=50)
def test_radical_axes_concur_exact(data):
    cs = [Circle(Point(x, y), r) for x, y, r in data]
    centers = [c.center for c in cs]
    a, b, c = centers
    assume((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x) != 0)
    l1, l2, l3 = radical_axis(cs[0], cs[1]), radical_axis(cs[1], cs[2]), radical_axis(cs[0], cs[2])
    det = (
        l1.a * (l2.b * l3.c - l2.c * l3.b)
        - l1.b * (l2.a * l3.c - l2.c * l3.a)
        + l1.c * (l2.a * l3.b - l2.b * l3.a)
    )
    assert det == 0


@given(triangles(), st.floats(0.1, 0.8), st.floats(0.1, 0.8))
def test_six_point_circle(T, u, v):
    assume(u + v < 0.9)
    P = T.A * u + T.B * v + T.C * (1 - u - v)
    res = six_point_circle(T, P)
    assert res.witness_residual(math.sqrt(T.R2)) < 1e-9


@given(triangles())
def test_circumcircle_through_vertices(T):
    c = circle_through(*T.vertices)
    for V in T.vertices:
        assert abs(power_of_point(V, c)) <= 1e-9 * c.r2
