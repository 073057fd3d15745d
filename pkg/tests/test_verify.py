from hypothesis import given, settings
from hypothesis import strategies as st

from capstar.bridge import SimplicialChain, SimplicialCochain, boundary_of, coboundary_of
from capstar.complexes import barycentric_subdivide, from_maximal_simplices
from capstar.fixtures import moebius_band, projective_plane
from capstar.products import cap, cup
from capstar.verify import run_suite


def test_suite_all_pass_on_moebius():
    results = run_suite(moebius_band(), trials=40, seed=2)
    failing = [r.name for r in results if not r.passed]
    assert not failing, failing


def test_suite_all_pass_on_rp2():
    results = run_suite(projective_plane(), trials=30, seed=3)
    failing = [r.name for r in results if not r.passed]
    assert not failing, failing


def test_suite_deterministic_given_seed():
    a = run_suite(moebius_band(), trials=20, seed=5)
    b = run_suite(moebius_band(), trials=20, seed=5)
    assert a == b


def test_suite_torus_seed_one_hundred_trials():
    from capstar.fixtures import torus

    results = run_suite(torus(), trials=100, seed=1)
    failing = [r.name for r in results if not r.passed]
    assert not failing, failing


# -- hypothesis-driven structural properties -----------------------------

small_complexes = st.lists(
    st.lists(st.integers(min_value=0, max_value=6), min_size=1, max_size=4),
    min_size=1, max_size=6,
).filter(lambda faces: all(len(set(f)) == len(f) for f in faces))


@given(small_complexes)
def test_face_closure_property(faces):
    x = from_maximal_simplices(faces)
    from itertools import combinations

    for s in x.all_simplices():
        for k in range(1, len(s)):
            for f in combinations(s, k):
                assert f in x


@given(small_complexes)
@settings(max_examples=25)
def test_subdivision_preserves_euler_property(faces):
    x = from_maximal_simplices(faces)
    assert barycentric_subdivide(x).complex.euler_characteristic() == x.euler_characteristic()


@given(small_complexes, st.integers(min_value=0, max_value=2**16))
@settings(max_examples=25)
def test_boundary_cap_identity_property(faces, seed):
    import random

    rng = random.Random(seed)
    x = from_maximal_simplices(faces)
    if x.dimension < 1:
        return
    m = rng.randint(1, x.dimension)
    p = rng.randint(0, m - 1)
    alpha_coeffs = {s: rng.randint(-2, 2) for s in x.simplices_of_dim(m)}
    u_vals = {s: rng.randint(-2, 2) for s in x.simplices_of_dim(p)}
    alpha = SimplicialChain(x, m, alpha_coeffs)
    u = SimplicialCochain(x, p, u_vals)
    lhs = boundary_of(cap(alpha, u))
    rhs = cap(boundary_of(alpha), u).scaled((-1) ** p) + cap(alpha, coboundary_of(u))
    assert (lhs - rhs).is_zero()


@given(small_complexes, st.integers(min_value=0, max_value=2**16))
@settings(max_examples=25)
def test_adjunction_property(faces, seed):
    import random

    rng = random.Random(seed)
    x = from_maximal_simplices(faces)
    if x.dimension < 0:
        return
    m = rng.randint(0, x.dimension)
    p = rng.randint(0, m)
    alpha = SimplicialChain(x, m, {s: rng.randint(-2, 2) for s in x.simplices_of_dim(m)})
    u = SimplicialCochain(x, p, {s: rng.randint(-2, 2) for s in x.simplices_of_dim(p)})
    v = SimplicialCochain(x, m - p, {s: rng.randint(-2, 2) for s in x.simplices_of_dim(m - p)})
    assert v.evaluate(cap(alpha, u)) == cup(u, v).evaluate(alpha)
