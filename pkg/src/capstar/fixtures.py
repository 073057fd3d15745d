"""Classical desk-scale complexes used by the test and verification
suites: spheres, the 7-vertex torus, the 6-vertex projective plane, a
grid Klein bottle, a Moebius band, and the standard pair models."""

from __future__ import annotations

from itertools import combinations

from .bm import OpenSpaceModel
from .complexes import SimplicialComplex, from_maximal_simplices

__all__ = [
    "circle",
    "sphere",
    "torus",
    "projective_plane",
    "klein_bottle",
    "moebius_band",
    "surfaces",
    "solid_simplex",
    "simplex_pair",
    "interval_pair",
    "cylinder_pair",
    "pair_models",
]


def circle() -> SimplicialComplex:
    """Hollow triangle."""
    return from_maximal_simplices([[1, 2], [2, 3], [1, 3]], name="circle")


def sphere() -> SimplicialComplex:
    """Boundary of the 3-simplex."""
    faces = [list(c) for c in combinations([1, 2, 3, 4], 3)]
    return from_maximal_simplices(faces, name="sphere")


def torus() -> SimplicialComplex:
    """The 7-vertex (Moebius-Csaszar) torus: cyclic triangles
    (i, i+1, i+3) and (i, i+2, i+3) mod 7."""
    faces = []
    for i in range(7):
        faces.append([i, (i + 1) % 7, (i + 3) % 7])
        faces.append([i, (i + 2) % 7, (i + 3) % 7])
    return from_maximal_simplices(faces, name="torus7")


def projective_plane() -> SimplicialComplex:
    """The 6-vertex triangulation (icosahedron mod antipodes)."""
    faces = [
        [1, 2, 4], [1, 2, 6], [1, 3, 4], [1, 3, 5], [1, 5, 6],
        [2, 3, 5], [2, 3, 6], [2, 4, 5], [3, 4, 6], [4, 5, 6],
    ]
    return from_maximal_simplices(faces, name="rp2")


def klein_bottle() -> SimplicialComplex:
    """Grid triangulation of the Klein bottle: a 4x4 vertex grid on the
    square, y identified as on a cylinder and x glued with a flip."""
    n = 4

    def vid(i, j):
        if i == n:
            i, j = 0, (n - j) % n
        return (i % n) * n + (j % n)

    faces = []
    for i in range(n):
        for j in range(n):
            a, b = vid(i, j), vid(i + 1, j)
            c, d = vid(i + 1, j + 1), vid(i, j + 1)
            faces.append([a, b, c])
            faces.append([a, c, d])
    return from_maximal_simplices(faces, name="klein")


def moebius_band() -> SimplicialComplex:
    """Five-triangle Moebius band."""
    faces = [[1, 2, 3], [2, 3, 4], [3, 4, 5], [1, 4, 5], [1, 2, 5]]
    return from_maximal_simplices(faces, name="moebius")


def surfaces() -> dict:
    return {
        "circle": circle(),
        "sphere": sphere(),
        "torus7": torus(),
        "rp2": projective_plane(),
        "klein": klein_bottle(),
        "moebius": moebius_band(),
    }


def solid_simplex(n: int) -> SimplicialComplex:
    return from_maximal_simplices([list(range(1, n + 2))], name=f"disk{n}")


def simplex_pair(n: int) -> OpenSpaceModel:
    """(solid n-simplex, its boundary sphere): a model of R^n."""
    x = solid_simplex(n)
    boundary = x.subcomplex_closure(
        [c for c in combinations(range(1, n + 2), n)]
    ) if n >= 1 else x.empty_subcomplex()
    return OpenSpaceModel(ambient=x, boundary=boundary)


def interval_pair() -> OpenSpaceModel:
    """Path a-m-b with its endpoints: a model of the real line."""
    x = from_maximal_simplices([["a", "m"], ["m", "b"]], name="interval")
    y = x.subcomplex_closure([("a",), ("b",)])
    return OpenSpaceModel(ambient=x, boundary=y)


def cylinder_pair() -> OpenSpaceModel:
    """Triangulated S^1 x [0,1] with both boundary circles: a model of
    the open cylinder S^1 x R."""
    bottom = ["a0", "b0", "c0"]
    top = ["a1", "b1", "c1"]
    faces = []
    for i in range(3):
        p, q = bottom[i], bottom[(i + 1) % 3]
        pp, qq = top[i], top[(i + 1) % 3]
        faces.append([p, q, qq])
        faces.append([p, qq, pp])
    x = from_maximal_simplices(faces, name="cylinder")
    rim = [[bottom[i], bottom[(i + 1) % 3]] for i in range(3)]
    rim += [[top[i], top[(i + 1) % 3]] for i in range(3)]
    y = x.subcomplex_closure([tuple(sorted(e, key=x.rank_of)) for e in rim])
    return OpenSpaceModel(ambient=x, boundary=y)


def pair_models() -> dict:
    return {
        "interval": interval_pair(),
        "disk2": simplex_pair(2),
        "disk3": simplex_pair(3),
        "cylinder": cylinder_pair(),
    }
