"""From simplicial complexes to integer chain complexes.

Boundary convention: d[v_0,...,v_m] = sum_i (-1)^i [v_0,...,^v_i,...,v_m]
on increasing tuples.  Cochain complexes are the integer duals, so the
coboundary out of degree p is the transpose of the boundary scaled by
(-1)^(p+1) -- note the extra sign relative to the common convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from . import intlinalg as la
from .chains import ChainComplexZ, ChainMap, chain_complex, chain_map, dual_hom_z
from .complexes import SimplicialComplex, Subcomplex, SubdivisionResult, last_vertex_approximation
from .errors import ValidationError

__all__ = [
    "SimplicialChain",
    "SimplicialCochain",
    "CochainFunctional",
    "chain_complex_of",
    "relative_chain_complex",
    "cochain_complex",
    "relative_cochain_complex",
    "chain_to_vector",
    "vector_to_chain",
    "cochain_to_vector",
    "vector_to_cochain",
    "boundary_of",
    "coboundary_of",
    "subdivision_chain_map",
    "apply_chain_map",
    "last_vertex_chain_map",
    "cochain_pullback",
    "xi_pairing",
    "xi_functional",
]


def _validated_support(complex: SimplicialComplex, degree: int, coefficients: Mapping) -> dict:
    out = {}
    for s, c in coefficients.items():
        s = tuple(s)
        c = int(c)
        if c == 0:
            continue
        if len(s) - 1 != degree:
            raise ValidationError(f"simplex {s!r} is not {degree}-dimensional")
        if s not in complex:
            raise ValidationError(f"simplex {s!r} not in complex")
        out[s] = c
    return out


@dataclass(frozen=True)
class SimplicialChain:
    """Sparse integer chain in one degree of a fixed complex."""

    complex: SimplicialComplex
    degree: int
    coefficients: dict

    def __post_init__(self):
        object.__setattr__(
            self, "coefficients",
            _validated_support(self.complex, self.degree, self.coefficients),
        )

    def __call__(self, simplex) -> int:
        return self.coefficients.get(tuple(simplex), 0)

    def is_zero(self) -> bool:
        return not self.coefficients

    def __add__(self, other):
        _same_home(self, other)
        out = dict(self.coefficients)
        for s, c in other.coefficients.items():
            out[s] = out.get(s, 0) + c
        return SimplicialChain(self.complex, self.degree, out)

    def __neg__(self):
        return SimplicialChain(self.complex, self.degree,
                               {s: -c for s, c in self.coefficients.items()})

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, c: int):
        return SimplicialChain(self.complex, self.degree,
                               {s: c * v for s, v in self.coefficients.items()})

    def format(self) -> str:
        return _format_combination(self.complex, self.coefficients)


@dataclass(frozen=True)
class SimplicialCochain:
    """Sparse integer cochain in one degree of a fixed complex."""

    complex: SimplicialComplex
    degree: int
    values: dict

    def __post_init__(self):
        object.__setattr__(
            self, "values",
            _validated_support(self.complex, self.degree, self.values),
        )

    def __call__(self, simplex) -> int:
        return self.values.get(tuple(simplex), 0)

    def is_zero(self) -> bool:
        return not self.values

    def __add__(self, other):
        _same_home(self, other)
        out = dict(self.values)
        for s, c in other.values.items():
            out[s] = out.get(s, 0) + c
        return SimplicialCochain(self.complex, self.degree, out)

    def __neg__(self):
        return SimplicialCochain(self.complex, self.degree,
                                 {s: -c for s, c in self.values.items()})

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, c: int):
        return SimplicialCochain(self.complex, self.degree,
                                 {s: c * v for s, v in self.values.items()})

    def evaluate(self, chain: SimplicialChain) -> int:
        _same_home(self, chain)
        return sum(c * self.values.get(s, 0) for s, c in chain.coefficients.items())

    def vanishes_on(self, sub: Subcomplex) -> bool:
        return all(s not in sub for s in self.values)

    def format(self) -> str:
        return _format_combination(self.complex, self.values)


@dataclass(frozen=True)
class CochainFunctional:
    """An integer functional on the p-cochains of a complex (an element
    of the dual of the cochain complex, in one degree)."""

    complex: SimplicialComplex
    cochain_degree: int
    coefficients: dict  # simplex -> int, the value on that dual basis cochain

    def __post_init__(self):
        object.__setattr__(
            self, "coefficients",
            _validated_support(self.complex, self.cochain_degree, self.coefficients),
        )

    def evaluate(self, u: SimplicialCochain) -> int:
        if u.complex != self.complex or u.degree != self.cochain_degree:
            raise ValidationError("cochain does not match the functional's domain")
        return sum(c * u.values.get(s, 0) for s, c in self.coefficients.items())

    def is_zero(self) -> bool:
        return not self.coefficients


def _same_home(a, b):
    if a.complex != b.complex:
        raise ValidationError("operands live on different complexes")
    if a.degree != b.degree:
        raise ValidationError("operands have different degrees")


def _format_combination(complex: SimplicialComplex, coeffs: dict) -> str:
    if not coeffs:
        return "0"
    parts = []
    for s in sorted(coeffs, key=complex.sort_key):
        c = coeffs[s]
        body = "[" + ",".join(str(v) for v in s) + "]"
        if c == 1:
            term = body
        elif c == -1:
            term = "-" + body
        else:
            term = f"{c}*{body}"
        parts.append(term)
    out = parts[0]
    for t in parts[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


# -- chain complexes of complexes --------------------------------------


def _boundary_matrix(x: SimplicialComplex, m: int) -> np.ndarray:
    rows = x.simplices_of_dim(m - 1)
    cols = x.simplices_of_dim(m)
    mat = la.zeros(len(rows), len(cols))
    for j, s in enumerate(cols):
        for i in range(len(s)):
            face = s[:i] + s[i + 1:]
            mat[x.index_of(face), j] = (-1) ** i
    return mat


def chain_complex_of(x: SimplicialComplex) -> ChainComplexZ:
    """Oriented simplicial chain complex, diff_degree -1, degrees 0..dim."""
    ranks = {d: len(x.simplices_of_dim(d)) for d in range(x.dimension + 1)}
    diffs = {m: _boundary_matrix(x, m) for m in range(1, x.dimension + 1)}
    return chain_complex(-1, ranks, diffs)


def relative_chain_complex(x: SimplicialComplex, y: Subcomplex):
    """C(X)/C(Y) on the basis of simplices outside `y`, plus the
    quotient chain map from C(X)."""
    if y.parent != x:
        raise ValidationError("subcomplex does not belong to the given complex")
    kept = {}
    for d in range(x.dimension + 1):
        kept[d] = [s for s in x.simplices_of_dim(d) if s not in y]
    ranks = {d: len(ss) for d, ss in kept.items() if ss}
    pos = {d: {s: i for i, s in enumerate(ss)} for d, ss in kept.items()}
    diffs = {}
    for m in range(1, x.dimension + 1):
        mat = la.zeros(len(kept.get(m - 1, ())), len(kept.get(m, ())))
        for j, s in enumerate(kept.get(m, ())):
            for i in range(len(s)):
                face = s[:i] + s[i + 1:]
                if face in pos[m - 1]:
                    mat[pos[m - 1][face], j] = (-1) ** i
        diffs[m] = mat
    rel = chain_complex(-1, ranks, diffs)
    full = chain_complex_of(x)
    proj = {}
    for d, ss in kept.items():
        mat = la.zeros(len(ss), full.rank(d))
        for s in ss:
            mat[pos[d][s], x.index_of(s)] = 1
        proj[d] = mat
    return rel, chain_map(full, rel, proj, shift=0, sign=1)


def cochain_complex(x: SimplicialComplex) -> ChainComplexZ:
    """Integer dual of the chain complex; degrees 0..dim, diff_degree +1."""
    return dual_hom_z(chain_complex_of(x))


def relative_cochain_complex(x: SimplicialComplex, a: Subcomplex) -> ChainComplexZ:
    """Cochains vanishing on `a`: the dual of C(X)/C(A), on the basis of
    simplices outside `a`."""
    rel, _ = relative_chain_complex(x, a)
    return dual_hom_z(rel)


def relative_basis(x: SimplicialComplex, a: Subcomplex, degree: int) -> list:
    return [s for s in x.simplices_of_dim(degree) if s not in a]


# -- vector conversions -------------------------------------------------


def chain_to_vector(c: SimplicialChain) -> np.ndarray:
    basis = c.complex.simplices_of_dim(c.degree)
    v = la.zeros(len(basis), 1)[:, 0]
    for s, val in c.coefficients.items():
        v[c.complex.index_of(s)] = val
    return v


def vector_to_chain(x: SimplicialComplex, degree: int, v) -> SimplicialChain:
    basis = x.simplices_of_dim(degree)
    coeffs = {basis[i]: int(v[i]) for i in range(len(basis)) if v[i] != 0}
    return SimplicialChain(x, degree, coeffs)


def cochain_to_vector(u: SimplicialCochain) -> np.ndarray:
    basis = u.complex.simplices_of_dim(u.degree)
    v = la.zeros(len(basis), 1)[:, 0]
    for s, val in u.values.items():
        v[u.complex.index_of(s)] = val
    return v


def vector_to_cochain(x: SimplicialComplex, degree: int, v) -> SimplicialCochain:
    basis = x.simplices_of_dim(degree)
    vals = {basis[i]: int(v[i]) for i in range(len(basis)) if v[i] != 0}
    return SimplicialCochain(x, degree, vals)


def boundary_of(c: SimplicialChain) -> SimplicialChain:
    out = {}
    for s, coeff in c.coefficients.items():
        for i in range(len(s)):
            face = s[:i] + s[i + 1:]
            if face:
                out[face] = out.get(face, 0) + coeff * ((-1) ** i)
    return SimplicialChain(c.complex, c.degree - 1, out)


def coboundary_of(u: SimplicialCochain) -> SimplicialCochain:
    """(du)(x) = (-1)^(p+1) u(boundary x)."""
    x = u.complex
    p = u.degree
    sign = (-1) ** (p + 1)
    out = {}
    for s in x.simplices_of_dim(p + 1):
        acc = 0
        for i in range(len(s)):
            face = s[:i] + s[i + 1:]
            acc += ((-1) ** i) * u.values.get(face, 0)
        if acc:
            out[s] = sign * acc
    return SimplicialCochain(x, p + 1, out)


# -- subdivision and last-vertex chain maps ----------------------------


def _cone_on_barycenter(terms: dict, b) -> dict:
    """Append the (largest) barycenter vertex to each increasing tuple;
    moving it from the front costs (-1)^len."""
    out = {}
    for t, c in terms.items():
        out[t + (b,)] = c * ((-1) ** len(t))
    return out


def subdivision_expansions(sd: SubdivisionResult) -> dict:
    """parent simplex -> dict of subdivided simplices with signs, via the
    cone-over-the-barycenter recursion."""
    memo = {}

    def expand(s):
        if s in memo:
            return memo[s]
        if len(s) == 1:
            out = {(sd.barycenter_of[s],): 1}
        else:
            acc = {}
            for i in range(len(s)):
                face = s[:i] + s[i + 1:]
                fsign = (-1) ** i
                for t, c in _cone_on_barycenter(expand(face), sd.barycenter_of[s]).items():
                    acc[t] = acc.get(t, 0) + fsign * c
            out = {t: c for t, c in acc.items() if c}
        memo[s] = out
        return out

    for s in sd.parent.all_simplices():
        expand(s)
    return memo


def subdivision_chain_map(sd: SubdivisionResult) -> ChainMap:
    """C(X) -> C(sd X); vertices go to themselves and every simplex to
    the cone of its subdivided boundary on its barycenter."""
    src = chain_complex_of(sd.parent)
    tgt = chain_complex_of(sd.complex)
    memo = subdivision_expansions(sd)
    mats = {}
    for d in range(sd.parent.dimension + 1):
        cols = sd.parent.simplices_of_dim(d)
        mat = la.zeros(tgt.rank(d), len(cols))
        for j, s in enumerate(cols):
            for t, c in memo[s].items():
                mat[sd.complex.index_of(t), j] = c
        mats[d] = mat
    return chain_map(src, tgt, mats, shift=0, sign=1)


def _sorted_with_sign(tokens, rank_of):
    """Sort a repetition-free tuple, returning (sorted tuple, parity)."""
    keyed = [(rank_of(t), t) for t in tokens]
    inversions = 0
    for i in range(len(keyed)):
        for j in range(i + 1, len(keyed)):
            if keyed[i][0] > keyed[j][0]:
                inversions += 1
    return tuple(t for _, t in sorted(keyed)), (-1) ** inversions


def last_vertex_chain_map(sd: SubdivisionResult) -> ChainMap:
    """C(sd X) -> C(X) induced by the last-vertex approximation; sd
    simplices with a repeated image vertex go to zero."""
    x = sd.parent
    vertex_map = last_vertex_approximation(sd)
    src = chain_complex_of(sd.complex)
    tgt = chain_complex_of(x)
    mats = {}
    for d in range(sd.complex.dimension + 1):
        cols = sd.complex.simplices_of_dim(d)
        mat = la.zeros(tgt.rank(d), len(cols))
        for j, s in enumerate(cols):
            image = tuple(vertex_map[v] for v in s)
            if len(set(image)) != len(image):
                continue
            sorted_image, sign = _sorted_with_sign(image, x.rank_of)
            mat[x.index_of(sorted_image), j] = sign
        mats[d] = mat
    return chain_map(src, tgt, mats, shift=0, sign=1)


def apply_chain_map(f: ChainMap, chain: SimplicialChain,
                    source: SimplicialComplex, target: SimplicialComplex) -> SimplicialChain:
    if chain.complex != source:
        raise ValidationError("chain does not live on the map's source complex")
    v = chain_to_vector(chain)
    w = la.matmul(f.matrix(chain.degree), v.reshape(-1, 1))[:, 0]
    return vector_to_chain(target, chain.degree + f.shift, w)


def cochain_pullback(sd: SubdivisionResult, u: SimplicialCochain,
                     pi: ChainMap | None = None) -> SimplicialCochain:
    """Transpose of the last-vertex chain map: transports a cochain on
    the parent to the subdivision."""
    if u.complex != sd.parent:
        raise ValidationError("cochain does not live on the parent complex")
    if pi is None:
        pi = last_vertex_chain_map(sd)
    m = pi.matrix(u.degree)
    vals = la.matmul(m.T, cochain_to_vector(u).reshape(-1, 1))[:, 0]
    return vector_to_cochain(sd.complex, u.degree, vals)


# -- the evaluation pairing ---------------------------------------------


def xi_pairing(alpha: SimplicialChain, u: SimplicialCochain) -> int:
    """Sign-twisted evaluation (-1)^m * u(alpha) identifying degree-m
    chains with functionals on degree-m cochains."""
    if alpha.complex != u.complex:
        raise ValidationError("chain and cochain live on different complexes")
    if alpha.degree != u.degree:
        raise ValidationError("degree mismatch in pairing")
    return ((-1) ** alpha.degree) * u.evaluate(alpha)


def xi_functional(alpha: SimplicialChain) -> CochainFunctional:
    m = alpha.degree
    sign = (-1) ** m
    return CochainFunctional(
        alpha.complex, m, {s: sign * c for s, c in alpha.coefficients.items()}
    )
