"""Cup and cap products, and the supported cap through closed stars.

Conventions: (u cup v)(sigma) = u(front) * v(back) where the front face
keeps the first p+1 vertices; sigma cap u = u(front) * back, so the
cochain always eats the front face.  The dual-side cap twists the
pullback along "cup with u on the right" by (-1)^(|f|*|u|); see the
notes on `dual_cap`.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import intlinalg as la
from .bridge import (
    CochainFunctional,
    SimplicialChain,
    SimplicialCochain,
    apply_chain_map,
    boundary_of,
    chain_complex_of,
    chain_to_vector,
    coboundary_of,
    cochain_pullback,
    relative_chain_complex,
    subdivision_chain_map,
)
from .chains import (
    HomologyClass,
    chain_map,
    homology,
    induced_map_on_homology,
)
from .complexes import (
    SimplicialComplex,
    Subcomplex,
    barycentric_subdivide,
    closed_star,
    induced_subdivision,
    nonmeeting_complement,
    subcomplex_intersection,
)
from .errors import InternalCheckError, RetractConditionError, ValidationError

__all__ = [
    "cup",
    "cap",
    "dual_cap",
    "SupportedCapResult",
    "RelativeSupportedCapResult",
    "supported_cap",
    "relative_supported_cap",
    "inclusion_chain_map",
    "relative_inclusion_chain_map",
]


def cup(u: SimplicialCochain, v: SimplicialCochain) -> SimplicialCochain:
    """(u cup v)(sigma) = u(first p+1 vertices) * v(last q+1 vertices)."""
    if u.complex != v.complex:
        raise ValidationError("cochains live on different complexes")
    x = u.complex
    p, q = u.degree, v.degree
    out = {}
    for s in x.simplices_of_dim(p + q):
        val = u.values.get(s[: p + 1], 0)
        if val:
            val *= v.values.get(s[p:], 0)
        if val:
            out[s] = val
    return SimplicialCochain(x, p + q, out)


def cap(alpha: SimplicialChain, u: SimplicialCochain) -> SimplicialChain:
    """sigma cap u = u(front p-face) * (back (m-p)-face), extended
    linearly."""
    if alpha.complex != u.complex:
        raise ValidationError("chain and cochain live on different complexes")
    m, p = alpha.degree, u.degree
    if p > m:
        raise ValidationError(f"cannot cap a degree-{m} chain with a degree-{p} cochain")
    out = {}
    for s, c in alpha.coefficients.items():
        val = c * u.values.get(s[: p + 1], 0)
        if val:
            back = s[p:]
            out[back] = out.get(back, 0) + val
    return SimplicialChain(alpha.complex, m - p, out)


def dual_cap(f: CochainFunctional, u: SimplicialCochain,
             star: Subcomplex | None = None) -> CochainFunctional:
    """Cap on the dual side: <f cap u, v> = (-1)^(|f|*|u|) <f, v cup u>.

    The capping cochain is cupped on the right (it eats back faces
    here), which is what makes the evaluation pairing compatible with
    the chain-level cap on homology.  With a `star` whose complement
    misses the support of `u`, the result is a functional on the star's
    cochains, with v extended by zero off the star.
    """
    x = f.complex
    m, p = f.cochain_degree, u.degree
    if u.complex != x:
        raise ValidationError("functional and cochain live on different complexes")
    if p > m:
        raise ValidationError("cochain degree exceeds the functional degree")
    sign = (-1) ** (m * p)
    source = star if star is not None else x.full_subcomplex()
    vdeg = m - p
    out = {}
    for s in x.simplices_of_dim(m):
        c = f.coefficients.get(s, 0)
        if not c:
            continue
        uval = u.values.get(s[vdeg:], 0)
        if not uval:
            continue
        front = s[: vdeg + 1]
        if front in source:
            out[front] = out.get(front, 0) + sign * c * uval
    if star is None:
        return CochainFunctional(x, vdeg, out)
    return CochainFunctional(star.as_complex(), vdeg, out)


@dataclass(frozen=True)
class CapDiagnostics:
    degree: int
    inclusion_is_isomorphism: bool
    star_group: str
    support_group: str


@dataclass(frozen=True)
class SupportedCapResult:
    star: Subcomplex
    chain_image: SimplicialChain  # alpha cap u, on the star's complex
    class_in_z: HomologyClass
    diagnostics: CapDiagnostics


@dataclass(frozen=True)
class RelativeSupportedCapResult:
    star: Subcomplex  # N, the closed star of Z in X
    star_boundary: Subcomplex  # N', the closed star of Y cap Z inside Y
    chain_image: SimplicialChain  # alpha cap u on the star's complex
    class_in_pair: HomologyClass  # in H(N, N')
    class_in_z: HomologyClass | None  # in H(Z, Z cap Y) when transportable
    diagnostics: CapDiagnostics


def inclusion_chain_map(inner: SimplicialComplex, outer: SimplicialComplex):
    """C(inner) -> C(outer) for a complex whose simplices all belong to
    `outer` (the vertex orders must agree where they overlap)."""
    src = chain_complex_of(inner)
    tgt = chain_complex_of(outer)
    mats = {}
    for d in range(inner.dimension + 1):
        mat = la.zeros(tgt.rank(d), src.rank(d))
        for j, s in enumerate(inner.simplices_of_dim(d)):
            mat[outer.index_of(s), j] = 1
        mats[d] = mat
    return chain_map(src, tgt, mats, shift=0, sign=1)


def relative_inclusion_chain_map(inner: SimplicialComplex, inner_sub: Subcomplex,
                                 outer: SimplicialComplex, outer_sub: Subcomplex):
    """C(inner)/C(inner_sub) -> C(outer)/C(outer_sub) for inclusions of
    pairs where inner simplices outside inner_sub stay outside
    outer_sub."""
    src, _ = relative_chain_complex(inner, inner_sub)
    tgt, _ = relative_chain_complex(outer, outer_sub)
    tgt_pos = {}
    for d in range(outer.dimension + 1):
        tgt_pos[d] = {s: i for i, s in enumerate(
            s for s in outer.simplices_of_dim(d) if s not in outer_sub)}
    mats = {}
    for d in range(inner.dimension + 1):
        basis = [s for s in inner.simplices_of_dim(d) if s not in inner_sub]
        mat = la.zeros(tgt.rank(d), len(basis))
        for j, s in enumerate(basis):
            i = tgt_pos[d].get(s)
            if i is None:
                raise ValidationError(
                    f"simplex {s!r} collapses in the target pair but not the source pair"
                )
            mat[i, j] = 1
        mats[d] = mat
    return chain_map(src, tgt, mats, shift=0, sign=1)


def _check_supported_cocycle(x, z, u, star, complement):
    if u.complex != x:
        raise ValidationError("cochain does not live on the ambient complex")
    if z.parent != x:
        raise ValidationError("support subcomplex does not belong to the ambient complex")
    for s in u.values:
        if s in complement:
            raise ValidationError(
                f"cochain does not vanish on the non-meeting complement (at {s!r})"
            )
    if not coboundary_of(u).is_zero():
        raise ValidationError("cochain is not closed (du != 0)")


def _presubdivide(x, z, u, alpha, times, extra_subcomplexes=()):
    """Transport (X, Z, u, alpha) through `times` barycentric
    subdivisions: u by cochain pullback along the last-vertex map, alpha
    by the subdivision chain map, subcomplexes by their induced
    subdivisions."""
    extras = list(extra_subcomplexes)
    for _ in range(times):
        sd = barycentric_subdivide(x)
        sdm = subdivision_chain_map(sd)
        u = cochain_pullback(sd, u)
        alpha = apply_chain_map(sdm, alpha, x, sd.complex)
        z = induced_subdivision(sd, z)
        extras = [induced_subdivision(sd, e) for e in extras]
        x = sd.complex
    return (x, z, u, alpha, extras)


def supported_cap(x: SimplicialComplex, z: Subcomplex, u: SimplicialCochain,
                  alpha: SimplicialChain, presubdivide: int = 0) -> SupportedCapResult:
    """Cap a cycle with a closed cochain vanishing off the star of `z`,
    land in chains on the star, and transport the class back to `z`
    through the inclusion-induced isomorphism.

    Raises RetractConditionError when H(Z) -> H(N) fails to be an
    isomorphism in the relevant degree; subdividing first (the
    `presubdivide` count) is the standard fix.
    """
    if presubdivide < 0:
        raise ValidationError("presubdivide must be >= 0")
    if alpha.complex != x:
        raise ValidationError("chain does not live on the ambient complex")
    if presubdivide:
        x, z, u, alpha, _ = _presubdivide(x, z, u, alpha, presubdivide)
    star = closed_star(x, z)
    complement = nonmeeting_complement(x, z)
    _check_supported_cocycle(x, z, u, star, complement)
    if not boundary_of(alpha).is_zero():
        raise ValidationError("chain is not a cycle")

    image = cap(alpha, u)
    for s in image.coefficients:
        if s not in star:
            raise InternalCheckError(f"cap image escaped the closed star at {s!r}")
    n_complex = star.as_complex("star")
    z_complex = z.as_complex("support")
    beta = SimplicialChain(n_complex, image.degree, image.coefficients)

    deg = image.degree
    h_star = homology(chain_complex_of(n_complex), deg)
    h_z = homology(chain_complex_of(z_complex), deg)
    incl = inclusion_chain_map(z_complex, n_complex)
    induced = induced_map_on_homology(incl, deg, source_group=h_z, target_group=h_star)
    iso = induced.is_isomorphism()
    diagnostics = CapDiagnostics(
        degree=deg,
        inclusion_is_isomorphism=iso,
        star_group=h_star.group_str(),
        support_group=h_z.group_str(),
    )
    if not iso:
        raise RetractConditionError(
            f"retract condition failed: H_{deg}(Z) = {h_z.group_str()} -> "
            f"H_{deg}(N) = {h_star.group_str()} is not an isomorphism; increase presubdivide"
        )
    target_class = h_star.class_of(chain_to_vector(beta))
    pulled = induced.solve(target_class)
    if pulled is None:
        raise InternalCheckError("isomorphism failed to invert on the cap class")
    return SupportedCapResult(
        star=star, chain_image=beta, class_in_z=pulled, diagnostics=diagnostics
    )


def relative_supported_cap(x: SimplicialComplex, y: Subcomplex, z: Subcomplex,
                           u: SimplicialCochain, alpha: SimplicialChain,
                           presubdivide: int = 0) -> RelativeSupportedCapResult:
    """Supported cap for a relative cycle mod `y`: lands in chains on
    the star N modulo N', the closed star of Y cap Z inside Y, and is
    transported to H(Z, Z cap Y) when the inclusion of pairs induces an
    isomorphism there."""
    if presubdivide < 0:
        raise ValidationError("presubdivide must be >= 0")
    if alpha.complex != x:
        raise ValidationError("chain does not live on the ambient complex")
    if y.parent != x:
        raise ValidationError("boundary subcomplex does not belong to the ambient complex")
    if presubdivide:
        x, z, u, alpha, extras = _presubdivide(x, z, u, alpha, presubdivide, [y])
        y = extras[0]
    star = closed_star(x, z)
    complement = nonmeeting_complement(x, z)
    _check_supported_cocycle(x, z, u, star, complement)
    d_alpha = boundary_of(alpha)
    for s in d_alpha.coefficients:
        if s not in y:
            raise ValidationError("chain is not a relative cycle mod the boundary subcomplex")

    y_and_z = subcomplex_intersection(y, z)
    y_complex = y.as_complex("boundary")
    star_prime_in_y = closed_star(
        y_complex, Subcomplex(parent=y_complex, simplices=y_and_z.simplices)
    )

    image = cap(alpha, u)
    for s in image.coefficients:
        if s not in star:
            raise InternalCheckError(f"cap image escaped the closed star at {s!r}")
    for s in boundary_of(image).coefficients:
        if s not in star_prime_in_y.simplices:
            raise InternalCheckError(
                f"boundary of the cap image escaped the inner star at {s!r}"
            )

    n_complex = star.as_complex("star")
    star_boundary = Subcomplex(parent=n_complex, simplices=star_prime_in_y.simplices)
    beta = SimplicialChain(n_complex, image.degree, image.coefficients)
    deg = image.degree

    pair_complex, pair_proj = relative_chain_complex(n_complex, star_boundary)
    h_pair = homology(pair_complex, deg)
    beta_rel = la.matmul(pair_proj.matrix(deg), chain_to_vector(beta).reshape(-1, 1))[:, 0]
    class_in_pair = h_pair.class_of(beta_rel)

    z_complex = z.as_complex("support")
    z_boundary = Subcomplex(parent=z_complex, simplices=y_and_z.simplices)
    z_pair_complex, _ = relative_chain_complex(z_complex, z_boundary)
    h_z_pair = homology(z_pair_complex, deg)
    incl = relative_inclusion_chain_map(z_complex, z_boundary, n_complex, star_boundary)
    induced = induced_map_on_homology(incl, deg, source_group=h_z_pair, target_group=h_pair)
    iso = induced.is_isomorphism()
    diagnostics = CapDiagnostics(
        degree=deg,
        inclusion_is_isomorphism=iso,
        star_group=h_pair.group_str(),
        support_group=h_z_pair.group_str(),
    )
    class_in_z = induced.solve(class_in_pair) if iso else None
    return RelativeSupportedCapResult(
        star=star,
        star_boundary=star_boundary,
        chain_image=beta,
        class_in_pair=class_in_pair,
        class_in_z=class_in_z,
        diagnostics=diagnostics,
    )
