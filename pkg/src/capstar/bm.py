"""Borel-Moore homology of open complements, modeled as compact pairs.

The open space U = X - Y is represented by the pair (X, Y); its
Borel-Moore homology is the homology of C(X)/C(Y).  The long exact
sequence of the pair and invariance under barycentric subdivision
certify the model; the supported cap on U delegates to the relative
supported cap of the pair.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import intlinalg as la
from .bridge import (
    SimplicialChain,
    SimplicialCochain,
    boundary_of,
    chain_complex_of,
    relative_chain_complex,
    subdivision_chain_map,
)
from .chains import (
    HomologyGroup,
    chain_map,
    homology,
    induced_map_on_homology,
)
from .complexes import (
    SimplicialComplex,
    Subcomplex,
    barycentric_subdivide,
    induced_subdivision,
)
from .errors import InternalCheckError, ValidationError
from .products import (
    RelativeSupportedCapResult,
    inclusion_chain_map,
    relative_supported_cap,
    supported_cap,
)

__all__ = [
    "OpenSpaceModel",
    "bm_homology",
    "pair_long_exact_sequence",
    "ExactnessReport",
    "subdivision_invariance_check",
    "InvarianceReport",
    "bm_supported_cap",
]


@dataclass(frozen=True)
class OpenSpaceModel:
    """Pair model (ambient, boundary) of the open complement
    ambient - boundary."""

    ambient: SimplicialComplex
    boundary: Subcomplex

    def __post_init__(self):
        if self.boundary.parent != self.ambient:
            raise ValidationError("boundary is not a subcomplex of the ambient complex")


def bm_homology(model: OpenSpaceModel, degree: int) -> HomologyGroup:
    """H of C(X)/C(Y) at one degree, read as the Borel-Moore homology of
    the open complement."""
    rel, _ = relative_chain_complex(model.ambient, model.boundary)
    return homology(rel, degree)


# -- long exact sequence of the pair ------------------------------------


@dataclass(frozen=True)
class ExactnessReport:
    nodes: tuple  # (label, exact?) per checked node
    passed: bool


def _exact_at(prev_matrix, here: HomologyGroup, next_matrix, nxt: HomologyGroup) -> bool:
    """Exactness at `here`: image of the incoming map equals the kernel
    of the outgoing map, as subgroups in canonical coordinates."""
    n = here.dim
    rel_here = here.relation_matrix()
    image_gens = np.concatenate([prev_matrix, rel_here], axis=1)
    # kernel of (next o quotient): x with next_matrix @ x in relations of nxt
    rel_next = nxt.relation_matrix()
    stacked = np.concatenate([next_matrix, -rel_next], axis=1)
    ker = la.kernel_basis(stacked)
    ker_x = ker[:n, :] if ker.shape[0] else la.zeros(n, ker.shape[1])
    kernel_gens = np.concatenate([ker_x, rel_here], axis=1)
    return la.lattices_equal(image_gens, kernel_gens)


def pair_long_exact_sequence(x: SimplicialComplex, y: Subcomplex) -> ExactnessReport:
    """... -> H_n(Y) -> H_n(X) -> H_n(X, Y) -> H_{n-1}(Y) -> ...

    The connecting map lifts a relative cycle to X, takes its boundary
    into Y.  Verifies image = kernel at every node, torsion included;
    a failure raises InternalCheckError since it can only mean a bug.
    """
    if y.parent != x:
        raise ValidationError("subcomplex does not belong to the given complex")
    y_complex = y.as_complex("pair-boundary")
    cy = chain_complex_of(y_complex)
    cx = chain_complex_of(x)
    rel, proj = relative_chain_complex(x, y)
    incl = inclusion_chain_map(y_complex, x)

    top = x.dimension
    hy = {n: homology(cy, n) for n in range(-1, top + 2)}
    hx = {n: homology(cx, n) for n in range(-1, top + 2)}
    hrel = {n: homology(rel, n) for n in range(-1, top + 2)}

    # connecting homomorphism matrices, in canonical coordinates
    rel_basis = {
        n: [s for s in x.simplices_of_dim(n) if s not in y] for n in range(top + 1)
    }
    conn = {}
    for n in range(top + 1):
        src, tgt = hrel[n], hy[n - 1]
        mat = la.zeros(tgt.dim, src.dim)
        for j, g in enumerate(src.cycle_basis):
            lift = SimplicialChain(
                x, n,
                {s: int(g[i]) for i, s in enumerate(rel_basis[n]) if g[i] != 0},
            )
            db = boundary_of(lift)
            for s in db.coefficients:
                if s not in y:
                    raise InternalCheckError("relative cycle boundary escaped the subcomplex")
            vec = la.zeros(cy.rank(n - 1), 1)[:, 0]
            for s, c in db.coefficients.items():
                vec[y_complex.index_of(s)] = c
            for i, c in enumerate(tgt.coords_of(vec)):
                mat[i, j] = c
        conn[n] = mat

    incl_mat = {n: induced_map_on_homology(incl, n, source_group=hy[n], target_group=hx[n]).matrix
                for n in range(top + 1)}
    proj_mat = {n: induced_map_on_homology(proj, n, source_group=hx[n], target_group=hrel[n]).matrix
                for n in range(top + 1)}

    nodes = []
    passed = True
    if top >= 0:
        # at H_top(Y): nothing comes in from H_{top+1}(X, Y) = 0
        ok = _exact_at(la.zeros(hy[top].dim, 0), hy[top], incl_mat[top], hx[top])
        nodes.append((f"H_{top}(Y)", ok))
        passed = passed and ok
    for n in range(top, -1, -1):
        # at H_n(X): in from H_n(Y), out to H_n(X, Y)
        ok = _exact_at(incl_mat[n], hx[n], proj_mat[n], hrel[n])
        nodes.append((f"H_{n}(X)", ok))
        # at H_n(X, Y): in from H_n(X), out via connecting map to H_{n-1}(Y)
        ok2 = _exact_at(proj_mat[n], hrel[n], conn[n], hy[n - 1])
        nodes.append((f"H_{n}(X,Y)", ok2))
        # at H_{n-1}(Y): in via connecting map, out to H_{n-1}(X)
        if n - 1 >= 0:
            ok3 = _exact_at(conn[n], hy[n - 1], incl_mat[n - 1], hx[n - 1])
            nodes.append((f"H_{n - 1}(Y)", ok3))
            passed = passed and ok3
        passed = passed and ok and ok2
    if not passed:
        failing = [label for label, good in nodes if not good]
        raise InternalCheckError(f"pair sequence not exact at {failing}")
    return ExactnessReport(nodes=tuple(nodes), passed=passed)


# -- subdivision invariance ---------------------------------------------


@dataclass(frozen=True)
class InvarianceReport:
    rows: tuple  # (degree, original type, subdivided type, iso?)
    passed: bool


def subdivision_invariance_check(model: OpenSpaceModel, times: int = 1) -> InvarianceReport:
    """H(X, Y) must map isomorphically to H(sd^k X, sd^k Y) under the
    relative subdivision chain map."""
    if times < 1:
        raise ValidationError("times must be >= 1")
    x, y = model.ambient, model.boundary

    # compose k relative subdivision maps
    cur_x, cur_y = x, y
    rel_map = None
    for _ in range(times):
        sd = barycentric_subdivide(cur_x)
        sdm = subdivision_chain_map(sd)
        next_x = sd.complex
        next_y = induced_subdivision(sd, cur_y)
        rel_cur, _ = relative_chain_complex(cur_x, cur_y)
        rel_next, proj_next = relative_chain_complex(next_x, next_y)
        # the subdivision map sends C(Y) into C(sd Y), so it drops to the quotients
        basis = {
            n: [s for s in cur_x.simplices_of_dim(n) if s not in cur_y]
            for n in range(cur_x.dimension + 1)
        }
        mats = {}
        for n in range(cur_x.dimension + 1):
            cols = basis[n]
            mat = la.zeros(rel_next.rank(n), len(cols))
            full_cols = sdm.matrix(n)
            pn = proj_next.matrix(n)
            for j, s in enumerate(cols):
                col = la.matmul(pn, full_cols[:, [cur_x.index_of(s)]])
                mat[:, [j]] = col
            mats[n] = mat
        step = chain_map(rel_cur, rel_next, mats, shift=0, sign=1)
        rel_map = step if rel_map is None else step.compose(rel_map)
        cur_x, cur_y = next_x, next_y

    rows = []
    passed = True
    for n in range(max(x.dimension, 0) + 1):
        src_h = homology(rel_map.source, n)
        tgt_h = homology(rel_map.target, n)
        ind = induced_map_on_homology(rel_map, n, source_group=src_h, target_group=tgt_h)
        iso = ind.is_isomorphism()
        rows.append((n, src_h.group_str(), tgt_h.group_str(), iso))
        passed = passed and iso
    return InvarianceReport(rows=tuple(rows), passed=passed)


# -- supported cap on the open complement -------------------------------


def bm_supported_cap(model: OpenSpaceModel, z: Subcomplex, u: SimplicialCochain,
                     alpha: SimplicialChain, presubdivide: int = 0) -> RelativeSupportedCapResult:
    """Supported cap on the Borel-Moore homology of the complement:
    delegates to the relative supported cap of the pair.

    When the support misses the boundary and the input is an honest
    cycle, the result is cross-checked against the absolute supported
    cap (the localization compatibility)."""
    result = relative_supported_cap(
        model.ambient, model.boundary, z, u, alpha, presubdivide=presubdivide
    )
    z_meets_y = bool(
        subcomplex_intersect_nonempty(model.boundary, z)
    )
    if not z_meets_y and boundary_of(alpha).is_zero() and presubdivide == 0:
        absolute = supported_cap(model.ambient, z, u, alpha)
        if result.class_in_z is not None and absolute.class_in_z.coords != result.class_in_z.coords:
            raise InternalCheckError(
                "relative and absolute supported caps disagree away from the boundary"
            )
    return result


def subcomplex_intersect_nonempty(a: Subcomplex, b: Subcomplex) -> bool:
    return bool(a.simplices & b.simplices)
