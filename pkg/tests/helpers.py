"""Shared generators for randomized chain-algebra tests."""

import numpy as np

from capstar import intlinalg as la
from capstar.chains import chain_complex, chain_map


def random_matrix(rng, rows, cols, lo=-3, hi=3):
    return la.as_matrix(
        [[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)],
        shape=(rows, cols),
    )


def random_complex(rng, length=4, max_rank=5, diff_degree=-1, base_degree=0):
    """Random finitely generated free complex with d o d = 0, built by
    sending each next differential into the kernel of the previous."""
    n_degrees = rng.randint(1, length)
    ranks = {base_degree + i: rng.randint(1, max_rank) for i in range(n_degrees)}
    diffs = {}
    prev = None  # differential out of the previous degree
    order = sorted(ranks) if diff_degree == -1 else sorted(ranks, reverse=True)
    # walk from the "target end" so each new map lands in the kernel
    for idx, deg in enumerate(order):
        if idx == 0:
            prev = None
            continue
        lower = order[idx - 1]
        rows, cols = ranks[lower], ranks[deg]
        if prev is None:
            mat = random_matrix(rng, rows, cols)
        else:
            kb = la.kernel_basis(prev)
            mat = la.matmul(kb, random_matrix(rng, kb.shape[1], cols, lo=-2, hi=2))
        diffs[deg] = mat
        prev = mat
    return chain_complex(diff_degree, ranks, diffs)


def random_chain_maps(rng, source, target, count=1, lo=-2, hi=2):
    """Random degree-0 chain maps source -> target, drawn from an exact
    integer basis of the space of all chain maps."""
    eps = source.diff_degree
    degrees = sorted(set(source.ranks) | set(target.ranks))
    # unknowns: entries of f_n for each degree, flattened
    offsets = {}
    total = 0
    for n in degrees:
        size = target.rank(n) * source.rank(n)
        offsets[n] = total
        total += size

    rows = []
    for n in degrees:
        # constraint: f_{n+eps} d_n - d_n f_n = 0, entrywise
        rn, cn = target.rank(n + eps), source.rank(n)
        if rn == 0 or cn == 0:
            continue
        ds = source.d(n)
        dt = target.d(n)
        for i in range(rn):
            for j in range(cn):
                row = [0] * total
                # (f_{n+eps} d_n)[i, j] = sum_k f_{n+eps}[i, k] ds[k, j]
                for k in range(source.rank(n + eps)):
                    if ds[k, j]:
                        row[offsets[n + eps] + i * source.rank(n + eps) + k] += int(ds[k, j])
                # (d_n f_n)[i, j] = sum_k dt[i, k] f_n[k, j]
                for k in range(target.rank(n)):
                    if dt[i, k]:
                        row[offsets[n] + k * source.rank(n) + j] -= int(dt[i, k])
                rows.append(row)
    constraint = la.as_matrix(rows, shape=(len(rows), total))
    kb = la.kernel_basis(constraint)
    maps = []
    for _ in range(count):
        coeffs = la.as_matrix(
            [[rng.randint(lo, hi)] for _ in range(kb.shape[1])], shape=(kb.shape[1], 1)
        )
        flat = la.matmul(kb, coeffs)[:, 0] if kb.shape[1] else np.zeros(total, dtype=object)
        mats = {}
        for n in degrees:
            rt, cs = target.rank(n), source.rank(n)
            if rt and cs:
                m = la.zeros(rt, cs)
                for i in range(rt):
                    for j in range(cs):
                        m[i, j] = flat[offsets[n] + i * cs + j]
                mats[n] = m
        maps.append(chain_map(source, target, mats))
    return maps
