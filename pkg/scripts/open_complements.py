#!/usr/bin/env python3
"""Borel-Moore homology of the standard open-complement models, the
exactness of their pair sequences, and the line/point supported cap."""

from capstar.bm import bm_homology, bm_supported_cap, pair_long_exact_sequence
from capstar.bridge import SimplicialChain, SimplicialCochain
from capstar.fixtures import interval_pair, pair_models


def main():
    for name, model in pair_models().items():
        top = model.ambient.dimension
        groups = [bm_homology(model, n).group_str() for n in range(top + 1)]
        les = pair_long_exact_sequence(model.ambient, model.boundary)
        print(f"{name:9s} H^BM_* = {groups}   pair LES exact: {les.passed}")

    model = interval_pair()
    x = model.ambient
    z = x.subcomplex_closure([("m",)])
    u = SimplicialCochain(x, 1, {("a", "m"): 1})
    alpha = SimplicialChain(x, 1, {("a", "m"): 1, ("b", "m"): -1})
    res = bm_supported_cap(model, z, u, alpha)
    print("line cap point-supported cocycle:")
    print("  chain image:", res.chain_image.format())
    print("  class:", res.class_in_z.format("H^BM_0(point)"))


if __name__ == "__main__":
    main()
