#!/usr/bin/env python3
"""Print the integral homology of every built-in surface fixture,
its Euler characteristic, and its cohomology (dual-complex homology)."""

from capstar.bridge import chain_complex_of, cochain_complex
from capstar.chains import homology
from capstar.fixtures import surfaces


def main():
    for name, x in surfaces().items():
        k = chain_complex_of(x)
        c = cochain_complex(x)
        hs = [homology(k, n).group_str() for n in range(x.dimension + 1)]
        cs = [homology(c, n).group_str() for n in range(x.dimension + 1)]
        counts = [len(x.simplices_of_dim(d)) for d in range(x.dimension + 1)]
        print(f"{name:10s} cells {counts}  chi {x.euler_characteristic():3d}")
        for n, (h, co) in enumerate(zip(hs, cs)):
            print(f"   H_{n} = {h:14s} H^{n} = {co}")


if __name__ == "__main__":
    main()
