#!/usr/bin/env python3
"""Cap the 7-vertex torus's fundamental 2-cycle against a basis of
H^1 and print the induced H^1 -> H_1 matrix; it is unimodular, the
degree-1 shadow of Poincare duality."""

from capstar.bridge import (
    chain_complex_of,
    chain_to_vector,
    cochain_complex,
    vector_to_chain,
    vector_to_cochain,
)
from capstar.chains import homology
from capstar.fixtures import torus
from capstar.products import cap


def main():
    x = torus()
    k = chain_complex_of(x)
    h2 = homology(k, 2)
    print("H_2 =", h2.group_str())
    fundamental = vector_to_chain(x, 2, h2.cycle_basis[0])
    print("fundamental cycle:", fundamental.format())

    c = cochain_complex(x)
    h1_cochains = homology(c, 1)
    h1 = homology(k, 1)
    print("H^1 =", h1_cochains.group_str(), "  H_1 =", h1.group_str())

    matrix = []
    for i, g in enumerate(h1_cochains.cycle_basis):
        u = vector_to_cochain(x, 1, g)
        image = cap(fundamental, u)
        coords = h1.coords_of(chain_to_vector(image))
        matrix.append(list(coords))
        print(f"[T] cap u_{i} -> H_1 coords {coords}")
    det = matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0]
    print("induced matrix:", matrix, " det:", det)


if __name__ == "__main__":
    main()
