#!/usr/bin/env python3
# The two faithful complex representations of a biquaternion matrix, and the
# universal similarity factorization that generates them.

import numpy as np

from biquat import (
    E1,
    E2,
    BqMatrix,
    block_diagonal,
    frame_reconstruct,
    recon_frame,
    repr_factor,
    sampling,
    shuffle_permutations,
)

rng = np.random.default_rng(0)

# Every element has a 2x2 complex image; the basis maps to Pauli matrices.
print("2x2 images of the basis:")
for name, e in [("1", BqMatrix.identity(1).entry(0, 0)), ("e1", E1), ("e2", E2)]:
    print(f"  psi({name}) =\n{e.as_complex_matrix()}")

# For matrices there are two layouts of the same data: a 2x2 grid of m x n
# component blocks, or an m x n grid of 2x2 entry images.
A = sampling.integer_matrix(rng, 2, 3)
print("\nA (2x3 biquaternion matrix) block representation (4x6):")
print(A.block_repr())
print("\ninterleaved representation (4x6):")
print(A.interleaved_repr())

# The two are linked by perfect-shuffle permutations, exactly.
G, H = shuffle_permutations(2, 3)
print("\nG @ block @ H == interleaved:",
      np.array_equal(G @ A.block_repr() @ H, A.interleaved_repr()))

# The block representation is not ad hoc: a fixed self-inverse unitary
# factor Q (independent of A) conjugates diag(A, A) onto it, entirely
# inside the algebra.  On integer inputs this is exact in double precision.
Q2, Q3 = repr_factor(2), repr_factor(3)
lifted = Q2 @ block_diagonal(A, A) @ Q3
print("Q_2m @ diag(A, A) @ Q_2n == embedded block repr:",
      lifted == BqMatrix.from_complex(A.block_repr()))
print("Q is self-inverse:", Q2 @ Q2 == BqMatrix.identity(4))

# Going back: either slice the blocks, or use the reconstruction frame
# E = [(1 - i e1)I, (e2 + i e3)I] with E @ E^dagger = 4I.
E = recon_frame(2)
print("E @ E.hconj() == 4I:", E @ E.hconj() == BqMatrix.identity(2) * 4)
print("frame reconstruction recovers A:", frame_reconstruct(A.block_repr()) == A)
print("block slicing recovers A:      ", BqMatrix.from_block_repr(A.block_repr()) == A)

# The map is onto: ANY complex matrix of even dimensions is the block
# representation of exactly one biquaternion matrix.
M = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
B = BqMatrix.from_block_repr(M)
print("\nround trip through an arbitrary complex 4x4:",
      np.max(np.abs(B.block_repr() - M)) <= 1e-12)
