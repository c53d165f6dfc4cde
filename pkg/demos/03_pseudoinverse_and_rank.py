#!/usr/bin/env python3
"""Moore-Penrose inverses and half-integer rank.

Rank is defined through the block representation, which can have ODD complex
rank when zero divisors are involved -- so the rank of a biquaternion matrix
is an exact half-integer, printed as k/2.
"""

import numpy as np

from biquat import Biquaternion, BqMatrix, sampling

rng = np.random.default_rng(7)

print("-- the smallest interesting example ------------------------------")
z = Biquaternion(1, 1j)  # zero divisor
A = BqMatrix.from_entries([[z]])
print("A = [1 + i e1]")
print("rank(A) =", A.rank(), "   (block representation has rank 1 of 2)")
X = A.pinv()
print("A+ =", X.entry(0, 0), " (= (1 + i e1)/4)")

print("\nPenrose equations for A+:")
print("  A A+ A == A:", (A @ X @ A).allclose(A, 1e-13))
print("  A+ A A+ == A+:", (X @ A @ X).allclose(X, 1e-13))
print("  (A A+)^dag == A A+:", (A @ X).hconj().allclose(A @ X, 1e-13))
print("  (A+ A)^dag == A+ A:", (X @ A).hconj().allclose(X @ A, 1e-13))

print("\n-- a rank-deficient rectangular matrix ---------------------------")
B = sampling.integer_matrix(rng, 4, 2) @ sampling.integer_matrix(rng, 2, 3)
print("B = (4x2) @ (2x3), shape", B.shape, " rank", B.rank())
Y = B.pinv()
scale = B.norm()
res = max(
    (B @ Y @ B - B).norm(),
    (Y @ B @ Y - Y).norm(),
    ((B @ Y).hconj() - B @ Y).norm(),
    ((Y @ B).hconj() - Y @ B).norm(),
)
print(f"worst Penrose residual: {res:.2e}  (scale {scale:.1f})")

print("\n-- rank is subadditive under products ----------------------------")
for m, n, p in [(4, 2, 4), (3, 3, 3), (2, 4, 3), (4, 1, 4), (3, 2, 2)]:
    F = sampling.integer_matrix(rng, m, n)
    G = sampling.integer_matrix(rng, n, p)
    print(f"  ({m}x{n})@({n}x{p}):  rank(FG) = {str((F @ G).rank()):>4s}   "
          f"min(rank F, rank G) = {str(min(F.rank(), G.rank()))}")

print("\n-- inversion is just the full-rank special case ------------------")
C = sampling.invertible_integer_matrix(rng, 3)
err = (C @ C.inverse() - BqMatrix.identity(3)).norm()
print(f"|C C^-1 - I| = {err:.2e}")
