#!/usr/bin/env python3
"""Tour of the complex quaternion (biquaternion) scalar algebra.

Elements are a0 + a1*e1 + a2*e2 + a3*e3 with COMPLEX components, so unlike
the real quaternions this algebra has zero divisors, and invertibility is
governed by the complex-valued weak norm rather than a positive one.
"""

import numpy as np

from biquat import E1, E2, E3, ONE, Biquaternion, NotInvertibleError

print("=" * 64)
print("Basis multiplication")
print("=" * 64)
for name, value in [("e1*e2", E1 * E2), ("e2*e1", E2 * E1), ("e2*e3", E2 * E3),
                    ("e3*e1", E3 * E1), ("e1*e1", E1 * E1)]:
    print(f"  {name} = {value}")

print()
print("=" * 64)
print("Conjugations")
print("=" * 64)
a = Biquaternion(1 + 2j, 3, -1j, 0.5)
print("  a        =", a)
print("  dual     =", a.dual())           # e-part negated
print("  cconj    =", a.cconj())          # componentwise complex conjugate
print("  hconj    =", a.hconj())          # both: the Hermitian conjugate
print("  a * dual(a) =", a * a.dual(), " (equals the weak norm)")
print("  weak norm   =", a.weak_norm())

print()
print("=" * 64)
print("Zero divisors and inverses")
print("=" * 64)
z = Biquaternion(1, 1j)  # 1 + i*e1, weak norm 1 + i**2 = 0
print("  z = 1 + i*e1 has weak norm", z.weak_norm())
try:
    z.inverse()
except NotInvertibleError as exc:
    print("  inverse fails as it must:", exc)
print("  but the Moore-Penrose inverse exists: z+ =", z.pinv())
x = z.pinv()
print("  z z+ z == z:", (z * x * z) == z)
print("  e1 inverse =", E1.inverse(), " (checks e1 * (-e1) = 1:", E1 * -E1, ")")

print()
print("=" * 64)
print("Similarity canonical forms")
print("=" * 64)
for elem in [E2, E2 + 1j * E3, Biquaternion(3 + 2j), Biquaternion(1, 2, 2, 1)]:
    form, case = elem.canonical_form()
    print(f"  {elem}")
    print(f"    -> case {case.value:8s} form {form}")
    if case.value != "complex":
        p = elem.similarity_witness()
        conj = p.inverse() * elem * p
        err = max(abs(u - v) for u, v in zip(conj.components, form.components))
        print(f"    witness p with |p^-1 a p - form| = {err:.2e}")

print()
print("Classification flags for a few elements:")
for elem in [Biquaternion(3), E1, Biquaternion(1j)]:
    print(f"  {elem} -> {elem.classify()}")
