"""Dense complex linear algebra engine.

Every higher-level question about biquaternion matrices is lowered to one of
the routines here (all operating on plain 2-D ``numpy`` arrays of
``complex128``): determinant, SVD-based rank and pseudoinverse,
eigendecomposition, characteristic polynomial, and Jordan-structure probing
via generalized nullities (Weyr characteristics).

Factorizations are delegated to LAPACK through ``numpy.linalg``; the
characteristic polynomial uses the Faddeev-LeVerrier recursion, which is
exact for integer-valued inputs at desk scale.
"""

from __future__ import annotations

import numpy as np
from numpy.polynomial import Polynomial
from scipy.optimize import linear_sum_assignment

from .errors import ConvergenceError, DimensionError

# Relative threshold below which singular values count as zero.
DEFAULT_TOL = 1e-10
# Eigenvalue clustering gap, relative to the matrix scale (Frobenius norm,
# which dominates the spectral radius and stays usable for nilpotent input).
CLUSTER_TOL = 1e-7

# A polynomial is held with coefficients in ascending degree order.
CPolynomial = Polynomial


def as_cmatrix(a) -> np.ndarray:
    """Coerce to a 2-D complex128 array, rejecting non-finite entries."""
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2:
        raise DimensionError(f"expected a 2-D matrix, got ndim={m.ndim}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix contains non-finite entries")
    return m


def _require_square(m: np.ndarray) -> int:
    if m.shape[0] != m.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {m.shape}")
    return m.shape[0]


def mul(a, b) -> np.ndarray:
    """Matrix product with explicit conformance check."""
    a, b = as_cmatrix(a), as_cmatrix(b)
    if a.shape[1] != b.shape[0]:
        raise DimensionError(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def det(a) -> complex:
    """Determinant of a square complex matrix.

    Sizes 1-3 use the direct expansion (exact for integer-valued entries);
    larger matrices go through LU with partial pivoting.
    """
    m = as_cmatrix(a)
    n = _require_square(m)
    if n == 0:
        return 1 + 0j
    if n == 1:
        return complex(m[0, 0])
    if n == 2:
        return complex(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0])
    if n == 3:
        return complex(
            m[0, 0] * (m[1, 1] * m[2, 2] - m[1, 2] * m[2, 1])
            - m[0, 1] * (m[1, 0] * m[2, 2] - m[1, 2] * m[2, 0])
            + m[0, 2] * (m[1, 0] * m[2, 1] - m[1, 1] * m[2, 0])
        )
    return complex(np.linalg.det(m))


def svd(a) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Full SVD ``a = u @ diag(s) @ vh`` with ``s`` non-negative descending."""
    m = as_cmatrix(a)
    return np.linalg.svd(m)


def singular_values(a) -> np.ndarray:
    m = as_cmatrix(a)
    if 0 in m.shape:
        return np.zeros(0)
    return np.linalg.svd(m, compute_uv=False)


def rank(a, tol: float = DEFAULT_TOL) -> int:
    """Numerical rank: singular values above ``tol`` times the largest one."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    s = singular_values(a)
    if s.size == 0 or s[0] == 0.0:
        return 0
    return int(np.count_nonzero(s > tol * s[0]))


def pinv(a, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Moore-Penrose pseudoinverse with relative singular-value cutoff."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    m = as_cmatrix(a)
    return np.linalg.pinv(m, rcond=tol)


def eig(a) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (with multiplicity) and unit right eigenvectors, columnwise.

    Eigenvalues are sorted lexicographically by (real, imag) so output is
    reproducible; the eigenvector columns are permuted to match.
    """
    m = as_cmatrix(a)
    _require_square(m)
    try:
        w, v = np.linalg.eig(m)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceError(f"eigenvalue iteration failed: {exc}") from exc
    order = np.lexsort((w.imag, w.real))
    return w[order], v[:, order]


def eigvals(a) -> np.ndarray:
    """Sorted eigenvalues only."""
    m = as_cmatrix(a)
    _require_square(m)
    try:
        w = np.linalg.eigvals(m)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceError(f"eigenvalue iteration failed: {exc}") from exc
    return w[np.lexsort((w.imag, w.real))]


def generalized_nullity(a, lam: complex, k: int, tol: float = DEFAULT_TOL) -> int:
    """Dimension of the kernel of ``(a - lam*I)**k``."""
    m = as_cmatrix(a)
    n = _require_square(m)
    if k < 1:
        raise ValueError("power k must be >= 1")
    shifted = m - lam * np.eye(n)
    return n - rank(np.linalg.matrix_power(shifted, k), tol)


def charpoly(a) -> Polynomial:
    """Monic characteristic polynomial via the Faddeev-LeVerrier recursion.

    Coefficients are returned in ascending degree order.  For matrices with
    (complex-)integer entries the recursion stays exact in double precision
    as long as intermediates fit in 53 bits.
    """
    m = as_cmatrix(a)
    n = _require_square(m)
    coeffs = np.zeros(n + 1, dtype=complex)
    coeffs[n] = 1.0
    mk = np.zeros_like(m)
    ck = 1.0 + 0j
    for k in range(1, n + 1):
        mk = m @ mk + ck * np.eye(n)
        ck = -np.trace(m @ mk) / k
        coeffs[n - k] = ck
    if not np.all(np.isfinite(coeffs)):
        raise ValueError("characteristic polynomial coefficients overflowed")
    return Polynomial(coeffs)


def matrix_scale(a) -> float:
    """Frobenius norm, the scale used for relative tolerances throughout."""
    return float(np.linalg.norm(as_cmatrix(a)))


def cluster_eigenvalues(w: np.ndarray, gap: float) -> list[np.ndarray]:
    """Group eigenvalues into clusters of diameter <= ``gap`` per link.

    Single-linkage on the sorted values: two eigenvalues land in the same
    cluster whenever a chain of gaps of at most ``gap`` connects them.
    """
    w = np.asarray(w, dtype=complex)
    if w.size == 0:
        return []
    order = np.lexsort((w.imag, w.real))
    remaining = list(order)
    clusters = []
    while remaining:
        seed = remaining.pop(0)
        members = [seed]
        changed = True
        while changed:
            changed = False
            for idx in remaining[:]:
                if any(abs(w[idx] - w[j]) <= gap for j in members):
                    members.append(idx)
                    remaining.remove(idx)
                    changed = True
        clusters.append(np.array(sorted(members)))
    return [w[c] for c in clusters]


def jordan_fingerprint(
    a, tol: float = DEFAULT_TOL, cluster_tol: float = CLUSTER_TOL
) -> list[tuple[complex, tuple[int, ...]]]:
    """Eigenvalue clusters with their Weyr characteristics.

    Returns ``[(lam, (nu_1, nu_2, ...)), ...]`` where ``nu_k`` is the
    nullity of ``(a - lam*I)**k``; the sequence is truncated once it reaches
    the cluster's algebraic multiplicity.  Two matrices are similar exactly
    when their fingerprints match under eigenvalue pairing within tolerance
    (see :func:`fingerprints_match`).

    Jordan structure is discontinuous, so the clustering step is a
    documented heuristic: eigenvalues closer than ``cluster_tol`` times the
    matrix scale are merged.
    """
    m = as_cmatrix(a)
    n = _require_square(m)
    if n == 0:
        return []
    w = eigvals(m)
    gap = cluster_tol * max(matrix_scale(m), np.max(np.abs(w)), 1e-300)
    out = []
    for cluster in cluster_eigenvalues(w, gap):
        lam = complex(np.mean(cluster))
        mult = len(cluster)
        shifted = m - lam * np.eye(n)
        power = np.eye(n, dtype=complex)
        weyr: list[int] = []
        for _ in range(n):
            power = power @ shifted
            nullity = n - rank(power, tol)
            if weyr and nullity <= weyr[-1]:
                break
            weyr.append(nullity)
            if nullity >= mult:
                break
        out.append((lam, tuple(weyr)))
    out.sort(key=lambda item: (item[0].real, item[0].imag))
    return out


def fingerprints_match(
    fa: list[tuple[complex, tuple[int, ...]]],
    fb: list[tuple[complex, tuple[int, ...]]],
    gap: float,
) -> bool:
    """Pair clusters of two fingerprints within ``gap`` and compare structure.

    Uses optimal assignment on eigenvalue distances so near-ties in the sort
    order cannot produce spurious mismatches.
    """
    if len(fa) != len(fb):
        return False
    if not fa:
        return True
    cost = np.array([[abs(la - lb) for lb, _ in fb] for la, _ in fa])
    rows, cols = linear_sum_assignment(cost)
    for i, j in zip(rows, cols):
        if cost[i, j] > gap or fa[i][1] != fb[j][1]:
            return False
    return True


def weyr_to_block_sizes(weyr: tuple[int, ...]) -> dict[int, int]:
    """Convert a Weyr sequence into ``{block size: count}``."""
    nu = [0, *weyr]
    diffs = [nu[k] - nu[k - 1] for k in range(1, len(nu))]
    diffs.append(0)
    counts = {}
    for k in range(1, len(weyr) + 1):
        c = diffs[k - 1] - diffs[k]
        if c > 0:
            counts[k] = c
    return counts
