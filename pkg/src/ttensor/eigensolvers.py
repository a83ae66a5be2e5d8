"""Dense eigensolvers implemented in-repo.

Two kernels back everything spectral in this package:

* :func:`hermitian_eig`: cyclic Jacobi rotations on a Hermitian matrix, run
  until every off-diagonal magnitude drops below ``1e-13 * ||M||_F`` (at most
  100 sweeps).  Returns ascending eigenvalues with a unitary eigenvector
  matrix.
* :func:`general_eig`: Householder reduction to upper Hessenberg form
  followed by explicitly shifted QR iteration with Wilkinson shifts and
  subdiagonal deflation at ``1e-13 * ||H||_F``.  Returns all eigenvalues of a
  general complex matrix (order unspecified).

Both are plain sequential numpy, so results are bit-reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EigenConvergenceError, NotSymmetricError

__all__ = ["HermitianEigen", "hermitian_eig", "general_eig"]

_OFFDIAG_FACTOR = 1e-13
_MAX_SWEEPS = 100
_HERMITIAN_PRE_TOL = 1e-9


@dataclass(frozen=True)
class HermitianEigen:
    """Eigenvalues ascending, eigenvectors as matching unitary columns."""

    values: np.ndarray
    vectors: np.ndarray


def _as_square_complex(m) -> np.ndarray:
    a = np.array(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    return a


def hermitian_eig(m, max_sweeps: int = _MAX_SWEEPS) -> HermitianEigen:
    """Full eigendecomposition of a Hermitian matrix by cyclic Jacobi.

    The input must be Hermitian within ``1e-9 * (1 + ||M||_F)``; it is
    symmetrized before iterating.  Ties in the ascending eigenvalue sort are
    broken by original position (stable sort), which keeps the output
    deterministic across platforms.
    """
    a = _as_square_complex(m)
    n = a.shape[0]
    norm = float(np.linalg.norm(a))
    herm_residual = float(np.linalg.norm(a - a.conj().T))
    if herm_residual > _HERMITIAN_PRE_TOL * (1.0 + norm):
        raise NotSymmetricError(
            f"matrix is not Hermitian: residual {herm_residual:.3e} "
            f"exceeds {_HERMITIAN_PRE_TOL:.1e} * (1 + ||M||_F)"
        )
    a = 0.5 * (a + a.conj().T)
    v = np.eye(n, dtype=complex)
    if n == 1 or norm == 0.0:
        vals = np.diag(a).real.copy()
        return HermitianEigen(vals, v)

    threshold = _OFFDIAG_FACTOR * norm
    converged = False
    for _ in range(max_sweeps):
        off = _max_offdiag(a)
        if off <= threshold:
            converged = True
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                _jacobi_rotate(a, v, p, q, 0.5 * threshold)
    else:
        converged = _max_offdiag(a) <= threshold
    if not converged:
        raise EigenConvergenceError(
            f"Jacobi sweep budget exhausted ({max_sweeps} sweeps); "
            f"final off-diagonal max {_max_offdiag(a):.3e} > {threshold:.3e}"
        )

    vals = np.diag(a).real
    order = np.argsort(vals, kind="stable")
    return HermitianEigen(vals[order].copy(), v[:, order].copy())


def _max_offdiag(a: np.ndarray) -> float:
    mask = ~np.eye(a.shape[0], dtype=bool)
    return float(np.abs(a[mask]).max()) if a.shape[0] > 1 else 0.0


def _jacobi_rotate(a: np.ndarray, v: np.ndarray, p: int, q: int, skip: float) -> None:
    b = a[p, q]
    ab = abs(b)
    if ab <= skip:
        return
    phase = b / ab
    tau = (a[q, q].real - a[p, p].real) / (2.0 * ab)
    if tau >= 0:
        t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
    else:
        t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
    c = 1.0 / np.sqrt(1.0 + t * t)
    s = t * c

    # rotation J: J[p,p] = J[q,q] = c, J[p,q] = s*phase, J[q,p] = -s*conj(phase);
    # apply A <- J^H A J and accumulate V <- V J
    sp = s * phase
    spc = s * phase.conjugate()
    row_p = a[p, :].copy()
    row_q = a[q, :].copy()
    a[p, :] = c * row_p - sp * row_q
    a[q, :] = spc * row_p + c * row_q
    col_p = a[:, p].copy()
    col_q = a[:, q].copy()
    a[:, p] = c * col_p - spc * col_q
    a[:, q] = sp * col_p + c * col_q
    a[p, q] = 0.0
    a[q, p] = 0.0
    a[p, p] = a[p, p].real
    a[q, q] = a[q, q].real

    vcol_p = v[:, p].copy()
    vcol_q = v[:, q].copy()
    v[:, p] = c * vcol_p - spc * vcol_q
    v[:, q] = sp * vcol_p + c * vcol_q


# ---------------------------------------------------------------------------
# general complex eigenvalues: Hessenberg + shifted QR
# ---------------------------------------------------------------------------

def general_eig(m, iter_per_eigenvalue: int = 30) -> np.ndarray:
    """All eigenvalues of a general complex square matrix, order unspecified."""
    h = _hessenberg(_as_square_complex(m))
    n = h.shape[0]
    norm = float(np.linalg.norm(h))
    if n == 0:
        return np.zeros(0, dtype=complex)
    if norm == 0.0:
        return np.zeros(n, dtype=complex)
    tol = _OFFDIAG_FACTOR * norm

    eigs: list[complex] = []
    end = n
    budget = iter_per_eigenvalue * n
    used = 0
    stall = 0
    while end > 0:
        for i in range(1, end):
            if abs(h[i, i - 1]) <= tol:
                h[i, i - 1] = 0.0
        lo = end - 1
        while lo > 0 and h[lo, lo - 1] != 0.0:
            lo -= 1
        if lo == end - 1:
            eigs.append(complex(h[lo, lo]))
            end -= 1
            stall = 0
            continue
        if lo == end - 2:
            w1, w2 = _eig2(h[lo, lo], h[lo, lo + 1], h[lo + 1, lo], h[lo + 1, lo + 1])
            eigs.extend([w1, w2])
            end -= 2
            stall = 0
            continue

        used += 1
        stall += 1
        if used > budget:
            raise EigenConvergenceError(
                f"QR iteration budget exhausted ({budget} steps for n={n}); "
                f"active block [{lo}, {end})"
            )
        if stall % 12 == 0:
            # exceptional shift to break symmetric stagnation cycles
            mu = h[end - 1, end - 1] + 0.75 * abs(h[end - 1, end - 2])
        else:
            mu = _wilkinson_shift(h, end)
        _qr_step(h, lo, end, mu)

    return np.asarray(eigs, dtype=complex)


def _hessenberg(m: np.ndarray) -> np.ndarray:
    h = m.copy()
    n = h.shape[0]
    for k in range(n - 2):
        x = h[k + 1:, k]
        nx = float(np.linalg.norm(x))
        if nx == 0.0:
            continue
        v = x.copy()
        alpha = v[0]
        phase = alpha / abs(alpha) if alpha != 0 else 1.0
        v[0] += phase * nx
        nv = float(np.linalg.norm(v))
        if nv == 0.0:
            continue
        v /= nv
        h[k + 1:, k:] -= 2.0 * np.outer(v, v.conj() @ h[k + 1:, k:])
        h[:, k + 1:] -= 2.0 * np.outer(h[:, k + 1:] @ v, v.conj())
        h[k + 2:, k] = 0.0
    return h


def _eig2(a, b, c, d) -> tuple[complex, complex]:
    mid = 0.5 * (a + d)
    disc = np.sqrt(complex(0.25 * (a - d) ** 2 + b * c))
    return complex(mid + disc), complex(mid - disc)


def _wilkinson_shift(h: np.ndarray, end: int) -> complex:
    a, b = h[end - 2, end - 2], h[end - 2, end - 1]
    c, d = h[end - 1, end - 2], h[end - 1, end - 1]
    w1, w2 = _eig2(a, b, c, d)
    return w1 if abs(w1 - d) <= abs(w2 - d) else w2


def _qr_step(h: np.ndarray, lo: int, end: int, mu: complex) -> None:
    """One explicit shifted QR sweep on the active window ``[lo, end)``."""
    idx = np.arange(lo, end)
    h[idx, idx] -= mu
    rotations = []
    for k in range(lo, end - 1):
        x, y = h[k, k], h[k + 1, k]
        r = np.hypot(abs(x), abs(y))
        if r == 0.0:
            rotations.append((1.0 + 0.0j, 0.0 + 0.0j))
            continue
        g00 = x.conjugate() / r
        g01 = y.conjugate() / r
        rotations.append((g00, g01))
        row_k = h[k, k:end].copy()
        row_k1 = h[k + 1, k:end].copy()
        h[k, k:end] = g00 * row_k + g01 * row_k1
        h[k + 1, k:end] = -g01.conjugate() * row_k + g00.conjugate() * row_k1
    for k in range(lo, end - 1):
        g00, g01 = rotations[k - lo]
        col_k = h[lo:end, k].copy()
        col_k1 = h[lo:end, k + 1].copy()
        h[lo:end, k] = col_k * g00.conjugate() + col_k1 * g01.conjugate()
        h[lo:end, k + 1] = -col_k * g01 + col_k1 * g00
    h[idx, idx] += mu
