"""Block-circulant unfolding and DFT block diagonalization.

The transform pair moves tensors between the spatial domain and the list of
complex Fourier slices that block-diagonalize the block-circulant unfolding.
The forward kernel is the dense DFT matrix with ``omega = exp(-2*pi*i/n3)``
applied along tubes (unnormalized); the inverse divides by ``n3``.  A dense
kernel is deliberate: tube counts stay desk-scale here, and the explicit
matrix pins the sign/normalization convention exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .core import Tensor3
from .errors import ConjugateSymmetryError, ShapeMismatchError

__all__ = [
    "FourierSlices",
    "BlockCirculantMatrix",
    "dft_matrix",
    "bcirc",
    "unfold",
    "fold",
    "to_fourier",
    "from_fourier",
    "fourier_frobenius_norm",
]


@dataclass(frozen=True)
class FourierSlices:
    """Ordered list of the n3 complex Fourier slices of a tensor.

    ``origin_real`` records that the slices came from a real tensor, in which
    case slice ``n3 - i`` is the entrywise conjugate of slice ``i`` for
    i = 1..n3-1 (0-based) and slice 0 is real up to roundoff.
    """

    n1: int
    n2: int
    n3: int
    slices: tuple
    origin_real: bool

    @classmethod
    def from_list(cls, slices, origin_real: bool) -> "FourierSlices":
        mats = tuple(np.asarray(s, dtype=complex) for s in slices)
        n1, n2 = mats[0].shape
        for m in mats:
            if m.shape != (n1, n2):
                raise ShapeMismatchError("all Fourier slices must share one shape")
        return cls(n1, n2, len(mats), mats, origin_real)

    def symmetry_residual(self) -> float:
        """Largest deviation from the conjugate-symmetry pattern of a real tensor."""
        res = float(np.abs(self.slices[0].imag).max()) if self.slices[0].size else 0.0
        for i in range(1, self.n3 // 2 + 1):
            diff = np.abs(self.slices[self.n3 - i] - self.slices[i].conj()).max()
            res = max(res, float(diff))
        return res


@dataclass(frozen=True)
class BlockCirculantMatrix:
    """Dense block-circulant unfolding; block (r, c) is frontal slice (r - c) mod n3."""

    matrix: np.ndarray
    n1: int
    n2: int
    n3: int


@lru_cache(maxsize=None)
def dft_matrix(n: int) -> np.ndarray:
    """Unnormalized DFT matrix F with F[j, k] = omega^(j*k), omega = exp(-2*pi*i/n)."""
    j = np.arange(n)
    return np.exp(-2j * np.pi / n * np.outer(j, j))


def bcirc(a) -> BlockCirculantMatrix:
    """Block-circulant matrix whose first block column stacks the frontal slices."""
    n1, n2, n3 = a.shape
    out = np.empty((n1 * n3, n2 * n3), dtype=a.data.dtype)
    for r in range(n3):
        for c in range(n3):
            out[r * n1:(r + 1) * n1, c * n2:(c + 1) * n2] = a.slice((r - c) % n3)
    return BlockCirculantMatrix(out, n1, n2, n3)


def unfold(a: Tensor3) -> np.ndarray:
    """Stack the frontal slices vertically into an (n1*n3, n2) matrix."""
    return a.data.transpose(2, 0, 1).reshape(a.n1 * a.n3, a.n2)


def fold(m, n1: int, n3: int) -> Tensor3:
    """Inverse of :func:`unfold`; requires exactly n1*n3 rows."""
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != n1 * n3:
        raise ShapeMismatchError(
            f"cannot fold shape {m.shape} into n1={n1}, n3={n3} slices"
        )
    return Tensor3(m.reshape(n3, n1, m.shape[1]).transpose(1, 2, 0))


def to_fourier(a) -> FourierSlices:
    """DFT along every tube; returns the n3 Fourier slices.

    Accepts real and complex tensors; ``origin_real`` is set for real input,
    and the output then carries the conjugate-symmetry pattern by construction.
    """
    n1, n2, n3 = a.shape
    f = dft_matrix(n3)
    bar = np.einsum("kt,ijt->kij", f, a.data)
    real_origin = isinstance(a, Tensor3)
    return FourierSlices(n1, n2, n3, tuple(bar[k] for k in range(n3)), real_origin)


def from_fourier(s: FourierSlices, tol_sym: float = 1e-9) -> Tensor3:
    """Inverse DFT along tubes back to a real tensor.

    The slices must satisfy the conjugate-symmetry pattern within
    ``tol_sym * (1 + max slice magnitude)``; otherwise the data has no real
    preimage and :class:`ConjugateSymmetryError` reports the worst slice pair.
    """
    scale = max((float(np.abs(m).max()) for m in s.slices if m.size), default=0.0)
    tol = tol_sym * (1.0 + scale)
    worst = (0.0, 0, 0)
    if s.slices[0].size:
        r0 = float(np.abs(s.slices[0].imag).max())
        if r0 > worst[0]:
            worst = (r0, 0, 0)
    for i in range(1, s.n3 // 2 + 1):
        j = s.n3 - i
        r = float(np.abs(s.slices[j] - s.slices[i].conj()).max())
        if r > worst[0]:
            worst = (r, i, j)
    if worst[0] > tol:
        raise ConjugateSymmetryError(worst[1], worst[2], worst[0], tol)

    f = dft_matrix(s.n3)
    bar = np.stack(s.slices, axis=0)
    data = np.einsum("kt,tij->ijk", f.conj(), bar) / s.n3
    return Tensor3(data.real)


def fourier_frobenius_norm(s: FourierSlices) -> float:
    """Frobenius norm of the stacked Fourier slices."""
    return float(np.sqrt(sum(np.linalg.norm(m) ** 2 for m in s.slices)))
