"""Dense third-order tensors, elementary structural operations, norms, and
seeded random instance generation.

A :class:`Tensor3` stores its entries as a read-only float64 array of shape
``(n1, n2, n3)``; ``data[:, :, k]`` is frontal slice ``k`` (0-based).  The flat
serialization order used by files and oracles is slice-major with row-major
slices: flat index ``(k * n1 + i) * n2 + j`` for 0-based ``(i, j, k)``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ShapeMismatchError

__all__ = [
    "Tensor3",
    "ComplexTensor3",
    "RngStream",
    "transpose",
    "identity",
    "inner_product",
    "frobenius_norm",
    "spectral_norm",
    "gen_random",
    "gen_symmetric",
    "gen_t_psd",
    "gen_loewner_pair",
    "gen_commuting_psd_pair",
]

_MASK64 = (1 << 64) - 1


def _validated(arr: np.ndarray, dtype) -> np.ndarray:
    arr = np.array(arr, dtype=dtype, order="C")
    if arr.ndim != 3:
        raise ValueError(f"expected a 3-way array, got {arr.ndim} axes")
    if arr.size and not np.isfinite(arr).all():
        raise ValueError("tensor entries must be finite (no NaN/Inf)")
    if min(arr.shape) < 1:
        raise ValueError(f"dimensions must be positive, got {arr.shape}")
    arr.setflags(write=False)
    return arr


class Tensor3:
    """Dense real third-order tensor; immutable after construction."""

    __slots__ = ("data",)

    def __init__(self, data):
        object.__setattr__(self, "data", _validated(data, float))

    def __setattr__(self, name, value):
        raise AttributeError("Tensor3 is immutable")

    @property
    def n1(self) -> int:
        return self.data.shape[0]

    @property
    def n2(self) -> int:
        return self.data.shape[1]

    @property
    def n3(self) -> int:
        return self.data.shape[2]

    @property
    def shape(self) -> tuple[int, int, int]:
        return self.data.shape

    def slice(self, k: int) -> np.ndarray:
        """Frontal slice ``k`` (0-based) as an ``(n1, n2)`` array."""
        return self.data[:, :, k]

    def to_flat(self) -> np.ndarray:
        """Entries in the canonical slice-major / row-major flat order."""
        return self.data.transpose(2, 0, 1).ravel()

    @classmethod
    def from_flat(cls, flat, n1: int, n2: int, n3: int) -> "Tensor3":
        flat = np.asarray(flat, dtype=float)
        if flat.size != n1 * n2 * n3:
            raise ShapeMismatchError(
                f"flat data has {flat.size} entries, expected {n1 * n2 * n3}"
            )
        return cls(flat.reshape(n3, n1, n2).transpose(1, 2, 0))

    @classmethod
    def zeros(cls, n1: int, n2: int, n3: int) -> "Tensor3":
        return cls(np.zeros((n1, n2, n3)))

    @classmethod
    def from_slices(cls, slices) -> "Tensor3":
        """Build from a sequence of equally-shaped frontal slices."""
        return cls(np.stack([np.asarray(s, dtype=float) for s in slices], axis=2))

    def __add__(self, other: "Tensor3") -> "Tensor3":
        _check_same_shape(self, other)
        return Tensor3(self.data + other.data)

    def __sub__(self, other: "Tensor3") -> "Tensor3":
        _check_same_shape(self, other)
        return Tensor3(self.data - other.data)

    def __neg__(self) -> "Tensor3":
        return Tensor3(-self.data)

    def __mul__(self, scalar: float) -> "Tensor3":
        return Tensor3(self.data * float(scalar))

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"Tensor3(shape={self.shape})"


class ComplexTensor3:
    """Complex third-order tensor; used for Cartesian assemblies ``A + iB``."""

    __slots__ = ("data",)

    def __init__(self, data):
        object.__setattr__(self, "data", _validated(data, complex))

    def __setattr__(self, name, value):
        raise AttributeError("ComplexTensor3 is immutable")

    @property
    def n1(self) -> int:
        return self.data.shape[0]

    @property
    def n2(self) -> int:
        return self.data.shape[1]

    @property
    def n3(self) -> int:
        return self.data.shape[2]

    @property
    def shape(self) -> tuple[int, int, int]:
        return self.data.shape

    def slice(self, k: int) -> np.ndarray:
        return self.data[:, :, k]

    @classmethod
    def from_parts(cls, real: Tensor3, imag: Tensor3) -> "ComplexTensor3":
        """Assemble ``real + 1j * imag`` from two real tensors of equal shape."""
        _check_same_shape(real, imag)
        return cls(real.data + 1j * imag.data)

    def __repr__(self) -> str:
        return f"ComplexTensor3(shape={self.shape})"


def _check_same_shape(a, b) -> None:
    if a.shape != b.shape:
        raise ShapeMismatchError(f"shape mismatch: {a.shape} vs {b.shape}")


@dataclass(frozen=True)
class RngStream:
    """Counter-based random stream identified by ``(seed, stream)``.

    Philox is used underneath, so equal identifiers give bit-identical scalar
    sequences on every platform and regardless of thread scheduling.  Every
    generator call derives a fresh ``numpy`` Generator, hence a generator
    function called twice with the same stream produces identical output.
    """

    seed: int
    stream: int = 0

    def generator(self) -> np.random.Generator:
        key = [self.seed & _MASK64, self.stream & _MASK64]
        return np.random.Generator(np.random.Philox(key=key))


def _as_generator(rng) -> np.random.Generator:
    if isinstance(rng, RngStream):
        return rng.generator()
    if isinstance(rng, np.random.Generator):
        return rng
    raise TypeError(f"expected RngStream or numpy Generator, got {type(rng)!r}")


# ---------------------------------------------------------------------------
# structural operations
# ---------------------------------------------------------------------------

def transpose(a: Tensor3) -> Tensor3:
    """Tensor transpose: each slice transposed, slices 2..n3 in reversed order."""
    d = a.data
    out = np.empty((a.n2, a.n1, a.n3))
    out[:, :, 0] = d[:, :, 0].T
    if a.n3 > 1:
        # slice k of the result is slice (n3 - k) of the input, transposed
        out[:, :, 1:] = d[:, :, :0:-1].transpose(1, 0, 2)
    return Tensor3(out)


def identity(n: int, n3: int) -> Tensor3:
    """Multiplicative identity: first slice I_n, remaining slices zero."""
    if n < 1 or n3 < 1:
        raise ValueError("dimensions must be >= 1")
    out = np.zeros((n, n, n3))
    out[:, :, 0] = np.eye(n)
    return Tensor3(out)


def inner_product(x: Tensor3, y: Tensor3) -> float:
    """Entrywise inner product; satisfies <x, x> = ||x||_F^2."""
    _check_same_shape(x, y)
    return float(np.vdot(x.data, y.data).real)


def frobenius_norm(a) -> float:
    """Square root of the sum of squared entry magnitudes."""
    return float(np.linalg.norm(a.data.ravel()))


def spectral_norm(a) -> float:
    """Largest singular value of the block-circulant unfolding.

    Equals the maximum over Fourier slices of the slice's largest singular
    value, because the unfolding is unitarily block-diagonalized by the DFT.
    """
    from .fourier import to_fourier  # deferred: core must not import fourier at load

    return max(
        float(np.linalg.svd(s, compute_uv=False)[0]) for s in to_fourier(a).slices
    )


# ---------------------------------------------------------------------------
# seeded instance generators
# ---------------------------------------------------------------------------

def gen_random(dims: tuple[int, int, int], rng) -> Tensor3:
    """Tensor with entries i.i.d. uniform on [-1, 1]."""
    g = _as_generator(rng)
    n1, n2, n3 = dims
    return Tensor3(g.uniform(-1.0, 1.0, size=(n1, n2, n3)))


def gen_symmetric(n: int, n3: int, rng) -> Tensor3:
    """Symmetric tensor (R + R^T)/2; the symmetry is exact in floating point."""
    r = gen_random((n, n, n3), rng)
    return 0.5 * (r + transpose(r))


def gen_t_psd(n: int, n3: int, rng, delta: float = 1e-3) -> Tensor3:
    """Positive semidefinite tensor R^T * R + delta * I.

    ``delta > 0`` keeps all Fourier-slice eigenvalues away from zero so that
    fractional powers are well conditioned.
    """
    from .algebra import t_product  # deferred import, see spectral_norm

    if delta < 0:
        raise ValueError("delta must be >= 0")
    r = gen_random((n, n, n3), rng)
    s = t_product(transpose(r), r) + delta * identity(n, n3)
    # symmetrize away transform roundoff so downstream symmetry checks are exact
    return 0.5 * (s + transpose(s))


def gen_loewner_pair(n: int, n3: int, rng, delta: float = 1e-3) -> tuple[Tensor3, Tensor3]:
    """Pair (A, B) with A >= B >= 0: B and A - B both positive semidefinite."""
    g = _as_generator(rng)
    b = gen_t_psd(n, n3, g, delta)
    p = gen_t_psd(n, n3, g, delta)
    return b + p, b


def gen_commuting_psd_pair(n: int, n3: int, rng, delta: float = 1e-3) -> tuple[Tensor3, Tensor3]:
    """Commuting positive semidefinite pair (p1(C), p2(C)).

    Both factors are random cubic polynomials of one positive semidefinite
    tensor C, with nonnegative coefficients, evaluated under the t-product;
    hence they commute and their product is positive semidefinite.
    """
    from .algebra import t_product  # deferred import, see spectral_norm

    g = _as_generator(rng)
    c = gen_t_psd(n, n3, g, delta)
    c2 = t_product(c, c)
    c3 = t_product(c2, c)
    powers = [identity(n, n3), c, c2, c3]

    def poly(coeffs):
        acc = Tensor3.zeros(n, n, n3)
        for w, p in zip(coeffs, powers):
            acc = acc + float(w) * p
        return 0.5 * (acc + transpose(acc))

    return poly(g.uniform(0.0, 1.0, 4)), poly(g.uniform(0.0, 1.0, 4))
