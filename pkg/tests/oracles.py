"""Independent oracles used by the test suite.

These deliberately avoid the library's own code paths: the block-circulant
matrix is assembled entry by entry from the tensor data, the largest singular
value comes from power iteration, and the quadratic form is summed directly.
"""

import numpy as np


def brute_bcirc(data: np.ndarray) -> np.ndarray:
    """Assemble the block-circulant unfolding by explicit entry loops."""
    n1, n2, n3 = data.shape
    out = np.zeros((n1 * n3, n2 * n3), dtype=data.dtype)
    for r in range(n3):
        for c in range(n3):
            k = (r - c) % n3
            for i in range(n1):
                for j in range(n2):
                    out[r * n1 + i, c * n2 + j] = data[i, j, k]
    return out


def power_iteration_norm(m: np.ndarray, iters: int = 2000, seed: int = 0) -> float:
    """Largest singular value via power iteration on m^T m (SVD-free)."""
    rng = np.random.default_rng(seed)
    g = m.conj().T @ m
    v = rng.normal(size=g.shape[0]).astype(complex)
    v /= np.linalg.norm(v)
    lam = 0.0
    for _ in range(iters):
        w = g @ v
        nw = np.linalg.norm(w)
        if nw == 0.0:
            return 0.0
        v = w / nw
        lam = nw
    return float(np.sqrt(lam))


def direct_inner_product(x: np.ndarray, y: np.ndarray) -> float:
    """Plain summation of entrywise products."""
    total = 0.0
    for idx in np.ndindex(x.shape):
        total += x[idx] * y[idx]
    return float(total)


def quadratic_form_min(a, n_samples: int = 1000, seed: int = 0) -> float:
    """Minimum of <X, A*X> / ||X||^2 over random lateral slices X.

    Samples the defining quadratic form of positive semidefiniteness; used to
    cross-check slice-eigenvalue verdicts.
    """
    from ttensor import Tensor3, inner_product, t_product

    rng = np.random.default_rng(seed)
    n, _, n3 = a.shape
    worst = np.inf
    for _ in range(n_samples):
        x = Tensor3(rng.uniform(-1.0, 1.0, size=(n, 1, n3)))
        val = inner_product(x, t_product(a, x))
        norm2 = inner_product(x, x)
        worst = min(worst, val / norm2)
    return float(worst)
