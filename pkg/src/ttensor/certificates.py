"""Machine-readable certificates for inequality evaluations.

Every certificate carries both sides of the comparison, the margin, the
effective tolerance, and a verdict, plus enough descriptor data (dims, seed,
parameters) to rebuild the instance bit-identically.  Certificates serialize
to JSON with a fixed field order so reports are byte-reproducible.

Two tolerance policies, both relative:

* norm inequalities ``lhs <= rhs``: holds iff ``lhs <= rhs + tol * (1 + |rhs|)``;
* semidefinite-order inequalities ``L <= R``: the margin is the smallest
  eigenvalue over the Fourier slices of ``R - L`` and must be at least
  ``-tol * (1 + lambda_max(R))``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Tensor3, spectral_norm, transpose
from .eigensolvers import hermitian_eig
from .fourier import to_fourier

__all__ = [
    "InequalityCertificate",
    "norm_certificate",
    "loewner_certificate",
    "loewner_min_gap",
    "FROBENIUS",
    "SPECTRAL",
    "NO_NORM",
]

FROBENIUS = "frobenius"
SPECTRAL = "spectral"
NO_NORM = "n/a"

DEFAULT_TOL = 1e-8


@dataclass(frozen=True)
class InequalityCertificate:
    """Single inequality evaluation; ``holds`` iff ``margin >= -tol``.

    ``margin`` always equals ``rhs - lhs``.  For semidefinite-order checks the
    margin is the minimum gap eigenvalue, stored with ``lhs = -margin`` and
    ``rhs = 0`` so the same field convention covers both certificate kinds.
    ``tol`` is the effective (already scaled) tolerance.
    """

    theorem_id: str
    seed: int
    dims: tuple[int, ...]
    params: dict
    norm_kind: str
    lhs: float
    rhs: float
    margin: float
    tol: float
    holds: bool

    def to_json_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "seed": self.seed,
            "dims": list(self.dims),
            "params": _plain(self.params),
            "norm_kind": self.norm_kind,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "margin": self.margin,
            "tol": self.tol,
            "holds": self.holds,
        }


def _plain(value):
    """Recursively convert numpy scalars so json round-trips canonically."""
    if isinstance(value, dict):
        return {k: _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, (np.floating,)):
        return float(value)
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (np.bool_,)):
        return bool(value)
    return value


def norm_certificate(
    theorem_id: str,
    *,
    seed: int,
    dims,
    params: dict,
    norm_kind: str,
    lhs: float,
    rhs: float,
    tol: float = DEFAULT_TOL,
) -> InequalityCertificate:
    """Certificate for a scalar inequality ``lhs <= rhs``."""
    lhs = float(lhs)
    rhs = float(rhs)
    effective = tol * (1.0 + abs(rhs))
    margin = rhs - lhs
    return InequalityCertificate(
        theorem_id, int(seed), tuple(int(d) for d in dims), dict(params),
        norm_kind, lhs, rhs, margin, effective, bool(margin >= -effective),
    )


def loewner_min_gap(lhs_tensor: Tensor3, rhs_tensor: Tensor3) -> float:
    """Smallest eigenvalue over the Fourier slices of ``rhs - lhs``."""
    diff = rhs_tensor - lhs_tensor
    diff = 0.5 * (diff + transpose(diff))
    slices = to_fourier(diff).slices
    gap = np.inf
    for k in range(diff.n3 // 2 + 1):
        s = slices[k]
        gap = min(gap, float(hermitian_eig(0.5 * (s + s.conj().T)).values[0]))
    return gap


def loewner_certificate(
    theorem_id: str,
    lhs_tensor: Tensor3,
    rhs_tensor: Tensor3,
    *,
    seed: int,
    dims,
    params: dict,
    tol: float = DEFAULT_TOL,
) -> InequalityCertificate:
    """Certificate for ``lhs_tensor <= rhs_tensor`` in the semidefinite order."""
    gap = loewner_min_gap(lhs_tensor, rhs_tensor)
    effective = tol * (1.0 + spectral_norm(rhs_tensor))
    return InequalityCertificate(
        theorem_id, int(seed), tuple(int(d) for d in dims), dict(params),
        NO_NORM, -gap, 0.0, gap, effective, bool(gap >= -effective),
    )
