"""One certifier per operator / norm inequality.

Every certifier validates its own hypotheses (raising
:class:`HypothesisViolationError` on unverified instances) before evaluating
both sides.  Certifiers whose circulating statement is defective carry a
``literal`` mode that evaluates the statement as printed (useful for
recording counterexamples) next to the default ``corrected`` mode that
evaluates the mathematically valid form:

* ``am-gm`` literal omits one factor on the right-hand side
  (``||A^T * X + ...||`` instead of ``||A^T * A * X + ...||``);
* ``complex-norm-a`` literal claims ``||A||^2 + ||B||^2 <= ||A + iB||^2`` for
  the spectral norm, which fails already for commuting projections onto
  orthogonal directions; the corrected bound carries a factor 1/2;
* ``complex-norm-b`` literal claims ``||T||_F^2 >= ||A||_F^2 + 2||B||_F^2``,
  which fails for scalars; the corrected form is the exact identity
  ``||T||_F^2 = ||A||_F^2 + ||B||_F^2``.
"""

from __future__ import annotations

import numpy as np

from .algebra import is_orthogonal, is_symmetric, is_t_psd, loewner_ge, t_product
from .certificates import (
    DEFAULT_TOL,
    FROBENIUS,
    NO_NORM,
    SPECTRAL,
    InequalityCertificate,
    loewner_certificate,
    norm_certificate,
)
from .core import ComplexTensor3, Tensor3, frobenius_norm, spectral_norm, transpose
from .errors import HypothesisViolationError
from .spectral import t_power, young_witness

__all__ = [
    "power_order_counterexample",
    "check_loewner_heinz",
    "check_hansen_power",
    "check_furuta",
    "check_young_commuting",
    "check_young_witness",
    "check_complex_norm_bounds",
    "check_am_gm",
    "check_heinz_family",
    "check_holder",
    "check_holder_pairs",
    "check_holder_corollary",
    "check_minkowski",
]

MODE_CORRECTED = "corrected"
MODE_LITERAL = "literal"


def power_order_counterexample() -> tuple[Tensor3, Tensor3]:
    """Canonical 2x2x2 pair with A >= B >= 0 but not A^2 >= B^2.

    First slices [[2,1],[1,1]] and [[1,0],[0,0]], second slices zero; the
    first slice of A^2 - B^2 is [[4,3],[3,2]] with negative determinant.
    """
    zero = np.zeros((2, 2))
    a = Tensor3.from_slices([np.array([[2.0, 1.0], [1.0, 1.0]]), zero])
    b = Tensor3.from_slices([np.array([[1.0, 0.0], [0.0, 0.0]]), zero])
    return a, b


def _norm(t, kind: str) -> float:
    if kind == FROBENIUS:
        return frobenius_norm(t)
    if kind == SPECTRAL:
        return spectral_norm(t)
    raise ValueError(f"unknown norm kind {kind!r}")


def _sym(t: Tensor3) -> Tensor3:
    return 0.5 * (t + transpose(t))


def _abs_power(x: Tensor3, r: float) -> Tensor3:
    """|x|^r computed as (x^T * x)^(r/2)."""
    gram = t_product(transpose(x), x)
    return t_power(_sym(gram), 0.5 * r)


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise HypothesisViolationError(message)


def _require_psd(t: Tensor3, tol: float, name: str) -> None:
    verdict = is_t_psd(t, tol)
    _require(
        verdict.holds,
        f"{name} is not positive semidefinite (min gap {verdict.min_gap_eigenvalue:.3e})",
    )


def _require_order(a: Tensor3, b: Tensor3, tol: float, names: str) -> None:
    verdict = loewner_ge(a, b, tol)
    _require(
        verdict.holds,
        f"order hypothesis {names} fails (min gap {verdict.min_gap_eigenvalue:.3e})",
    )


# ---------------------------------------------------------------------------
# operator-order inequalities
# ---------------------------------------------------------------------------

def check_loewner_heinz(
    a: Tensor3,
    b: Tensor3,
    r: float,
    tol: float = DEFAULT_TOL,
    exploratory: bool = False,
    seed: int = -1,
    trial: int = -1,
    extra_params: dict | None = None,
) -> InequalityCertificate:
    """Power monotonicity A >= B >= 0  =>  A^r >= B^r for 0 <= r <= 1.

    ``exploratory`` lifts the exponent-range hypothesis so out-of-range
    exponents (where the implication is known to fail) can be probed.
    """
    if not exploratory:
        _require(0.0 <= r <= 1.0, f"exponent r={r} outside [0, 1]")
    _require_psd(b, tol, "B")
    _require_order(a, b, tol, "A >= B")
    params = {"trial": trial, "r": r, "exploratory": exploratory, **(extra_params or {})}
    return loewner_certificate(
        "loewner-heinz", t_power(b, r), t_power(a, r),
        seed=seed, dims=a.shape, params=params, tol=tol,
    )


def check_hansen_power(
    q: Tensor3,
    x: Tensor3,
    r: float,
    tol: float = DEFAULT_TOL,
    mode: str = "contraction",
    seed: int = -1,
    trial: int = -1,
) -> InequalityCertificate:
    """Conjugation-versus-power inequality for X >= 0 and 0 < r <= 2.

    ``contraction`` mode (the working form): for ||Q||_2 <= 1,
    ``Q^T * X^r * Q <= (Q^T * X * Q)^r`` when 0 < r <= 1, with the reversed
    order when 1 <= r <= 2.  ``literal`` mode evaluates the circulating
    untransposed form ``Q * X^r * Q`` for orthogonal Q; its middle product is
    generally non-symmetric, which is reported rather than silently
    symmetrized.
    """
    _require(0.0 < r <= 2.0, f"exponent r={r} outside (0, 2]")
    _require_psd(x, tol, "X")
    if mode == "contraction":
        _require(
            spectral_norm(q) <= 1.0 + tol,
            f"Q is not a contraction: ||Q||_2 = {spectral_norm(q):.6f}",
        )
        left = transpose(q)
    elif mode == MODE_LITERAL:
        _require(bool(is_orthogonal(q, max(tol, 1e-9))), "Q is not orthogonal")
        left = q
    else:
        raise ValueError(f"unknown mode {mode!r}")

    middle = t_product(t_product(left, x), q)
    sym = is_symmetric(middle, tol)
    if not sym:
        raise HypothesisViolationError(
            f"conjugated product is not symmetric in {mode} mode ({sym.reason}); "
            "the power of a non-symmetric tensor is undefined"
        )
    conj_pow = t_product(t_product(left, t_power(x, r)), q)
    pow_conj = t_power(_sym(middle), r)
    params = {"trial": trial, "r": r, "mode": mode}
    if r <= 1.0:
        lhs, rhs = _sym(conj_pow), pow_conj
    else:
        lhs, rhs = pow_conj, _sym(conj_pow)
    return loewner_certificate(
        "hansen-power", lhs, rhs, seed=seed, dims=q.shape, params=params, tol=tol
    )


def check_furuta(
    a: Tensor3,
    b: Tensor3,
    r: float,
    p: float,
    q: float,
    tol: float = DEFAULT_TOL,
    seed: int = -1,
    trial: int = -1,
) -> tuple[InequalityCertificate, InequalityCertificate]:
    """Order-propagation inequalities for A >= B >= 0.

    For r >= 0, p >= 0, q >= 1 with (1 + 2r) q >= p + 2r, certifies both
    ``(B^r * A^p * B^r)^(1/q) >= B^((p+2r)/q)`` and
    ``A^((p+2r)/q) >= (A^r * B^p * A^r)^(1/q)``.
    """
    _require(r >= 0 and p >= 0 and q >= 1, f"parameters out of range: r={r}, p={p}, q={q}")
    _require((1 + 2 * r) * q >= p + 2 * r - 1e-12, f"(1+2r)q >= p+2r fails: r={r}, p={p}, q={q}")
    _require_psd(b, tol, "B")
    _require_order(a, b, tol, "A >= B")
    params = {"trial": trial, "r": r, "p": p, "q": q}

    br = t_power(b, r)
    sandwich_b = _sym(t_product(t_product(br, t_power(a, p)), br))
    cert_lower = loewner_certificate(
        "furuta", t_power(b, (p + 2 * r) / q), t_power(sandwich_b, 1.0 / q),
        seed=seed, dims=a.shape, params={**params, "side": "lower"}, tol=tol,
    )
    ar = t_power(a, r)
    sandwich_a = _sym(t_product(t_product(ar, t_power(b, p)), ar))
    cert_upper = loewner_certificate(
        "furuta", t_power(sandwich_a, 1.0 / q), t_power(a, (p + 2 * r) / q),
        seed=seed, dims=a.shape, params={**params, "side": "upper"}, tol=tol,
    )
    return cert_lower, cert_upper


def check_young_commuting(
    a: Tensor3,
    b: Tensor3,
    p: float,
    q: float,
    tol: float = DEFAULT_TOL,
    seed: int = -1,
    trial: int = -1,
) -> InequalityCertificate:
    """Young inequality A * B <= A^p / p + B^q / q for a commuting PSD pair."""
    _require(p > 1 and q > 1 and abs(1 / p + 1 / q - 1) <= 1e-12, f"non-conjugate exponents p={p}, q={q}")
    _require_psd(a, tol, "A")
    _require_psd(b, tol, "B")
    ab = t_product(a, b)
    comm = frobenius_norm(ab - t_product(b, a))
    _require(
        comm <= tol * (1 + frobenius_norm(a) * frobenius_norm(b)),
        f"pair does not commute: ||AB - BA|| = {comm:.3e}",
    )
    _require_psd(_sym(ab), tol, "A * B")
    rhs = (1.0 / p) * t_power(a, p) + (1.0 / q) * t_power(b, q)
    return loewner_certificate(
        "young-commuting", _sym(ab), rhs,
        seed=seed, dims=a.shape, params={"trial": trial, "p": p, "q": q}, tol=tol,
    )


def check_young_witness(
    a: Tensor3,
    b: Tensor3,
    p: float,
    q: float,
    tol: float = DEFAULT_TOL,
    seed: int = -1,
    trial: int = -1,
) -> InequalityCertificate:
    """Certificate form of the constructive generalized Young inequality."""
    _, verdict = young_witness(a, b, p, q, tol)
    return InequalityCertificate(
        "young-witness", int(seed), tuple(a.shape),
        {"trial": trial, "p": p, "q": q}, NO_NORM,
        -verdict.min_gap_eigenvalue, 0.0, verdict.min_gap_eigenvalue,
        verdict.tolerance_used, verdict.holds,
    )


# ---------------------------------------------------------------------------
# norm inequalities
# ---------------------------------------------------------------------------

def check_complex_norm_bounds(
    a: Tensor3,
    b: Tensor3,
    variant: str,
    tol: float = DEFAULT_TOL,
    mode: str = MODE_CORRECTED,
    seed: int = -1,
    trial: int = -1,
) -> list[InequalityCertificate]:
    """Norm bounds for the Cartesian assembly T = A + iB.

    Variant hypotheses: (a) A, B symmetric; (b) A positive semidefinite and B
    symmetric; (c) A, B positive semidefinite.  One certificate is emitted per
    claimed inequality, spectral and Frobenius separately.
    """
    _require(variant in ("a", "b", "c"), f"unknown variant {variant!r}")
    if mode not in (MODE_CORRECTED, MODE_LITERAL):
        raise ValueError(f"unknown mode {mode!r}")
    _require(bool(is_symmetric(a, tol)), "A is not symmetric")
    _require(bool(is_symmetric(b, tol)), "B is not symmetric")
    if variant in ("b", "c"):
        _require_psd(a, tol, "A")
    if variant == "c":
        _require_psd(b, tol, "B")

    t = ComplexTensor3.from_parts(a, b)
    base = {"trial": trial, "variant": variant, "mode": mode}
    sa2, sb2 = spectral_norm(a) ** 2, spectral_norm(b) ** 2
    fa2, fb2 = frobenius_norm(a) ** 2, frobenius_norm(b) ** 2
    st2, ft2 = spectral_norm(t) ** 2, frobenius_norm(t) ** 2

    def cert(claim: str, norm_kind: str, lhs: float, rhs: float) -> InequalityCertificate:
        return norm_certificate(
            f"complex-norm-{variant}", seed=seed, dims=a.shape,
            params={**base, "claim": claim}, norm_kind=norm_kind, lhs=lhs, rhs=rhs, tol=tol,
        )

    out = []
    if variant == "a":
        lower = sa2 + sb2 if mode == MODE_LITERAL else 0.5 * (sa2 + sb2)
        out.append(cert("spectral-lower", SPECTRAL, lower, st2))
        out.append(cert("spectral-upper", SPECTRAL, st2, 2 * (sa2 + sb2)))
        out.append(cert("frobenius-lower", FROBENIUS, fa2 + fb2, ft2))
        out.append(cert("frobenius-upper", FROBENIUS, ft2, 4 * (fa2 + fb2)))
        root = t_power(_sym(t_product(a, a) + t_product(b, b)), 0.5)
        out.append(cert("gram-root-spectral-lower", SPECTRAL, spectral_norm(root), spectral_norm(t)))
        out.append(cert("gram-root-spectral-upper", SPECTRAL, spectral_norm(t), np.sqrt(2) * spectral_norm(root)))
        out.append(cert("gram-root-frobenius-le", FROBENIUS, frobenius_norm(root), frobenius_norm(t)))
        out.append(cert("gram-root-frobenius-ge", FROBENIUS, frobenius_norm(t), frobenius_norm(root)))
    elif variant == "b":
        out.append(cert("spectral-upper", SPECTRAL, st2, sa2 + 2 * sb2))
        if mode == MODE_LITERAL:
            out.append(cert("frobenius-lower", FROBENIUS, fa2 + 2 * fb2, ft2))
        else:
            out.append(cert("frobenius-identity-le", FROBENIUS, ft2, fa2 + fb2))
            out.append(cert("frobenius-identity-ge", FROBENIUS, fa2 + fb2, ft2))
    else:
        out.append(cert("spectral-upper", SPECTRAL, st2, sa2 + sb2))
        out.append(cert("frobenius-upper", FROBENIUS, ft2, fa2 + fb2))
    return out


def check_am_gm(
    a: Tensor3,
    x: Tensor3,
    b: Tensor3,
    tol: float = DEFAULT_TOL,
    mode: str = MODE_CORRECTED,
    norm_kind: str = FROBENIUS,
    seed: int = -1,
    trial: int = -1,
) -> InequalityCertificate:
    """Arithmetic-geometric mean bound ||A*X*B^T|| <= 0.5 ||A^T*A*X + X*B^T*B||.

    ``literal`` mode drops the second A factor from the first right-hand
    term, matching the defective circulating statement; scalars already break
    it.
    """
    lhs = _norm(t_product(t_product(a, x), transpose(b)), norm_kind)
    if mode == MODE_CORRECTED:
        first = t_product(t_product(transpose(a), a), x)
    elif mode == MODE_LITERAL:
        first = t_product(transpose(a), x)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    rhs = 0.5 * _norm(first + t_product(x, t_product(transpose(b), b)), norm_kind)
    return norm_certificate(
        "am-gm", seed=seed, dims=a.shape,
        params={"trial": trial, "mode": mode}, norm_kind=norm_kind,
        lhs=lhs, rhs=rhs, tol=tol,
    )


def check_heinz_family(
    a: Tensor3,
    x: Tensor3,
    b: Tensor3,
    r: float,
    t: float,
    tol: float = DEFAULT_TOL,
    norm_kind: str = FROBENIUS,
    seed: int = -1,
    trial: int = -1,
) -> tuple[InequalityCertificate, InequalityCertificate]:
    """Heinz-type bounds for positive semidefinite A, B.

    Part one: ``(2+t) ||A^r X B^(2-r) + A^(2-r) X B^r|| <= 2 ||A^2 X + t A X B + X B^2||``
    for 1 <= 2r <= 3 and -2 < t <= 2.  Part two: ``4 ||A*B|| <= ||(A+B)^2||``.
    """
    _require(1.0 <= 2 * r <= 3.0, f"exponent r={r} outside [0.5, 1.5]")
    _require(-2.0 < t <= 2.0, f"weight t={t} outside (-2, 2]")
    _require_psd(a, tol, "A")
    _require_psd(b, tol, "B")
    params = {"trial": trial, "r": r, "t": t}

    ar, a2r = t_power(a, r), t_power(a, 2 - r)
    br, b2r = t_power(b, r), t_power(b, 2 - r)
    lhs1 = (2 + t) * _norm(
        t_product(t_product(ar, x), b2r) + t_product(t_product(a2r, x), br), norm_kind
    )
    rhs1 = 2 * _norm(
        t_product(t_product(a, a), x)
        + t * t_product(t_product(a, x), b)
        + t_product(x, t_product(b, b)),
        norm_kind,
    )
    cert1 = norm_certificate(
        "heinz-family", seed=seed, dims=a.shape,
        params={**params, "part": "weighted"}, norm_kind=norm_kind,
        lhs=lhs1, rhs=rhs1, tol=tol,
    )
    s = a + b
    cert2 = norm_certificate(
        "heinz-family", seed=seed, dims=a.shape,
        params={**params, "part": "product"}, norm_kind=norm_kind,
        lhs=4 * _norm(t_product(a, b), norm_kind),
        rhs=_norm(t_product(s, s), norm_kind),
        tol=tol,
    )
    return cert1, cert2


def _conjugate_prefactor(p: float, q: float) -> float:
    """Tube-count prefactor n3^(1/(2p) + 1/(2q) - 1/2); identically 1.

    The exponent vanishes for conjugate (p, q); this is asserted rather than
    trusted to floating-point cancellation.
    """
    exponent = 0.5 / p + 0.5 / q - 0.5
    if abs(exponent) > 1e-12:
        raise HypothesisViolationError(f"exponents p={p}, q={q} are not conjugate")
    return 1.0


def check_holder(
    a: Tensor3,
    x: Tensor3,
    b: Tensor3,
    r: float,
    p: float,
    q: float,
    tol: float = DEFAULT_TOL,
    norm_kind: str = FROBENIUS,
    seed: int = -1,
    trial: int = -1,
) -> InequalityCertificate:
    """Mixed Hoelder bound ``|| |A X B|^r || <= || |A^p X|^r ||^(1/p) || |X B^q|^r ||^(1/q)``.

    A and B must be positive semidefinite; r, p, q positive with conjugate
    (p, q).  The exponent on the left absolute value follows the scaling-
    consistent reading of the statement.
    """
    _require(r > 0 and p > 1 and q > 1, f"need r > 0 and finite conjugate p, q; got r={r}, p={p}, q={q}")
    prefactor = _conjugate_prefactor(p, q)
    _require_psd(a, tol, "A")
    _require_psd(b, tol, "B")
    lhs = _norm(_abs_power(t_product(t_product(a, x), b), r), norm_kind)
    rhs = prefactor * (
        _norm(_abs_power(t_product(t_power(a, p), x), r), norm_kind) ** (1 / p)
        * _norm(_abs_power(t_product(x, t_power(b, q)), r), norm_kind) ** (1 / q)
    )
    return norm_certificate(
        "holder", seed=seed, dims=a.shape,
        params={"trial": trial, "r": r, "p": p, "q": q}, norm_kind=norm_kind,
        lhs=lhs, rhs=rhs, tol=tol,
    )


def check_holder_pairs(
    a: Tensor3,
    b: Tensor3,
    c: Tensor3,
    d: Tensor3,
    p: float,
    q: float,
    tol: float = DEFAULT_TOL,
    norm_kind: str = FROBENIUS,
    seed: int = -1,
    trial: int = -1,
) -> InequalityCertificate:
    """Paired Hoelder bound with damping 2^(-|1/p - 1/2|) on the left.

    ``2^(-|1/p-1/2|) ||C^T A + D^T B|| <= || |A|^p + |B|^p ||^(1/p) || |C|^q + |D|^q ||^(1/q)``
    for arbitrary tensors and finite conjugate exponents (p = 1 or p = inf is
    out of numeric scope).
    """
    _require(p > 1 and q > 1, f"infinite or unit exponents out of numeric scope: p={p}, q={q}")
    prefactor = _conjugate_prefactor(p, q)
    lhs = 2.0 ** (-abs(1 / p - 0.5)) * _norm(
        t_product(transpose(c), a) + t_product(transpose(d), b), norm_kind
    )
    rhs = prefactor * (
        _norm(_abs_power(a, p) + _abs_power(b, p), norm_kind) ** (1 / p)
        * _norm(_abs_power(c, q) + _abs_power(d, q), norm_kind) ** (1 / q)
    )
    return norm_certificate(
        "holder-pairs", seed=seed, dims=a.shape,
        params={"trial": trial, "p": p, "q": q}, norm_kind=norm_kind,
        lhs=lhs, rhs=rhs, tol=tol,
    )


def check_holder_corollary(
    a: Tensor3,
    b: Tensor3,
    r: float,
    p: float,
    q: float,
    tol: float = DEFAULT_TOL,
    norm_kind: str = FROBENIUS,
    seed: int = -1,
    trial: int = -1,
) -> InequalityCertificate:
    """Two-factor Hoelder corollary ``|| |A B|^r || <= || |A|^(pr) ||^(1/p) || |B|^(qr) ||^(1/q)``."""
    _require(r > 0 and p > 1 and q > 1, f"need r > 0 and finite conjugate p, q; got r={r}, p={p}, q={q}")
    prefactor = _conjugate_prefactor(p, q)
    lhs = _norm(_abs_power(t_product(a, b), r), norm_kind)
    rhs = prefactor * (
        _norm(_abs_power(a, p * r), norm_kind) ** (1 / p)
        * _norm(_abs_power(b, q * r), norm_kind) ** (1 / q)
    )
    return norm_certificate(
        "holder-corollary", seed=seed, dims=a.shape,
        params={"trial": trial, "r": r, "p": p, "q": q}, norm_kind=norm_kind,
        lhs=lhs, rhs=rhs, tol=tol,
    )


def check_minkowski(
    a1: Tensor3,
    a2: Tensor3,
    b1: Tensor3,
    b2: Tensor3,
    p: float,
    tol: float = DEFAULT_TOL,
    norm_kind: str = FROBENIUS,
    seed: int = -1,
    trial: int = -1,
) -> InequalityCertificate:
    """Minkowski-type bound with damping 2^(-|1/p - 1/2|) for 1 <= p < inf.

    ``2^(-|1/p-1/2|) || |A1+A2|^p + |B1+B2|^p ||^(1/p)
    <= || |A1|^p + |B1|^p ||^(1/p) + || |A2|^p + |B2|^p ||^(1/p)``.
    """
    _require(1.0 <= p < np.inf, f"exponent p={p} outside [1, inf)")
    lhs = 2.0 ** (-abs(1 / p - 0.5)) * _norm(
        _abs_power(a1 + a2, p) + _abs_power(b1 + b2, p), norm_kind
    ) ** (1 / p)
    rhs = (
        _norm(_abs_power(a1, p) + _abs_power(b1, p), norm_kind) ** (1 / p)
        + _norm(_abs_power(a2, p) + _abs_power(b2, p), norm_kind) ** (1 / p)
    )
    return norm_certificate(
        "minkowski", seed=seed, dims=a1.shape,
        params={"trial": trial, "p": p}, norm_kind=norm_kind,
        lhs=lhs, rhs=rhs, tol=tol,
    )
