"""Seeded verification campaigns over the theorem registry.

A campaign draws hypothesis-valid instances (one counter-based substream per
trial, so runs are reproducible and order-independent), invokes the matching
certifier, and aggregates the certificates.  ``TTENSOR_THREADS`` caps worker
threads; results are collected in trial order, so reports are byte-identical
regardless of thread count.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import inequalities as ineq
from . import localization as loc
from .certificates import DEFAULT_TOL, FROBENIUS, SPECTRAL, norm_certificate
from .core import (
    RngStream,
    Tensor3,
    frobenius_norm,
    gen_commuting_psd_pair,
    gen_loewner_pair,
    gen_random,
    gen_symmetric,
    gen_t_psd,
    identity,
    spectral_norm,
    transpose,
)
from .errors import SingularTensorError, UnknownTheoremError
from .spectral import t_eigenvalues
from .algebra import t_inverse, t_product

__all__ = ["THEOREM_IDS", "CampaignResult", "run_campaign"]

_NORMS = (FROBENIUS, SPECTRAL)


@dataclass(frozen=True)
class CampaignResult:
    theorem_id: str
    certificates: list
    summary: dict

    @property
    def violations(self) -> int:
        return self.summary["violations"]


def _grid(values, trial):
    return values[trial % len(values)]


# --- per-theorem trial functions ------------------------------------------
# each returns the list of certificates for one trial

def _trial_loewner_heinz(trial, stream, n, n3, tol, mode, params):
    r = params.get("r", _grid([0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0], trial))
    exploratory = bool(params.get("exploratory", r > 1.0))
    if exploratory and trial == 0:
        a, b = ineq.power_order_counterexample()
        extra = {"instance": "power-order-counterexample"}
    else:
        a, b = gen_loewner_pair(n, n3, stream)
        extra = None
    return [
        ineq.check_loewner_heinz(
            a, b, r, tol, exploratory=exploratory,
            seed=stream.seed, trial=trial, extra_params=extra,
        )
    ]


def _householder_tensor(n, n3, g) -> Tensor3:
    """Symmetric orthogonal tensor I - 2 v (v^T v)^-1 v^T for a random lateral v."""
    v = gen_random((n, 1, n3), g)
    gram_inv = t_inverse(t_product(transpose(v), v))
    h = identity(n, n3) - 2.0 * t_product(t_product(v, gram_inv), transpose(v))
    return 0.5 * (h + transpose(h))


def _trial_hansen_power(trial, stream, n, n3, tol, mode, params):
    g = stream.generator()
    x = gen_t_psd(n, n3, g)
    r = params.get("r", _grid([0.25, 0.5, 0.75, 1.25, 1.5, 2.0], trial))
    if mode == "literal":
        # as printed the conjugation is untransposed, so the middle product is
        # only symmetric for symmetric orthogonal Q; generic orthogonal Q is
        # rejected by the certifier, hence this campaign draws Householder-type
        # conjugators (for which the statement reduces to an equality case)
        q = _householder_tensor(n, n3, g)
        hansen_mode = "literal"
    else:
        raw = gen_random((n, n, n3), g)
        q = raw * (1.0 / (spectral_norm(raw) * float(g.uniform(1.0, 2.0))))
        hansen_mode = "contraction"
    return [
        ineq.check_hansen_power(q, x, r, tol, mode=hansen_mode, seed=stream.seed, trial=trial)
    ]


def _trial_furuta(trial, stream, n, n3, tol, mode, params):
    g = stream.generator()
    a, b = gen_loewner_pair(n, n3, g)
    while True:
        r = float(g.uniform(0.0, 2.0))
        p = float(g.uniform(0.0, 4.0))
        q = float(g.uniform(1.0, 4.0))
        if (1 + 2 * r) * q >= p + 2 * r:
            break
    return list(ineq.check_furuta(a, b, r, p, q, tol, seed=stream.seed, trial=trial))


def _trial_young_commuting(trial, stream, n, n3, tol, mode, params):
    a, b = gen_commuting_psd_pair(n, n3, stream)
    p = params.get("p", _grid([1.5, 2.0, 4.0], trial))
    q = p / (p - 1.0)
    return [ineq.check_young_commuting(a, b, p, q, tol, seed=stream.seed, trial=trial)]


def _trial_young_witness(trial, stream, n, n3, tol, mode, params):
    g = stream.generator()
    a = gen_random((n, n, n3), g)
    b = gen_random((n, n, n3), g)
    p = params.get("p", _grid([1.5, 2.0, 3.0], trial))
    q = p / (p - 1.0)
    return [ineq.check_young_witness(a, b, p, q, tol, seed=stream.seed, trial=trial)]


def _complex_norm_trial(variant):
    def run(trial, stream, n, n3, tol, mode, params):
        g = stream.generator()
        a = gen_t_psd(n, n3, g) if variant in ("b", "c") else gen_symmetric(n, n3, g)
        b = gen_t_psd(n, n3, g) if variant == "c" else gen_symmetric(n, n3, g)
        return ineq.check_complex_norm_bounds(
            a, b, variant, tol, mode=mode, seed=stream.seed, trial=trial
        )
    return run


def _trial_am_gm(trial, stream, n, n3, tol, mode, params):
    g = stream.generator()
    if mode == "literal" and trial == 0:
        # scalar counterexample family: a=2, x=1, b=1 gives 2 > 1.5
        a = 2.0 * identity(1, 1)
        x = identity(1, 1)
        b = identity(1, 1)
    else:
        a = gen_random((n, n, n3), g)
        x = gen_random((n, n, n3), g)
        b = gen_random((n, n, n3), g)
    return [
        ineq.check_am_gm(a, x, b, tol, mode=mode, norm_kind=k, seed=stream.seed, trial=trial)
        for k in _NORMS
    ]


def _trial_heinz_family(trial, stream, n, n3, tol, mode, params):
    g = stream.generator()
    a = gen_t_psd(n, n3, g)
    b = gen_t_psd(n, n3, g)
    x = gen_random((n, n, n3), g)
    r = params.get("r", _grid([0.5, 0.75, 1.0, 1.25, 1.5], trial))
    t = params.get("t", _grid([-1.0, 0.0, 1.0, 2.0], trial // 5))
    out = []
    for k in _NORMS:
        out.extend(ineq.check_heinz_family(a, x, b, r, t, tol, norm_kind=k, seed=stream.seed, trial=trial))
    return out


def _trial_holder(trial, stream, n, n3, tol, mode, params):
    g = stream.generator()
    a = gen_t_psd(n, n3, g)
    b = gen_t_psd(n, n3, g)
    x = gen_random((n, n, n3), g)
    r = params.get("r", _grid([0.5, 1.0, 2.0], trial))
    p = params.get("p", _grid([1.25, 2.0, 5.0], trial // 3))
    q = p / (p - 1.0)
    return [
        ineq.check_holder(a, x, b, r, p, q, tol, norm_kind=k, seed=stream.seed, trial=trial)
        for k in _NORMS
    ]


def _trial_holder_pairs(trial, stream, n, n3, tol, mode, params):
    g = stream.generator()
    a, b, c, d = (gen_random((n, n, n3), g) for _ in range(4))
    p = params.get("p", _grid([1.25, 2.0, 5.0], trial))
    q = p / (p - 1.0)
    return [
        ineq.check_holder_pairs(a, b, c, d, p, q, tol, norm_kind=k, seed=stream.seed, trial=trial)
        for k in _NORMS
    ]


def _trial_holder_corollary(trial, stream, n, n3, tol, mode, params):
    g = stream.generator()
    a = gen_random((n, n, n3), g)
    b = gen_random((n, n, n3), g)
    r = params.get("r", _grid([0.5, 1.0, 2.0], trial))
    p = params.get("p", _grid([1.25, 2.0, 5.0], trial // 3))
    q = p / (p - 1.0)
    return [
        ineq.check_holder_corollary(a, b, r, p, q, tol, norm_kind=k, seed=stream.seed, trial=trial)
        for k in _NORMS
    ]


def _trial_minkowski(trial, stream, n, n3, tol, mode, params):
    g = stream.generator()
    a1, a2, b1, b2 = (gen_random((n, n, n3), g) for _ in range(4))
    p = params.get("p", _grid([1.0, 1.5, 2.0, 3.0], trial))
    return [
        ineq.check_minkowski(a1, a2, b1, b2, p, tol, norm_kind=k, seed=stream.seed, trial=trial)
        for k in _NORMS
    ]


def _trial_schur(trial, stream, n, n3, tol, mode, params):
    a = gen_random((n, n, n3), stream)
    return [loc.schur_bound(a, tol, seed=stream.seed, trial=trial)]


def _trial_gershgorin(trial, stream, n, n3, tol, mode, params):
    a = gen_random((n, n, n3), stream)
    discs = loc.gershgorin_discs(a)
    spectrum = t_eigenvalues(a)
    scale = 1.0 + max(abs(d.center) + d.radius for d in discs)
    worst = max(
        min(abs(z - d.center) - d.radius for d in discs) for z in spectrum.values
    )
    contain = norm_certificate(
        "gershgorin", seed=stream.seed, dims=a.shape,
        params={"trial": trial, "claim": "containment"}, norm_kind="n/a",
        lhs=float(worst) / scale, rhs=0.0, tol=tol,
    )
    components = loc.gershgorin_component_count(discs, spectrum, tol)
    miscount = max(abs(c.eigenvalue_count - c.disc_count) for c in components)
    counting = norm_certificate(
        "gershgorin", seed=stream.seed, dims=a.shape,
        params={"trial": trial, "claim": "component-count"}, norm_kind="n/a",
        lhs=float(miscount), rhs=0.0, tol=tol,
    )
    return [contain, counting]


def _trial_bauer_fike(trial, stream, n, n3, tol, mode, params):
    g = stream.generator()
    for _ in range(100):
        q = gen_random((n, n, n3), g)
        try:
            q_inv = t_inverse(q)
        except SingularTensorError:
            continue
        if spectral_norm(q) * spectral_norm(q_inv) <= 1e4:
            break
    diag = np.zeros((n, n, n3))
    idx = np.arange(n)
    diag[idx, idx, :] = g.uniform(-1.0, 1.0, size=(n, n3))
    s = Tensor3(diag)
    a = t_product(t_product(q_inv, s), q)
    e = gen_random((n, n, n3), g)
    b = a + (0.3 * (1.0 + frobenius_norm(a)) / (1.0 + frobenius_norm(e))) * e
    return [loc.bauer_fike(a, b, q, s, tol, seed=stream.seed, trial=trial)]


def _trial_hoffman_wielandt(trial, stream, n, n3, tol, mode, params):
    g = stream.generator()
    a = gen_symmetric(n, n3, g)
    b = gen_symmetric(n, n3, g)
    report, cert_sqrt, cert_stated = loc.hoffman_wielandt(a, b, tol, seed=stream.seed, trial=trial)
    sorted_dist = loc.sorted_pairing_distance(a, b)
    sorted_certs = [
        norm_certificate(
            "hoffman-wielandt", seed=stream.seed, dims=a.shape,
            params={"trial": trial, "pairing": "sorted", "constant": const},
            norm_kind=FROBENIUS, lhs=sorted_dist, rhs=rhs, tol=tol,
        )
        for const, rhs in (("sqrt-n3", report.bound_sqrt), ("n3", report.bound_stated))
    ]
    return [cert_sqrt, cert_stated, *sorted_certs]


def _trial_diag_spectrum(trial, stream, n, n3, tol, mode, params):
    g = stream.generator()
    a = gen_symmetric(n, n3, g)
    b = gen_symmetric(n, n3, g)
    return loc.diag_spectrum_bound(a, b, tol, seed=stream.seed, trial=trial)


_REGISTRY = {
    "loewner-heinz": _trial_loewner_heinz,
    "hansen-power": _trial_hansen_power,
    "furuta": _trial_furuta,
    "young-commuting": _trial_young_commuting,
    "young-witness": _trial_young_witness,
    "complex-norm-a": _complex_norm_trial("a"),
    "complex-norm-b": _complex_norm_trial("b"),
    "complex-norm-c": _complex_norm_trial("c"),
    "am-gm": _trial_am_gm,
    "heinz-family": _trial_heinz_family,
    "holder": _trial_holder,
    "holder-pairs": _trial_holder_pairs,
    "holder-corollary": _trial_holder_corollary,
    "minkowski": _trial_minkowski,
    "schur": _trial_schur,
    "gershgorin": _trial_gershgorin,
    "bauer-fike": _trial_bauer_fike,
    "hoffman-wielandt": _trial_hoffman_wielandt,
    "diag-spectrum": _trial_diag_spectrum,
}

THEOREM_IDS = tuple(sorted(_REGISTRY))


def _thread_count(threads: int | None) -> int:
    if threads is not None:
        return max(1, threads)
    env = os.environ.get("TTENSOR_THREADS", "")
    try:
        return max(1, int(env)) if env else 1
    except ValueError:
        return 1


def run_campaign(
    theorem_id: str,
    n: int = 3,
    n3: int = 3,
    trials: int = 200,
    seed: int = 0,
    tol: float = DEFAULT_TOL,
    mode: str = "corrected",
    params: dict | None = None,
    threads: int | None = None,
) -> CampaignResult:
    """Run ``trials`` seeded instances of one registered theorem.

    Trial ``i`` draws its instance from ``RngStream(seed, i)``, so the full
    certificate list is a pure function of the arguments.
    """
    if theorem_id not in _REGISTRY:
        raise UnknownTheoremError(
            f"unknown theorem id {theorem_id!r}; known: {', '.join(THEOREM_IDS)}"
        )
    trial_fn = _REGISTRY[theorem_id]
    params = dict(params or {})

    def one(trial: int):
        return trial_fn(trial, RngStream(seed, trial), n, n3, tol, mode, params)

    workers = _thread_count(threads)
    if workers > 1 and trials > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            per_trial = list(pool.map(one, range(trials)))
    else:
        per_trial = [one(t) for t in range(trials)]

    certificates = [c for chunk in per_trial for c in chunk]
    violations = [c for c in certificates if not c.holds]
    worst = min(certificates, key=lambda c: c.margin, default=None)
    summary = {
        "theorem_id": theorem_id,
        "n": n,
        "n3": n3,
        "trials": trials,
        "seed": seed,
        "mode": mode,
        "certificates": len(certificates),
        "violations": len(violations),
        "worst_margin": worst.margin if worst else 0.0,
        "worst_params": worst.params if worst else {},
    }
    return CampaignResult(theorem_id, certificates, summary)
