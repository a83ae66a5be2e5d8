"""Certifier-level checks: worked instances, errata counterexamples, hypotheses."""

import numpy as np
import pytest

from ttensor import (
    HypothesisViolationError,
    RngStream,
    Tensor3,
    check_am_gm,
    check_complex_norm_bounds,
    check_furuta,
    check_hansen_power,
    check_heinz_family,
    check_holder,
    check_holder_corollary,
    check_holder_pairs,
    check_loewner_heinz,
    check_minkowski,
    check_young_commuting,
    gen_loewner_pair,
    gen_random,
    gen_symmetric,
    gen_t_psd,
    identity,
    power_order_counterexample,
)


def test_loewner_heinz_r1_is_the_gap_itself():
    a, b = gen_loewner_pair(2, 2, RngStream(200))
    cert = check_loewner_heinz(a, b, 1.0)
    from ttensor import loewner_ge

    assert cert.holds
    assert cert.margin == pytest.approx(loewner_ge(a, b).min_gap_eigenvalue, abs=1e-10)


def test_loewner_heinz_sqrt_on_counterexample_pair_holds():
    a, b = power_order_counterexample()
    cert = check_loewner_heinz(a, b, 0.5)
    assert cert.holds


def test_loewner_heinz_r2_exploratory_finds_violation():
    a, b = power_order_counterexample()
    with pytest.raises(HypothesisViolationError):
        check_loewner_heinz(a, b, 2.0)
    cert = check_loewner_heinz(a, b, 2.0, exploratory=True)
    assert not cert.holds
    assert cert.margin == pytest.approx(3 - np.sqrt(10), abs=1e-9)


def test_loewner_heinz_validates_hypotheses():
    b = gen_symmetric(2, 2, RngStream(201))  # not PSD in general
    a = b + gen_t_psd(2, 2, RngStream(202))
    from ttensor import is_t_psd

    if not is_t_psd(b).holds:
        with pytest.raises(HypothesisViolationError):
            check_loewner_heinz(a, b, 0.5)


def test_hansen_orthogonal_contraction_equality():
    from ttensor import gen_orthogonal

    q = gen_orthogonal(3, 2, RngStream(203))
    x = gen_t_psd(3, 2, RngStream(204))
    cert = check_hansen_power(q, x, 0.5, mode="contraction")
    assert cert.holds
    assert abs(cert.margin) < 1e-8  # unitary conjugation commutes with powers


def test_hansen_scalar_contraction():
    # q = 0.5 I, x = 4 I, r = 1/2: conjugated power 0.5 <= powered conjugation 1
    q = 0.5 * identity(1, 1)
    x = 4.0 * identity(1, 1)
    cert = check_hansen_power(q, x, 0.5, mode="contraction")
    assert cert.holds
    assert cert.margin == pytest.approx(0.5, abs=1e-12)


def test_hansen_literal_rejects_generic_orthogonal():
    from ttensor import gen_orthogonal

    x = gen_t_psd(3, 3, RngStream(205))
    q = gen_orthogonal(3, 3, RngStream(206))
    with pytest.raises(HypothesisViolationError):
        check_hansen_power(q, x, 0.5, mode="literal")


def test_hansen_rejects_non_contraction():
    x = gen_t_psd(2, 2, RngStream(207))
    q = 3.0 * identity(2, 2)
    with pytest.raises(HypothesisViolationError):
        check_hansen_power(q, x, 0.5, mode="contraction")


@pytest.mark.parametrize("r", [0.25, 0.5, 0.75, 1.25, 1.5, 2.0])
def test_hansen_contraction_random(r):
    for trial in range(30):
        g = RngStream(2100 + int(r * 100), trial).generator()
        x = gen_t_psd(2, 3, g)
        raw = gen_random((2, 2, 3), g)
        from ttensor import spectral_norm

        q = raw * (1.0 / (spectral_norm(raw) * 1.25))
        assert check_hansen_power(q, x, r).holds


def test_furuta_degenerate_parameters():
    a, b = gen_loewner_pair(2, 2, RngStream(208))
    lower, upper = check_furuta(a, b, 0.0, 1.0, 1.0)
    assert lower.holds and upper.holds


def test_furuta_corollary_instance():
    # r = 1, p = q = 2 covers (B * A^2 * B)^(1/2) >= B^2
    a, b = power_order_counterexample()
    lower, upper = check_furuta(a, b, 1.0, 2.0, 2.0)
    assert lower.holds and upper.holds


def test_furuta_rejects_bad_region():
    a, b = gen_loewner_pair(2, 2, RngStream(209))
    with pytest.raises(HypothesisViolationError):
        check_furuta(a, b, 0.1, 4.0, 1.0)  # (1+2r)q < p+2r


def test_young_commuting_identity_equality():
    eye = identity(2, 2)
    cert = check_young_commuting(eye, eye, 2.0, 2.0)
    assert cert.holds and abs(cert.margin) < 1e-9


def test_young_commuting_scalar():
    a = 2.0 * identity(1, 1)
    b = 3.0 * identity(1, 1)
    cert = check_young_commuting(a, b, 2.0, 2.0)
    # 6 <= 2 + 4.5
    assert cert.holds and cert.margin == pytest.approx(0.5, abs=1e-12)


def test_young_commuting_rejects_noncommuting():
    rng = RngStream(210)
    a = gen_t_psd(3, 2, rng)
    b = gen_t_psd(3, 2, RngStream(211))
    from ttensor import frobenius_norm, t_product

    if frobenius_norm(t_product(a, b) - t_product(b, a)) > 1e-6:
        with pytest.raises(HypothesisViolationError):
            check_young_commuting(a, b, 2.0, 2.0)


def test_complex_norm_variant_a_b_zero():
    a = gen_symmetric(2, 2, RngStream(212))
    certs = check_complex_norm_bounds(a, Tensor3.zeros(2, 2, 2), "a")
    assert all(c.holds for c in certs)


def test_complex_norm_variant_a_frobenius_identity():
    from ttensor import ComplexTensor3, frobenius_norm

    for trial in range(20):
        a = gen_symmetric(3, 2, RngStream(213, trial))
        b = gen_symmetric(3, 2, RngStream(214, trial))
        t = ComplexTensor3.from_parts(a, b)
        assert frobenius_norm(t) ** 2 == pytest.approx(
            frobenius_norm(a) ** 2 + frobenius_norm(b) ** 2, rel=1e-10
        )
        certs = check_complex_norm_bounds(a, b, "a")
        assert all(c.holds for c in certs)


def test_complex_norm_variant_a_literal_spectral_lower_fails():
    # commuting projections onto orthogonal directions break the undamped form
    a = Tensor3.from_slices([np.diag([1.0, 0.0])])
    b = Tensor3.from_slices([np.diag([0.0, 1.0])])
    literal = {c.params["claim"]: c for c in check_complex_norm_bounds(a, b, "a", mode="literal")}
    assert not literal["spectral-lower"].holds
    corrected = {c.params["claim"]: c for c in check_complex_norm_bounds(a, b, "a")}
    assert corrected["spectral-lower"].holds


def test_complex_norm_variant_b_scalar_counterexample():
    one = identity(1, 1)
    certs = check_complex_norm_bounds(one, one, "b", mode="literal")
    by_claim = {c.params["claim"]: c for c in certs}
    bad = by_claim["frobenius-lower"]
    assert not bad.holds
    assert bad.lhs == pytest.approx(3.0)  # ||A||_F^2 + 2 ||B||_F^2
    assert bad.rhs == pytest.approx(2.0)  # |1 + i|^2
    assert by_claim["spectral-upper"].holds


def test_complex_norm_variant_c():
    for trial in range(20):
        a = gen_t_psd(2, 3, RngStream(215, trial))
        b = gen_t_psd(2, 3, RngStream(216, trial))
        assert all(c.holds for c in check_complex_norm_bounds(a, b, "c"))


def test_complex_norm_validates_hypotheses():
    ns = gen_random((2, 2, 2), RngStream(217))
    sym = gen_symmetric(2, 2, RngStream(218))
    with pytest.raises(HypothesisViolationError):
        check_complex_norm_bounds(ns, sym, "a")
    from ttensor import is_t_psd

    if not is_t_psd(sym).holds:
        with pytest.raises(HypothesisViolationError):
            check_complex_norm_bounds(sym, sym, "c")


def test_am_gm_scalar_cases():
    a = 2.0 * identity(1, 1)
    x = identity(1, 1)
    b = identity(1, 1)
    good = check_am_gm(a, x, b, mode="corrected")
    assert good.holds and good.lhs == pytest.approx(2.0) and good.rhs == pytest.approx(2.5)
    bad = check_am_gm(a, x, b, mode="literal")
    assert not bad.holds and bad.rhs == pytest.approx(1.5)


@pytest.mark.parametrize("norm_kind", ["frobenius", "spectral"])
def test_am_gm_corrected_random(norm_kind):
    for trial in range(100):
        g = RngStream(2300, trial).generator()
        a, x, b = (gen_random((3, 3, 2), g) for _ in range(3))
        assert check_am_gm(a, x, b, norm_kind=norm_kind).holds


def test_heinz_identity_equality():
    eye = identity(2, 2)
    for r, t in ((0.5, -1.0), (1.0, 0.0), (1.5, 2.0)):
        c1, c2 = check_heinz_family(eye, eye, eye, r, t, norm_kind="spectral")
        assert c1.holds and abs(c1.margin) < 1e-9
        assert c1.lhs == pytest.approx(2 * (2 + t), rel=1e-10)
        assert c2.holds
        f1, f2 = check_heinz_family(eye, eye, eye, r, t, norm_kind="frobenius")
        assert f1.holds and abs(f1.margin) < 1e-9 and f2.holds


def test_heinz_equal_pair_part2_equality():
    a = gen_t_psd(2, 2, RngStream(219))
    c1, c2 = check_heinz_family(a, a, a, 1.0, 0.0)
    # 4 ||A^2|| == ||(2A)^2||
    assert c2.holds and abs(c2.margin) <= 1e-9 * (1 + abs(c2.rhs))


def test_heinz_rejects_bad_parameters():
    a = gen_t_psd(2, 2, RngStream(220))
    x = gen_random((2, 2, 2), RngStream(221))
    with pytest.raises(HypothesisViolationError):
        check_heinz_family(a, x, a, 0.25, 0.0)
    with pytest.raises(HypothesisViolationError):
        check_heinz_family(a, x, a, 1.0, -2.0)


def test_holder_cauchy_schwarz_instance():
    a = gen_t_psd(2, 2, RngStream(222))
    cert = check_holder(a, identity(2, 2), a, 1.0, 2.0, 2.0)
    assert cert.holds


def test_holder_prefactor_is_exactly_one():
    from ttensor.inequalities import _conjugate_prefactor

    for p in (1.25, 1.5, 2.0, 3.0, 5.0):
        assert _conjugate_prefactor(p, p / (p - 1.0)) == 1.0
    with pytest.raises(HypothesisViolationError):
        _conjugate_prefactor(2.0, 3.0)


def test_holder_rejects_unit_exponent():
    a = gen_t_psd(2, 2, RngStream(223))
    with pytest.raises(HypothesisViolationError):
        check_holder_pairs(a, a, a, a, 1.0, np.inf)


def test_holder_corollary_scalar():
    # | 2 * 3 |^r <= (2^(pr))^(1/p) * (3^(qr))^(1/q) = 6^r, equality
    a = 2.0 * identity(1, 1)
    b = 3.0 * identity(1, 1)
    for r, p in ((0.5, 2.0), (1.0, 1.25), (2.0, 5.0)):
        cert = check_holder_corollary(a, b, r, p, p / (p - 1.0))
        assert cert.holds
        assert cert.lhs == pytest.approx(6.0**r, rel=1e-10)
        assert abs(cert.margin) <= 1e-9 * (1 + cert.rhs)


def test_holder_pairs_cauchy_schwarz_instance():
    # p = q = 2 with b = d = 0 reduces to ||C^T A|| <= || |A|^2 ||^(1/2) || |C|^2 ||^(1/2)
    a = gen_random((2, 2, 3), RngStream(230))
    c = gen_random((2, 2, 3), RngStream(231))
    z = Tensor3.zeros(2, 2, 3)
    assert check_holder_pairs(a, z, c, z, 2.0, 2.0).holds


def test_minkowski_zero_second_pair():
    a1 = gen_random((2, 2, 2), RngStream(224))
    b1 = gen_random((2, 2, 2), RngStream(225))
    z = Tensor3.zeros(2, 2, 2)
    for p in (1.0, 1.5, 2.0, 3.0):
        assert check_minkowski(a1, z, b1, z, p).holds


def test_minkowski_scalar_triangle_equality():
    a1 = 3.0 * identity(1, 1)
    a2 = 4.0 * identity(1, 1)
    z = Tensor3.zeros(1, 1, 1)
    cert = check_minkowski(a1, a2, z, z, 2.0)
    # sqrt(49) = 3 + 4
    assert cert.holds and abs(cert.margin) < 1e-12


def test_scale_robustness_flips_no_verdict():
    scale = 1e3
    a, b = gen_loewner_pair(2, 2, RngStream(226))
    assert check_loewner_heinz(a, b, 0.5).holds
    assert check_loewner_heinz(scale * a, scale * b, 0.5).holds
    x, y, zt = (gen_random((2, 2, 2), RngStream(227, k)) for k in range(3))
    assert check_am_gm(x, y, zt).holds == check_am_gm(scale * x, scale * y, scale * zt).holds


def test_scale_robustness_across_certifiers():
    scale = 1e3
    g = RngStream(240).generator()
    a, b = gen_t_psd(2, 2, g), gen_t_psd(2, 2, g)
    x = gen_random((2, 2, 2), g)
    pairs = [
        check_heinz_family(a, x, b, 1.0, 1.0),
        check_heinz_family(scale * a, scale * x, scale * b, 1.0, 1.0),
    ]
    assert [c.holds for c in pairs[0]] == [c.holds for c in pairs[1]]
    assert (
        check_holder(a, x, b, 1.0, 2.0, 2.0).holds
        == check_holder(scale * a, scale * x, scale * b, 1.0, 2.0, 2.0).holds
    )
    assert (
        check_minkowski(a, b, x, x, 2.0).holds
        == check_minkowski(scale * a, scale * b, scale * x, scale * x, 2.0).holds
    )
    big = check_complex_norm_bounds(scale * gen_symmetric(2, 2, RngStream(241)),
                                    scale * gen_symmetric(2, 2, RngStream(242)), "a")
    assert all(c.holds for c in big)


def test_certificate_margin_invariant():
    a, b = gen_loewner_pair(2, 2, RngStream(228))
    cert = check_loewner_heinz(a, b, 0.7)
    assert cert.margin == pytest.approx(cert.rhs - cert.lhs, abs=1e-15)
    assert cert.holds == (cert.margin >= -cert.tol)


def test_loewner_certificate_min_gap_vs_quadratic_form():
    # the reported min-gap eigenvalue is a true lower bound for the quadratic
    # form of RHS - LHS sampled over 10^4 random lateral slices
    import numpy as np

    from ttensor import inner_product, t_power, t_product

    a, b = gen_loewner_pair(2, 3, RngStream(229))
    r = 0.5
    cert = check_loewner_heinz(a, b, r)
    diff = t_power(a, r) - t_power(b, r)
    rng = np.random.default_rng(0)
    sampled_min = np.inf
    for _ in range(10_000):
        x = Tensor3(rng.uniform(-1.0, 1.0, size=(2, 1, 3)))
        sampled_min = min(
            sampled_min, inner_product(x, t_product(diff, x)) / inner_product(x, x)
        )
    # sampling can only overestimate the minimum eigenvalue
    assert sampled_min >= cert.margin - 10 * cert.tol
    assert sampled_min >= -10 * cert.tol  # certificate holds here
