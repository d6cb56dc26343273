"""Acceptance gate: ten criteria, each printing a single pass/fail line.

Run with `pytest -v -s tests/test_acceptance.py` to see the lines.
"""

import time

from oddcovers import covers, routes, schubert, weier


def _report(name, ok):
    print("%s %s" % ("PASS" if ok else "FAIL", name))
    assert ok, name


def test_criterion_1_route_agreement():
    start = time.time()
    order = 41
    gen = routes.genfun_series(order)
    _, _, h = routes.lagrange_pipeline(order)
    ok = True
    for g in range(21):
        closed = routes.alt_catalan_closed(g)
        ok = ok and closed == routes.alt_catalan_coeff_form(g)
        ok = ok and gen[2 * g + 1] == closed and h[2 * g + 1] == closed
    spots = [routes.alt_catalan_closed(g) for g in range(4)]
    ok = ok and spots == [1, 0, 512, 32768]
    ok = ok and time.time() - start < 30
    _report("criterion 1: four series/sum routes agree for g <= 20 "
            "with spot values 1, 0, 512, 32768", ok)


def test_criterion_2_schubert_route():
    start = time.time()
    ok = all(
        schubert.alt_catalan_schubert(g, 16, 16) == routes.alt_catalan_closed(g)
        for g in range(9)
    )
    ok = ok and time.time() - start < 30
    _report("criterion 2: (16 sigma_{4,0}+16 sigma_{3,1})^g matches the "
            "closed formula for g <= 8", ok)


def test_criterion_3_sigma12_identity():
    ok = all(
        schubert.sigma12_power(g, m) == schubert.catalan_alternating_sum(g, m)
        for g in range(9)
        for m in range(2 * g + 1)
    )
    _report("criterion 3: sigma_1^(2m) sigma_2^(2g-m) equals the alternating "
            "binomial-Catalan sum for g <= 8", ok)


def test_criterion_4_grassmannian_degree():
    ok = all(
        schubert.grassmannian_degree(n) == routes.catalan(n - 2)
        for n in range(2, 13)
    )
    _report("criterion 4: deg G(2,n) = Catalan(n-2) for n <= 12", ok)


def test_criterion_5_lagrange_contract():
    # lagrange_pipeline raises if u = w phi(u), 256 w^2 (1+u/2) = u^2, or the
    # match with the independent expansion fails; order 41 covers w^40
    try:
        u, f, _ = routes.lagrange_pipeline(41)
        ok = u.order == 41 and f.order == 41
    except AssertionError:
        ok = False
    _report("criterion 5: inversion contracts hold mod w^41 and f matches "
            "its closed-form expansion to order 40", ok)


def test_criterion_6_identity_suite():
    ok = all(routes.binomial_identity_check(g) for g in range(31))
    ok = ok and all(routes.catalan_half_binomial_check(n) for n in range(61))
    _report("criterion 6: binomial identity (g <= 30) and Catalan "
            "half-binomial rewrite (n <= 60) hold exactly", ok)


def test_criterion_7_cover_suite():
    report = covers.check_paired_quartic_maps()
    ok = (
        covers.family_condition_deg5_alpha1()
        and covers.family_condition_deg5_alpha2()
        and covers.check_quartic_cover()
        and covers.check_deg3_maps()
        and report.ok()
        and report.relation == "identity"
    )
    _report("criterion 7: all explicit-cover checks pass and the paired "
            "degree-4 maps agree on the nose after the source Moebius map", ok)


def test_criterion_8_weierstrass_suite():
    ok = weier.check_G_identities() and weier.check_Gtilde_identities()
    specs = weier.delta0_specializations() + weier.gtilde_delta_specializations()
    ok = ok and all(s.nonzero for s in specs)
    reported = {s.label: s.value for s in weier.delta0_specializations()}
    ok = ok and reported["e3=0 (e2=-e1)"] == "7*E1^2"  # discrepancy reported
    _report("criterion 8: Weierstrass identities pass; every specialization "
            "nonzero; the e3=0 coefficient is reported as computed", ok)


def test_criterion_9_bound_arithmetic():
    chern = covers.chern_upper_bound(2, 5)
    ok = chern == 4 and 4 * chern == 16
    ok = ok and covers.veronese_bound() == 16
    ok = ok and covers.admissible_tally(4) == covers.admissible_tally(5) == 16
    _report("criterion 9: Chern, Veronese and tally routes all give 16", ok)


def test_criterion_10_growth_diagnostics():
    start = time.time()
    try:
        rows = routes.growth_report(40)
        ok = rows[-1].g == 40
    except AssertionError:
        ok = False
    ok = ok and time.time() - start < 10
    _report("criterion 10: ratios below 128 and root estimates increase "
            "toward 16/sqrt(2) through g = 40", ok)
