import json
import math

import numpy as np
import pytest

from paley_lp.bounds import theta_L_lp, theta_LS_lp
from paley_lp.certificates import (CertificateFormatError, DualCertificate, certificate_from_primal,
                                   check_dual_pair, dual_theta_L, dual_theta_LS,
                                   dual_theta_LS_reduced, paley_certificate, residue_zero_set,
                                   verify_certificate, weak_duality_check)
from paley_lp.numtheory import make_context, primes_1_mod_4
from paley_lp.paley import circulant, complement, local_graph

C5 = circulant(5, {1, 4})
EDGELESS2 = circulant(2, set())


def lbar(p):
    return complement(local_graph(make_context(p)))


@pytest.fixture(scope="module")
def cert61():
    return paley_certificate(61)


def test_dual_edgeless():
    d = dual_theta_LS(EDGELESS2)
    assert d.value == pytest.approx(2.0, abs=1e-12)
    assert d.f.tolist() == pytest.approx([2.0, 0.0])
    assert d.g.tolist() == pytest.approx([1.0, -1.0])
    assert dual_theta_L(EDGELESS2).value == pytest.approx(2.0, abs=1e-12)


def test_dual_c5():
    assert dual_theta_LS(C5).value == pytest.approx(math.sqrt(5), abs=1e-6)
    assert dual_theta_L(C5).value == pytest.approx(math.sqrt(5), abs=1e-6)


def test_dual_61():
    g = lbar(61)
    assert dual_theta_LS(g).value == pytest.approx(4.8886, abs=5e-5)
    assert dual_theta_L(g).value == pytest.approx(4.9009, abs=5e-5)


@pytest.mark.parametrize("p", primes_1_mod_4(200))
def test_reduced_dual_matches_full(p):
    g = lbar(p)
    assert dual_theta_LS_reduced(g) == pytest.approx(dual_theta_LS(g).value, abs=1e-7)


def test_verify_optimizer(cert61):
    res = verify_certificate(cert61, 1e-7)
    assert res.valid and res.violations == []
    assert res.bound == pytest.approx(5.8886, abs=5e-5)


def test_verify_detects_condition_ii(cert61):
    f = cert61.f.values.copy()
    f[0] = cert61.g[0] + 1 - 0.5
    res = verify_certificate(DualCertificate(61, cert61.alpha, f, cert61.g), 1e-7)
    assert not res.valid
    assert [(v.condition, v.index) for v in res.violations] == [("ii", 0)]
    assert res.violations[0].magnitude == pytest.approx(0.5)


def test_verify_detects_condition_i(cert61):
    k = residue_zero_set(61, cert61.alpha)[0]
    f = cert61.f.values.copy()
    f[k] = 1.0
    res = verify_certificate(DualCertificate(61, cert61.alpha, f, cert61.g), 1e-7)
    assert ("i", k) in [(v.condition, v.index) for v in res.violations]


def test_constant_minus_one_fails_iii():
    res = verify_certificate(DualCertificate(13, 4, [0.0] * 6, [-1.0] * 6), 1e-7)
    assert not res.valid
    assert {v.condition for v in res.violations} == {"iii"}
    # hat g = (-6, 0, ..., 0): only index 0 is negative
    assert [(v.index, v.magnitude) for v in res.violations] == [(0, pytest.approx(6.0))]


def test_non_even_g_is_flagged(cert61):
    g = cert61.g.values.copy()
    g[1] -= 0.25  # keeps f >= g + 1
    res = verify_certificate(DualCertificate(61, cert61.alpha, cert61.f, g), 1e-7)
    assert [v.condition for v in res.violations] == ["iii-even"]


def test_perturbation_soundness(cert61):
    f = cert61.f.values.copy()
    f[0] += 0.1
    bumped = DualCertificate(61, cert61.alpha, f, cert61.g)
    res = verify_certificate(bumped, 1e-7)
    assert res.valid
    assert res.bound - cert61.claimed_bound == pytest.approx(0.1, abs=1e-12)


def test_structural_errors():
    with pytest.raises(CertificateFormatError):
        DualCertificate(13, 4, [0.0] * 5, [0.0] * 6)
    with pytest.raises(CertificateFormatError):
        DualCertificate.from_json('{"p": 13, "alpha": 4, "f": [0, 0')
    with pytest.raises(CertificateFormatError):
        DualCertificate.from_json('{"p": 13, "alpha": 4, "f": [0]}')


def test_json_round_trip_is_exact(cert61, tmp_path):
    path = tmp_path / "c.json"
    cert61.save(path)
    back = DualCertificate.load(path)
    assert np.array_equal(back.f.values, cert61.f.values)
    assert np.array_equal(back.g.values, cert61.g.values)
    assert set(json.loads(path.read_text())) == {"p", "alpha", "f", "g"}


@pytest.mark.parametrize("p", primes_1_mod_4(500))
def test_zero_set_matches_local_graph(p):
    ctx = make_context(p)
    assert residue_zero_set(p, ctx.alpha) == sorted(local_graph(ctx).conn)


@pytest.mark.parametrize("p", [13, 61, 109, 173])
def test_weak_duality_report(p):
    rep = weak_duality_check(p)
    assert rep.ok, rep
    assert rep.primal_ls <= rep.dual_ls + 1e-6


def test_weak_duality_13_values():
    rep = weak_duality_check(13)
    assert rep.primal_ls == pytest.approx(2.0, abs=1e-6)
    assert rep.dual_ls == pytest.approx(2.0, abs=1e-6)


def test_non_optimal_certificate_bounds_from_above(cert61):
    # any verified pair bounds the primal; build one by inflating an optimal pair
    f = cert61.f.values.copy()
    f[0] += 2.0
    g = cert61.g.values * 1.0
    cert = DualCertificate(61, cert61.alpha, f, g)
    assert verify_certificate(cert, 1e-7).valid
    assert cert.claimed_bound - 1 >= theta_LS_lp(lbar(61)) - 1e-6


def test_primal_multiplier_certificate():
    g = lbar(109)
    mult = certificate_from_primal(g)
    assert mult.value == pytest.approx(dual_theta_LS(g).value, abs=1e-7)
    assert check_dual_pair(sorted(set(range(1, g.n)) - set(g.conn)), mult.f, mult.g, 1e-7) == []
    # theta_L multipliers give f = g + 1 off the zero set
    multl = certificate_from_primal(g, nonneg=False)
    assert multl.value == pytest.approx(theta_L_lp(g), abs=1e-7)
