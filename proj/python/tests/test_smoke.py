import math

import pytest

gapprob = pytest.importorskip("gapprob")


def test_topological_tau():
    assert gapprob.topological_tau(3) == "-1/3*t1^2*t2 - 2/27*t2^4"
    assert gapprob.theta(2) == ["-t1"]


def test_kernel_representations_agree():
    a, b = gapprob.kernel("airy", 0.3, -0.2)
    assert abs(a - b) < 1e-8 * abs(a)
    k00, _ = gapprob.kernel("airy", 0.0, 0.0)
    c = 3 ** (-1 / 3) / math.gamma(1 / 3)
    assert k00 == pytest.approx(c * c, rel=1e-8)


def test_tracy_widom_value():
    g = gapprob.gap_logdet("airy", [-2.0, 10.0], m=64)
    assert math.exp(g["Q"]) == pytest.approx(0.4132241425, rel=1e-8)
    assert gapprob.gap_logdet("pearcey", [])["Q"] == 0.0


def test_phi_is_airy():
    # Phi_2^- = 2 sqrt(pi) Ai, Ai(0) = 3^(-2/3) / Gamma(2/3)
    v = gapprob.phi(2, -1, 0.0)
    assert v.real == pytest.approx(2 * math.sqrt(math.pi) * 3 ** (-2 / 3) / math.gamma(2 / 3), rel=1e-10)


def test_derivation_and_targets():
    assert gapprob.derive("Y3", 2, 0) == "6*(d^2 Q)^2 + d^4 Q - 4*eps d Q + 2*d Q = 0"
    assert gapprob.check_target("intro4")["match"]
    r = gapprob.check_target("intro12")
    assert not r["match"] and r["match_reversed_bracket"]
    assert "intro10" in gapprob.target_ids()


def test_hirota():
    rows = gapprob.hirota_table()
    assert len(rows) == 5 and all(r[3] for r in rows)
    checked, failures = gapprob.schur_check(4)
    assert checked > 0 and failures == []


def test_fd_partial_surrogate():
    assert gapprob.fd_partial(lambda a, t, w: a[0] ** 4, [0.3, 1.0], [0, 4, 0, 0]) == pytest.approx(24, rel=1e-8)


def test_residual():
    r = gapprob.pde_residual("intro4", "airy", [-1.0, 1.0])
    assert r["relative"] < 1e-2 and r["order"] > 1.5


def test_bad_input():
    with pytest.raises(ValueError):
        gapprob.gap_logdet("nope", [-1.0, 1.0])
    with pytest.raises(ValueError):
        gapprob.derive("Y9", 2, 0)
