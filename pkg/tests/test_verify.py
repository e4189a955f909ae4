from __future__ import annotations

import json

import pytest

from congruence import verify as v
from congruence.errors import PreconditionViolated, UnknownClaim

LISTED = """wilson.theorem1 wilson.theorem2 wilson.glaisher wilson.lemma4 wilson.theorem6
wilson.corollary6 wilson.sun_eq34 wilson.eq35 bernoulli.vsc bernoulli.eq4 bernoulli.kummer
bernoulli.sun_result6 bernoulli.fact2 bernoulli.miki bernoulli.adams bernoulli.thangadurai
faulhaber.jacobi faulhaber.eq52 faulhaber.eq53 faulhaber.trailing faulhaber.derby faulhaber.eq56
stirling.theorem3 stirling.corollary2 stirling.glaisher_result2 stirling.result3 stirling.result4
stirling.eq27_30 stirling.sun_eq25 stirling.newton_eq8 harmonic.glaisher_thm4
harmonic.glaisher_thm5 harmonic.corollary3 harmonic.corollary4 harmonic.corollary5
harmonic.bayat harmonic.wolstenholme harmonic.wolstenholme_binomial harmonic.wolstenholme_prime
giuga.prop1 giuga.lemma2 giuga.conjecture1 q.andrews q.shipan q.dilcher q.clark q.straub
q.andrews_binomial q.lucas q.kummer_carry q.helou_terjanian""".split()


def test_every_listed_id_is_registered():
    assert not [i for i in LISTED if i not in v.REGISTRY]


def test_registry_self_test_is_clean():
    assert v.self_test() == []
    for c in v.REGISTRY.values():
        assert c.anchor and c.lhs_route and c.rhs_route and c.description


def test_report_only_claims():
    only = {i for i, c in v.REGISTRY.items() if c.report_only}
    assert {"giuga.conjecture1", "bernoulli.thangadurai"} <= only


def test_run_claim_examples():
    r = v.run_claim("wilson.glaisher", 5)
    assert r.holds and r.lhs == "24" and r.rhs == "24" and r.modulus == "5^2"
    assert v.run_claim("harmonic.wolstenholme", 7).holds
    assert v.run_claim("stirling.corollary2", 5).holds


def test_errors():
    with pytest.raises(UnknownClaim):
        v.run_claim("wilson.nonsense", 5)
    with pytest.raises(PreconditionViolated):
        v.run_claim("wilson.glaisher", 9)
    with pytest.raises(UnknownClaim):
        v.sweep("nope", 5, 10)


def test_report_shape_and_determinism():
    a = v.run_claim("wilson.theorem6", 13, deterministic=True).to_dict()
    b = v.run_claim("wilson.theorem6", 13, deterministic=True).to_dict()
    assert a == b and a["ns"] == 0
    assert set(a) == {"claim", "p", "modulus", "lhs", "rhs", "holds", "ns"}
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_failed_report_carries_detail():
    r = v.run_claim("stirling.theorem3", 7, deterministic=True)
    assert not r.holds
    d = r.to_dict()
    assert "detail" in d and d["detail"]


def test_holds_iff_sides_equal():
    for cid in ("wilson.sun_eq34", "stirling.theorem3", "harmonic.eq13", "bernoulli.kummer"):
        for r in v.sweep(cid, 5, 40, deterministic=True):
            assert r.holds == (r.lhs == r.rhs)


def test_sweep_examples():
    assert all(r.holds for r in v.sweep("wilson.sun_eq34", 5, 100))
    assert all(r.holds for r in v.sweep("bernoulli.kummer", 5, 50))
    assert v.sweep("wilson.glaisher", 24, 28) == []
    assert [r.p for r in v.sweep("wilson.glaisher", 5, 30)] == [5, 7, 11, 13, 17, 19, 23, 29]


def test_parallel_sweep_keeps_order():
    serial = [r.to_dict() for r in v.sweep("wilson.theorem1", 5, 200, 1, deterministic=True)]
    par = [r.to_dict() for r in v.sweep("wilson.theorem1", 5, 200, 3, deterministic=True)]
    assert serial == par


def test_errors_inside_sweep_become_failed_reports(monkeypatch):
    from congruence.errors import RangeExceeded

    def boom(p):
        raise RangeExceeded("synthetic")

    c = v.REGISTRY["wilson.glaisher"]
    monkeypatch.setitem(v.REGISTRY, "wilson.glaisher",
                        v.Claim(**{**c.__dict__, "evaluate": boom}))
    out = v.sweep("wilson.glaisher", 5, 11)
    assert len(out) == 3 and not any(r.holds for r in out)
    assert out[0].detail["error"].startswith("RangeExceeded")


def test_claim_filter_by_power():
    p3 = v.claim_ids(3)
    assert "wilson.theorem6" in p3 and "wilson.glaisher" not in p3
    assert v.claim_ids() == sorted(v.REGISTRY)
