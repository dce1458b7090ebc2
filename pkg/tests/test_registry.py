"""Registry tests: catalog contracts, verdict semantics, determinism,
status monotonicity, route independence, dispute adjudication."""

import math

import pytest

from gammalab.errors import DomainError, MisuseError, UnknownKeyError
from gammalab.registry import (
    IdentityRecord,
    Recipe,
    Registry,
    TOL_CLASS,
    build_records,
    failures,
)


@pytest.fixture(scope="module")
def reg():
    return Registry()


@pytest.fixture(scope="module")
def all_verdicts(reg):
    return reg.run_suite()


# ---------------------------------------------------------------------------
# catalog contracts
# ---------------------------------------------------------------------------

def test_catalog_size(reg):
    assert len(reg.list_identities()) >= 60


def test_catalog_order_is_lexicographic(reg):
    ids = [r.id for r in reg.list_identities()]
    assert ids == sorted(ids)


def test_section_filter(reg):
    sec6 = {r.id for r in reg.list_identities(section=6)}
    for rid in ("I-6.16", "I-6.24", "I-6.34", "I-6.38"):
        assert rid in sec6


def test_disputed_filter(reg):
    disputed = {r.id for r in reg.list_identities(expected="DISPUTED")}
    assert {"D-4.26", "D-4.27", "D-4.28", "D-4.29", "D-4.30", "D-5.18",
            "D-5.55", "D-7.11"} <= disputed


def test_unknown_id(reg):
    with pytest.raises(UnknownKeyError):
        reg.verify_identity("I-0.0")


def test_param_domain_enforced(reg):
    with pytest.raises(DomainError):
        reg.verify_identity("I-2.6", (5.0,))
    with pytest.raises(DomainError):
        reg.verify_identity("I-2.6", (0.5, 0.5))


def test_route_failure_becomes_inconclusive():
    bad = IdentityRecord(
        "I-9.1", 9, "scratch: failing route",
        Recipe("boom", lambda p, b: 1 / 0),
        Recipe("one", lambda p, b: (1.0, 1e-15)))
    r = Registry(records=[bad])
    v = r.verify_identity("I-9.1")
    assert v.status == "INCONCLUSIVE"
    assert "route failure" in v.note


# ---------------------------------------------------------------------------
# verdict semantics
# ---------------------------------------------------------------------------

def test_verdict_classification_thresholds():
    def rec_with_gap(gap):
        return IdentityRecord(
            "I-9.2", 9, "scratch: controlled residual",
            Recipe("a", lambda p, b: (1.0, 0.0)),
            Recipe("b", lambda p, b: (1.0 + gap, 0.0)))
    tol = TOL_CLASS["strict"]
    assert Registry([rec_with_gap(0.5 * tol)]).verify_identity(
        "I-9.2").status == "CONFIRMED"
    assert Registry([rec_with_gap(50 * tol)]).verify_identity(
        "I-9.2").status == "INCONCLUSIVE"
    assert Registry([rec_with_gap(1e4 * tol)]).verify_identity(
        "I-9.2").status == "REFUTED"


def test_suite_green_except_for_claimed_disputes(all_verdicts):
    assert failures(all_verdicts) == []
    bad = [v for v in all_verdicts
           if v.status != "CONFIRMED" and v.expected == "CONFIRMED"]
    assert bad == []


def test_suite_size_and_order(all_verdicts):
    assert len(all_verdicts) >= 60
    ids = [v.id for v in all_verdicts]
    assert ids == sorted(ids)


def test_determinism(reg, all_verdicts):
    rerun = reg.run_suite()
    for a, b in zip(all_verdicts, rerun):
        assert a.id == b.id and a.params == b.params
        assert a.lhs_value == b.lhs_value and a.rhs_value == b.rhs_value
        assert a.residual == b.residual and a.status == b.status


def test_status_monotonicity(reg):
    # relaxing the class can only keep or improve a CONFIRMED verdict
    for rid in ("I-4.31", "I-6.16", "I-3.13", "I-1.8"):
        s_strict = reg.verify_identity(rid, tol_class="strict").status
        s_std = reg.verify_identity(rid, tol_class="standard").status
        s_slow = reg.verify_identity(rid, tol_class="slow").status
        if s_strict == "CONFIRMED":
            assert s_std == "CONFIRMED" and s_slow == "CONFIRMED"
        assert "REFUTED" not in (s_std, s_slow) or s_strict == "REFUTED"


def test_route_independence_audit(reg):
    for rid in ("I-4.31", "I-6.34", "I-5.35", "I-3.13", "I-8.11"):
        plain = reg.verify_identity(rid)
        swapped = reg.verify_identity(rid, swap_routes=True)
        assert plain.status == swapped.status
        assert plain.residual == pytest.approx(swapped.residual, rel=1e-12)


@pytest.mark.parametrize("rid,n_points", [
    ("I-2.6", 5), ("I-2.9", 5), ("I-2.10", 5), ("I-3.8", 5),
    ("I-5.35", 5), ("I-5.36", 5),
])
def test_parametric_identities_cover_domain(reg, rid, n_points):
    rec = reg.record(rid)
    assert len(rec.default_params) >= n_points
    lo, hi = rec.param_domain[0]
    span = hi - lo
    closest = min(min(p[0] - lo, hi - p[0]) for p in rec.default_params)
    assert closest <= 0.15 * span  # at least one point near a boundary


def test_whole_line_identity_has_five_points(reg):
    # the exponential transform holds for every real p; five samples
    # including negative arguments stand in for boundary stress
    rec = reg.record("I-1.8")
    assert len(rec.default_params) >= 5
    assert any(p[0] < 0 for p in rec.default_params)


def test_equivalence_cluster_1_17(reg):
    for p in (0.2, 0.5):
        v = reg.verify_identity("I-1.17", (p,))
        assert v.status == "CONFIRMED"


# ---------------------------------------------------------------------------
# disputes and probes
# ---------------------------------------------------------------------------

def test_adjudicate_requires_disputed(reg):
    with pytest.raises(MisuseError):
        reg.adjudicate_dispute("I-4.31")


def test_adjudication_diagnostics(reg):
    v = reg.adjudicate_dispute("D-4.26")
    assert v.tol_class == "strict"
    assert v.diagnostics["reported"] == {"lhs": -0.121552, "rhs": -0.121155}
    # both sides to eight significant digits
    assert v.lhs_err < 1e-8 and v.rhs_err < 1e-8
    # our finding: the identity actually holds; the quoted series value
    # was the wrong side
    assert v.status == "CONFIRMED"
    assert v.lhs_value == pytest.approx(-0.1215516516, abs=1e-9)


def test_dispute_5_55_refutes(reg):
    v = reg.adjudicate_dispute("D-5.55")
    assert v.status == "REFUTED"
    # the gap is exactly the dropped 2 log 2 - 1
    assert v.residual == pytest.approx(2 * math.log(2.0) - 1.0, abs=1e-9)


def test_dispute_7_11_symmetric_values(reg):
    v = reg.adjudicate_dispute("D-7.11")
    assert v.status == "CONFIRMED"
    assert v.lhs_value == pytest.approx(-0.176012, abs=5e-7)
    assert v.rhs_value == pytest.approx(-0.176012, abs=5e-7)


def test_probes_confirm_divergence(reg):
    for rid in ("P-logGcot", "P-logxcot"):
        v = reg.verify_identity(rid)
        assert v.expected == "DIVERGENT-PROBE"
        assert v.status == "CONFIRMED"
        assert len(v.diagnostics["values"]) == 3


def test_run_suite_rejects_empty_selection(reg):
    with pytest.raises(DomainError):
        reg.run_suite(section=9)


def test_exit_code_contract_with_corrupted_entry():
    # a deliberately wrong rhs must surface as an expected-CONFIRMED REFUTED
    records = build_records()
    good = next(r for r in records if r.id == "I-8.11")
    corrupted = IdentityRecord(
        good.id, good.section, good.anchor, good.lhs,
        Recipe("wrong constant", lambda p, b: (0.75, 1e-15)),
        good.tol_class, good.expected)
    r = Registry(records=[corrupted])
    verdicts = r.run_suite()
    assert len(failures(verdicts)) == 1
