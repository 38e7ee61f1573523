import pytest

from dichordal import campaigns
from dichordal.campaigns import (
    THEOREMS,
    CampaignReport,
    Population,
    Theorem,
    default_workers,
    has_induced_long_cycle,
    is_chordal_by_definition,
    run_campaign,
)
from dichordal.errors import UsageError
from dichordal.fixtures import C3O, C4O, C4S, P3S, TT3
from dichordal.io import parse_text


def _strip(report):
    d = report.to_dict()
    d.pop("wall_time")
    return d


def test_brute_force_helpers():
    assert is_chordal_by_definition(TT3)
    assert not is_chordal_by_definition(C3O)
    assert has_induced_long_cycle(C4S) and has_induced_long_cycle(C4O)
    assert not has_induced_long_cycle(P3S)


@pytest.mark.parametrize("theorem", sorted(THEOREMS))
def test_small_campaigns_hold(theorem):
    report = run_campaign(theorem, Population(max_n=3), workers=1)
    assert report.ok, report.to_text()
    assert report.checked > 0
    sampled = run_campaign(theorem, Population(max_n=6, samples=60, seed=1), workers=1)
    assert sampled.ok, sampled.to_text()


def test_parallel_merge_is_order_preserving():
    pop = Population(max_n=4)
    a = run_campaign("t33", pop, workers=1)
    b = run_campaign("t33", pop, workers=2)
    assert _strip(a) == _strip(b)
    pop = Population(max_n=10, samples=200, seed=4)
    assert _strip(run_campaign("roundtrip", pop, workers=1)) == _strip(run_campaign("roundtrip", pop, workers=3))


def test_groups_reported_separately():
    report = run_campaign("t33", Population(max_n=4), workers=1)
    assert report.groups["quasi_transitive"] > 0
    assert report.groups["extended_semicomplete"] > 0
    text = report.to_text()
    assert "quasi_transitive: checked" in text and "extended_semicomplete: checked" in text


def test_discrepancies_are_recorded_verbatim(monkeypatch):
    def always_wrong(d):
        if d.n != 2:
            return None
        return "planted", ["g"]

    monkeypatch.setitem(THEOREMS, "planted", Theorem(always_wrong, THEOREMS["t11"].sampler, 2))
    report = run_campaign("planted", Population(max_n=2), workers=1)
    assert report.checked == 4 and len(report.discrepancies) == 4
    assert not report.ok
    assert report.group_discrepancies["g"] == 4
    replayed = [parse_text(rec["digraph"]) for rec in report.discrepancies]
    assert [d.relations() for d in replayed] == [(0,), (1,), (2,), (3,)]
    assert "- planted" in report.to_text()


def test_usage_errors():
    with pytest.raises(UsageError):
        run_campaign("nope", Population(max_n=3))
    with pytest.raises(UsageError):
        run_campaign("t11", Population(max_n=6))
    with pytest.raises(UsageError):
        run_campaign("t11", Population(max_n=6, samples=-1))


def test_worker_env(monkeypatch):
    monkeypatch.setenv(campaigns.WORKERS_ENV, "3")
    assert default_workers() == 3
    monkeypatch.delenv(campaigns.WORKERS_ENV)
    assert default_workers() >= 1


def test_report_merge_and_describe():
    a = CampaignReport("t", "p", checked=2)
    a.groups["x"] = 1
    b = CampaignReport("t", "p", checked=3, discrepancies=[{"detail": "d", "digraph": "1\n"}])
    b.groups["x"] = 2
    a.merge(b)
    assert a.checked == 5 and a.groups["x"] == 3 and not a.ok
    assert Population(max_n=4).describe() == "exhaustive n<=4"
    assert Population(max_n=7, samples=10, seed=2, min_n=3).describe() == "sampled 10 seed=2 n=3..7"


def test_lemma23_counts_qualifying_instances():
    report = run_campaign("lemma23", Population(max_n=4), workers=1)
    assert report.ok
    assert report.groups["instances_with_triples"] > 0
    assert report.groups["triples"] >= report.groups["instances_with_triples"]
