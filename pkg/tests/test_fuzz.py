from quasiring.verify import run_campaign
from quasiring.verify.fuzz import campaign_specs


def test_specs_deterministic():
    a = list(campaign_specs(9, 6))
    b = list(campaign_specs(9, 6))
    assert a == b
    assert len({s.seed for s in a}) == 6


def test_small_campaign_no_failures():
    result = run_campaign(seed=11, instances=6)
    assert result.failures == []
    assert result.summary.get("PASS", 0) > 0


def test_campaign_repeatable():
    def strip(report):
        d = report.to_dict()
        d.pop("elapsed")
        return d

    r1 = run_campaign(seed=2, instances=3)
    r2 = run_campaign(seed=2, instances=3)
    assert [strip(x) for x in r1.reports] == [strip(x) for x in r2.reports]


def test_result_serialization():
    r = run_campaign(seed=4, instances=2)
    d = r.to_dict()
    assert d["seed"] == 4 and d["instances"] == 2
    assert set(d) == {"seed", "instances", "summary", "failures"}
