import pytest

from dpdi.harness import (
    SUITES,
    VerificationReport,
    verify_bidirected_equivalence,
    verify_bricks,
    verify_chain,
    verify_characterization,
    verify_merge,
)


def test_suite_registry():
    assert sorted(SUITES) == [
        "bidirected",
        "bricks",
        "chain",
        "characterization",
        "merge",
    ]


def test_bricks_small():
    report = verify_bricks(5)
    assert report.suite == "bricks"
    # k1..k5, c2..c5, bc4, bc5.
    assert report.instances_checked == 11
    assert report.agreements == 11
    assert report.disagreements == ()
    assert report.budget_hits == 0
    assert report.ok


def test_characterization_small():
    report = verify_characterization(3)
    assert report.instances_checked == 16
    assert report.ok


def test_chain_small():
    report = verify_chain(3)
    assert report.instances_checked == 16
    assert report.ok


def test_merge_small():
    report = verify_merge(2)
    # Ordered piece pairs from {k2, k3} crossed with both merge vertices.
    assert report.instances_checked == 25
    assert report.ok


def test_bidirected_small():
    report = verify_bidirected_equivalence(3, samples=5, seed=1)
    # Four connected graphs on up to three vertices plus five samples.
    assert report.instances_checked == 9
    assert report.ok


def test_bidirected_seed_is_reproducible():
    first = verify_bidirected_equivalence(3, samples=4, seed=7)
    second = verify_bidirected_equivalence(3, samples=4, seed=7)
    assert first.instances_checked == second.instances_checked
    assert first.agreements == second.agreements


def test_report_rendering():
    report = verify_bricks(4)
    text = report.render_text()
    assert "suite: bricks" in text
    assert "disagreements: 0" in text
    payload = report.to_json_dict()
    assert payload["suite"] == "bricks"
    assert payload["instancesChecked"] == report.instances_checked
    assert payload["disagreements"] == []
    assert payload["budgetHits"] == 0
    assert isinstance(payload["elapsedSeconds"], float)


def test_report_accounting_invariant():
    with pytest.raises(AssertionError):
        VerificationReport("x", 2, 0, (), 0, 0.0)


def test_report_ok_reflects_disagreements():
    bad = VerificationReport("x", 1, 0, (("i", "a", "b"),), 0, 0.0)
    assert not bad.ok
    hit = VerificationReport("x", 1, 0, (), 1, 0.0)
    assert not hit.ok
