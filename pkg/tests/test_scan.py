import pytest

from cyclorank.errors import DomainError
from cyclorank.primes import primes_in_class
from cyclorank.rank import rank3
from cyclorank.reporting import render
from cyclorank.scan import scan_alpha, scan_rank3


def test_scan_matches_single_threaded_reference():
    summary = scan_rank3(1000, (4, 7), shards=1, workers=1)
    totals = {4: 0, 7: 0}
    rank2 = {4: 0, 7: 0}
    for n in primes_in_class(1000, 9, {4, 7}):
        totals[n % 9] += 1
        if rank3(n) == 2:
            rank2[n % 9] += 1
    assert summary.totals == totals
    assert summary.rank2 == rank2
    assert summary.total == sum(totals.values())


def test_shard_invariance_bit_identical():
    base = scan_rank3(20000, (1, 4, 7), shards=1, workers=1)
    for shards in (2, 5, 16):
        other = scan_rank3(20000, (1, 4, 7), shards=shards, workers=1)
        assert other == base
        assert render(other, "csv") == render(base, "csv")
        assert render(other, "json") == render(base, "json")


def test_worker_pool_matches_serial():
    serial = scan_rank3(30000, (4, 7), shards=4, workers=1)
    pooled = scan_rank3(30000, (4, 7), shards=4, workers=2)
    assert pooled == serial


def test_checkpoints_are_exact_prefixes():
    summary = scan_rank3(25000, (1, 4, 7), shards=3, workers=1)
    assert [c.threshold for c in summary.checkpoints] == [1000, 10000, 25000]
    for cp in summary.checkpoints:
        total = hits = 0
        for n in primes_in_class(cp.threshold, 9, {1, 4, 7}):
            total += 1
            hits += rank3(n) == 2
        assert (cp.total, cp.hits) == (total, hits)
    last = summary.checkpoints[-1]
    assert summary.density() == last.density
    assert last.total == summary.total


def test_scan_env_worker_override(monkeypatch):
    monkeypatch.setenv("CYCLORANK_THREADS", "1")
    summary = scan_rank3(2000, (4, 7))
    assert summary == scan_rank3(2000, (4, 7), shards=1, workers=1)


def test_scan_validation():
    with pytest.raises(DomainError):
        scan_rank3(50, (4, 7))
    with pytest.raises(DomainError):
        scan_rank3(1000, (2, 4))
    with pytest.raises(DomainError):
        scan_rank3(1000, ())
    with pytest.raises(DomainError, match="regular"):
        scan_alpha(37, 1000)


def test_scan_alpha_p3_all_zero():
    summary = scan_alpha(3, 20000, shards=2, workers=1)
    for hist in summary.alpha_hist.values():
        assert set(hist) <= {0}
    assert summary.density() == 0.0
    assert summary.bounds_histogram() == {(1, 2): summary.total}


def test_scan_alpha_p5_populates_both_bins():
    summary = scan_alpha(5, 10000, shards=3, workers=1)
    assert summary.classes == (1, 6, 11, 16, 21)
    merged = {}
    for hist in summary.alpha_hist.values():
        for a, c in hist.items():
            merged[a] = merged.get(a, 0) + c
    assert set(merged) == {0, 1}
    assert merged[0] > 0 and merged[1] > 0
    bh = summary.bounds_histogram()
    assert set(bh) == {(2, 8), (3, 12)}
    assert summary == scan_alpha(5, 10000, shards=1, workers=1)


def test_scan_alpha_totals_partition_scan():
    summary = scan_alpha(5, 5000, shards=2, workers=1)
    want = sum(1 for _ in primes_in_class(5000, 5, {1}))
    assert summary.total == want
    assert sum(summary.totals.values()) == want
