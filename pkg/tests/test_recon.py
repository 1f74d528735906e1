"""Channel sampling and decoder tests."""

import random

import pytest

from insrecon.balls import SeqSet, insertion_ball, read_coverage, coverage_argmax, intersect_balls
from insrecon.codes import best_coset, build_all, build_vt
from insrecon.recon import (
    DecodeStatus,
    decode,
    run_experiment,
    sample_reads,
)
from insrecon.seqs import BitSeq


def test_sample_whole_ball():
    x = BitSeq("0110")
    ball = insertion_ball(x, 2)
    bundle = sample_reads(x, 2, len(ball), seed=1)
    assert bundle.reads == ball
    assert bundle.source_hint == x


def test_sample_single_read_is_supersequence():
    x = BitSeq("10101")
    bundle = sample_reads(x, 1, 1, seed=9)
    (read,) = list(bundle.reads)
    assert read in insertion_ball(x, 1)


def test_sample_determinism_and_bounds():
    x = BitSeq("110010")
    b1 = sample_reads(x, 2, 5, seed=42)
    b2 = sample_reads(x, 2, 5, seed=42)
    assert b1.reads == b2.reads
    with pytest.raises(ValueError):
        sample_reads(x, 1, 100, seed=0)


def test_decode_whole_ball_is_unique():
    code = build_vt(6, 0)
    x = next(iter(code))
    bundle = sample_reads(x, 2, len(insertion_ball(x, 2)), seed=3)
    outcome = decode(bundle, code, 2)
    assert outcome.status is DecodeStatus.UNIQUE
    assert outcome.word == x


def test_decode_singleton_code():
    x = BitSeq("011010")
    code = SeqSet(6, [x])
    bundle = sample_reads(x, 2, 3, seed=5)
    outcome = decode(bundle, code, 2)
    assert outcome.status is DecodeStatus.UNIQUE
    assert outcome.word == x


def test_decode_soundness_random():
    rng = random.Random(77)
    code = build_vt(8, 1)
    members = list(code)
    for trial in range(100):
        x = members[rng.randrange(len(members))]
        bundle = sample_reads(x, 2, 4, seed=1000 + trial)
        outcome = decode(bundle, code, 2)
        assert x in outcome.candidates


def test_decode_length_mismatch():
    code = build_vt(6, 0)
    x = next(iter(code))
    bundle = sample_reads(x, 2, 2, seed=0)
    with pytest.raises(ValueError):
        decode(bundle, code, 1)


def test_adversarial_bundle_is_ambiguous():
    # the maximizing intersection of the worst pair defeats nu_t reads
    code = build_all(5)
    t = 2
    value, x, y = coverage_argmax(code, t)
    worst = intersect_balls(x, y, t)
    assert len(worst) == value == read_coverage(code, t)
    bundle_reads = SeqSet(5 + t, list(worst))
    from insrecon.recon import ReadBundle

    outcome = decode(ReadBundle(bundle_reads, 5, t), code, t)
    assert outcome.status is DecodeStatus.AMBIGUOUS
    assert x in outcome.candidates and y in outcome.candidates


def test_run_experiment_guarantee_and_determinism():
    code = build_vt(7, 0)
    cov = read_coverage(code, 1)
    summary = run_experiment(code, 1, cov + 1, trials=50, seed=11)
    assert summary.unique == 50
    assert summary.correct == 50
    assert summary.unique_rate == 1.0
    again = run_experiment(code, 1, cov + 1, trials=50, seed=11)
    assert again == summary


def test_guarantee_across_code_families():
    # reads beyond the coverage always decode uniquely to the ground truth
    from insrecon.codes import best_coset

    cases = [
        (best_coset("tworead", 10, P=3)[1], 1, 2),
        (best_coset("np4", 12, P=9)[1], 2, 12 + 4),
        (best_coset("np5", 10, P=9)[1], 2, 10 + 5),
    ]
    for code, t, reads in cases:
        summary = run_experiment(code, t, reads, trials=200, seed=31)
        assert summary.unique == 200
        assert summary.correct == 200


def test_run_experiment_single_read_reports_rates():
    code = build_all(4)
    summary = run_experiment(code, 1, 1, trials=40, seed=2)
    assert summary.unique + summary.ambiguous + summary.no_candidate == 40
    assert summary.no_candidate == 0  # truth always survives
    assert summary.ambiguous > 0  # one read of the full space cannot pin a word
    assert summary.mean_candidates > 1.0


def test_run_experiment_empty():
    code = build_vt(6, 0)
    summary = run_experiment(code, 1, 2, trials=0, seed=1)
    assert summary.trials == 0
    assert summary.rows == ()
    assert summary.unique_rate is None
    assert summary.mean_candidates is None


def test_run_experiment_needs_code():
    with pytest.raises(ValueError):
        run_experiment(SeqSet(4, []), 1, 1, trials=1, seed=0)
