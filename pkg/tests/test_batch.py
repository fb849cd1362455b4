import random

import pytest

from schulze_nomination.batch import Job, format_report, parse_manifest, run_batch
from schulze_nomination.core import random_party_election
from schulze_nomination.io import format_party_election


@pytest.fixture
def corpus(tmp_path):
    rng = random.Random(9)
    paths = []
    for k, voters in enumerate([2, 3, 3, 4]):
        path = tmp_path / f"e{k}.txt"
        path.write_text(format_party_election(random_party_election(rng, 7, voters, 4)))
        paths.append(path)
    return paths


def test_empty_manifest():
    assert parse_manifest("# nothing\n\n") == []
    assert run_batch([]) == []
    assert format_report([]).count("\n") == 1


def test_manifest_paths_are_relative_to_base(tmp_path):
    jobs = parse_manifest("a.txt possible brute\n/abs.txt necessary auto\n", tmp_path)
    assert jobs == [Job(str(tmp_path / "a.txt"), "possible", "brute"), Job("/abs.txt", "necessary", "auto")]
    with pytest.raises(ValueError, match="line 1"):
        parse_manifest("a.txt possible\n")


def test_cross_algorithm_agreement(corpus):
    jobs = []
    for path in corpus:
        for problem in ("possible", "necessary"):
            for algorithm in ("brute", "search", "auto"):
                jobs.append(Job(str(path), problem, algorithm))
    reports = run_batch(jobs)
    assert [r.instance for r in reports] == [j.instance for j in jobs]
    assert all(r.answer in ("yes", "no") for r in reports)
    assert all(r.agreement == "true" for r in reports)
    assert all(r.elapsed >= 0 for r in reports)


def test_parallel_keeps_manifest_order(corpus):
    jobs = [Job(str(p), "possible", "brute") for p in reversed(corpus)]
    serial = run_batch(jobs)
    parallel = run_batch(jobs, jobs_in_parallel=2)
    assert [(r.instance, r.answer, r.certificate) for r in parallel] == \
           [(r.instance, r.answer, r.certificate) for r in serial]


def test_errors_do_not_abort(corpus, tmp_path):
    jobs = [
        Job(str(corpus[0]), "possible", "brute"),
        Job(str(tmp_path / "missing.txt"), "possible", "brute"),
        Job(str(corpus[1]), "possible", "two-voter"),
        Job(str(corpus[2]), "necessary", "brute"),
    ]
    reports = run_batch(jobs, budget=1)
    assert reports[1].answer == "error" and "missing" in reports[1].certificate
    assert reports[2].answer == "error"
    assert reports[3].answer == "error" and "BudgetExceeded" in reports[3].certificate
    assert all(r.agreement == "n/a" for r in reports if r.answer == "error")


def test_report_is_tsv(corpus):
    text = format_report(run_batch([Job(str(corpus[0]), "possible", "auto")]))
    header, row = text.splitlines()
    assert header.split("\t")[:4] == ["instance", "problem", "algorithm", "answer"]
    assert len(row.split("\t")) == len(header.split("\t"))
