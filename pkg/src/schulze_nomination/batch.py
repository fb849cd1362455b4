"""Run many (instance, problem, algorithm) jobs and tabulate the verdicts."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, fields
from pathlib import Path

from .core import ElectionError
from .io import certificate, parse_party_election
from .solvers import DEFAULT_BUDGET, BudgetExceeded, SolverError, solve


@dataclass
class RunReport:
    instance: str
    problem: str
    algorithm: str
    answer: str  # yes / no / error
    certificate: str = ""
    nominations: int = 0
    trees: int = 0
    nodes: int = 0
    elapsed: float = 0.0
    used: str = ""
    agreement: str = ""


@dataclass(frozen=True)
class Job:
    instance: str
    problem: str
    algorithm: str


def parse_manifest(text: str, base: Path | None = None) -> list[Job]:
    """One job per line: ``<instance-file> <problem> <algorithm>``; paths are relative to ``base``."""
    jobs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ValueError(f"manifest line {lineno}: expected 3 fields, got {len(parts)}")
        path = Path(parts[0])
        if base is not None and not path.is_absolute():
            path = base / path
        jobs.append(Job(str(path), parts[1], parts[2]))
    return jobs


def run_job(job: Job, budget: int | None = DEFAULT_BUDGET) -> RunReport:
    start = time.perf_counter()
    report = RunReport(job.instance, job.problem, job.algorithm, "error")
    try:
        pe = parse_party_election(Path(job.instance).read_text())
        v = solve(pe, job.problem, job.algorithm, budget)
    except (OSError, ElectionError, SolverError, BudgetExceeded) as exc:
        report.certificate = f"{type(exc).__name__}: {exc}"
        report.elapsed = time.perf_counter() - start
        return report
    cert = certificate(v)
    report.answer = "yes" if v.answer else "no"
    report.certificate = " ".join(cert.picks) if cert else (v.president or "")
    report.nominations, report.trees, report.nodes = v.stats.nominations, v.stats.trees, v.stats.nodes
    report.elapsed = time.perf_counter() - start
    report.used = v.algorithm
    return report


def _run_star(args):
    return run_job(*args)


def run_batch(jobs: list[Job], jobs_in_parallel: int = 1, budget: int | None = DEFAULT_BUDGET) -> list[RunReport]:
    """Reports come back in manifest order whatever the execution order."""
    if jobs_in_parallel > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=jobs_in_parallel) as pool:
            reports = list(pool.map(_run_star, [(j, budget) for j in jobs]))
    else:
        reports = [run_job(j, budget) for j in jobs]
    # agreement: all non-error answers for the same (instance, problem) coincide
    answers: dict[tuple[str, str], set[str]] = {}
    for r in reports:
        if r.answer != "error":
            answers.setdefault((r.instance, r.problem), set()).add(r.answer)
    for r in reports:
        seen = answers.get((r.instance, r.problem), set())
        r.agreement = "n/a" if r.answer == "error" else str(len(seen) == 1).lower()
    return reports


def format_report(reports: list[RunReport]) -> str:
    names = [f.name for f in fields(RunReport)]
    lines = ["\t".join(names)]
    for r in reports:
        row = []
        for name in names:
            value = getattr(r, name)
            row.append(f"{value:.6f}" if isinstance(value, float) else str(value))
        lines.append("\t".join(row))
    return "\n".join(lines) + "\n"
