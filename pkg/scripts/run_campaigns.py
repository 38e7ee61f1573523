"""Run every verification campaign and write the reports.

    python3 scripts/run_campaigns.py --out results/
    python3 scripts/run_campaigns.py --quick      # exhaustive n<=4, 1/10 of the samples
"""
import argparse
import json
from dataclasses import asdict, dataclass
from pathlib import Path

from dichordal.campaigns import Population, run_campaign


@dataclass(frozen=True)
class Job:
    theorem: str
    max_n: int
    samples: int | None = None
    min_n: int = 1
    seed: int = 0


JOBS = [
    Job("t11", 4, min_n=4),
    Job("t11", 5),
    Job("t11", 8, samples=10_000),
    Job("t24", 5),
    Job("t24", 10, samples=10_000),
    Job("t33", 5),
    Job("t33", 12, samples=10_000),
    Job("lemma22", 4),
    Job("lemma22", 7, samples=100_000),
    Job("lemma23", 5),
    Job("lemma23", 6, samples=4000, min_n=3),
    Job("roundtrip", 5),
    Job("roundtrip", 30, samples=10_000),
    Job("closure", 30, samples=1000),
    Job("oracle", 4),
    Job("oracle", 7, samples=10_000),
    Job("symmetric", 5),
]


def shrink(job: Job) -> Job:
    if job.samples is None:
        return Job(job.theorem, min(job.max_n, 4), None, min(job.min_n, 4), job.seed)
    return Job(job.theorem, job.max_n, max(1, job.samples // 10), job.min_n, job.seed)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path("results"))
    ap.add_argument("--quick", action="store_true")
    ap.add_argument("--workers", type=int, default=None)
    args = ap.parse_args()

    args.out.mkdir(parents=True, exist_ok=True)
    rows = []
    failed = 0
    for job in JOBS:
        if args.quick:
            job = shrink(job)
        pop = Population(max_n=job.max_n, samples=job.samples, seed=job.seed, min_n=job.min_n)
        report = run_campaign(job.theorem, pop, workers=args.workers)
        failed += not report.ok
        rows.append({"job": asdict(job), **report.to_dict()})
        status = "ok" if report.ok else "FAIL"
        print(f"{status:4} {job.theorem:10} {pop.describe():32} checked={report.checked:<8} "
              f"discrepancies={len(report.discrepancies)} {report.wall_time:.1f}s")
        for g in sorted(report.groups):
            print(f"       {g}: {report.groups[g]}")

    (args.out / "campaigns.json").write_text(json.dumps(rows, indent=2))
    print(f"wrote {args.out / 'campaigns.json'}")
    raise SystemExit(1 if failed else 0)


if __name__ == "__main__":
    main()
