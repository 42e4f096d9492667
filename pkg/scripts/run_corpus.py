"""Run a check suite over every bundled corpus entry and print a summary.

    python3 scripts/run_corpus.py duality,lefschetz --jobs 4 --json report.json
"""

import argparse
import json
import sys
from dataclasses import dataclass

from facering.cli import cmd_corpus


@dataclass
class CorpusRun:
    suite: str
    seed: int = 0
    jobs: int = 1
    json_path: str | None = None


def parse_args(argv=None) -> CorpusRun:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("suite", help="comma-separated checks, e.g. duality,lefschetz,biased:empty")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", dest="json_path")
    a = p.parse_args(argv)
    return CorpusRun(a.suite, a.seed, a.jobs, a.json_path)


def main(argv=None):
    cfg = parse_args(argv)
    report = cmd_corpus("run", cfg.suite, seed=cfg.seed, jobs=cfg.jobs)
    for row in report.analysis["summary"]:
        print(f"{row['name']:<22} {' '.join(row['verdicts'])}")
    if cfg.json_path:
        with open(cfg.json_path, "w") as fh:
            json.dump(report.to_json(), fh, indent=2, sort_keys=True)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
