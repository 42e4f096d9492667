"""Sweep moment-curve parameters on a corpus entry and tabulate the
computed verdicts.  Every certificate is report-only, so the exit code
is 0 unless the input itself is bad."""

import argparse
import random
import sys
from dataclasses import dataclass

from facering.cli import cmd_experiment_moment_curve, corpus_document


@dataclass
class ProbeConfig:
    entry: str = "cross-polytope-3"
    trials: int = 5
    spread: int = 50
    seed: int = 0


def parse_args(argv=None) -> ProbeConfig:
    p = argparse.ArgumentParser(description="moment-curve coordinate probe")
    p.add_argument("--entry", default=ProbeConfig.entry, help="corpus entry name")
    p.add_argument("--trials", type=int, default=ProbeConfig.trials)
    p.add_argument("--spread", type=int, default=ProbeConfig.spread, help="parameters are drawn from 1..spread")
    p.add_argument("--seed", type=int, default=ProbeConfig.seed)
    return ProbeConfig(**vars(p.parse_args(argv)))


def main(argv=None):
    cfg = parse_args(argv)
    doc = corpus_document(cfg.entry)
    n = doc.complex().n
    if cfg.spread < n:
        print(f"--spread must be at least {n}", file=sys.stderr)
        return 2
    rng = random.Random(cfg.seed)
    for trial in range(cfg.trials):
        params = sorted(rng.sample(range(1, cfg.spread + 1), n))
        report = cmd_experiment_moment_curve(doc, params, seed=cfg.seed + trial)
        computed = [c.witness.get("computed_verdict", c.verdict) for c in report.certificates]
        print(f"{params}  {' '.join(computed)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
