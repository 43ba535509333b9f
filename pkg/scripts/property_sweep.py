#!/usr/bin/env python3
"""Run the randomized cross-checks with a configurable size and seed.

    python scripts/property_sweep.py --seed 3 --aafs 1000 --only dialogues
"""
import argparse
import dataclasses
import sys

from abdarg.sweep import CHECKS, SweepConfig, run_sweep


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for f in dataclasses.fields(SweepConfig):
        p.add_argument(f"--{f.name.replace('_', '-')}", type=int, default=f.default)
    p.add_argument("--only", choices=sorted(CHECKS), action="append")
    args = vars(p.parse_args(argv))
    only = args.pop("only")
    cfg = SweepConfig(**args)
    print(f"sweep {cfg}")
    results = run_sweep(cfg, only)
    for r in results:
        print(r)
        for failure in r.failures[:10]:
            print(f"    {failure}")
    return 0 if all(r.ok for r in results) else 1


if __name__ == "__main__":
    sys.exit(main())
