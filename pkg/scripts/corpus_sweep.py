#!/usr/bin/env python3
"""Sweep the certified pipeline over a random corpus and report the
distribution of sdepth - depth gaps and invariant cross-checks.

Usage: python scripts/corpus_sweep.py --n 5 --count 200 --seed 11
"""
import argparse
import time

from stanleydec import depth_of_quotient, format_ideal, stanley_n5
from stanleydec.corpus import corpus_instances
from stanleydec.depth import is_sequentially_cm
from stanleydec.filtration import NotSequentiallyCM, build_pretty_clean_n5


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=5)
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--seed", type=int, default=11)
    ap.add_argument("--max-degree", type=int, default=3)
    ap.add_argument("--gen-count", type=int, default=4)
    args = ap.parse_args()

    gaps: dict[int, int] = {}
    pretty = {"seq_cm": 0, "pretty_clean": 0}
    start = time.perf_counter()
    for index, I in corpus_instances(args.seed, args.count, args.n,
                                     max_degree=args.max_degree,
                                     gen_count=args.gen_count):
        report = stanley_n5(I)
        if report.sdepth_lb < report.depth:
            raise SystemExit(
                f"certification failed on instance {index}: {format_ideal(I)}")
        gap = report.sdepth_lb - report.depth
        gaps[gap] = gaps.get(gap, 0) + 1
        flag, _ = is_sequentially_cm(I)
        if flag:
            pretty["seq_cm"] += 1
            _, verdict = build_pretty_clean_n5(I)
            if verdict.pretty_clean:
                pretty["pretty_clean"] += 1
        else:
            try:
                build_pretty_clean_n5(I)
                raise SystemExit(
                    f"pretty-clean builder accepted a non-sequentially-CM "
                    f"instance {index}: {format_ideal(I)}")
            except NotSequentiallyCM:
                pass
    elapsed = time.perf_counter() - start
    print(f"{args.count} instances (n={args.n}, seed={args.seed}) "
          f"in {elapsed:.1f}s")
    print("sdepth - depth gap distribution:")
    for gap in sorted(gaps):
        print(f"  gap {gap}: {gaps[gap]}")
    print(f"sequentially CM: {pretty['seq_cm']} "
          f"(all pretty clean: {pretty['seq_cm'] == pretty['pretty_clean']})")


if __name__ == "__main__":
    main()
