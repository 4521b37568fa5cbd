"""Sample many uniform permutations and compare with the limit law.

    python3 demos/02_monte_carlo_table.py --trials 1000000 --threads 2
"""

import argparse

from permstat import TrialConfig, compare_with_prediction, run_trials

parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
parser.add_argument("--n", type=int, default=1000)
parser.add_argument("--trials", type=int, default=200_000)
parser.add_argument("--seed", type=int, default=2024)
parser.add_argument("--threads", type=int, default=1)
args = parser.parse_args()

report = run_trials(TrialConfig(n=args.n, trials=args.trials, seed=args.seed,
                                workers=args.threads))
print(f"{args.trials} permutations of [{args.n}], generator {report.generator['algorithm_id']}")
print(f"wall time {report.wall_time['adaptive']:.1f} s\n")

for kind in ("breadth", "minjump"):
    comp = compare_with_prediction(report, kind)
    print(f"{kind:>8}  value  observed      expected       z")
    for row in comp.rows:
        print(f"{'':>8}  {row.value:>5}  {row.observed:>8}  {row.expected:>12.1f}  {row.z:>6.2f}"
              + ("  (exact binomial)" if row.method == "binomial" else ""))
    print(f"{'':>8}  max |z| = {comp.max_abs_z:.2f}\n")

# the same seed always gives the same histograms, whatever the thread count
again = run_trials(TrialConfig(n=args.n, trials=args.trials, seed=args.seed, workers=3))
print("reproducible across thread counts:",
      again.breadth_histogram == report.breadth_histogram)
