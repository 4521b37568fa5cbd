"""Spacing statistics of permutations: the minimum Manhattan distance d(pi)
between dots of the permutation graph and the minimum jump mj(pi).

Fast and brute-force evaluation, seeded sampling, exhaustive enumeration for
small n, the limit laws for uniform random permutations, and the
inclusion-exclusion counting machinery behind them.
"""

from .asymptotics import (ExpPolynomial, LimitLaw, exp_polynomial, lam, limit_moment,
                          limit_pmf, limit_tail, predicted_counts, stirling2, truncated_exp)
from .bench import BenchRow, benchmark
from .errors import BudgetExceeded, InvariantViolation
from .exact import (EnumerationCapError, ExactDistribution, enumerate_distribution,
                    exact_expectation, exact_prob_ge, exact_Sm)
from .montecarlo import (TrialConfig, TrialReport, compare_counts, compare_with_prediction,
                         run_trials)
from .perm import (ClosePairReport, Permutation, PermutationParseError, adaptive_window,
                   breadth_band_limit, close_pairs, is_prolific, manhattan_distance,
                   min_distance_adaptive, min_distance_banded, min_distance_naive, min_jump)
from .sampler import ALGORITHM_ID, SeededGenerator, sample_permutation

__version__ = "0.1.0"
