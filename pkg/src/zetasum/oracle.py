"""Brute-force second paths for every closed form in `methods`.

Smooth-number sums converge to the finite Euler products; grouping the
Dirichlet sum by smallest prime factor reproduces, row by row, the tail
product times its leading prime power.  Both are structurally different
from the product code they check.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import primes
from .kernel import as_complex, power_term, prime_power_term
from .methods import NonConvergentError, TruncationSpec, correction_coefficient


@dataclass(frozen=True)
class PartitionTable:
    """Per-prime sums of n^{-s} over n in [2, N], grouped by smallest prime
    factor.  Every n <= N has its smallest prime factor <= N, so the rows
    partition [2, N] exhaustively."""

    cutoff_N: int
    rows: dict[int, complex]

    def total(self) -> complex:
        """Sum of all rows, ascending prime order."""
        out = complex(0.0)
        for p in sorted(self.rows):
            out += self.rows[p]
        return out


def smooth_sum_oracle(i: int, s, bound: int) -> complex:
    """Sum of n^{-s} over every n <= bound whose prime factors lie among the
    first i primes.  Converges in `bound` to the i-prime Euler product."""
    z = as_complex(s)
    if z.real <= 1.0:
        raise NonConvergentError("the smooth-number sum", z)
    if bound < 1:
        raise ValueError("bound must be >= 1")
    total = complex(0.0)
    for n in primes.smooth_numbers(i, bound):
        total += power_term(n, z)
    return total


def spf_partition_sum(s, N: int) -> PartitionTable:
    """Group n in [2, N] by smallest prime factor and sum n^{-s} per group.

    The row for p estimates (tail product from p's index) * p^{-s} with an
    error no larger than the Dirichlet tail beyond N.
    """
    z = as_complex(s)
    N = int(N)
    if N < 2:
        raise ValueError("N must be >= 2")
    rows: dict[int, complex] = {}
    for n in range(2, N + 1):
        p = primes.smallest_prime_factor(n)
        rows[p] = rows.get(p, complex(0.0)) + power_term(n, z)
    return PartitionTable(cutoff_N=N, rows=rows)


def coefficient_crosscheck(k: int, s, N: int, spec: TruncationSpec) -> float:
    """Distance between the two routes to the k-th correction term.

    Route one: truncated tail product (certified to spec.tolerance) times
    p_k^{-s}.  Route two: the partition row for p_k at cutoff N.  The result
    should not exceed spec.tolerance + N^(1-Re(s))/(Re(s)-1).
    """
    z = as_complex(s)
    coeff = correction_coefficient(k, z, spec)
    p_k = primes.nth_prime(k)
    predicted = coeff.value * prime_power_term(p_k, z)
    observed = spf_partition_sum(z, N).rows.get(p_k, complex(0.0))
    return abs(predicted - observed)
