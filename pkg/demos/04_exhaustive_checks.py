# Brute-force ground truth: the CSL offender counts and the claim that every
# non-shift strategy has an offender.
import time

from permwordle.construct import csl_strategy
from permwordle.oracle import census, csl_sequence, guess_distribution, verify_theorem
from permwordle.serialize import census_table

start = time.perf_counter()
print("CSL offenders for n = 4..7:", csl_sequence(7), f"({time.perf_counter() - start:.1f}s)")
print(census_table(census(csl_strategy(n)) for n in range(4, 8)))

for n in (3, 4, 5):
    r = verify_theorem(n)
    print(f"n={n}: {r.strategies_checked} strategies, {len(r.failures)} failures, cases {r.case_counts}")

print("\nguesses needed by csl:6:", guess_distribution(csl_strategy(6)).histogram)
