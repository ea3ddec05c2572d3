"""Brute-force ground truth by exhaustive enumeration of secrets and strategies.

Every secret counts as an offender when its game either repeats an incorrect
(position, value) pair or loops forever.  Work is split into lexicographic
blocks of secrets sharing a first value.  The blocks are merged in order, so
results do not depend on the worker count.
"""
from __future__ import annotations

import itertools
import os
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from .construct import (
    ConstructedOffender,
    ConstructionError,
    cs_strategy,
    csl_strategy,
    construct_general,
    is_pure_shift,
    lcs_strategy,
)
from .game import (
    OutcomeKind,
    Strategy,
    Verdict,
    classify,
    play,
    transcript_violations,
    validate_strategy,
)
from .perm import Permutation, check_limit, enumerate_derangements

OFFENDER_DEFINITION = "repeating or looping"
STRATEGY_LIMIT = 5


@dataclass
class OffenderCensus:
    strategy: Strategy
    n: int
    counts: dict[str, int]
    offenders: list[tuple[Permutation, Verdict]] | None = None
    invariant_violations: int = 0
    elapsed: float = 0.0

    @property
    def total_offenders(self) -> int:
        return self.counts[Verdict.REPEATING.value] + self.counts[Verdict.LOOPING.value]


def default_workers() -> int:
    return os.cpu_count() or 1


def _census_block(
    strategy: Strategy, first: int, keep_list: bool, check_invariants: bool
) -> tuple[Counter, list, int]:
    n = strategy.n
    rest = [v for v in range(1, n + 1) if v != first]
    counts: Counter = Counter()
    offenders = []
    violations = 0
    for tail in itertools.permutations(rest):
        secret = (first,) + tail
        t = play(secret, strategy, validate=False)
        verdict = classify(t)
        counts[verdict.value] += 1
        if keep_list and verdict is not Verdict.CLEAN:
            offenders.append((secret, verdict))
        if check_invariants and transcript_violations(t):
            violations += 1
    return counts, offenders, violations


def census(
    strategy: Strategy,
    keep_list: bool = False,
    *,
    workers: int = 1,
    check_invariants: bool = False,
    limit: int | None = None,
) -> OffenderCensus:
    """Classify all ``n!`` secrets for ``strategy``.

    ``workers > 1`` fans the first-value blocks out over processes; the merged
    counts and offender list are identical to a single-process run.
    """
    validate_strategy(strategy)
    n = strategy.n
    check_limit(n, limit)
    start = time.perf_counter()
    args = [(strategy, first, keep_list, check_invariants) for first in range(1, n + 1)]
    if workers > 1 and n >= 6:
        with ProcessPoolExecutor(max_workers=min(workers, n)) as pool:
            parts = list(pool.map(_census_block, *zip(*args)))
    else:
        parts = [_census_block(*a) for a in args]
    counts = Counter({v.value: 0 for v in Verdict})
    offenders: list = []
    violations = 0
    for c, offs, bad in parts:
        counts.update(c)
        offenders.extend(offs)
        violations += bad
    return OffenderCensus(
        strategy,
        n,
        {v.value: counts[v.value] for v in Verdict},
        offenders if keep_list else None,
        violations,
        time.perf_counter() - start,
    )


def csl_sequence(n_max: int, *, workers: int = 1, limit: int | None = None) -> list[int]:
    """Offender totals of the CSL strategy for ``n = 4..n_max``."""
    check_limit(n_max, limit)
    return [
        census(csl_strategy(n), workers=workers, limit=limit).total_offenders
        for n in range(4, n_max + 1)
    ]


def enumerate_strategies(n: int, *, limit: int = STRATEGY_LIMIT) -> Iterator[Strategy]:
    """Every legal strategy of length ``n``.

    ``s_1`` and ``s_2`` are forced; each level ``k >= 3`` ranges over the
    derangements of length ``k`` in lexicographic order (earlier levels vary
    slowest).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    check_limit(n, limit)
    fixed: list[tuple[Permutation, ...]] = [((1,),), ((2, 1),)][:n]
    levels = fixed + [tuple(enumerate_derangements(k, limit=limit)) for k in range(3, n + 1)]
    for comps in itertools.product(*levels):
        yield Strategy(tuple(comps))


@dataclass
class TheoremFailure:
    strategy: Strategy
    omega: Permutation | None
    verdict: str


@dataclass
class TheoremReport:
    n: int
    strategies_checked: int = 0
    failures: list[TheoremFailure] = field(default_factory=list)
    cs_exceptions: dict[str, int] = field(default_factory=dict)
    case_counts: dict[str, int] = field(default_factory=dict)
    invariant_violations: int = 0

    @property
    def holds(self) -> bool:
        return not self.failures


def verify_theorem(n: int, *, limit: int = STRATEGY_LIMIT) -> TheoremReport:
    """Check every strategy of length ``n``.

    The two pure shift strategies must have no offender at all (full census).
    Every other strategy must get a constructed secret that replays as
    repeating or looping; that secret is also the witness that its offender
    total is at least one.  Problems are collected as failures, never raised.
    """
    report = TheoremReport(n)
    cases: Counter = Counter()
    for strategy in enumerate_strategies(n, limit=limit):
        report.strategies_checked += 1
        pure = is_pure_shift(strategy, "right") or is_pure_shift(strategy, "left")
        try:
            built = construct_general(strategy)
        except ConstructionError as exc:
            report.failures.append(TheoremFailure(strategy, None, f"construction failed: {exc}"))
            continue
        if pure:
            label = "cs" if is_pure_shift(strategy, "right") else "lcs"
            if n < 3:
                label = "cs"
            c = census(strategy, check_invariants=True, limit=limit)
            report.cs_exceptions[label] = c.total_offenders
            report.invariant_violations += c.invariant_violations
            if c.total_offenders:
                report.failures.append(
                    TheoremFailure(strategy, None, f"pure shift has {c.total_offenders} offenders")
                )
            if built is not None:
                report.failures.append(
                    TheoremFailure(strategy, built.omega, "constructor returned an offender for a pure shift")
                )
            continue
        if built is None:
            report.failures.append(TheoremFailure(strategy, None, "no offender constructed"))
            continue
        cases[built.case.tag.value] += 1
        verdict = _replay_verdict(strategy, built)
        if transcript_violations(built.evidence):
            report.invariant_violations += 1
        if verdict is Verdict.CLEAN:
            report.failures.append(TheoremFailure(strategy, built.omega, verdict.value))
    report.case_counts = dict(sorted(cases.items()))
    return report


def _replay_verdict(strategy: Strategy, built: ConstructedOffender) -> Verdict:
    # independent replay; the constructor's own evidence is not trusted here
    return classify(play(built.omega, strategy))


@dataclass
class GuessDistribution:
    histogram: dict[int, int]
    loops: int

    @property
    def total(self) -> int:
        return sum(self.histogram.values()) + self.loops


def guess_distribution(strategy: Strategy, *, limit: int | None = None) -> GuessDistribution:
    """Number of secrets solved in exactly ``r`` guesses, plus the looping count."""
    validate_strategy(strategy)
    n = strategy.n
    check_limit(n, limit)
    hist: Counter = Counter()
    loops = 0
    for secret in itertools.permutations(range(1, n + 1)):
        t = play(secret, strategy, validate=False)
        classify(t)  # raises on an aborted game
        if t.outcome.kind is OutcomeKind.LOOP:
            loops += 1
        else:
            hist[t.outcome.turn] += 1
    return GuessDistribution(dict(sorted(hist.items())), loops)


def pure_shift_census(n: int, *, workers: int = 1, limit: int | None = None) -> dict[str, OffenderCensus]:
    """Censuses of the all-right and all-left shift strategies of length ``n``."""
    return {
        "cs": census(cs_strategy(n), workers=workers, check_invariants=True, limit=limit),
        "lcs": census(lcs_strategy(n), workers=workers, check_invariants=True, limit=limit),
    }
