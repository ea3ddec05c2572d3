"""Exit criteria for the package; each test reports one PASS/FAIL line."""
import contextlib
import time

import pytest

from conftest import ACCEPTANCE_LINES
from permwordle.construct import (
    CaseTag,
    classify_top,
    construct_contains2,
    construct_left,
    construct_min_mu,
    construct_right,
    cs_strategy,
    csl_strategy,
    inductive_strategy,
    lcs_strategy,
    left_shift_component,
    loop_offender,
    right_shift_component,
)
from permwordle.game import OutcomeKind, Strategy, Verdict, is_offender, play
from permwordle.oracle import census, csl_sequence, default_workers, verify_theorem
from permwordle.perm import (
    compose,
    displacement,
    enumerate_derangements,
    enumerate_permutations,
    identity,
    inverse,
    is_derangement,
    left_displacement,
    mirror,
)


@contextlib.contextmanager
def criterion(label):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        ACCEPTANCE_LINES.append(f"FAIL  {label}  ({time.perf_counter() - start:.2f}s)")
        raise
    ACCEPTANCE_LINES.append(f"PASS  {label}  ({time.perf_counter() - start:.2f}s)")


EXAMPLE = Strategy.from_lists([[1], [2, 1], [2, 3, 1], [2, 1, 4, 3], [3, 4, 5, 2, 1]])


def test_ac1_golden_transcript():
    with criterion("AC1 golden transcript, exact, < 1 ms"):
        t = play([4, 1, 5, 2, 3], EXAMPLE)
        assert t.guesses == [(1, 2, 3, 4, 5), (5, 4, 1, 2, 3), (1, 5, 4, 2, 3), (4, 1, 5, 2, 3)]
        assert [t.incorrect_positions(k) for k in range(1, 5)] == [{1, 2, 3, 4, 5}, {1, 2, 3}, {1, 2, 3}, set()]
        assert t.outcome.kind is OutcomeKind.SOLVED and t.outcome.turn == 4
        assert [(e.position, e.value, e.turns) for e in t.repetitions] == [(1, 1, (1, 3))]
        timings = []
        for _ in range(50):
            start = time.perf_counter()
            play([4, 1, 5, 2, 3], EXAMPLE)
            timings.append(time.perf_counter() - start)
        assert min(timings) < 1e-3


def test_ac2_contains2_example():
    with criterion("AC2 contains-2 construction [2,4,1,3] -> [4,1,2,3]"):
        built = construct_contains2([2, 4, 1, 3])
        assert built.omega == (4, 1, 2, 3)
        g = built.evidence.guesses
        assert g[1] == (3, 1, 4, 2) and g[2] == (2, 1, 3, 4) and g[3] == (4, 1, 2, 3)


def test_ac3_min_mu_example():
    with criterion("AC3 min-mu construction [3,4,6,5,1,2] -> [5,6,4,3,1,2]"):
        built = construct_min_mu([3, 4, 6, 5, 1, 2])
        assert built.omega == (5, 6, 4, 3, 1, 2)
        assert built.evidence.guesses[2] == (5, 6, 3, 1, 2, 4)


def test_ac4_loop_detection():
    with criterion("AC4 loop detection on the three loop examples"):
        for top, secret in (([2, 1, 4, 3], [3, 4, 1, 2]), ([3, 4, 1, 2], [2, 1, 4, 3])):
            t = play(secret, inductive_strategy(top))
            assert t.outcome.kind is OutcomeKind.LOOP and t.outcome.turn <= 3
        delta = [2, 3, 1, 5, 4, 7, 6, 9, 10, 8]
        built = loop_offender(delta)
        assert built.omega == (8, 9, 10, 6, 7, 4, 5, 1, 2, 3)
        assert play(built.omega, inductive_strategy(delta)).outcome.kind is OutcomeKind.LOOP


GAME_INVARIANT_VIOLATIONS = {}


def test_ac5_pure_shifts_exhaustive():
    with criterion("AC5 cs/lcs have 0 offenders for n=4..7, n=7 < 10 s single-threaded"):
        violations = 0
        for n in range(4, 8):
            start = time.perf_counter()
            for strategy in (cs_strategy(n), lcs_strategy(n)):
                c = census(strategy, workers=1, check_invariants=True)
                assert sum(c.counts.values()) == len(list(enumerate_permutations(n)))
                assert c.total_offenders == 0
                violations += c.invariant_violations
            if n == 7:
                assert time.perf_counter() - start < 10
        GAME_INVARIANT_VIOLATIONS["ac5"] = violations


def test_ac6_csl_sequence():
    with criterion("AC6 CSL sequence 4, 35, 244, 1813, 14740; n=8 < 60 s"):
        workers = default_workers()
        assert csl_sequence(7, workers=workers) == [4, 35, 244, 1813]
        start = time.perf_counter()
        c8 = census(csl_strategy(8), workers=workers, check_invariants=True)
        assert time.perf_counter() - start < 60
        assert c8.total_offenders == 14740
        assert csl_sequence(7, workers=workers) + [c8.total_offenders] == [4, 35, 244, 1813, 14740]
        violations = c8.invariant_violations
        for n in range(4, 8):
            violations += census(csl_strategy(n), check_invariants=True).invariant_violations
        GAME_INVARIANT_VIOLATIONS["ac6"] = violations


def test_ac7_every_strategy_exhaustive():
    with criterion("AC7 every strategy: 18 strategies at n=4, 792 at n=5, 0 failures, n=5 < 30 s"):
        r4 = verify_theorem(4)
        assert r4.strategies_checked == 18 and r4.failures == []
        start = time.perf_counter()
        r5 = verify_theorem(5)
        assert time.perf_counter() - start < 30
        assert r5.strategies_checked == 792 and r5.failures == []
        assert r4.cs_exceptions == r5.cs_exceptions == {"cs": 0, "lcs": 0}
        GAME_INVARIANT_VIOLATIONS["ac7"] = r4.invariant_violations + r5.invariant_violations


def test_ac8a_algebraic_properties():
    with criterion("AC8a displacement complement, inverse round trip, mirror involution, n<=6"):
        for n in range(1, 7):
            for p in enumerate_permutations(n):
                r, l = displacement(p).values, left_displacement(p).values
                assert all((a + b) % n == 0 for a, b in zip(r, l))
                assert inverse(inverse(p)) == p and compose(p, inverse(p)) == identity(n)
                assert mirror(mirror(p)) == p


def test_ac8b_game_invariants():
    with criterion("AC8b lock-in and no singleton incorrect set over all games of AC5-AC7"):
        if set(GAME_INVARIANT_VIOLATIONS) != {"ac5", "ac6", "ac7"}:
            pytest.fail("run together with AC5-AC7")
        assert sum(GAME_INVARIANT_VIOLATIONS.values()) == 0


def test_ac8c_mirror_soundness():
    with criterion("AC8c mirrored constructions are offenders for left-base strategies, n<=6"):
        for n in range(4, 7):
            for top in enumerate_derangements(n):
                if top in (left_shift_component(n), right_shift_component(n)):
                    continue
                omega = mirror(construct_right(mirror(top)).omega)
                assert is_offender(inductive_strategy(top, "left"), omega).verdict in (
                    Verdict.REPEATING, Verdict.LOOPING
                )
                assert construct_left(top).omega == omega


def test_ac8d_dispatch_totality():
    with criterion("AC8d every derangement top 4<=n<=7 hits exactly one construction case"):
        allowed = {
            CaseTag.CONTAINS_2, CaseTag.MIN_MU, CaseTag.INVOLUTION_ALTERNATING,
            CaseTag.ALL_TWO_SPECIAL, CaseTag.SUB_CSL, CaseTag.NO_OFFENDER,
        }
        for n in range(4, 8):
            for top in enumerate_derangements(n):
                assert is_derangement(top)
                tag = classify_top(top)
                assert tag in allowed
                if tag is CaseTag.NO_OFFENDER:
                    assert top == right_shift_component(n)
