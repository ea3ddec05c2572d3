"""Named strategies and constructors for offending permutations.

An offending permutation ``omega`` for a strategy is a secret on which the
strategy guesses some wrong value at the same position twice, or never
finishes.  Each constructor below builds one candidate from the top component
of an inductive strategy, then replays the game and attaches the transcript
as evidence, so a returned :class:`ConstructedOffender` is always verified.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Literal, Sequence

from .game import (
    OutcomeKind,
    Strategy,
    StrategyError,
    Transcript,
    play,
    validate_strategy,
)
from .perm import (
    Permutation,
    as_permutation,
    cycle_decomposition,
    displacement,
    format_permutation,
    inverse,
    is_derangement,
    mirror,
)

Direction = Literal["right", "left"]


class ConstructionError(ValueError):
    """Raised when a constructor's preconditions do not hold."""


class CaseTag(str, enum.Enum):
    CONTAINS_2 = "Contains2"
    MIN_MU = "MinMu"
    INVOLUTION_ALTERNATING = "InvolutionAlternating"
    ALL_TWO_SPECIAL = "AllTwoSpecial"
    SUB_CSL = "SubCSL"
    SUB_CSR = "SubCSR"
    LOOP = "Loop"
    NO_OFFENDER = "NoOffender"


@dataclass(frozen=True)
class ConstructionCase:
    tag: CaseTag
    detail: dict = field(default_factory=dict)


@dataclass(frozen=True)
class ConstructedOffender:
    omega: Permutation
    case: ConstructionCase
    evidence: Transcript


# -- strategies -------------------------------------------------------------

def right_shift_component(m: int) -> Permutation:
    """``[2, 3, ..., m, 1]``; ``[1]`` when ``m == 1``."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    return tuple(range(2, m + 1)) + (1,)


def left_shift_component(m: int) -> Permutation:
    """``[m, 1, 2, ..., m-1]``; ``[1]`` when ``m == 1``."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    return (m,) + tuple(range(1, m))


def shift_component(m: int, direction: Direction) -> Permutation:
    if direction == "right":
        return right_shift_component(m)
    if direction == "left":
        return left_shift_component(m)
    raise ValueError(f"direction must be 'right' or 'left', got {direction!r}")


def cs_strategy(n: int) -> Strategy:
    return Strategy(tuple(right_shift_component(k) for k in range(1, n + 1)), f"cs:{n}")


def lcs_strategy(n: int) -> Strategy:
    return Strategy(tuple(left_shift_component(k) for k in range(1, n + 1)), f"lcs:{n}")


def csl_strategy(n: int) -> Strategy:
    """Right shifts below the top, a left shift on top."""
    if n < 2:
        raise ValueError("csl needs n >= 2")
    comps = tuple(right_shift_component(k) for k in range(1, n)) + (left_shift_component(n),)
    return Strategy(comps, f"csl:{n}")


def csr_strategy(n: int) -> Strategy:
    """Left shifts below the top, a right shift on top."""
    if n < 2:
        raise ValueError("csr needs n >= 2")
    comps = tuple(left_shift_component(k) for k in range(1, n)) + (right_shift_component(n),)
    return Strategy(comps, f"csr:{n}")


def inductive_strategy(top: Sequence[int], base_direction: Direction = "right") -> Strategy:
    """Uniform ``base_direction`` shifts below an arbitrary derangement ``top``."""
    top = as_permutation(top)
    n = len(top)
    if n < 2:
        raise ValueError("inductive strategies need n >= 2")
    if not is_derangement(top):
        raise StrategyError(f"top component {format_permutation(top)} is not a derangement")
    comps = tuple(shift_component(k, base_direction) for k in range(1, n)) + (top,)
    return Strategy(comps, f"inductive:{base_direction}:{format_permutation(top)}")


def is_pure_shift(strategy: Strategy, direction: Direction) -> bool:
    return all(
        c == shift_component(k, direction) for k, c in enumerate(strategy.components, start=1)
    )


# -- helpers ----------------------------------------------------------------

def _evidence(omega: Sequence[int], strategy: Strategy, case: ConstructionCase) -> ConstructedOffender:
    omega = as_permutation(omega)
    t = play(omega, strategy)
    if t.outcome.kind is not OutcomeKind.LOOP and not t.repetitions:
        raise ConstructionError(
            f"{case.tag.value} produced {format_permutation(omega)}, which is not "
            f"an offender for {strategy}"
        )
    return ConstructedOffender(omega, case, t)


def _require_derangement(top: Sequence[int], min_n: int) -> Permutation:
    top = as_permutation(top)
    if len(top) < min_n:
        raise ConstructionError(f"need length >= {min_n}, got {len(top)}")
    if not is_derangement(top):
        raise ConstructionError(f"{format_permutation(top)} is not a derangement")
    return top


def _shift_twice(inv: Permutation, locked: set[int]) -> list[int]:
    """Move every unlocked value two steps right along the unlocked positions."""
    n = len(inv)
    omega = [0] * n
    for i in locked:
        omega[i - 1] = inv[i - 1]
    free = [i for i in range(1, n + 1) if i not in locked]
    m = len(free)
    for j, pos in enumerate(free):
        omega[free[(j + 2) % m] - 1] = inv[pos - 1]
    return omega


def _wrap(i: int, n: int) -> int:
    """Map any integer onto the one-indexed cycle ``1..n``."""
    return (i - 1) % n + 1


def _is_all_two_special(top: Permutation) -> bool:
    return top == (3, 4, 1, 2)


def _is_alternating_involution(top: Permutation) -> bool:
    n = len(top)
    d = displacement(inverse(top)).values
    if n < 4 or n % 2 or not set(d) <= {1, n - 1} or len(set(d)) != 2:
        return False
    return all(d[i] != d[(i + 1) % n] for i in range(n))


# -- constructions ----------------------------------------------------------

def construct_contains2(top: Sequence[int]) -> ConstructedOffender:
    """Offender for an inductive right-base strategy whose ``d(top^-1)`` has a 2.

    Positions right after each chosen index are locked to ``top^-1``, so on the
    third guess the entry with displacement 2 skips the lock and lands back in
    its home position.
    """
    top = _require_derangement(top, 4)
    n = len(top)
    if _is_all_two_special(top):
        raise ConstructionError("top [3,4,1,2] needs the loop construction")
    inv = inverse(top)
    d = displacement(inv)
    if 2 not in d:
        raise ConstructionError(f"d(top^-1) = {list(d.values)} contains no 2")

    twos = [i for i in range(1, n + 1) if d[i] == 2]
    # at n = 4 the n - 3 cap already stops after index 1, which is what
    # [2,4,1,3] -> [4,1,2,3] requires
    if twos == [1, n] and n >= 5:
        chosen = [n]
    else:
        chosen = []
        for i in twos:
            if len(chosen) == n - 3:
                break
            if i - 1 in chosen:
                continue
            # i = n would lock position 1, which must stay free when 1 is chosen
            if i == n and 1 in chosen:
                continue
            chosen.append(i)
    locked = {_wrap(i + 1, n) for i in chosen}
    omega = _shift_twice(inv, locked)
    case = ConstructionCase(CaseTag.CONTAINS_2, {"K": chosen, "locked": sorted(locked)})
    return _evidence(omega, inductive_strategy(top, "right"), case)


def construct_min_mu(top: Sequence[int]) -> ConstructedOffender:
    """Offender when ``d(top^-1)`` has no 2 but some entry in ``3..n-2``.

    ``mu`` is the smallest displacement other than 1 and ``iota`` its first
    index; the ``mu - 1`` positions after ``iota`` are locked so that the
    entry at ``iota`` skips them and returns home on the third guess.
    """
    top = _require_derangement(top, 5)
    n = len(top)
    inv = inverse(top)
    d = displacement(inv)
    if 2 in d:
        raise ConstructionError("d(top^-1) contains a 2; use construct_contains2")
    if not any(3 <= e <= n - 2 for e in d.values):
        raise ConstructionError(f"d(top^-1) = {list(d.values)} has no entry in 3..{n - 2}")
    mu = min(e for e in d.values if e != 1)
    iota = d.values.index(mu) + 1
    locked = {_wrap(iota + k, n) for k in range(1, mu)}
    omega = _shift_twice(inv, locked)
    case = ConstructionCase(CaseTag.MIN_MU, {"mu": mu, "iota": iota, "locked": sorted(locked)})
    return _evidence(omega, inductive_strategy(top, "right"), case)


def loop_secret(delta: Sequence[int]) -> Permutation:
    """Secret that traps ``delta`` in an endless cycle of guesses.

    Cycles of equal length are paired off in canonical order (shorter lengths
    first, then by minimal element) and each cycle's elements are sent to the
    next cycle's elements, wrapping around within the group.
    """
    delta = as_permutation(delta)
    if not is_derangement(delta):
        raise ConstructionError(f"{format_permutation(delta)} is not a derangement")
    decomp = cycle_decomposition(delta)
    lonely = [t for t, mult in decomp.multiplicities.items() if mult < 2]
    if lonely:
        raise ConstructionError(
            f"cycle lengths {lonely} occur only once in {decomp}; every length needs multiplicity >= 2"
        )
    omega = [0] * len(delta)
    for length in decomp.multiplicities:
        group = [c for c in decomp.cycles if len(c) == length]
        for j, cyc in enumerate(group):
            nxt = group[(j + 1) % len(group)]
            for a in range(length):
                omega[cyc[a] - 1] = nxt[a]
    return tuple(omega)


def loop_offender(delta: Sequence[int]) -> ConstructedOffender:
    """Loop construction for the right-base inductive strategy with top ``delta``."""
    omega = loop_secret(delta)
    decomp = cycle_decomposition(delta)
    case = ConstructionCase(CaseTag.LOOP, {"cycles": [list(c) for c in decomp.cycles]})
    return _evidence(omega, inductive_strategy(delta, "right"), case)


def construct_involution(top: Sequence[int]) -> ConstructedOffender:
    """Loop offender for the adjacent-transposition involutions and for ``[3,4,1,2]``."""
    top = _require_derangement(top, 4)
    n = len(top)
    if _is_all_two_special(top):
        omega: Permutation = (2, 1, 4, 3)
        case = ConstructionCase(CaseTag.ALL_TWO_SPECIAL)
    elif _is_alternating_involution(top):
        omega = tuple(range(3, n + 1)) + (1, 2)
        case = ConstructionCase(CaseTag.INVOLUTION_ALTERNATING)
    else:
        raise ConstructionError(
            f"{format_permutation(top)} is neither an alternating involution nor [3,4,1,2]"
        )
    return _evidence(omega, inductive_strategy(top, "right"), case)


def csl_secret(n: int) -> Permutation:
    """``[2, n, 1, 3, 4, ..., n-1]``."""
    if n < 4:
        raise ConstructionError(f"csl offender needs n >= 4, got {n}")
    return (2, n, 1) + tuple(range(3, n))


def csr_secret(n: int) -> Permutation:
    """``[n, 3, 4, ..., n-1, 1, 2]``."""
    if n < 4:
        raise ConstructionError(f"csr offender needs n >= 4, got {n}")
    return (n,) + tuple(range(3, n)) + (1, 2)


def csl_offender(n: int) -> ConstructedOffender:
    return _evidence(csl_secret(n), csl_strategy(n), ConstructionCase(CaseTag.SUB_CSL))


def csr_offender(n: int) -> ConstructedOffender:
    return _evidence(csr_secret(n), csr_strategy(n), ConstructionCase(CaseTag.SUB_CSR))


def classify_top(top: Sequence[int], base_direction: Direction = "right") -> CaseTag:
    """Which construction handles the inductive strategy with this top component.

    Exactly one tag is returned for every derangement of length >= 4; the
    pure ``base_direction`` shift maps to ``NO_OFFENDER``.
    """
    top = _require_derangement(top, 4)
    n = len(top)
    if base_direction == "left":
        tag = classify_top(mirror(top), "right")
        return CaseTag.SUB_CSR if tag is CaseTag.SUB_CSL else tag
    if top == right_shift_component(n):
        return CaseTag.NO_OFFENDER
    d = displacement(inverse(top))
    if set(d.values) == {1}:
        return CaseTag.SUB_CSL
    if _is_all_two_special(top):
        return CaseTag.ALL_TWO_SPECIAL
    if _is_alternating_involution(top):
        return CaseTag.INVOLUTION_ALTERNATING
    if 2 in d:
        return CaseTag.CONTAINS_2
    if any(3 <= e <= n - 2 for e in d.values):
        return CaseTag.MIN_MU
    raise ConstructionError(f"no construction case for {format_permutation(top)}")  # pragma: no cover


def construct_right(top: Sequence[int]) -> ConstructedOffender:
    """Dispatch on ``d(top^-1)`` for the right-base inductive strategy."""
    top = as_permutation(top)
    tag = classify_top(top, "right")
    if tag is CaseTag.NO_OFFENDER:
        raise ConstructionError("the pure right shift has no offending permutation")
    if tag is CaseTag.SUB_CSL:
        return csl_offender(len(top))
    if tag in (CaseTag.ALL_TWO_SPECIAL, CaseTag.INVOLUTION_ALTERNATING):
        return construct_involution(top)
    if tag is CaseTag.CONTAINS_2:
        return construct_contains2(top)
    return construct_min_mu(top)


def construct_left(top: Sequence[int]) -> ConstructedOffender:
    """Left-base construction obtained by conjugating with :func:`mirror`.

    The opposite-shift top goes to the explicit CSR formula instead.
    """
    top = as_permutation(top)
    n = len(top)
    if top == left_shift_component(n):
        raise ConstructionError("the pure left shift has no offending permutation")
    if top == right_shift_component(n):
        return csr_offender(n)
    right = construct_right(mirror(top))
    return _evidence(mirror(right.omega), inductive_strategy(top, "left"), right.case)


def construct_inductive(top: Sequence[int], base_direction: Direction = "right") -> ConstructedOffender:
    return construct_right(top) if base_direction == "right" else construct_left(top)


def kappa(strategy: Strategy) -> tuple[Direction, int | None]:
    """Base direction (from ``S[3]``) and the first level ``k >= 4`` that breaks it.

    The level is ``None`` for a pure shift strategy.
    """
    n = strategy.n
    if n < 3:
        return "right", None
    direction: Direction = "right" if strategy[3] == right_shift_component(3) else "left"
    for k in range(4, n + 1):
        if strategy[k] != shift_component(k, direction):
            return direction, k
    return direction, None


def construct_general(strategy: Strategy) -> ConstructedOffender | None:
    """Offending permutation for any legal strategy, or ``None`` for pure shifts.

    The sub-game on the first ``kappa`` positions is an inductive strategy;
    the construction for it is extended by fixed points ``kappa+1..n`` which
    are locked by the opening identity guess.
    """
    validate_strategy(strategy)
    direction, k = kappa(strategy)
    if k is None:
        return None
    sub = construct_inductive(strategy[k], direction)
    omega = sub.omega + tuple(range(k + 1, strategy.n + 1))
    detail = dict(sub.case.detail, kappa=k, base=direction)
    return _evidence(omega, strategy, ConstructionCase(sub.case.tag, detail))
