"""Deterministic permutation-wordle games.

The player's first guess is always the identity.  After each guess the
positions that match the secret are locked; the values sitting in the ``m``
incorrect positions are rearranged by the strategy's length-``m`` component to
form the next guess.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence

from .perm import (
    Permutation,
    PermutationError,
    as_permutation,
    format_permutation,
    identity,
    is_derangement,
)


class StrategyError(ValueError):
    """Raised when a strategy violates its component invariants."""


@dataclass(frozen=True)
class Strategy:
    """A list of components ``s_1..s_n`` with ``s_k`` a permutation of length ``k``."""

    components: tuple[Permutation, ...]
    label: str | None = None

    @classmethod
    def from_lists(cls, components: Sequence[Sequence[int]], label: str | None = None) -> Strategy:
        return cls(tuple(tuple(int(v) for v in c) for c in components), label)

    @property
    def n(self) -> int:
        return len(self.components)

    def __getitem__(self, k: int) -> Permutation:
        """``S[k]``, one-indexed like the component lengths."""
        if not 1 <= k <= len(self.components):
            raise IndexError(k)
        return self.components[k - 1]

    def __str__(self) -> str:
        body = "[" + ",".join(format_permutation(c) for c in self.components) + "]"
        return f"{self.label} {body}" if self.label else body


def strategy_diagnostic(strategy: Strategy) -> str | None:
    """Return ``None`` if ``strategy`` is legal, otherwise a message naming the
    first offending component."""
    if strategy.n < 1:
        return "strategy has no components"
    for k, comp in enumerate(strategy.components, start=1):
        if len(comp) != k:
            return f"component k={k} has length {len(comp)}, expected {k}"
        try:
            as_permutation(comp)
        except PermutationError as exc:
            return f"component k={k} is not a permutation: {exc}"
        if k >= 2 and not is_derangement(comp):
            fixed = [i for i, v in enumerate(comp, start=1) if v == i]
            return (
                f"component k={k} {format_permutation(comp)} is not a derangement "
                f"(fixed points {fixed})"
            )
    return None


def validate_strategy(strategy: Strategy) -> None:
    message = strategy_diagnostic(strategy)
    if message is not None:
        raise StrategyError(message)


def feedback(guess: Sequence[int], secret: Sequence[int]) -> frozenset[int]:
    """Positions (one-indexed) at which ``guess`` agrees with ``secret``."""
    if len(guess) != len(secret):
        raise PermutationError(f"length mismatch: {len(guess)} vs {len(secret)}")
    return frozenset(i for i, (g, s) in enumerate(zip(guess, secret), start=1) if g == s)


def next_guess(
    guess: Sequence[int], incorrect_positions: Sequence[int] | frozenset[int], component: Sequence[int]
) -> Permutation:
    """Apply ``component`` to the entries at the incorrect positions.

    With ``p_1 < ... < p_m`` the sorted incorrect positions, the value at
    ``p_j`` moves to ``p_{component[j]}``; locked positions are untouched.
    """
    positions = sorted(incorrect_positions)
    m = len(positions)
    if m != len(component):
        raise PermutationError(
            f"{m} incorrect positions but component has length {len(component)}"
        )
    if m == 1:
        raise PermutationError("a single incorrect position cannot occur in a legal game")
    out = list(guess)
    for j, target in enumerate(component):
        out[positions[target - 1] - 1] = guess[positions[j] - 1]
    return tuple(out)


class OutcomeKind(str, enum.Enum):
    SOLVED = "solved"
    LOOP = "loop"
    ABORTED = "aborted"


@dataclass(frozen=True)
class Outcome:
    """How a game ended and on which turn.

    For ``LOOP`` the turn is the first turn whose guess repeats an earlier one;
    for ``ABORTED`` it is the ``max_turns`` budget.
    """

    kind: OutcomeKind
    turn: int


@dataclass(frozen=True)
class GuessRecord:
    turn: int
    guess: Permutation
    correct_positions: frozenset[int]


@dataclass(frozen=True)
class RepetitionEvent:
    """An incorrect value guessed at the same position on several turns."""

    position: int
    value: int
    turns: tuple[int, ...]
    infinite: bool = False


@dataclass(frozen=True)
class Transcript:
    secret: Permutation
    strategy: Strategy
    records: tuple[GuessRecord, ...]
    outcome: Outcome
    repetitions: tuple[RepetitionEvent, ...] = field(default=())

    @property
    def guesses(self) -> list[Permutation]:
        return [r.guess for r in self.records]

    @property
    def solved(self) -> bool:
        return self.outcome.kind is OutcomeKind.SOLVED

    def incorrect_positions(self, turn: int) -> frozenset[int]:
        n = len(self.secret)
        return frozenset(range(1, n + 1)) - self.records[turn - 1].correct_positions


def default_max_turns(n: int) -> int:
    return n * n + n


def play(
    secret: Sequence[int],
    strategy: Strategy,
    max_turns: int | None = None,
    *,
    detect_loops: bool = True,
    validate: bool = True,
) -> Transcript:
    """Play one game of ``strategy`` against ``secret``.

    A guess that recurs without the correct set having grown in between means
    the game is cycling forever (the next guess depends only on the current
    guess), so the game stops with a ``LOOP`` outcome at that turn.  The
    recurring guess is kept as the final record.
    """
    secret = as_permutation(secret)
    n = len(secret)
    if validate:
        validate_strategy(strategy)
    if strategy.n != n:
        raise StrategyError(f"strategy length {strategy.n} != secret length {n}")
    if max_turns is None:
        max_turns = default_max_turns(n)
    if max_turns < 1:
        raise ValueError("max_turns must be positive")

    comps = strategy.components
    all_positions = range(n)
    guess = identity(n)
    records: list[GuessRecord] = []
    window: set[Permutation] = set()
    prev_correct = -1
    outcome = Outcome(OutcomeKind.ABORTED, max_turns)
    for turn in range(1, max_turns + 1):
        incorrect = [i for i in all_positions if guess[i] != secret[i]]
        correct = frozenset(i + 1 for i in all_positions if guess[i] == secret[i])
        records.append(GuessRecord(turn, guess, correct))
        if not incorrect:
            outcome = Outcome(OutcomeKind.SOLVED, turn)
            break
        if detect_loops:
            if len(correct) > prev_correct:
                window.clear()
            elif guess in window:
                outcome = Outcome(OutcomeKind.LOOP, turn)
                break
            window.add(guess)
        prev_correct = len(correct)
        comp = comps[len(incorrect) - 1]
        out = list(guess)
        for j, target in enumerate(comp):
            out[incorrect[target - 1]] = guess[incorrect[j]]
        guess = tuple(out)

    transcript = Transcript(secret, strategy, tuple(records), outcome)
    return Transcript(
        secret, strategy, transcript.records, outcome, tuple(repetition_events(transcript))
    )


def repetition_events(transcript: Transcript) -> list[RepetitionEvent]:
    """Incorrect (position, value) pairs that occur in two or more guesses.

    Sorted by first turn, then position.  On a looping transcript the events
    cover the recorded prefix and are flagged ``infinite``.
    """
    secret = transcript.secret
    seen: dict[tuple[int, int], list[int]] = {}
    for rec in transcript.records:
        for pos, value in enumerate(rec.guess, start=1):
            if value != secret[pos - 1]:
                seen.setdefault((pos, value), []).append(rec.turn)
    infinite = transcript.outcome.kind is OutcomeKind.LOOP
    events = [
        RepetitionEvent(pos, value, tuple(turns), infinite)
        for (pos, value), turns in seen.items()
        if len(turns) >= 2
    ]
    events.sort(key=lambda e: (e.turns[0], e.position))
    return events


class Verdict(str, enum.Enum):
    CLEAN = "clean"
    REPEATING = "repeating"
    LOOPING = "looping"


class AbortedGame(RuntimeError):
    """A game ran out of turns without solving or detecting a loop."""


@dataclass(frozen=True)
class OffenderVerdict:
    verdict: Verdict
    events: tuple[RepetitionEvent, ...]
    transcript: Transcript

    @property
    def is_offender(self) -> bool:
        return self.verdict is not Verdict.CLEAN


def classify(transcript: Transcript) -> Verdict:
    kind = transcript.outcome.kind
    if kind is OutcomeKind.ABORTED:
        raise AbortedGame(
            f"secret {format_permutation(transcript.secret)} aborted after "
            f"{transcript.outcome.turn} turns"
        )
    if kind is OutcomeKind.LOOP:
        return Verdict.LOOPING
    return Verdict.REPEATING if transcript.repetitions else Verdict.CLEAN


def is_offender(strategy: Strategy, secret: Sequence[int], max_turns: int | None = None) -> OffenderVerdict:
    """Classify ``secret`` as clean, repeating or looping for ``strategy``.

    Raises :class:`AbortedGame` rather than reporting an unfinished game as clean.
    """
    t = play(secret, strategy, max_turns)
    return OffenderVerdict(classify(t), t.repetitions, t)


def transcript_violations(transcript: Transcript) -> list[str]:
    """Check the structural invariants every legal game must satisfy.

    Returns human-readable violations; an empty list means the transcript is
    consistent (first guess is the identity, locked positions never move or
    unlock, no state has exactly one incorrect position, a solve happens only
    on the last record).
    """
    problems = []
    secret = transcript.secret
    n = len(secret)
    records = transcript.records
    if not records or records[0].guess != identity(n):
        problems.append("first guess is not the identity")
    prev = None
    for rec in records:
        if rec.correct_positions != feedback(rec.guess, secret):
            problems.append(f"turn {rec.turn}: correct set does not match feedback")
        if n - len(rec.correct_positions) == 1:
            problems.append(f"turn {rec.turn}: exactly one incorrect position")
        if prev is not None:
            if not prev.correct_positions <= rec.correct_positions:
                problems.append(f"turn {rec.turn}: correct set shrank")
            if any(prev.guess[i - 1] != rec.guess[i - 1] for i in prev.correct_positions):
                problems.append(f"turn {rec.turn}: a locked entry moved")
        prev = rec
    solved_turns = [r.turn for r in records if len(r.correct_positions) == n]
    if transcript.outcome.kind is OutcomeKind.SOLVED:
        if solved_turns != [transcript.outcome.turn]:
            problems.append(f"solved turns {solved_turns} inconsistent with outcome")
    elif solved_turns:
        problems.append("unsolved outcome but some record is fully correct")
    return problems
