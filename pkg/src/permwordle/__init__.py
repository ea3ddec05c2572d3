"""Permutation wordle: game simulation, offending-permutation construction and
exhaustive verification."""
from .perm import (
    CycleDecomposition,
    DisplacementVector,
    LimitExceeded,
    Permutation,
    PermutationError,
    as_permutation,
    compose,
    cycle_decomposition,
    displacement,
    enumerate_derangements,
    enumerate_permutations,
    format_permutation,
    identity,
    inverse,
    is_derangement,
    left_displacement,
    mirror,
    parse_permutation,
    subfactorial,
)
from .game import (
    AbortedGame,
    GuessRecord,
    OffenderVerdict,
    Outcome,
    OutcomeKind,
    RepetitionEvent,
    Strategy,
    StrategyError,
    Transcript,
    Verdict,
    feedback,
    is_offender,
    next_guess,
    play,
    repetition_events,
    strategy_diagnostic,
    validate_strategy,
)

__version__ = "0.1.0"
