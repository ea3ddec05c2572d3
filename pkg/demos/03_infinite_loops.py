# Strategies whose top component has repeated cycle lengths can cycle forever.
from permwordle import cycle_decomposition, format_permutation, play
from permwordle.construct import inductive_strategy, loop_offender

delta = (2, 3, 1, 5, 4, 7, 6, 9, 10, 8)
print("delta =", cycle_decomposition(delta))
built = loop_offender(delta)
print("secret =", format_permutation(built.omega))
t = built.evidence
for r in t.records:
    print(f"  guess {r.turn}: {format_permutation(r.guess)}  correct {sorted(r.correct_positions)}")
print("outcome:", t.outcome)

# Without loop detection the game simply runs out of turns.
long = play(built.omega, inductive_strategy(delta), max_turns=60, detect_loops=False)
print("60 turns without detection:", long.outcome)
