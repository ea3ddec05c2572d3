# Building an offending secret for any strategy other than the pure shifts.
from permwordle import displacement, format_permutation, inverse
from permwordle.construct import (
    construct_contains2,
    construct_general,
    construct_min_mu,
    csl_offender,
    inductive_strategy,
)
from permwordle.game import Strategy

# The constructions read the displacement vector of the second guess, which is
# the inverse of the top component.
top = (2, 4, 1, 3)
print("d(top^-1) =", displacement(inverse(top)).values)
built = construct_contains2(top)
print("contains a 2 ->", format_permutation(built.omega), built.case.detail)
print("  guesses:", [format_permutation(g) for g in built.evidence.guesses])

built = construct_min_mu((3, 4, 6, 5, 1, 2))
print("no 2, mu = {mu}, iota = {iota} ->".format(**built.case.detail), format_permutation(built.omega))

built = csl_offender(6)
print("csl:6 ->", format_permutation(built.omega), "repeats", sorted({e.value for e in built.evidence.repetitions}))

# A general strategy is reduced to the first level that breaks the base shift
# direction; the remaining positions are fixed points.
s = Strategy.from_lists([[1], [2, 1], [3, 1, 2], [4, 1, 2, 3], [2, 4, 5, 3, 1], [2, 3, 4, 5, 6, 1]])
built = construct_general(s)
print("\nleft base, kappa = {kappa}:".format(**built.case.detail), format_permutation(built.omega),
      built.case.tag.value)
for e in built.evidence.repetitions:
    print("  value", e.value, "at position", e.position, "on guesses", e.turns)

print("\ncs:6 ->", construct_general(inductive_strategy((2, 3, 4, 5, 6, 1))))
