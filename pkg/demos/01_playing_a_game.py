# Playing permutation wordle with a fixed strategy.
#
# A strategy is a list of components s_1..s_n.  After each guess the correct
# positions are locked and the k wrong entries are rearranged by s_k.
from permwordle import Strategy, format_permutation, play
from permwordle.cli import transcript_text
from permwordle.construct import cs_strategy

strategy = Strategy.from_lists([[1], [2, 1], [2, 3, 1], [2, 1, 4, 3], [3, 4, 5, 2, 1]], "example")
t = play([4, 1, 5, 2, 3], strategy)
print(transcript_text(t))

# The value 1 sits in position 1 on guesses 1 and 3, although guess 1
# already showed it is wrong there.
for e in t.repetitions:
    print("repeated:", e)

# Cyclic shift never does this; every guess is a new placement.
t = play([4, 1, 5, 2, 3], cs_strategy(5))
print("\ncyclic shift:", [format_permutation(g) for g in t.guesses], "repetitions:", t.repetitions)
