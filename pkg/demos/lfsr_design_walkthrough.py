"""
Designing a word-based LFSR from a maximal extension
=====================================================

Three 3-bit words per clock over F_2, two delay blocks, and a feedback
polynomial of degree 6. The walk starts from a full-rank 3x3 state and grows
it one column per iteration until the (2,2,2)-extension has dimension 6.
"""

import json
from pathlib import Path

from rextension import Mat, MultiseqState, parse_poly
from rextension.lfsr import feedback_blocks, period, register_state, stacked_state, transition_from_multiseq
from rextension.multiseq import extension_dimension
from rextension.rroad import backward_traverse
from rextension.synthesis import ChoiceScript, PolyLadder, lift, realign

q = 2
R = (2, 2, 2)
ladder = PolyLadder(q, {d: parse_poly(t, q) for d, t in
                        {3: "s^3+s+1", 4: "s^4+s+1", 5: "s^5+s^2+1", 6: "s^6+s+1"}.items()})

# the free choices live in a small JSON file so the run can be replayed
script = json.loads((Path(__file__).parent / "data" / "worked_example_choices.json").read_text())
choices = ChoiceScript.from_json(script, q)

s = MultiseqState(choices.initial_state, ladder[3])
print("start", s.state.tolist())

###############################################################################
# Each step of the backward road walk picks an active row, shifts the whole
# state until that row is the last unit vector, then appends one element to
# every other row and moves to the next primitive polynomial.

for (G, c), d in zip(backward_traverse(R), choices.appended):
    s = realign(s, c)
    print(f"at {G.parts}, active row {c}: realigned {s.state.tolist()}")
    s = lift(s, c, d, ladder[s.n + 1])
    print(f"    appended {d} -> {s.state.tolist()}")

print("final state", s.state.tolist())
print("extension dimension", extension_dimension(s, R))

###############################################################################
# The stacked state [M; MA] is invertible, and conjugating the companion matrix
# by it gives the block transition matrix of the register.

print("stacked state")
print(stacked_state(s, 2))
A = transition_from_multiseq(s)
print("transition matrix")
print(A.mat)

spec = feedback_blocks(A)
for j, B in enumerate(spec.blocks):
    print(f"B_{j} =", B.tolist())

# the register never revisits a state before 2^6 - 1 clocks
print("period", period(spec, register_state(s, 2)))
