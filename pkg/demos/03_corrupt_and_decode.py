"""Corrupt a codeword every possible way, then decode every result.

A corruption deletes one symbol and flips at most one other.  The
receiver sees an (n-1)-bit word and asks: which codewords could have
produced this?  The answer is never more than two, and the transmitted
word is always one of them.
"""

from delsub import (
    Word,
    choose_params,
    enumerate_code,
    error_ball,
    iter_corruptions,
    list_decode,
    list_decode_brute,
)

params, stats = choose_params(12)
code = list(enumerate_code(params))
print(f"{params}: {stats.size} codewords")

x = code[0]
print(f"transmitting {x}; its corruption ball holds {len(error_ball(x))} distinct words")

worst = 0
brute_cost = pruned_cost = 0
for event, received in iter_corruptions(x):
    result = list_decode(received, params)
    brute = list_decode_brute(received, params)
    assert result.candidates == brute.candidates, "pruning must not change the answer"
    assert x in result.words, "the transmitted word must always be listed"
    worst = max(worst, len(result.candidates))
    pruned_cost += result.examined
    brute_cost += brute.examined
print(f"decoded all {12 * 12} corruption events; worst list size {worst}")
print(f"membership tests: brute {brute_cost}, pruned {pruned_cost} "
      f"({brute_cost / pruned_cost:.1f}x fewer)")
print()

# A two-candidate list in action: find a received word claimed by two codewords.
for y_val in range(1 << 11):
    result = list_decode(Word(11, y_val), params)
    if len(result.candidates) == 2:
        (w1, ev1), (w2, ev2) = result.candidates
        print(f"received {Word(11, y_val)} is explained by both:")
        print(f"  {w1} via delete {ev1.d}, flip {ev1.e}")
        print(f"  {w2} via delete {ev2.d}, flip {ev2.e}")
        break
