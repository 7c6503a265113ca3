"""
Why bounded weight questions are hard
=====================================

A directed graph has a Hamiltonian cycle exactly when its derived
automaton has a word of length |V| whose weight hits a target value.
The instance can then be reshaped: onto a two-letter alphabet, and from
an equality target into a threshold question.
"""

from wfamax import (
    DiGraph,
    berp_to_btrp,
    eval_weight,
    exhaustive_search,
    hcp_to_berp,
    to_two_symbols,
)

# The directed triangle 0 -> 1 -> 2 -> 0 has an obvious Hamiltonian cycle.
triangle = DiGraph(3, [(0, 1), (1, 2), (2, 0)])
inst = hcp_to_berp(triangle)
print(f"alphabet: {inst.wfa.alphabet}")
print(f"question: is there a word of length <= {inst.length_bound} "
      f"with weight exactly {inst.target}?")

ranked = exhaustive_search(inst.wfa, inst.length_bound, top_n=3)
for word, weight in ranked:
    text = " ".join(inst.wfa.alphabet[s] for s in word)
    mark = "  <- hits the target" if weight == inst.target else ""
    print(f"  {text:16} weighs {weight}{mark}")

# Drop an edge and the target becomes unreachable.
broken = hcp_to_berp(DiGraph(3, [(0, 1), (1, 2)]))
top = exhaustive_search(broken.wfa, 3, top_n=1)[0]
print(f"\nwithout the closing edge the best weight is {top[1]}, "
      f"target {broken.target} is unreachable")

# The same question over the alphabet {a, b}: each edge symbol becomes a
# short binary code, the length bound stretches accordingly.
two = to_two_symbols(inst)
code = "aaabba"
word = tuple("ab".index(c) for c in code)
print(f"\ntwo-symbol form: {two.wfa.n_states} states, length bound "
      f"{two.length_bound}; the encoded cycle {code!r} weighs "
      f"{eval_weight(two.wfa, word)}")

# And as a threshold question: the rewritten automaton is capped at 1,
# reaching 1 exactly where the original automaton hit its target.
thr_wfa, thr_k, threshold = berp_to_btrp(inst)
best = exhaustive_search(thr_wfa, thr_k, top_n=1)[0]
text = " ".join(inst.wfa.alphabet[s] for s in best[0])
print(f"\nthreshold form peaks at {best[1]} (threshold {threshold}) on {text!r}")
