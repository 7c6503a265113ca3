"""
How far apart do two automata behave?
=====================================

The bounded-length distance is the largest absolute weight difference
over all words up to length k. The genetic estimate searches both
difference automata and is a lower bound; small spaces can be checked
exactly.
"""

from wfamax import GaConfig, build_paren_spec, distance_estimate, distance_exact, make_wfa

# Perturb one transition weight of the parenthesis automaton: state 0
# reads "(" into state 2 with weight 9/10 instead of 1.
spec = build_paren_spec()
mats = [list(list(row) for row in m) for m in spec.transitions]
mats[spec.alphabet.index("(")][0][2] = "9/10"
variant = make_wfa(spec.alphabet, spec.initial, spec.final,
                   dict(zip(spec.alphabet, mats)))

k = 6
cfg = GaConfig(k=k, population_size=100, rng_seed=0)
estimate, wit_ab, wit_ba = distance_estimate(spec, variant, k, cfg,
                                             max_generations=40)
print(f"genetic lower bound on the distance at k={k}: {estimate}")
print("worst words found (variant minus spec):")
for word, weight in wit_ba[:3]:
    text = "".join(spec.alphabet[s] for s in word)
    print(f"  {text!r:12} difference {weight}")

# k=6 over twelve symbols is ~3.2 million words, within enumeration reach.
value, witness = distance_exact(spec, variant, k)
text = "".join(spec.alphabet[s] for s in witness)
print(f"\nexact distance: {value}, attained by {text!r}")
print("estimate matches exact:" , estimate == value)
