"""
Evaluating words and composing automata
=======================================

Build a couple of tiny weighted automata, read off word weights, and
combine them so the weights add, subtract, multiply and shift.
"""

from wfamax import (
    add,
    add_scalar,
    build_paren_spec,
    eval_weight,
    make_wfa,
    product,
    subtract,
)

# A one-state automaton: every "a" doubles the weight, so W(a^n) = 2^n.
doubling = make_wfa(("a",), [1], [1], {"a": [[2]]})
for n in (1, 2, 3, 5):
    print(f"W(a^{n}) = {eval_weight(doubling, (0,) * n)}")

# The same alphabet with weight 3 per symbol.
tripling = make_wfa(("a",), [1], [1], {"a": [[3]]})

# Composition acts on weights, not on state graphs: the sum automaton
# evaluates to 2^n + 3^n, the product to 6^n, and so on.
word = (0, 0, 0)
print("\nsum       ", eval_weight(add(doubling, tripling), word))
print("difference", eval_weight(subtract(tripling, doubling), word))
print("product   ", eval_weight(product(doubling, tripling), word))
print("shifted   ", eval_weight(add_scalar(doubling, "1/2"), word))

# An 8-state automaton scoring parenthesized expressions: 1/2 for a
# balanced word of depth one, 3/4 for depth two, 0 otherwise.
paren = build_paren_spec()
print()
for text in ("(1)(2)", "((1))(2)", "((1(2)"):
    w = tuple(paren.alphabet.index(c) for c in text)
    print(f"paren automaton on {text!r}: {eval_weight(paren, w)}")
