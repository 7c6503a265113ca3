"""
Measuring the saving from block-product tables
==============================================

Evaluating a word multiplies the state vector by one matrix per symbol.
A table holding the products of all short blocks lets the evaluator jump
several symbols per lookup. The instrumented multiplication counter
makes the saving visible.
"""

import random

from wfamax import (
    build_table,
    default_block_size,
    eval_weight,
    eval_weight_memo,
    gen_random_wfa,
    mult_count,
    reset_mult_count,
)

# A dense 10-state automaton over four symbols, the operating point where
# the table pays for itself quickly.
wfa = gen_random_wfa(10, 4, weight_profile="dense", rng_seed=7, normalize=False)
block = default_block_size(4, 10)
print(f"states: {wfa.n_states}, symbols: {len(wfa.alphabet)}, block size: {block}")

rng = random.Random(0)
words = [tuple(rng.randrange(4) for _ in range(20)) for _ in range(2000)]

reset_mult_count()
direct = [eval_weight(wfa, w) for w in words]
direct_mults = mult_count()

table = build_table(wfa, block)
reset_mult_count()
memoized = [eval_weight_memo(wfa, table, w) for w in words]
memo_mults = mult_count()

assert memoized == direct  # the table changes the cost, never the value

print(f"direct evaluation:   {direct_mults:>12,} multiplications")
print(f"through the table:   {memo_mults:>12,} multiplications")
print(f"saving:              {direct_mults / memo_mults:.1f}x "
      f"(table holds {len(table.entries):,} block products)")
