"""Weight maximization for weighted finite automata over exact rationals.

The library evaluates automata exactly, composes them algebraically,
accelerates evaluation with precomputed matrix-product tables, maximizes
word weight with a genetic algorithm against baseline solvers, measures
worst-case distance between automata, and builds NP-hardness instances
from Hamiltonian-cycle graphs.
"""

from .algebra import (CompositionError, add, add_scalar, add_scalar_variant,
                      negate, product, subtract)
from .casestudy import (PAREN_ALPHABET, build_paren_spec, gen_random_wfa,
                        paren_oracle)
from .core import (InvalidWordError, Rational, Wfa, Word, eval_weight,
                   eval_weight_paths, is_probabilistic, make_wfa, mult_count,
                   rat, reset_mult_count, validate)
from .distance import distance_estimate, distance_exact
from .ga import (GaConfig, Individual, Population, RunStats, crossover,
                 evolve_generation, init_nbest, init_random, mutate, run_ga,
                 select_index)
from .memo import (DEFAULT_CELL_BUDGET, MemoTable, StaleTableError,
                   TableBudgetError, build_table, default_block_size,
                   eval_weight_memo, iter_table_words, table_cell_count)
from .reductions import (BerpInstance, DiGraph, berp_to_btrp, hcp_to_berp,
                         primes, primorial, to_two_symbols)
from .search import (DEFAULT_ENUM_BUDGET, EnumerationBudgetError,
                     decide_reachability, exhaustive_search, random_search,
                     rank_of_word, verify_certificate, word_space_size)
from .serialize import (ParseError, document_to_wfa, dumps, loads,
                        parse_digraph, parse_word_text, wfa_to_document,
                        word_to_text)

__version__ = "0.1.0"

__all__ = [
    "CompositionError", "add", "add_scalar", "add_scalar_variant", "negate",
    "product", "subtract",
    "PAREN_ALPHABET", "build_paren_spec", "gen_random_wfa", "paren_oracle",
    "InvalidWordError", "Rational", "Wfa", "Word", "eval_weight",
    "eval_weight_paths", "is_probabilistic", "make_wfa", "mult_count", "rat",
    "reset_mult_count", "validate",
    "distance_estimate", "distance_exact",
    "GaConfig", "Individual", "Population", "RunStats", "crossover",
    "evolve_generation", "init_nbest", "init_random", "mutate", "run_ga",
    "select_index",
    "DEFAULT_CELL_BUDGET", "MemoTable", "StaleTableError", "TableBudgetError",
    "build_table", "default_block_size", "eval_weight_memo",
    "iter_table_words", "table_cell_count",
    "BerpInstance", "DiGraph", "berp_to_btrp", "hcp_to_berp", "primes",
    "primorial", "to_two_symbols",
    "DEFAULT_ENUM_BUDGET", "EnumerationBudgetError", "decide_reachability",
    "exhaustive_search", "random_search", "rank_of_word",
    "verify_certificate", "word_space_size",
    "ParseError", "document_to_wfa", "dumps", "loads", "parse_digraph",
    "parse_word_text", "wfa_to_document", "word_to_text",
    "__version__",
]
