"""Baseline solvers: uniform random search, exact exhaustive ranking, and
certificate checks for the bounded reachability decision problems.

The exhaustive walk rescales the automaton to integer entries (one common
denominator for the matrices and one each for the initial/final vectors), so
extending a prefix costs integer multiplies instead of rational ones; exact
rationals are rebuilt only when a candidate is compared or reported.
"""

from __future__ import annotations

import heapq
import math
import random
import time

from gmpy2 import mpq

from . import core
from .core import Wfa, eval_weight
from .ga import Individual, RunStats, _Evaluator, _random_word
from .memo import build_table, default_block_size

DEFAULT_ENUM_BUDGET = 5_000_000


class EnumerationBudgetError(ValueError):
    """The word space is larger than the configured enumeration budget."""


def word_space_size(alphabet_size: int, k: int) -> int:
    """Number of nonempty words of length at most k."""
    total = 0
    power = 1
    for _ in range(k):
        power *= alphabet_size
        total += power
    return total


def _int_form(wfa):
    """Integer-rescaled automaton: (initial, final, rows, d_init, d_final, d_mat).

    Every matrix entry is multiplied by d_mat (the lcm of all matrix
    denominators), the initial vector by d_init and the final vector by
    d_final. A word of length L then has weight dot / (d_init*d_final*d_mat**L).
    """
    d_mat = 1
    for m in wfa.transitions:
        for row in m:
            for x in row:
                d_mat = math.lcm(d_mat, int(x.denominator))
    d_init = 1
    for x in wfa.initial:
        d_init = math.lcm(d_init, int(x.denominator))
    d_final = 1
    for x in wfa.final:
        d_final = math.lcm(d_final, int(x.denominator))
    rows = tuple(
        tuple(tuple((c, int(x * d_mat)) for c, x in row) for row in sym_rows)
        for sym_rows in wfa.rows
    )
    initial = [int(x * d_init) for x in wfa.initial]
    final = [int(x * d_final) for x in wfa.final]
    return initial, final, rows, d_init, d_final, d_mat


def _walk_words(wfa, k, visit):
    """Depth-first over all words of length 1..k with incremental prefixes.

    visit(weight, depth, path) is called once per word, where weight is the
    exact rational weight and path the mutable symbol list. A truthy return
    stops the walk; the word that triggered it is returned (else None).
    """
    n_sym = len(wfa.alphabet)
    if n_sym == 0 or k < 1:
        return None
    initial, final, rows, d_init, d_final, d_mat = _int_form(wfa)
    n = wfa.n_states
    dens = [d_init * d_final * d_mat ** l for l in range(k + 1)]
    path = []

    def rec(v, depth):
        for s in range(n_sym):
            srows = rows[s]
            u = [0] * n
            for state, x in enumerate(v):
                if x:
                    for col, m in srows[state]:
                        u[col] += x * m
            num = 0
            for x, y in zip(u, final):
                if x and y:
                    num += x * y
            path.append(s)
            if visit(mpq(num, dens[depth + 1]), depth + 1, path):
                return True
            if depth + 1 < k and rec(u, depth + 1):
                return True
            path.pop()
        return False

    if rec(initial, 0):
        return tuple(path)
    return None


def exhaustive_search(wfa: Wfa, k: int, top_n: int = 20,
                      enumeration_budget: int = DEFAULT_ENUM_BUDGET) -> list:
    """Exact ranking of all nonempty words of length at most k.

    Returns the top_n (word, weight) pairs sorted by weight descending, ties
    by (length, lexicographic). Refuses upfront if the word space exceeds
    the enumeration budget.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    total = word_space_size(len(wfa.alphabet), k)
    if total > enumeration_budget:
        raise EnumerationBudgetError(
            f"{total} words of length <= {k}, budget is {enumeration_budget}")
    top_n = min(top_n, total)
    if top_n <= 0:
        return []
    heap = []  # min-heap of (key, word); the root is the worst kept candidate

    def visit(weight, depth, path):
        key = (weight, -depth, tuple(-s for s in path))
        if len(heap) < top_n:
            heapq.heappush(heap, (key, tuple(path)))
        elif key > heap[0][0]:
            heapq.heapreplace(heap, (key, tuple(path)))
        return False

    _walk_words(wfa, k, visit)
    ranked = sorted(heap, key=lambda e: e[0], reverse=True)
    return [(word, key[0]) for key, word in ranked]


def rank_of_word(wfa: Wfa, k: int, word,
                 enumeration_budget: int = DEFAULT_ENUM_BUDGET) -> int:
    """1-based position of a word in the full (weight desc, length, lex) ranking."""
    word = tuple(word)
    if not 1 <= len(word) <= k:
        raise ValueError(f"word length {len(word)} outside [1, {k}]")
    total = word_space_size(len(wfa.alphabet), k)
    if total > enumeration_budget:
        raise EnumerationBudgetError(
            f"{total} words of length <= {k}, budget is {enumeration_budget}")
    target = (eval_weight(wfa, word), -len(word), tuple(-s for s in word))
    better = 0

    def visit(weight, depth, path):
        nonlocal better
        if (weight, -depth, tuple(-s for s in path)) > target:
            better += 1
        return False

    _walk_words(wfa, k, visit)
    return better + 1


def decide_reachability(wfa: Wfa, k: int, nu, mode: str = "threshold",
                        enumeration_budget: int = DEFAULT_ENUM_BUDGET):
    """First word of length <= k whose weight meets the target, or None.

    mode 'threshold' looks for weight >= nu, mode 'equality' for weight == nu.
    Exits as soon as a witness is found.
    """
    if mode not in ("threshold", "equality"):
        raise ValueError(f"unknown mode {mode!r}")
    if k < 1:
        raise ValueError("k must be >= 1")
    total = word_space_size(len(wfa.alphabet), k)
    if total > enumeration_budget:
        raise EnumerationBudgetError(
            f"{total} words of length <= {k}, budget is {enumeration_budget}")
    nu = mpq(nu)
    if mode == "threshold":
        visit = lambda weight, depth, path: weight >= nu
    else:
        visit = lambda weight, depth, path: weight == nu
    return _walk_words(wfa, k, visit)


def verify_certificate(wfa: Wfa, word, k: int, nu, mode: str = "threshold") -> bool:
    """Check a word as a certificate: length within k and weight meets the target."""
    if mode not in ("threshold", "equality"):
        raise ValueError(f"unknown mode {mode!r}")
    word = tuple(word)
    if len(word) > k:
        return False
    weight = eval_weight(wfa, word)
    nu = mpq(nu)
    return weight >= nu if mode == "threshold" else weight == nu


def random_search(wfa: Wfa, k: int, max_evaluations: int = None,
                  timeout_seconds: float = None, seed: int = 0,
                  block_size: int = None, table=None):
    """Uniform word sampling with the same bookkeeping as the genetic run.

    Samples length uniform in [1, k] then symbols uniform, evaluating through
    a memo table. Returns (best Individual, RunStats). At least one of
    max_evaluations and timeout_seconds must be given; when max_evaluations
    is set the run is deterministic for a seed.
    """
    if max_evaluations is None and timeout_seconds is None:
        raise ValueError("need max_evaluations or timeout_seconds")
    if k < 1:
        raise ValueError("k must be >= 1")
    rng = random.Random(seed)
    if table is None:
        block = block_size or default_block_size(len(wfa.alphabet), wfa.n_states)
        table = build_table(wfa, max(1, min(block, k)))
    stats = RunStats()
    evaluate = _Evaluator(wfa, table, k, stats)
    n_sym = len(wfa.alphabet)
    start = time.monotonic()
    while True:
        if max_evaluations is not None and stats.total_evals >= max_evaluations:
            break
        if (max_evaluations is None and timeout_seconds is not None
                and time.monotonic() - start >= timeout_seconds):
            break
        evaluate(_random_word(n_sym, k, rng))
    stats.wall_time = time.monotonic() - start
    if stats.wall_time > 0:
        stats.evals_per_second = stats.total_evals / stats.wall_time
    return stats.best, stats
