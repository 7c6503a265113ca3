"""Worst-case difference between two automata over bounded words.

The distance is the largest weight of a-b or b-a over nonempty words of
length at most k. distance_exact ranks both difference automata
exhaustively; distance_estimate runs the genetic maximizer on each
direction and is a lower bound on the exact value.
"""

from __future__ import annotations

from dataclasses import replace

from .algebra import subtract
from .core import Wfa
from .ga import GaConfig, run_ga
from .search import DEFAULT_ENUM_BUDGET, exhaustive_search

WITNESS_COUNT = 5


def _top_witnesses(observed: dict, count: int = WITNESS_COUNT) -> list:
    """Highest-weight (word, weight) pairs, ties by (length, lexicographic)."""
    ranked = sorted(observed.items(), key=lambda it: (-it[1], len(it[0]), it[0]))
    return ranked[:count]


def distance_estimate(a: Wfa, b: Wfa, k: int, cfg: GaConfig,
                      max_generations: int = None, max_evaluations: int = None,
                      init: str = "random"):
    """Lower-bound estimate of the bounded worst-case difference.

    Runs the genetic maximizer on a-b and on b-a with the same config
    (its length cap replaced by k) and returns (estimate, witnesses_ab,
    witnesses_ba): the larger of the two best weights, plus the five
    highest-weight observed words per direction, weight descending. The
    optional budget caps are passed through to both runs; estimate is a
    lower bound on distance_exact for the same k.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    cfg = replace(cfg, k=k)
    best_ab, stats_ab = run_ga(subtract(a, b), cfg, init=init,
                               max_generations=max_generations,
                               max_evaluations=max_evaluations)
    best_ba, stats_ba = run_ga(subtract(b, a), cfg, init=init,
                               max_generations=max_generations,
                               max_evaluations=max_evaluations)
    estimate = max(best_ab.fitness, best_ba.fitness)
    return estimate, _top_witnesses(stats_ab.observed), _top_witnesses(stats_ba.observed)


def distance_exact(a: Wfa, b: Wfa, k: int,
                   enumeration_budget: int = DEFAULT_ENUM_BUDGET):
    """Exact bounded worst-case difference with an argmax witness.

    Returns (value, word) where value = max over both directions and all
    nonempty words of length <= k, and word attains it (the canonically
    smallest attaining word: shortest, then lexicographic, across both
    directions). Symmetric in a and b.
    """
    top_ab = exhaustive_search(subtract(a, b), k, top_n=1,
                               enumeration_budget=enumeration_budget)
    top_ba = exhaustive_search(subtract(b, a), k, top_n=1,
                               enumeration_budget=enumeration_budget)
    if not top_ab or not top_ba:
        raise ValueError("no words to compare (empty alphabet)")
    (word_ab, val_ab), (word_ba, val_ba) = top_ab[0], top_ba[0]
    if val_ab > val_ba:
        return val_ab, word_ab
    if val_ba > val_ab:
        return val_ba, word_ba
    return val_ab, min(word_ab, word_ba, key=lambda w: (len(w), w))
