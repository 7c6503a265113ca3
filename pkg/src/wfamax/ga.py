"""Genetic search for the highest-weight word of bounded length.

Individuals are words of length 1..k. Each generation rank-selects parents,
recombines them with a two-point crossover, mutates the original population
at exponentially spaced positions, and refills the population from the
children and mutant pools by rank selection without index repetition.
"""

from __future__ import annotations

import logging
import math
import random
import time
from dataclasses import dataclass, field

from .core import Wfa, eval_weight
from .memo import MemoTable, build_table, default_block_size, eval_weight_memo, iter_table_words

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class GaConfig:
    """Run parameters; the defaults are the reference operating point."""

    k: int = 20
    population_size: int = 200
    selection_bias: float = 30.0       # beta; top index beta times likelier than bottom
    children_rate: float = 0.8         # cr; fraction of next generation from crossover
    mutation_prob: float = 0.1         # mp; chance an individual enters mutation
    per_symbol_rate: float = 0.1       # lambda of the exponential position gaps
    timeout_seconds: float = 120.0
    stagnation_threshold: int = 10     # generations without improvement before boost
    mp_boost_factor: float = 3.0       # mp multiplier for the boosted generation
    rng_seed: int = 0
    block_size_override: int = None

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if self.population_size < 2:
            raise ValueError("population_size must be >= 2")
        if not float(self.selection_bias) > 1:
            raise ValueError("selection_bias must be > 1")
        if not 0 <= self.children_rate <= 1:
            raise ValueError("children_rate must be in [0, 1]")
        if not 0 <= self.mutation_prob <= 1:
            raise ValueError("mutation_prob must be in [0, 1]")
        if not 0 < self.per_symbol_rate <= 1:
            raise ValueError("per_symbol_rate must be in (0, 1]")
        if not self.timeout_seconds > 0:
            raise ValueError("timeout_seconds must be > 0")


@dataclass(frozen=True)
class Individual:
    word: tuple
    fitness: object  # Rational, cached weight of word


def _member_key(ind):
    return (ind.fitness, len(ind.word), ind.word)


def _sorted_members(members):
    return tuple(sorted(members, key=_member_key))


@dataclass(frozen=True)
class Population:
    members: tuple  # ascending by (fitness, length, word)
    generation_index: int


@dataclass
class RunStats:
    """Bookkeeping shared by the genetic and random solvers.

    observed deduplicates by word; total_evals counts every evaluation
    request, duplicates included. best_repeat_count is the number of
    consecutive generations the best fitness has not improved;
    stagnation_counter tracks the same quantity but resets whenever the
    mutation boost fires, so the boost re-arms.
    """

    observed: dict = field(default_factory=dict)
    total_evals: int = 0
    best: Individual = None
    best_repeat_count: int = 0
    stagnation_counter: int = 0
    generations: int = 0
    wall_time: float = 0.0
    evals_per_second: float = 0.0


class _Evaluator:
    """Evaluates words through the memo table, recording run statistics."""

    def __init__(self, wfa, table, k, stats):
        self.wfa = wfa
        self.table = table
        self.k = k
        self.stats = stats

    def __call__(self, word):
        if not 1 <= len(word) <= self.k:
            raise AssertionError(f"individual length {len(word)} outside [1, {self.k}]")
        stats = self.stats
        weight = stats.observed.get(word)
        if weight is None:
            weight = eval_weight_memo(self.wfa, self.table, word)
            stats.observed[word] = weight
        stats.total_evals += 1
        best = stats.best
        if (best is None or weight > best.fitness
                or (weight == best.fitness
                    and (len(word), word) < (len(best.word), best.word))):
            stats.best = Individual(word, weight)
        return weight


def _plain_evaluator(wfa):
    return lambda word: eval_weight(wfa, word)


def select_index(n: int, beta, rng) -> int:
    """Rank-biased index into an ascending-sorted list of n items.

    Draws u uniform in [0, 1) and returns floor(n * log_beta(1 + u(beta-1))),
    clamped to n-1. Larger indices (fitter items) come out beta times more
    often than index 0 in the endpoint buckets.
    """
    u = rng.random()
    beta = float(beta)
    idx = int(n * math.log(1.0 + u * (beta - 1.0)) / math.log(beta))
    return min(idx, n - 1)


def crossover(v: tuple, w: tuple, k: int, rng):
    """Two-point recombination; children keep lengths within [1, k].

    Cut points i in 1..|v| and j in 1..|w| are uniform. The first child is
    v[:i] plus the tail of w after j; when i + |w| - j exceeds k the tail is
    truncated at index k - i (and symmetrically for the second child).
    """
    i = rng.randint(1, len(v))
    j = rng.randint(1, len(w))
    lx = len(w) if i + len(w) - j <= k else k - i
    ly = len(v) if j + len(v) - i <= k else k - j
    return v[:i] + w[j:lx], w[:j] + v[i:ly]


def _mutate_with_count(word, n_symbols, k, lam, rng):
    """Apply edits at cumulative floor(Exp(lam)) positions; returns (word, hits).

    Each gap is drawn independently, rounded down, and advanced at least one
    position past the previous edit. Generation stops once the next position
    falls at or beyond the current word length (which edits may change). At
    each position one of delete/insert/replace-with-different is chosen
    uniformly; deletion is skipped at length 1, insertion at length k and
    replacement when the alphabet has a single symbol.
    """
    w = list(word)
    hits = 0
    pos = None
    while True:
        gap = int(rng.expovariate(lam))
        pos = gap if pos is None else pos + max(1, gap)
        if pos >= len(w):
            break
        op = rng.randrange(3)
        if op == 0:
            if len(w) > 1:
                del w[pos]
        elif op == 1:
            if len(w) < k:
                w.insert(pos, rng.randrange(n_symbols))
        else:
            if n_symbols > 1:
                s = rng.randrange(n_symbols - 1)
                if s >= w[pos]:
                    s += 1
                w[pos] = s
        hits += 1
    return tuple(w), hits


def mutate(word: tuple, n_symbols: int, cfg: GaConfig, rng) -> tuple:
    """Random edits at exponentially spaced positions; length stays in [1, k]."""
    w, _ = _mutate_with_count(word, n_symbols, cfg.k, cfg.per_symbol_rate, rng)
    return w


def _random_word(n_symbols, k, rng):
    length = rng.randint(1, k)
    return tuple(rng.randrange(n_symbols) for _ in range(length))


def init_random(wfa: Wfa, cfg: GaConfig, rng, evaluate=None) -> Population:
    """Population of uniform words: length uniform in [1, k], symbols uniform."""
    evaluate = evaluate or _plain_evaluator(wfa)
    n_sym = len(wfa.alphabet)
    members = []
    for _ in range(cfg.population_size):
        word = _random_word(n_sym, cfg.k, rng)
        members.append(Individual(word, evaluate(word)))
    return Population(_sorted_members(members), 0)


def init_nbest(wfa: Wfa, table: MemoTable, cfg: GaConfig, rng=None,
               evaluate=None) -> Population:
    """Population seeded with the highest-weight words of length <= block size.

    Enumerates the table's key set, keeps the population_size best, and pads
    with uniform random individuals if the pool is smaller than the
    population (logged, since it changes the advertised composition).
    """
    evaluate = evaluate or _plain_evaluator(wfa)
    rng = rng or random.Random(cfg.rng_seed)
    n_sym = len(wfa.alphabet)
    pool = []
    for word in iter_table_words(n_sym, min(table.block_size, cfg.k)):
        pool.append(Individual(word, evaluate(word)))
    pool.sort(key=_member_key)
    members = pool[-cfg.population_size:]
    short = cfg.population_size - len(members)
    if short > 0:
        log.warning("n-best pool has %d words, padding %d random individuals",
                    len(pool), short)
        for _ in range(short):
            word = _random_word(n_sym, cfg.k, rng)
            members.append(Individual(word, evaluate(word)))
    return Population(_sorted_members(members), 0)


def _select_distinct(members, count, beta, rng):
    """Rank-select count members without index repetition (rejection resampling)."""
    n = len(members)
    if count >= n:
        return list(members)
    taken = set()
    out = []
    while len(out) < count:
        i = select_index(n, beta, rng)
        if i in taken:
            continue
        taken.add(i)
        out.append(members[i])
    return out


def evolve_generation(pop: Population, wfa: Wfa, table: MemoTable,
                      cfg: GaConfig, rng, stats: RunStats) -> Population:
    """One generation: select, crossover, mutate, replace, update statistics."""
    evaluate = _Evaluator(wfa, table, cfg.k, stats)
    n = cfg.population_size
    members = pop.members
    best_before = stats.best

    boosted = stats.stagnation_counter > cfg.stagnation_threshold
    if boosted:
        stats.stagnation_counter = 0
    mp = cfg.mutation_prob * (cfg.mp_boost_factor if boosted else 1.0)
    mp = min(1.0, mp)

    # crossover: n rank-selected parents combined in consecutive pairs
    parents = [members[select_index(n, cfg.selection_bias, rng)] for _ in range(n)]
    children = []
    for a, b in zip(parents[0::2], parents[1::2]):
        x, y = crossover(a.word, b.word, cfg.k, rng)
        children.append(Individual(x, evaluate(x)))
        children.append(Individual(y, evaluate(y)))
    if len(children) < n:  # odd n: recombine the leftover parent with the first
        x, _ = crossover(parents[-1].word, parents[0].word, cfg.k, rng)
        children.append(Individual(x, evaluate(x)))
    children = _sorted_members(children)

    # mutation of the original population, each member independently
    n_sym = len(wfa.alphabet)
    mutants = []
    for ind in members:
        if rng.random() < mp:
            word = mutate(ind.word, n_sym, cfg, rng)
            if word == ind.word:
                mutants.append(ind)
            else:
                mutants.append(Individual(word, evaluate(word)))
        else:
            mutants.append(ind)
    mutants = _sorted_members(mutants)

    # replacement: C children and n - C mutants, both without index repetition
    c = round(cfg.children_rate * n)
    chosen = _select_distinct(children, c, cfg.selection_bias, rng)
    chosen += _select_distinct(mutants, n - c, cfg.selection_bias, rng)

    improved = best_before is None or stats.best.fitness > best_before.fitness
    if improved:
        stats.best_repeat_count = 0
        stats.stagnation_counter = 0
    else:
        stats.best_repeat_count += 1
        stats.stagnation_counter += 1
    stats.generations += 1
    return Population(_sorted_members(chosen), pop.generation_index + 1)


def run_ga(wfa: Wfa, cfg: GaConfig, init: str = "random",
           max_generations: int = None, max_evaluations: int = None):
    """Evolve until the stopping rule fires; returns (best Individual, RunStats).

    With max_generations or max_evaluations set the run is fully
    deterministic for a given seed and ignores the wall clock; otherwise it
    stops at the first generation boundary past timeout_seconds. Evaluation
    budgets are checked at generation boundaries, so the total may overshoot
    by up to one generation.
    """
    rng = random.Random(cfg.rng_seed)
    block = cfg.block_size_override or default_block_size(len(wfa.alphabet), wfa.n_states)
    block = max(1, min(block, cfg.k))
    table = build_table(wfa, block)
    stats = RunStats()
    evaluate = _Evaluator(wfa, table, cfg.k, stats)
    start = time.monotonic()

    if init == "nbest":
        pop = init_nbest(wfa, table, cfg, rng=rng, evaluate=evaluate)
    elif init == "random":
        pop = init_random(wfa, cfg, rng, evaluate=evaluate)
    else:
        raise ValueError(f"unknown init {init!r}")

    deterministic = max_generations is not None or max_evaluations is not None
    while True:
        if max_generations is not None and stats.generations >= max_generations:
            break
        if max_evaluations is not None and stats.total_evals >= max_evaluations:
            break
        if not deterministic and time.monotonic() - start >= cfg.timeout_seconds:
            break
        pop = evolve_generation(pop, wfa, table, cfg, rng, stats)

    stats.wall_time = time.monotonic() - start
    if stats.wall_time > 0:
        stats.evals_per_second = stats.total_evals / stats.wall_time
    return stats.best, stats
