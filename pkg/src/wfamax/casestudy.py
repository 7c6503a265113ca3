"""Concrete benchmark automata.

build_paren_spec returns the 8-state specification over digits and
parentheses whose weight on a balanced word of maximum nesting depth d <= 2
is 1 - 2^-d (and 0 on unbalanced or deeper words); paren_oracle computes
the same function directly with a counter, giving an independent check.
gen_random_wfa produces seeded random automata for benchmarking.
"""

from __future__ import annotations

import random
import string

from gmpy2 import mpq

from .core import Rational, Wfa, Word, eval_weight, make_wfa, rat

PAREN_ALPHABET = tuple("0123456789") + ("(", ")")
OPEN = PAREN_ALPHABET.index("(")
CLOSE = PAREN_ALPHABET.index(")")

# sparse cell maps row -> {col: value}; all ten digits share _DIGIT_CELLS
_OPEN_CELLS = {0: {2: 1, 4: 1}, 1: {2: 1}, 3: {4: 1}, 4: {5: 1}}
_CLOSE_CELLS = {2: {1: 1}, 4: {3: 1}, 5: {4: 1}}
_DIGIT_CELLS = {0: {1: 1, 3: 1}, 1: {1: 1}, 2: {2: 1}, 3: {3: 1},
                4: {4: 1}, 5: {5: 1}, 7: {7: 1}}


def _dense(cells, n=8):
    return [[cells.get(r, {}).get(c, 0) for c in range(n)] for r in range(n)]


def build_paren_spec() -> Wfa:
    """The 8-state, 12-symbol parenthesis-depth specification.

    Nonempty balanced words of maximum depth d in {0, 1, 2} weigh 0, 1/2
    and 3/4; unbalanced words and depth 3 or more weigh 0. Digits are
    interchangeable (one shared matrix). The empty word is outside the
    intended domain; the vectors assign it -1/2.
    """
    digit_matrix = _dense(_DIGIT_CELLS)
    transitions = {sym: digit_matrix for sym in PAREN_ALPHABET[:10]}
    transitions["("] = _dense(_OPEN_CELLS)
    transitions[")"] = _dense(_CLOSE_CELLS)
    initial = (1, 0, 0, 0, 0, 0, 1, 1)
    final = ("-1/2", "-1/4", 0, "3/4", 0, 0, "1/2", "-1/2")
    return make_wfa(PAREN_ALPHABET, initial, final, transitions)


def paren_oracle(word: Word) -> Rational:
    """Reference function: 1 - 2^-d for balanced words of max depth d <= 2.

    word is a tuple of indices into PAREN_ALPHABET. Returns 0 for
    unbalanced words and for balanced words deeper than 2 (so depth 0,
    digits only, also gives 0).
    """
    depth = 0
    max_depth = 0
    for sym in word:
        if not 0 <= sym < len(PAREN_ALPHABET):
            raise ValueError(f"symbol index {sym} out of range")
        if sym == OPEN:
            depth += 1
            max_depth = max(max_depth, depth)
        elif sym == CLOSE:
            depth -= 1
            if depth < 0:
                return rat(0)
    if depth != 0 or max_depth > 2:
        return rat(0)
    return 1 - mpq(1, 2 ** max_depth)


def _symbol_names(alphabet_size):
    if alphabet_size <= len(string.ascii_lowercase):
        return tuple(string.ascii_lowercase[:alphabet_size])
    return tuple(f"s{i}" for i in range(alphabet_size))


def gen_random_wfa(n_states: int, alphabet_size: int,
                   weight_profile: str = "sparse", rng_seed: int = 0,
                   normalize: bool = True, sample_words: int = 1000,
                   sample_len: int = 20) -> Wfa:
    """Seeded random automaton with dyadic entries m/256, m in [-256, 256].

    weight_profile "sparse" fills each matrix cell with probability
    2/n_states (vectors are always dense); "dense" fills every cell. With
    normalize=True the initial vector is rescaled by the largest |weight|
    seen on sample_words random words of length <= sample_len, so weights
    land roughly in [-1, 1]. Deterministic for a given seed.
    """
    if n_states < 1 or alphabet_size < 1:
        raise ValueError("n_states and alphabet_size must be >= 1")
    if weight_profile not in ("sparse", "dense"):
        raise ValueError(f"unknown weight profile {weight_profile!r}")
    rng = random.Random(rng_seed)
    fill = 1.0 if weight_profile == "dense" else 2.0 / n_states

    def draw():
        return mpq(rng.randint(-256, 256), 256)

    transitions = [
        [[draw() if rng.random() < fill else 0 for _ in range(n_states)]
         for _ in range(n_states)]
        for _ in range(alphabet_size)
    ]
    initial = [draw() for _ in range(n_states)]
    final = [draw() for _ in range(n_states)]
    wfa = make_wfa(_symbol_names(alphabet_size), initial, final, transitions)
    if not normalize:
        return wfa
    peak = rat(0)
    for _ in range(sample_words):
        length = rng.randint(1, sample_len)
        word = tuple(rng.randrange(alphabet_size) for _ in range(length))
        peak = max(peak, abs(eval_weight(wfa, word)))
    if not peak:
        return wfa
    scaled = tuple(x / peak for x in wfa.initial)
    return make_wfa(wfa.alphabet, scaled, wfa.final, wfa.transitions)
