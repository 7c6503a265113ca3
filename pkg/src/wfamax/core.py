"""Weighted finite automata over exact rationals.

An automaton assigns a rational weight to every word: the initial vector is
folded through one transition matrix per symbol and closed with the final
vector. The same value can be computed as a sum over accepting paths, which
this module implements as an independent cross-check.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from gmpy2 import mpq

Rational = type(mpq())
Word = tuple  # sequence of indices into the owning alphabet

_ZERO = mpq(0)
_ONE = mpq(1)

# Module-level counter of scalar multiplications performed by the evaluation
# routines. Tests compare evaluation strategies through it instead of timing.
_mult_count = 0


def reset_mult_count():
    global _mult_count
    _mult_count = 0


def mult_count() -> int:
    return _mult_count


def _bump_mult_count(n):
    global _mult_count
    _mult_count += n


def rat(value, den=None) -> Rational:
    """Coerce ints, floats are rejected, strings like '-3/4', or rationals."""
    if isinstance(value, float):
        raise TypeError("refusing to build a rational from a float; pass a string or int")
    if den is not None:
        return mpq(value, den)
    return mpq(value)


class InvalidWordError(ValueError):
    """A word refers to a symbol index outside the automaton's alphabet."""


@dataclass(frozen=True)
class Wfa:
    """Immutable automaton: alphabet, state count, i/f vectors, one matrix per symbol."""

    alphabet: tuple
    n_states: int
    initial: tuple
    final: tuple
    transitions: tuple  # one row-major matrix (tuple of row tuples) per symbol

    @cached_property
    def rows(self):
        """Per symbol, per source state: tuple of (column, weight) for nonzero entries."""
        out = []
        for m in self.transitions:
            out.append(tuple(
                tuple((c, x) for c, x in enumerate(row) if x)
                for row in m
            ))
        return tuple(out)

    @cached_property
    def fingerprint(self) -> str:
        """Content hash binding derived structures (memo tables) to this automaton."""
        h = hashlib.sha256()
        h.update(("|".join(str(s) for s in self.alphabet) + "\n").encode())
        h.update((str(self.n_states) + "\n").encode())
        for vec in (self.initial, self.final):
            h.update((" ".join(str(x) for x in vec) + "\n").encode())
        for m in self.transitions:
            for row in m:
                h.update((" ".join(str(x) for x in row) + "\n").encode())
        return h.hexdigest()


def make_wfa(alphabet, initial, final, transitions) -> Wfa:
    """Build a Wfa from plain nested lists; entries may be ints, strings or rationals.

    Shape problems are reported by validate() rather than raised here so that
    malformed inputs can still be constructed and inspected.
    """
    alphabet = tuple(alphabet)
    if isinstance(transitions, dict):
        transitions = [transitions[s] for s in alphabet]
    initial = tuple(rat(x) for x in initial)
    final = tuple(rat(x) for x in final)
    mats = tuple(
        tuple(tuple(rat(x) for x in row) for row in m)
        for m in transitions
    )
    return Wfa(alphabet, len(initial), initial, final, mats)


def validate(wfa: Wfa) -> list:
    """Return a human-readable description of every structural violation, [] if none."""
    problems = []
    if len(wfa.alphabet) == 0:
        problems.append("alphabet is empty")
    seen = set()
    for s in wfa.alphabet:
        if s in seen:
            problems.append(f"duplicate alphabet symbol {s!r}")
        seen.add(s)
    n = wfa.n_states
    if len(wfa.initial) != n:
        problems.append(f"initial vector has length {len(wfa.initial)}, expected {n}")
    if len(wfa.final) != n:
        problems.append(f"final vector has length {len(wfa.final)}, expected {n}")
    if len(wfa.transitions) != len(wfa.alphabet):
        problems.append(
            f"{len(wfa.transitions)} transition matrices for {len(wfa.alphabet)} symbols")
    for sym, m in zip(wfa.alphabet, wfa.transitions):
        if len(m) != n or any(len(row) != n for row in m):
            shape = f"{len(m)}x{max((len(r) for r in m), default=0)}"
            problems.append(f"transition matrix {sym!r} not square {n}x{n} (got {shape})")
    return problems


def _check_word(wfa, word):
    n_sym = len(wfa.alphabet)
    for s in word:
        if not 0 <= s < n_sym:
            raise InvalidWordError(
                f"symbol index {s} out of range for alphabet of size {n_sym}")


def _apply_rows(v, sym_rows, n):
    """Sparse vector-matrix product; skips zero vector entries."""
    out = [_ZERO] * n
    muls = 0
    for state, x in enumerate(v):
        if not x:
            continue
        row = sym_rows[state]
        for col, m in row:
            out[col] = out[col] + x * m
        muls += len(row)
    _bump_mult_count(muls)
    return out


def _dot(u, v):
    total = _ZERO
    muls = 0
    for x, y in zip(u, v):
        if x and y:
            total += x * y
            muls += 1
    _bump_mult_count(muls)
    return total


def eval_weight(wfa: Wfa, word: Sequence) -> Rational:
    """Weight of a word by left-to-right vector-matrix products.

    The empty word evaluates to the dot product of the initial and final
    vectors. Cost is one sparse vector-matrix product per symbol.
    """
    _check_word(wfa, word)
    v = wfa.initial
    rows = wfa.rows
    n = wfa.n_states
    for s in word:
        v = _apply_rows(v, rows[s], n)
    return _dot(v, wfa.final)


def enumerate_paths(wfa: Wfa, word: Sequence) -> Iterator:
    """Yield (state sequence, product of transition weights) for every path of a word.

    Paths start at states with nonzero initial weight, end at states with
    nonzero final weight, and only follow nonzero transitions. Path counts
    grow exponentially; this is a cross-check for small instances.
    """
    _check_word(wfa, word)
    rows = wfa.rows
    word = tuple(word)

    def extend(q, i, states, weight):
        if i == len(word):
            if wfa.final[q]:
                yield tuple(states), weight
            return
        for col, m in rows[word[i]][q]:
            states.append(col)
            yield from extend(col, i + 1, states, weight * m)
            states.pop()

    for q0 in range(wfa.n_states):
        if wfa.initial[q0]:
            yield from extend(q0, 0, [q0], _ONE)


def eval_weight_paths(wfa: Wfa, word: Sequence) -> Rational:
    """Weight of a word as the sum over all its paths; equals eval_weight exactly."""
    total = _ZERO
    for states, weight in enumerate_paths(wfa, word):
        total += wfa.initial[states[0]] * weight * wfa.final[states[-1]]
    return total


def is_probabilistic(wfa: Wfa) -> bool:
    """True iff one state holds initial weight 1 (rest 0), final weights are all
    0 or 1, and every transition-matrix row sums to 1."""
    nonzero = [q for q, x in enumerate(wfa.initial) if x]
    if len(nonzero) != 1 or wfa.initial[nonzero[0]] != 1:
        return False
    if any(x != 0 and x != 1 for x in wfa.final):
        return False
    for m in wfa.transitions:
        for row in m:
            total = _ZERO
            for x in row:
                total += x
            if total != 1:
                return False
    return True
