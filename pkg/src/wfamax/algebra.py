"""Composition of weighted automata sharing an alphabet.

Five constructions: negation, sum, subtraction, product and scalar addition.
Each composite evaluates any word to the corresponding arithmetic combination
of its operands' weights, exactly.
"""

from __future__ import annotations

from gmpy2 import mpq

from .core import Wfa, eval_weight, make_wfa

_ZERO = mpq(0)
_ONE = mpq(1)


class CompositionError(ValueError):
    """Operands do not share an alphabet."""


def _require_same_alphabet(a, b):
    if a.alphabet != b.alphabet:
        raise CompositionError(
            f"alphabet mismatch: {list(a.alphabet)} vs {list(b.alphabet)}")


def negate(a: Wfa) -> Wfa:
    """Flip the sign of every word's weight by negating the initial vector."""
    return Wfa(a.alphabet, a.n_states, tuple(-x for x in a.initial),
               a.final, a.transitions)


def add(a: Wfa, b: Wfa) -> Wfa:
    """Disjoint union with block-diagonal matrices; weights add per word."""
    _require_same_alphabet(a, b)
    na, nb = a.n_states, b.n_states
    mats = []
    for ma, mb in zip(a.transitions, b.transitions):
        rows = [row + (_ZERO,) * nb for row in ma]
        rows += [(_ZERO,) * na + row for row in mb]
        mats.append(tuple(rows))
    return Wfa(a.alphabet, na + nb, a.initial + b.initial,
               a.final + b.final, tuple(mats))


def subtract(a: Wfa, b: Wfa) -> Wfa:
    """Weight of every word becomes the difference of the operands' weights."""
    return add(a, negate(b))


def product(a: Wfa, b: Wfa) -> Wfa:
    """Kronecker pairing of states; weights multiply per word.

    State pair (p, q) maps to index p * |Q_b| + q (row-major).
    """
    _require_same_alphabet(a, b)
    nb = b.n_states
    initial = tuple(x * y for x in a.initial for y in b.initial)
    final = tuple(x * y for x in a.final for y in b.final)
    mats = []
    for ma, mb in zip(a.transitions, b.transitions):
        rows = []
        for ra in ma:
            for rb in mb:
                rows.append(tuple(x * y for x in ra for y in rb))
        mats.append(tuple(rows))
    return Wfa(a.alphabet, a.n_states * nb, initial, final, tuple(mats))


def _add_scalar_with_diag(a, alpha, diag):
    """Append one state with initial weight alpha, final weight 1 and the given
    self-loop weight on every symbol."""
    n = a.n_states
    mats = []
    for m in a.transitions:
        rows = [row + (_ZERO,) for row in m]
        rows.append((_ZERO,) * n + (diag,))
        mats.append(tuple(rows))
    return Wfa(a.alphabet, n + 1, a.initial + (alpha,),
               a.final + (_ONE,), tuple(mats))


def _select_add_scalar_variant():
    """Pick the self-loop weight of the extra state so the construction really
    shifts every word's weight by alpha.

    With alpha on the new diagonal the extra state contributes
    alpha * alpha**len(w) to a word w (one diagonal factor per symbol), which
    only equals the intended shift for |w| = 1. A unit self-loop contributes
    alpha * 1**len(w) = alpha at every length. This probe evaluates both on a
    1-state automaton at lengths 1..3 and keeps whichever honors the contract;
    the outcome is exposed through add_scalar_variant() for reporting.
    """
    base = make_wfa(("a",), [1], [1], [[[2]]])
    alpha = mpq(5)
    candidates = (
        ("alpha-diagonal", lambda al: al),
        ("unit-diagonal", lambda al: _ONE),
    )
    for name, diag_of in candidates:
        built = _add_scalar_with_diag(base, alpha, diag_of(alpha))
        if all(eval_weight(built, (0,) * n) == eval_weight(base, (0,) * n) + alpha
               for n in (1, 2, 3)):
            return name, diag_of
    raise AssertionError("no scalar-addition construction satisfies W(w) + alpha")


_VARIANT_NAME, _DIAG_OF = _select_add_scalar_variant()


def add_scalar_variant() -> str:
    """Name of the construction chosen at import time by the contract probe."""
    return _VARIANT_NAME


def add_scalar(a: Wfa, alpha) -> Wfa:
    """Shift the weight of every word (any length, including empty) by alpha."""
    alpha = mpq(alpha)
    return _add_scalar_with_diag(a, alpha, _DIAG_OF(alpha))
