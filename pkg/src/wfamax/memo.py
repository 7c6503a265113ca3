"""Precomputed lookup table of word-to-matrix products for faster evaluation.

The table maps every word of length 1..B to the product of its transition
matrices. Evaluating a long word then walks it in blocks of B symbols, one
table lookup and one vector-matrix product per block, instead of one product
per symbol.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iter_product

from . import core
from .core import Wfa

# Budget on table entries times |Q|^2, i.e. the number of rational cells held.
DEFAULT_CELL_BUDGET = 16_000_000
# Hard cap on automatically chosen block sizes; keeps table construction quick
# for tiny alphabets where the cell budget alone would allow huge depths.
_MAX_AUTO_BLOCK = 12


class TableBudgetError(ValueError):
    """Projected table size exceeds the configured cell budget."""


class StaleTableError(ValueError):
    """Table was built from a different automaton than the one being evaluated."""


@dataclass(frozen=True)
class MemoTable:
    """Immutable block-product table bound to one automaton by fingerprint."""

    block_size: int
    entries: dict  # word tuple -> sparse rows ((col, weight), ...) per source state
    wfa_fingerprint: str

    def matrix(self, word):
        """Entry for a word as a dense row-major tuple matrix (for inspection)."""
        rows = self.entries[tuple(word)]
        n = len(rows)
        out = []
        for row in rows:
            dense = [core._ZERO] * n
            for col, x in row:
                dense[col] = x
            out.append(tuple(dense))
        return tuple(out)


def _rows_mult(ra, rb, n):
    """Product of two matrices in sparse-row form."""
    out = []
    muls = 0
    for row in ra:
        acc = [core._ZERO] * n
        for j, x in row:
            rbj = rb[j]
            for col, y in rbj:
                acc[col] = acc[col] + x * y
            muls += len(rbj)
        out.append(tuple((c, v) for c, v in enumerate(acc) if v))
    core._bump_mult_count(muls)
    return tuple(out)


def table_cell_count(alphabet_size, block_size, n_states) -> int:
    entries = 0
    power = 1
    for _ in range(block_size):
        power *= alphabet_size
        entries += power
    return entries * n_states * n_states


def build_table(wfa: Wfa, block_size: int,
                cell_budget: int = DEFAULT_CELL_BUDGET) -> MemoTable:
    """Compute all products for words of length 1..block_size, incrementally.

    Length-L entries are built from length-(L-1) entries with one matrix
    product each. Refuses upfront if the projected cell count exceeds the
    budget.
    """
    if block_size < 1:
        raise ValueError(f"block_size must be >= 1, got {block_size}")
    n_sym = len(wfa.alphabet)
    n = wfa.n_states
    cells = table_cell_count(n_sym, block_size, n)
    if cells > cell_budget:
        raise TableBudgetError(
            f"table for block size {block_size} needs {cells} rational cells, "
            f"budget is {cell_budget}")
    entries = {}
    for s in range(n_sym):
        entries[(s,)] = wfa.rows[s]
    frontier = list(entries.keys())
    for _ in range(block_size - 1):
        new_frontier = []
        for word in frontier:
            base = entries[word]
            for s in range(n_sym):
                entries[word + (s,)] = _rows_mult(base, wfa.rows[s], n)
                new_frontier.append(word + (s,))
        frontier = new_frontier
    return MemoTable(block_size, entries, wfa.fingerprint)


def default_block_size(alphabet_size: int, n_states: int,
                       cell_budget: int = DEFAULT_CELL_BUDGET) -> int:
    """Block size balancing table construction cost against evaluation savings.

    Calibrated reference points: alphabet sizes 4, 6 and 10 get blocks of
    7, 6 and 5, one less when the automaton has more than 12 states. Other
    alphabet sizes take the largest block whose table fits the cell budget,
    capped so construction stays quick. Always at least 1.
    """
    if alphabet_size < 1 or n_states < 1:
        raise ValueError("alphabet_size and n_states must be >= 1")
    reference = {4: 7, 6: 6, 10: 5}
    if alphabet_size in reference:
        b = reference[alphabet_size]
    else:
        b = 1
        while (b < _MAX_AUTO_BLOCK
               and table_cell_count(alphabet_size, b + 1, n_states) <= cell_budget):
            b += 1
    if n_states > 12:
        b -= 1
    return max(b, 1)


def eval_weight_memo(wfa: Wfa, table: MemoTable, word) -> core.Rational:
    """eval_weight through table lookups, whole blocks of symbols at a time.

    A word of length n uses floor(n/B) lookups of length B plus one lookup
    for the remainder (omitted when it is empty). Exactly equal to the
    direct evaluation on every input.
    """
    if table.wfa_fingerprint != wfa.fingerprint:
        raise StaleTableError("memo table was built from a different automaton")
    core._check_word(wfa, word)
    word = tuple(word)
    b = table.block_size
    n = wfa.n_states
    v = wfa.initial
    i = 0
    while i + b <= len(word):
        v = core._apply_rows(v, table.entries[word[i:i + b]], n)
        i += b
    if i < len(word):
        v = core._apply_rows(v, table.entries[word[i:]], n)
    return core._dot(v, wfa.final)


def iter_table_words(alphabet_size, block_size):
    """All words of length 1..block_size in (length, lexicographic) order."""
    for length in range(1, block_size + 1):
        yield from iter_product(range(alphabet_size), repeat=length)
