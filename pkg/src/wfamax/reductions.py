"""Hardness-instance constructions over directed graphs.

Hamiltonian-cycle existence is encoded as a bounded equality-reachability
question on a prime-labeled automaton; that instance can be re-encoded over
a two-symbol alphabet, and the equality target can be turned into a
threshold-1 question by an algebraic composition. The constructions double
as hard-instance generators and as end-to-end correctness oracles.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import add_scalar, negate, product
from .core import Rational, Wfa, make_wfa, rat

TWO_SYMBOL_ALPHABET = ("a", "b")


@dataclass(frozen=True)
class DiGraph:
    """Directed graph on vertices 0..n_vertices-1, at most one edge per pair.

    Self-loops are accepted; they just never help form a Hamiltonian cycle
    on two or more vertices.
    """

    n_vertices: int
    edges: frozenset

    def __post_init__(self):
        if self.n_vertices < 0:
            raise ValueError("n_vertices must be >= 0")
        edges = frozenset((int(u), int(v)) for u, v in self.edges)
        for u, v in edges:
            if not (0 <= u < self.n_vertices and 0 <= v < self.n_vertices):
                raise ValueError(f"edge ({u}, {v}) out of range")
        object.__setattr__(self, "edges", edges)

    @property
    def sorted_edges(self) -> list:
        return sorted(self.edges)


@dataclass(frozen=True)
class BerpInstance:
    """Equality-reachability instance: does some word of length <= length_bound
    have weight exactly target?"""

    wfa: Wfa
    length_bound: int
    target: Rational


def primes(n: int) -> list:
    """First n primes by trial division; instance sizes keep this tiny."""
    if n < 0:
        raise ValueError("n must be >= 0")
    out = []
    cand = 2
    while len(out) < n:
        if all(cand % p for p in out if p * p <= cand):
            out.append(cand)
        cand += 1
    return out


def primorial(n: int) -> Rational:
    """Product of the first n primes."""
    value = rat(1)
    for p in primes(n):
        value = value * p
    return value


def hcp_to_berp(g: DiGraph) -> BerpInstance:
    """Encode Hamiltonian-cycle existence as bounded equality reachability.

    States are the vertices. Each edge (u, v) gets its own symbol "u>v"
    whose matrix carries mu(v) at entry (u, v) and zeros elsewhere, where
    mu(j) is the (j+1)-th prime. The target is primorial(n) with length
    bound n, so by unique factorization a word hits the target exactly when
    its edges chain into a walk of n steps whose destinations cover every
    vertex once.

    The initial and final vectors are concentrated on vertex 0 rather than
    uniform: uniform vectors would also accept open walks that revisit only
    their own start vertex (on three vertices, 0>1 1>0 0>2 covers every
    destination once without any Hamiltonian cycle existing). Pinning start
    and end to one vertex forces the walk closed, which together with the
    covering condition makes it a Hamiltonian cycle; any Hamiltonian cycle
    rotates to start at vertex 0, so no yes-instance is lost.
    """
    if g.n_vertices < 1:
        raise ValueError("graph must have at least one vertex")
    n = g.n_vertices
    mu = primes(n)
    edges = g.sorted_edges
    alphabet = tuple(f"{u}>{v}" for u, v in edges)
    transitions = []
    for u, v in edges:
        m = [[0] * n for _ in range(n)]
        m[u][v] = mu[v]
        transitions.append(m)
    anchor = [1 if q == 0 else 0 for q in range(n)]
    wfa = make_wfa(alphabet, anchor, list(anchor), transitions)
    return BerpInstance(wfa=wfa, length_bound=n, target=primorial(n))


def to_two_symbols(instance: BerpInstance) -> BerpInstance:
    """Re-encode a single-transition-per-symbol instance over {"a", "b"}.

    Symbol number i (in the original alphabet order) gets the L-bit
    identifier spelling i in binary, L = ceil(log2 |E|), most significant
    bit first, 0 -> "a" and 1 -> "b". Each original transition becomes an
    L-step path through L-1 fresh private states: weight 1 on every step
    except the last, which keeps the original weight. Fresh states carry
    zero initial and final weight, so a word has nonzero weight only if it
    parses as a chain of complete identifiers; the length bound scales to
    L * k and the target is unchanged.
    """
    base = instance.wfa
    n_edges = len(base.alphabet)
    if n_edges < 2:
        raise ValueError("need at least 2 symbols for a two-symbol encoding")
    arcs = []
    for sym_rows in base.rows:
        cells = [(u, v, w) for u, row in enumerate(sym_rows) for v, w in row]
        if len(cells) != 1:
            raise ValueError("expected exactly one transition per symbol")
        arcs.append(cells[0])
    bit_len = (n_edges - 1).bit_length()
    n = base.n_states
    size = n + n_edges * (bit_len - 1)
    mats = [[[0] * size for _ in range(size)] for _ in range(2)]
    for idx, (u, v, w) in enumerate(arcs):
        aux = [n + idx * (bit_len - 1) + j for j in range(bit_len - 1)]
        chain = [u] + aux + [v]
        for j in range(bit_len):
            bit = (idx >> (bit_len - 1 - j)) & 1
            mats[bit][chain[j]][chain[j + 1]] = w if j == bit_len - 1 else 1
    initial = list(base.initial) + [0] * (size - n)
    final = list(base.final) + [0] * (size - n)
    wfa = make_wfa(TWO_SYMBOL_ALPHABET, initial, final, mats)
    return BerpInstance(wfa=wfa, length_bound=bit_len * instance.length_bound,
                        target=instance.target)


def berp_to_btrp(instance: BerpInstance):
    """Equality target to threshold 1: B = (A + 1 - t) (x) (1 + t - A).

    B weighs a nonempty word at (W(w) + 1 - t)(1 + t - W(w)), which equals
    1 - (W(w) - t)^2: at most 1, with equality exactly when W(w) = t. So
    "some word of length <= k reaches weight >= 1 in B" decides the original
    equality question. Returns (B, k, threshold 1).
    """
    a = instance.wfa
    t = instance.target
    left = add_scalar(a, 1 - t)
    right = add_scalar(negate(a), 1 + t)
    return product(left, right), instance.length_bound, rat(1)
