"""Interchange formats: the JSON automaton document, word text, and the
edge-list graph format. All rationals travel as canonical strings
(`-?digits(/digits)?`), never as floats, so round trips are bit-exact.
"""

from __future__ import annotations

import json
import os
import re
import tempfile

from gmpy2 import mpq

from .core import Wfa, make_wfa
from .reductions import DiGraph

FORMAT_VERSION = "1"
RATIONAL_RE = re.compile(r"-?[0-9]+(/[0-9]+)?\Z")


class ParseError(ValueError):
    """Malformed document, word text, or graph file."""


def _parse_rational(s, where: str):
    if not isinstance(s, str) or not RATIONAL_RE.match(s):
        raise ParseError(f"{where}: {s!r} is not a rational string")
    if "/" in s and int(s.split("/")[1]) == 0:
        raise ParseError(f"{where}: zero denominator in {s!r}")
    return mpq(s)


def wfa_to_document(wfa: Wfa) -> dict:
    """Plain-dict document form of an automaton, rationals as strings."""
    return {
        "format_version": FORMAT_VERSION,
        "alphabet": list(wfa.alphabet),
        "initial": [str(x) for x in wfa.initial],
        "final": [str(x) for x in wfa.final],
        "transitions": {
            sym: [[str(x) for x in row] for row in matrix]
            for sym, matrix in zip(wfa.alphabet, wfa.transitions)
        },
    }


def document_to_wfa(doc) -> Wfa:
    """Validating inverse of wfa_to_document; errors name the bad field."""
    if not isinstance(doc, dict):
        raise ParseError("document is not an object")
    for field in ("format_version", "alphabet", "initial", "final", "transitions"):
        if field not in doc:
            raise ParseError(f"missing field {field!r}")
    if doc["format_version"] != FORMAT_VERSION:
        raise ParseError(f"unsupported format_version {doc['format_version']!r}")
    alphabet = doc["alphabet"]
    if not isinstance(alphabet, list) or not all(isinstance(s, str) for s in alphabet):
        raise ParseError("alphabet: must be a list of strings")
    if len(set(alphabet)) != len(alphabet):
        raise ParseError("alphabet: duplicate symbols")
    initial = [_parse_rational(s, f"initial[{i}]")
               for i, s in enumerate(doc["initial"])]
    n = len(initial)
    final = [_parse_rational(s, f"final[{i}]") for i, s in enumerate(doc["final"])]
    if len(final) != n:
        raise ParseError(f"final: expected {n} entries, got {len(final)}")
    trans = doc["transitions"]
    if not isinstance(trans, dict):
        raise ParseError("transitions: must be an object")
    extra = set(trans) - set(alphabet)
    if extra:
        raise ParseError(f"transitions: unknown symbol {sorted(extra)[0]!r}")
    matrices = []
    for sym in alphabet:
        if sym not in trans:
            raise ParseError(f"transitions: missing symbol {sym!r}")
        matrix = trans[sym]
        if len(matrix) != n:
            raise ParseError(f"transitions[{sym!r}]: expected {n} rows")
        parsed = []
        for r, row in enumerate(matrix):
            if len(row) != n:
                raise ParseError(
                    f"transitions[{sym!r}][{r}]: expected {n} entries")
            parsed.append([_parse_rational(s, f"transitions[{sym!r}][{r}][{c}]")
                           for c, s in enumerate(row)])
        matrices.append(parsed)
    return make_wfa(alphabet, initial, final, matrices)


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def loads(text: str) -> dict:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None


def parse_word_text(text: str, alphabet) -> tuple:
    """Word text to a tuple of symbol indices.

    Tokens are whitespace-separated; when every alphabet symbol is a single
    character an unspaced token is read character by character, so both
    "(1)(2)" and "0>1 1>2" work. Blank text is the empty word.
    """
    index = {sym: i for i, sym in enumerate(alphabet)}
    tokens = text.split()
    if not tokens:
        return ()
    if (len(tokens) == 1 and tokens[0] not in index
            and all(len(sym) == 1 for sym in alphabet)):
        tokens = list(tokens[0])
    out = []
    for tok in tokens:
        if tok not in index:
            raise ParseError(f"unknown symbol {tok!r}")
        out.append(index[tok])
    return tuple(out)


def word_to_text(word, alphabet) -> str:
    symbols = [alphabet[s] for s in word]
    if all(len(sym) == 1 for sym in alphabet):
        return "".join(symbols)
    return " ".join(symbols)


def parse_digraph(text: str) -> DiGraph:
    """Edge-list graph: first significant line is the vertex count, then one
    'u v' line per edge; '#' starts a comment; blank lines are skipped."""
    rows = []
    for ln, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((ln, line))
    if not rows:
        raise ParseError("empty graph file")
    first_ln, first = rows[0]
    try:
        n = int(first)
    except ValueError:
        raise ParseError(f"line {first_ln}: vertex count must be an integer") from None
    if n < 0:
        raise ParseError(f"line {first_ln}: vertex count must be >= 0")
    edges = []
    for ln, line in rows[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {ln}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {ln}: vertices must be integers") from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"line {ln}: edge ({u}, {v}) out of range for {n} vertices")
        edges.append((u, v))
    return DiGraph(n, frozenset(edges))


def write_text_atomic(path, text: str) -> None:
    """Write via a temp file in the target directory plus rename."""
    path = os.fspath(path)
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".wfamax-tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise
