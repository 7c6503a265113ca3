"""Command-line toolkit over the library.

Subcommands: eval, maximize, random-search, exhaustive, distance, reduce,
gen, casestudy. Exit codes: 0 success, 1 usage, 2 input/parse, 3 budget
refusal. All file writes are atomic; reports are JSON with rationals as
strings and timing fields nulled whenever a run is budget-driven, so equal
seeds produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from .algebra import CompositionError
from .casestudy import build_paren_spec, gen_random_wfa
from .core import InvalidWordError, eval_weight
from .distance import distance_estimate, distance_exact
from .ga import GaConfig, run_ga
from .memo import TableBudgetError
from .reductions import berp_to_btrp, hcp_to_berp, to_two_symbols
from .report import (aggregate_reports, build_run_report, decimal_str,
                     histogram_csv)
from .search import (DEFAULT_ENUM_BUDGET, EnumerationBudgetError,
                     random_search, exhaustive_search, rank_of_word)
from .serialize import (ParseError, document_to_wfa, dumps, loads,
                        parse_digraph, parse_word_text, wfa_to_document,
                        word_to_text, write_text_atomic)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_BUDGET = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad flags; 2 is reserved for parse errors here
    def error(self, message):
        raise _UsageError(message)


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_wfa(path: str):
    return document_to_wfa(loads(_read(path)))


def _emit(text: str, out_path) -> None:
    if out_path:
        write_text_atomic(out_path, text)
    else:
        sys.stdout.write(text)


def _jobs(args) -> int:
    if args.jobs is not None:
        return max(1, args.jobs)
    env = os.environ.get("WFAMAX_JOBS", "").strip()
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise _UsageError(f"WFAMAX_JOBS must be an integer, got {env!r}") from None
    return 1


def _run_indexed(fn, repeats: int, jobs: int) -> list:
    """Run fn(0..repeats-1), possibly across threads, ordered by index."""
    if jobs == 1 or repeats == 1:
        return [fn(i) for i in range(repeats)]
    with ThreadPoolExecutor(max_workers=min(jobs, repeats)) as pool:
        return list(pool.map(fn, range(repeats)))


def _add_ga_flags(p) -> None:
    p.add_argument("--k", type=int, default=20, help="max word length")
    p.add_argument("--pop", type=int, default=200, help="population size")
    p.add_argument("--beta", type=float, default=30.0, help="selection bias")
    p.add_argument("--cr", type=float, default=0.8, help="children rate")
    p.add_argument("--mp", type=float, default=0.1, help="mutation probability")
    p.add_argument("--lambda", dest="lam", type=float, default=0.1,
                   help="mutation position rate")
    p.add_argument("--timeout", type=float, default=120.0,
                   help="wall-clock limit in seconds")
    p.add_argument("--gens", type=int, default=None,
                   help="generation cap (makes the run deterministic)")
    p.add_argument("--max-evals", type=int, default=None,
                   help="evaluation cap (makes the run deterministic)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--init", choices=("random", "nbest"), default="random")
    p.add_argument("--block-size", type=int, default=None,
                   help="memo table block size override")


def _ga_config(args, seed: int) -> GaConfig:
    return GaConfig(k=args.k, population_size=args.pop,
                    selection_bias=args.beta, children_rate=args.cr,
                    mutation_prob=args.mp, per_symbol_rate=args.lam,
                    timeout_seconds=args.timeout, rng_seed=seed,
                    block_size_override=args.block_size)


def _config_echo(args, keys) -> dict:
    return {key: getattr(args, key) for key in keys}


def _merge_observed(stats_list) -> dict:
    merged = {}
    for stats in stats_list:
        merged.update(stats.observed)
    return merged


def _finish_runs(args, results) -> int:
    """Shared tail of maximize/random-search: reports, aggregate, histogram."""
    reports = [rep for rep, _ in results]
    if len(reports) == 1:
        payload = reports[0]
    else:
        payload = {"runs": reports,
                   "aggregate": aggregate_reports(reports, args.places)}
    _emit(json.dumps(payload, indent=2) + "\n", args.out)
    if args.hist:
        merged = _merge_observed([stats for _, stats in results])
        write_text_atomic(args.hist, histogram_csv(merged, args.places))
    return EXIT_OK


def cmd_eval(args) -> int:
    wfa = _load_wfa(args.wfa_file)
    word = parse_word_text(args.word, wfa.alphabet)
    weight = eval_weight(wfa, word)
    print(f"{weight} ({decimal_str(weight, args.places)})")
    return EXIT_OK


def cmd_maximize(args) -> int:
    wfa = _load_wfa(args.wfa_file)
    deterministic = args.gens is not None or args.max_evals is not None
    echo = _config_echo(args, ("k", "pop", "beta", "cr", "mp", "lam",
                               "timeout", "gens", "max_evals", "init",
                               "block_size", "repeats"))

    def one(i):
        cfg = _ga_config(args, args.seed + i)
        best, stats = run_ga(wfa, cfg, init=args.init,
                             max_generations=args.gens,
                             max_evaluations=args.max_evals)
        rep = build_run_report("maximize", echo, wfa, best, stats,
                               args.seed + i, deterministic, args.places)
        if args.locate and best is not None:
            rep["position"] = rank_of_word(wfa, args.k, best.word, args.budget)
        return rep, stats

    results = _run_indexed(one, args.repeats, _jobs(args))
    return _finish_runs(args, results)


def cmd_random_search(args) -> int:
    wfa = _load_wfa(args.wfa_file)
    deterministic = args.max_evals is not None
    echo = _config_echo(args, ("k", "max_evals", "timeout", "block_size",
                               "repeats"))

    def one(i):
        best, stats = random_search(wfa, args.k, max_evaluations=args.max_evals,
                                    timeout_seconds=args.timeout,
                                    seed=args.seed + i,
                                    block_size=args.block_size)
        rep = build_run_report("random-search", echo, wfa, best, stats,
                               args.seed + i, deterministic, args.places)
        return rep, stats

    results = _run_indexed(one, args.repeats, _jobs(args))
    return _finish_runs(args, results)


def cmd_exhaustive(args) -> int:
    wfa = _load_wfa(args.wfa_file)
    if args.locate is not None:
        word = parse_word_text(args.locate, wfa.alphabet)
        position = rank_of_word(wfa, args.k, word, args.budget)
        print(f"position {position}")
        return EXIT_OK
    ranked = exhaustive_search(wfa, args.k, top_n=args.top,
                               enumeration_budget=args.budget)
    lines = []
    for rank, (word, weight) in enumerate(ranked, 1):
        text = word_to_text(word, wfa.alphabet)
        lines.append(f"{rank}\t{text}\t{weight}\t"
                     f"{decimal_str(weight, args.places)}\n")
    _emit("".join(lines), args.out)
    return EXIT_OK


def cmd_distance(args) -> int:
    a = _load_wfa(args.wfa_file_a)
    b = _load_wfa(args.wfa_file_b)
    if args.exact:
        value, witness = distance_exact(a, b, args.k,
                                        enumeration_budget=args.budget)
        payload = {
            "command": "distance", "mode": "exact", "k": args.k,
            "value": str(value),
            "value_decimal": decimal_str(value, args.places),
            "witness": word_to_text(witness, a.alphabet),
        }
    else:
        cfg = _ga_config(args, args.seed)
        estimate, wit_ab, wit_ba = distance_estimate(
            a, b, args.k, cfg, max_generations=args.gens,
            max_evaluations=args.max_evals, init=args.init)

        def render(witnesses):
            return [{"word": word_to_text(w, a.alphabet), "weight": str(x),
                     "weight_decimal": decimal_str(x, args.places)}
                    for w, x in witnesses]

        payload = {
            "command": "distance", "mode": "estimate", "k": args.k,
            "estimate": str(estimate),
            "estimate_decimal": decimal_str(estimate, args.places),
            "max_ab": str(wit_ab[0][1]) if wit_ab else None,
            "max_ba": str(wit_ba[0][1]) if wit_ba else None,
            "witnesses_ab": render(wit_ab),
            "witnesses_ba": render(wit_ba),
        }
    _emit(json.dumps(payload, indent=2) + "\n", args.out)
    return EXIT_OK


def cmd_reduce(args) -> int:
    graph = parse_digraph(_read(args.graph_file))
    instance = hcp_to_berp(graph)
    if args.two_symbols:
        instance = to_two_symbols(instance)
    if args.to_threshold:
        wfa, k, threshold = berp_to_btrp(instance)
        meta = {"k": k, "target": str(threshold), "mode": "threshold"}
    else:
        wfa = instance.wfa
        meta = {"k": instance.length_bound, "target": str(instance.target),
                "mode": "equality"}
    doc_text = dumps(wfa_to_document(wfa))
    meta_text = json.dumps(meta, indent=2) + "\n"
    if args.out:
        write_text_atomic(args.out, doc_text)
        write_text_atomic(args.meta or args.out + ".meta.json", meta_text)
    else:
        sys.stdout.write(doc_text)
        sys.stdout.write(meta_text)
    return EXIT_OK


def cmd_gen(args) -> int:
    wfa = gen_random_wfa(args.states, args.alphabet, args.profile, args.seed,
                         normalize=not args.no_normalize)
    _emit(dumps(wfa_to_document(wfa)), args.out)
    return EXIT_OK


def cmd_casestudy(args) -> int:
    _emit(dumps(wfa_to_document(build_paren_spec())), args.out)
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="wfamax",
                     description="Weight maximization toolkit for weighted "
                                 "finite automata over exact rationals.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a word's weight")
    p.add_argument("wfa_file")
    p.add_argument("word", help="word text; empty string for the empty word")
    p.add_argument("--places", type=int, default=4)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("maximize", help="genetic weight maximization")
    p.add_argument("wfa_file")
    _add_ga_flags(p)
    p.add_argument("--repeats", type=int, default=1)
    p.add_argument("--jobs", type=int, default=None,
                   help="worker threads for --repeats (default $WFAMAX_JOBS or 1)")
    p.add_argument("--locate", action="store_true",
                   help="rank the best word by full enumeration")
    p.add_argument("--budget", type=int, default=DEFAULT_ENUM_BUDGET,
                   help="enumeration budget for --locate")
    p.add_argument("--out", default=None, help="report JSON path")
    p.add_argument("--hist", default=None, help="observed-weight CSV path")
    p.add_argument("--places", type=int, default=4)
    p.set_defaults(func=cmd_maximize)

    p = sub.add_parser("random-search", help="uniform random-word baseline")
    p.add_argument("wfa_file")
    p.add_argument("--k", type=int, default=20)
    p.add_argument("--max-evals", type=int, default=None)
    p.add_argument("--timeout", type=float, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--block-size", type=int, default=None)
    p.add_argument("--repeats", type=int, default=1)
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--out", default=None)
    p.add_argument("--hist", default=None)
    p.add_argument("--places", type=int, default=4)
    p.set_defaults(func=cmd_random_search)

    p = sub.add_parser("exhaustive", help="exact top-n ranking by enumeration")
    p.add_argument("wfa_file")
    p.add_argument("--k", type=int, default=10)
    p.add_argument("--top", type=int, default=20)
    p.add_argument("--budget", type=int, default=DEFAULT_ENUM_BUDGET)
    p.add_argument("--locate", default=None, metavar="WORD",
                   help="print the word's rank instead of the table")
    p.add_argument("--out", default=None)
    p.add_argument("--places", type=int, default=4)
    p.set_defaults(func=cmd_exhaustive)

    p = sub.add_parser("distance", help="bounded worst-case difference")
    p.add_argument("wfa_file_a")
    p.add_argument("wfa_file_b")
    _add_ga_flags(p)
    p.add_argument("--exact", action="store_true",
                   help="exhaustive value instead of the genetic estimate")
    p.add_argument("--budget", type=int, default=DEFAULT_ENUM_BUDGET)
    p.add_argument("--out", default=None)
    p.add_argument("--places", type=int, default=4)
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("reduce", help="Hamiltonian-cycle graph to reachability instance")
    p.add_argument("graph_file")
    p.add_argument("--two-symbols", action="store_true",
                   help="re-encode over the alphabet {a, b}")
    p.add_argument("--to-threshold", action="store_true",
                   help="compose the equality instance into a threshold-1 instance")
    p.add_argument("--out", default=None, help="document path")
    p.add_argument("--meta", default=None,
                   help="sidecar path (default: <out>.meta.json)")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("gen", help="seeded random automaton")
    p.add_argument("--states", type=int, default=10)
    p.add_argument("--alphabet", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--profile", choices=("sparse", "dense"), default="sparse")
    p.add_argument("--no-normalize", action="store_true")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("casestudy", help="emit the parenthesis specification")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_casestudy)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (TableBudgetError, EnumerationBudgetError) as exc:
        print(f"budget refused: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ParseError, InvalidWordError, CompositionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as exc:
        print(f"invalid arguments: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
