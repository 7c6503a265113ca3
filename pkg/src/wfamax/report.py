"""Run reporting: exact decimal rendering, observed-weight summaries,
JSON run reports, histogram CSV, and multi-run aggregation.

Decimal strings are display-only; every stored weight stays a rational
string so reports can be recomputed exactly.
"""

from __future__ import annotations

import statistics

from gmpy2 import mpq

from .serialize import word_to_text


def decimal_str(value, places: int = 4) -> str:
    """Exact decimal rendering at the given precision, half away from zero."""
    q = mpq(value)
    n, d = int(q.numerator), int(q.denominator)
    sign = "-" if n < 0 else ""
    scaled, rem = divmod(abs(n) * 10 ** places, d)
    if 2 * rem >= d:
        scaled += 1
    if places == 0:
        return f"{sign}{scaled}"
    whole, frac = divmod(scaled, 10 ** places)
    return f"{sign}{whole}.{frac:0{places}d}"


def summarize_observed(observed: dict, places: int = 4) -> dict:
    """Summary over the distinct observed weights: count, mean, 1.96*sd, max.

    The half-width uses the normal approximation on the distinct values;
    it is a display statistic and the only float in a report.
    """
    values = sorted(set(observed.values()))
    if not values:
        return {"count_distinct": 0, "mean": None, "mean_decimal": None,
                "ci95_half_width": None, "max": None, "max_decimal": None}
    mean = sum(values, mpq(0)) / len(values)
    sd = statistics.stdev(float(v) for v in values) if len(values) > 1 else 0.0
    peak = values[-1]
    return {
        "count_distinct": len(values),
        "mean": str(mean),
        "mean_decimal": decimal_str(mean, places),
        "ci95_half_width": 1.96 * sd,
        "max": str(peak),
        "max_decimal": decimal_str(peak, places),
    }


def build_run_report(command: str, config: dict, wfa, best, stats,
                     seed, deterministic: bool, places: int = 4) -> dict:
    """Single-run report; timing fields are null in deterministic mode so
    identical runs serialize to identical bytes."""
    if best is None:
        best_part = {"word": None, "weight": None, "weight_decimal": None}
    else:
        best_part = {
            "word": word_to_text(best.word, wfa.alphabet),
            "weight": str(best.fitness),
            "weight_decimal": decimal_str(best.fitness, places),
        }
    return {
        "command": command,
        "config": config,
        "seed": seed,
        "best": best_part,
        "observed": summarize_observed(stats.observed, places),
        "total_evals": stats.total_evals,
        "generations": stats.generations,
        "wall_time": None if deterministic else stats.wall_time,
        "evals_per_second": None if deterministic else stats.evals_per_second,
    }


def histogram_csv(observed: dict, places: int = 4) -> str:
    """Distinct observed weights ascending, one 'rational,decimal' line each."""
    values = sorted(set(observed.values()))
    return "".join(f"{v},{decimal_str(v, places)}\n" for v in values)


def aggregate_reports(run_reports: list, places: int = 4) -> dict:
    """Cross-run aggregate, recomputable from the per-run reports alone."""
    means = [mpq(r["observed"]["mean"]) for r in run_reports
             if r["observed"]["count_distinct"]]
    maxes = [mpq(r["observed"]["max"]) for r in run_reports
             if r["observed"]["count_distinct"]]
    agg = {
        "runs": len(run_reports),
        "mean_of_means": None,
        "mean_of_means_decimal": None,
        "mean_of_max": None,
        "mean_of_max_decimal": None,
        "max_of_max": None,
        "max_of_max_decimal": None,
        "best": {"run": None, "word": None, "weight": None,
                 "weight_decimal": None},
    }
    if means:
        mm = sum(means, mpq(0)) / len(means)
        agg["mean_of_means"] = str(mm)
        agg["mean_of_means_decimal"] = decimal_str(mm, places)
    if maxes:
        mx = sum(maxes, mpq(0)) / len(maxes)
        agg["mean_of_max"] = str(mx)
        agg["mean_of_max_decimal"] = decimal_str(mx, places)
        top = max(maxes)
        agg["max_of_max"] = str(top)
        agg["max_of_max_decimal"] = decimal_str(top, places)
    best_weight = None
    for idx, r in enumerate(run_reports):
        if r["best"]["word"] is None:
            continue
        w = mpq(r["best"]["weight"])
        if best_weight is None or w > best_weight:
            best_weight = w
            agg["best"] = {"run": idx, "word": r["best"]["word"],
                           "weight": r["best"]["weight"],
                           "weight_decimal": r["best"]["weight_decimal"]}
    positions = [r["position"] for r in run_reports if "position" in r]
    if positions:
        agg["positions"] = positions
        agg["best_position"] = min(positions)
    return agg
