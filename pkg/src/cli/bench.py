"""Timing ladder for the fast and preliminary solvers.

For every size the same seeded random instance is solved ``repeat`` times per
algorithm and the median wall time is reported, together with the growth
ratio against the previous size and the fast solver's peak traced memory.
"""

import time
import tracemalloc
from typing import Dict, List, Sequence

import pandas as pd

from src.core.model import Instance
from src.oracles.generators import GenSpec, gen_random
from src.solvers.fast import solve_fast
from src.solvers.preliminary import solve_preliminary
from src.utils.logging import get_logger

logger = get_logger("cli.bench")

BENCH_COLUMNS = ["n", "fast_s", "fast_ratio", "fast_peak_kib", "prelim_s", "prelim_ratio"]


def _time_once(fn, inst: Instance) -> float:
    start = time.perf_counter()
    fn(inst, debug=False)
    return time.perf_counter() - start


def _peak_kib(inst: Instance) -> float:
    tracemalloc.start()
    try:
        solve_fast(inst, debug=False)
        _, peak = tracemalloc.get_traced_memory()
    finally:
        tracemalloc.stop()
    return peak / 1024


def run_bench(
    sizes: Sequence[int], seed: int = 0, repeat: int = 3, prelim_max: int = 20000
) -> pd.DataFrame:
    """Time both solvers over a ladder of sizes.

    Args:
        sizes: Instance sizes, in the order they should appear
        seed: Seed for gen_random
        repeat: Timed runs per size and algorithm
        prelim_max: Largest size at which the preliminary solver is timed

    Returns:
        DataFrame with one row per size and the columns of BENCH_COLUMNS
    """
    records: List[Dict] = []
    peaks: Dict[int, float] = {}
    for n in sizes:
        inst = gen_random(GenSpec(n=n, seed=seed))
        logger.info(f"Benchmarking n={n} ({repeat} repeat(s))")
        for _ in range(repeat):
            records.append({"n": n, "algo": "fast", "seconds": _time_once(solve_fast, inst)})
            if n <= prelim_max:
                records.append({"n": n, "algo": "prelim", "seconds": _time_once(solve_preliminary, inst)})
        peaks[n] = _peak_kib(inst)

    df = pd.DataFrame.from_records(records, columns=["n", "algo", "seconds"])
    medians = df.groupby(["n", "algo"], sort=False)["seconds"].median().unstack("algo")
    medians = medians.reindex(index=list(dict.fromkeys(sizes)), columns=["fast", "prelim"])

    table = pd.DataFrame({"n": medians.index})
    table["fast_s"] = medians["fast"].to_numpy()
    table["fast_ratio"] = table["fast_s"] / table["fast_s"].shift(1)
    table["fast_peak_kib"] = [peaks[n] for n in table["n"]]
    table["prelim_s"] = medians["prelim"].to_numpy()
    table["prelim_ratio"] = table["prelim_s"] / table["prelim_s"].shift(1)
    return table[BENCH_COLUMNS]


def format_bench(table: pd.DataFrame) -> str:
    """Tab-separated rendering; missing cells print as '-'."""
    return table.to_csv(sep="\t", index=False, na_rep="-", float_format="%.6g")
