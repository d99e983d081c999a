"""Benchmark driver: run the heuristics over seeded random instances.

Per-trial seeds are a pure function of (base seed, instance size, trial
index), so any single table row — or single run — can be reproduced without
replaying the rest of the sweep. Every run is verified (cover points stab
all rectangles; independent sets are pairwise interior-disjoint) before it
is aggregated; a failed verification aborts the sweep with a reproducer.
"""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .geometry import Instance, generate_instance
from .heuristics import CoverResult, IndependentSetResult, gcc, gcc_i, mis_greedy, mis_i
from .oracles import verify_cover, verify_independent

__all__ = [
    "ALGORITHMS",
    "COVER_ALGOS",
    "RunRecord",
    "BenchRow",
    "VerificationError",
    "trial_seed",
    "run_algorithm",
    "run_bench",
    "format_csv",
    "verify_random",
]

ALGORITHMS: dict[str, Callable] = {
    "gcc": gcc,
    "gcc-i": gcc_i,
    "mis": mis_greedy,
    "mis-i": mis_i,
}

COVER_ALGOS = frozenset({"gcc", "gcc-i"})

_MASK64 = (1 << 64) - 1


def trial_seed(base: int, n: int, trial: int) -> int:
    """Derive a 64-bit seed for one (size, trial) cell of a sweep.

    Uses the splitmix64 finalizer over a mix of the inputs, so nearby
    (n, trial) pairs land on unrelated generator states.
    """
    x = (base ^ (n * 0x9E3779B97F4A7C15) ^ (trial * 0xBF58476D1CE4E5B9)) & _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


class VerificationError(RuntimeError):
    """A heuristic produced an invalid cover or independent set."""


@dataclass(frozen=True)
class RunRecord:
    """Outcome of one algorithm on one instance."""

    seed: int
    n: int
    algorithm: str
    size: int
    theta: int
    phi: int
    elapsed_ms: float
    verified: bool


@dataclass(frozen=True)
class BenchRow:
    """Aggregated means for one instance size."""

    n: int
    trials: int
    means: dict[str, float]
    mean_ms: dict[str, float]

    def ratio(self) -> float:
        """Mean refined-cover size over mean greedy independent set size."""
        cover = self.means.get("gcc-i")
        ind = self.means.get("mis")
        if cover is None or ind is None or ind == 0:
            return float("nan")
        return cover / ind


def run_algorithm(
    name: str,
    instance: Instance,
    result: CoverResult | IndependentSetResult | None = None,
) -> RunRecord:
    """Verify and record one algorithm's outcome, running it if needed."""
    if result is None:
        result = ALGORITHMS[name](instance)
    if isinstance(result, CoverResult):
        ok = verify_cover(instance.rects, result.points, result.assignment)
        theta, phi = result.theta_count, result.phi_count
    else:
        ok = verify_independent(instance.rects, result.members)
        theta, phi = 0, 0
    return RunRecord(
        seed=instance.seed if instance.seed is not None else -1,
        n=instance.n,
        algorithm=name,
        size=result.size,
        theta=theta,
        phi=phi,
        elapsed_ms=result.elapsed * 1000.0,
        verified=ok,
    )


def run_bench(
    n_list: Sequence[int],
    trials: int,
    base_seed: int,
    algos: Iterable[str] = ("gcc", "gcc-i", "mis", "mis-i"),
    progress: Callable[[str], None] | None = None,
) -> tuple[list[BenchRow], list[RunRecord]]:
    """Run a full sweep; returns per-size aggregate rows and all raw records.

    Raises VerificationError with a reproduction recipe if any run produces
    an invalid result.
    """
    algos = list(algos)
    for name in algos:
        if name not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {name!r}")
    rows: list[BenchRow] = []
    records: list[RunRecord] = []
    for n in n_list:
        sizes: dict[str, list[int]] = {a: [] for a in algos}
        times: dict[str, list[float]] = {a: [] for a in algos}
        for t in range(trials):
            seed = trial_seed(base_seed, n, t)
            instance = generate_instance(n, seed=seed)
            for name in algos:
                rec = run_algorithm(name, instance)
                if not rec.verified:
                    raise VerificationError(
                        f"{name} produced an invalid result on n={n}, trial {t} "
                        f"(seed {seed}); reproduce with "
                        f"generate_instance({n}, seed={seed})"
                    )
                records.append(rec)
                sizes[name].append(rec.size)
                times[name].append(rec.elapsed_ms)
            if progress is not None:
                progress(f"n={n} trial={t + 1}/{trials}")
        rows.append(
            BenchRow(
                n=n,
                trials=trials,
                means={a: statistics.fmean(sizes[a]) for a in algos},
                mean_ms={a: statistics.fmean(times[a]) for a in algos},
            )
        )
    return rows, records


_CSV_ALGO_COLS = (("gcc", "gcc"), ("gcc_i", "gcc-i"), ("mis", "mis"), ("mis_i", "mis-i"))


def format_csv(rows: Sequence[BenchRow], timings: bool = False) -> str:
    """Render aggregate rows as CSV.

    Mean sizes use four decimal places so reruns are byte-identical. Timing
    columns are opt-in because they are inherently non-reproducible; the
    trailing ``external_baseline`` column is a placeholder for results imported
    from other tools and is always empty here.
    """
    header = ["n", "trials", "gcc", "gcc_i", "mis", "mis_i", "ratio_gcci_mis", "two_sqrt_n", "three_sqrt_n"]
    if timings:
        header += ["t_gcc_ms", "t_gcc_i_ms", "t_mis_ms", "t_mis_i_ms"]
    header.append("external_baseline")
    lines = [",".join(header)]

    def fmt(value: float | None) -> str:
        if value is None:
            return ""
        if math.isnan(value):
            return "nan"
        return "%.4f" % value

    for row in rows:
        cells = [str(row.n), str(row.trials)]
        cells += [fmt(row.means.get(key)) for _, key in _CSV_ALGO_COLS]
        cells.append(fmt(row.ratio()))
        cells.append(fmt(2.0 * math.sqrt(row.n)))
        cells.append(fmt(3.0 * math.sqrt(row.n)))
        if timings:
            cells += [fmt(row.mean_ms.get(key)) for _, key in _CSV_ALGO_COLS]
        cells.append("")
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def format_records_csv(records: Sequence[RunRecord]) -> str:
    """Render raw per-run records as CSV (sizes and counters only)."""
    lines = ["seed,n,algorithm,size,theta,phi"]
    for r in records:
        lines.append(f"{r.seed},{r.n},{r.algorithm},{r.size},{r.theta},{r.phi}")
    return "\n".join(lines) + "\n"


def verify_random(
    count: int,
    n: int,
    base_seed: int,
    mis_cap: int = 25,
    mcc_cap: int = 18,
    inject_fault: bool = False,
) -> list[str]:
    """Cross-check heuristics and sweeps against the exact oracles.

    Runs ``count`` random instances of size ``n`` and checks, per instance:
    the sweep maximum clique matches the enumeration oracle's size; the
    simplicial search agrees with the brute-force simplicial scan; every
    heuristic output is valid; and the size sandwich
    ``mis <= exact MIS <= exact cover <= gcc-i`` holds. Returns a list of
    violation descriptions (empty means all checks passed).

    ``inject_fault`` deliberately corrupts one comparison, for testing the
    failure path end to end.
    """
    from .cliques import find_simplicial, max_clique_sweep
    from .graph import build_graph
    from .oracles import exact_mcc, exact_mis, max_clique_candidates, simplicial_scan

    violations: list[str] = []
    for t in range(count):
        seed = trial_seed(base_seed, n, t)
        instance = generate_instance(n, seed=seed)
        tag = f"[n={n} seed={seed}]"

        sweep = max_clique_sweep(instance.rects) if instance.n else None
        cand = max_clique_candidates(instance.rects) if instance.n else None
        if sweep is not None and cand is not None:
            sweep_size = sweep.size + (1 if inject_fault else 0)
            if sweep_size != cand.size:
                violations.append(
                    f"{tag} sweep max clique {sweep_size} != oracle {cand.size}"
                )

        graph = build_graph(instance.rects)
        scan = simplicial_scan(graph)
        witness = find_simplicial(graph, list(instance.rects))
        if scan and witness is None:
            violations.append(f"{tag} simplicial search missed, scan found {sorted(scan)}")
        if not scan and witness is not None:
            violations.append(f"{tag} simplicial search returned {witness.vertex}, scan found none")
        if witness is not None and scan and witness.vertex not in scan:
            violations.append(f"{tag} simplicial witness {witness.vertex} not confirmed by scan")

        cover = gcc_i(instance)
        ind = mis_greedy(instance)
        plain = gcc(instance)
        variant = mis_i(instance)
        if not verify_cover(instance.rects, cover.points, cover.assignment):
            violations.append(f"{tag} gcc-i cover invalid")
        if not verify_cover(instance.rects, plain.points, plain.assignment):
            violations.append(f"{tag} gcc cover invalid")
        if not verify_independent(instance.rects, ind.members):
            violations.append(f"{tag} mis set not independent")
        if not verify_independent(instance.rects, variant.members):
            violations.append(f"{tag} mis-i set not independent")

        opt_ind, _ = exact_mis(graph, cap=mis_cap)
        opt_cover, _ = exact_mcc(list(instance.rects), cap=mcc_cap)
        if not (ind.size <= opt_ind <= opt_cover <= cover.size):
            violations.append(
                f"{tag} sandwich violated: mis {ind.size}, exact independent "
                f"{opt_ind}, exact cover {opt_cover}, gcc-i {cover.size}"
            )
    return violations
