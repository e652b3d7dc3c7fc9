"""Experiment drivers: trial orchestration, slope fits, CSV and plot output.

Five experiments are provided:

1. estimator comparison (corrected/uncorrected/uniform/no-dither/raw) on a
   coarse quantizer, error versus sample count;
2. convergence order: error versus sample count for two quantization
   levels and two rulers (log-log slope about -1/2);
3. error versus quantization level at fixed sample count for three rulers;
4. total sample complexity (samples times entries per sample) versus
   dimension, full-rank and rank-10 matrices, sparse versus full ruler;
5. banded matrices: thresholded estimator error versus dimension.

Every result row is produced by one call of :func:`simulate_estimate` and
is reproducible in isolation from its ``(seed, n)`` plus the row's
configuration columns; the driver only fans trials out and aggregates.
"""

from __future__ import annotations

import csv
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Sequence

import numpy as np

from ._seeding import derive_seed, generator_rng, observation_rng
from .bounds import big_k, threshold_zeta
from .estimators import (
    Correction,
    EstimateResult,
    banded_estimate,
    quantized_estimate,
    relative_error,
    ruler_estimate,
    threshold_estimate,
)
from .exceptions import DomainError, EmptyInputError, InvalidArgumentError
from .quantization import Dither, QuantizerConfig
from .rulers import Ruler, ruler_alpha
from .sampling import gen_banded, gen_toeplitz_vandermonde, observe, sample_gaussian
from .toeplitz import SymToeplitz, op_norm, toep

__all__ = [
    "ExperimentConfig",
    "ResultRow",
    "SimResult",
    "simulate_estimate",
    "default_config",
    "run_experiment",
    "fit_loglog_slope",
    "total_complexity",
    "emit_plot_script",
    "TRIAL_SCHEMA",
]

TRIAL_SCHEMA = ("experiment", "d", "alpha", "delta", "n", "tag", "trial", "rel_error", "seconds", "seed")

# estimator tags of experiment 1: (delta scale, dither, correction)
_EXP1_TAGS: dict[str, tuple[float, Dither, Correction]] = {
    "tildeT": (0.0, Dither.NONE, Correction.NONE),
    "hatT": (1.0, Dither.TRIANGULAR, Correction.TRIANGULAR_QUARTER),
    "dotT": (1.0, Dither.TRIANGULAR, Correction.NONE),
    "hatTu": (1.0, Dither.UNIFORM, Correction.UNIFORM_SIXTH),
    "hatTno": (1.0, Dither.NONE, Correction.NONE),
}


@dataclass(frozen=True)
class SimResult:
    """Everything one simulated trial produced."""

    truth: SymToeplitz
    estimate: EstimateResult
    rel_error: float
    zeta: float | None = None


def simulate_estimate(
    d: int,
    n: int,
    seed: int,
    *,
    gen: str = "vandermonde",
    num_freqs: int = 8,
    bandwidth: int = 5,
    alpha: float = 1.0,
    indices: Sequence[int] | None = None,
    delta: float = 0.0,
    dither: Dither = Dither.TRIANGULAR,
    correction: Correction = Correction.NONE,
    normalize: bool = False,
    threshold: float | None = None,
    threshold_auto: tuple[float, float] | None = None,
    band_est: int | None = None,
) -> SimResult:
    """Run one fully seeded trial: draw, sample, observe, estimate.

    The covariance comes from the generator stream of ``seed``; samples
    and dither come from the observation stream of ``(seed, n)``.  With
    ``normalize`` the matrix is rescaled to unit diagonal so that the
    quantization level is measured against unit-variance coordinates.
    ``threshold_auto=(c, p)`` thresholds at ``c * K * sqrt((log|R| + 4p
    log d) / n)`` using the true operator norm in ``K``.
    """
    g = generator_rng(seed)
    if gen == "vandermonde":
        truth = gen_toeplitz_vandermonde(d, num_freqs, g)
    elif gen == "banded":
        truth = gen_banded(d, bandwidth, g)
    else:
        raise InvalidArgumentError(f"unknown generator {gen!r}")
    if normalize:
        truth = toep(truth.a / truth.a[0])

    ruler = Ruler(d, np.asarray(indices)) if indices is not None else ruler_alpha(d, alpha)
    rng = observation_rng(seed, n)
    samples = sample_gaussian(truth, n, rng)
    batch = observe(samples, ruler, QuantizerConfig(delta, dither), rng, seed=seed)
    correction = Correction(correction)
    if batch.delta == 0 and correction is Correction.NONE:
        est = ruler_estimate(batch)
    else:
        est = quantized_estimate(batch, correction)

    zeta = None
    if threshold_auto is not None:
        c, p = threshold_auto
        zeta = threshold_zeta(big_k(op_norm(truth), delta), ruler.size, d, p, n, c)
        est = threshold_estimate(est, zeta)
    elif threshold is not None:
        zeta = float(threshold)
        est = threshold_estimate(est, zeta)
    if band_est is not None:
        est = banded_estimate(est, band_est)
    return SimResult(truth, est, relative_error(truth, est, "op"), zeta)


@dataclass(frozen=True)
class ResultRow:
    experiment: int
    d: int
    alpha: float
    delta: float
    n: int
    tag: str
    trial: int
    rel_error: float
    seconds: float
    seed: int

    def key(self) -> tuple:
        return (self.d, self.alpha, self.delta, self.n, self.tag, self.trial)

    def csv_values(self) -> list[str]:
        return [
            str(self.experiment),
            str(self.d),
            repr(float(self.alpha)),
            repr(float(self.delta)),
            str(self.n),
            self.tag,
            str(self.trial),
            repr(float(self.rel_error)),
            f"{self.seconds:.6f}",
            str(self.seed),
        ]


@dataclass
class ExperimentConfig:
    """Settings for one experiment run; defaults via :func:`default_config`."""

    experiment: int
    out_dir: Path = Path("results")
    seed: int = 0
    trials: int = 20
    threads: int = 1
    d: int = 16
    d_grid: tuple[int, ...] = ()
    n_grid: tuple[int, ...] = ()
    deltas: tuple[float, ...] = ()
    alphas: tuple[float, ...] = ()
    num_freqs: int = 8
    rank_freqs: int = 5
    bandwidth: int = 5
    eps: float = 0.1
    n_cap: int = 1 << 17
    thresh_c: float = 0.07
    thresh_p: float = 2.0
    normalize: bool = True
    variants: tuple[str, ...] = ("fullrank", "rank10")

    def __post_init__(self) -> None:
        if self.experiment not in (1, 2, 3, 4, 5):
            raise InvalidArgumentError(f"experiment must be 1..5, got {self.experiment}")
        if self.trials < 1:
            raise InvalidArgumentError(f"trials must be >= 1, got {self.trials}")
        if any(b <= a for a, b in zip(self.n_grid, self.n_grid[1:])):
            raise InvalidArgumentError(f"n grid must be strictly increasing, got {self.n_grid}")
        self.out_dir = Path(self.out_dir)


_DEFAULTS: dict[int, dict] = {
    1: dict(
        d=16,
        n_grid=(100, 316, 1000, 3162, 10000, 31623, 100000),
        deltas=(5.0,),
        alphas=(0.5,),
        normalize=True,
    ),
    2: dict(
        d=16,
        n_grid=(100, 316, 1000, 3162, 10000),
        deltas=(2.0, 5.0),
        alphas=(0.5, 1.0),
        normalize=True,
    ),
    3: dict(
        d=16,
        n_grid=(1000,),
        deltas=(0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0, 4.5, 5.0),
        alphas=(0.5, 0.75, 1.0),
        normalize=True,
    ),
    4: dict(
        d_grid=(16, 32, 64, 128, 256, 512),
        n_grid=(),
        deltas=(2.0,),
        alphas=(0.5, 1.0),
        normalize=False,
    ),
    5: dict(
        d_grid=(32, 64, 128),
        n_grid=(1000,),
        deltas=(0.5,),
        alphas=(0.5,),
        bandwidth=5,
        normalize=False,
    ),
}


def default_config(experiment: int, **overrides) -> ExperimentConfig:
    """Config with this package's documented defaults for one experiment."""
    if experiment not in _DEFAULTS:
        raise InvalidArgumentError(f"experiment must be 1..5, got {experiment}")
    params = dict(_DEFAULTS[experiment])
    params.update(overrides)
    return ExperimentConfig(experiment=experiment, **params)


def fit_loglog_slope(points: Iterable[tuple[float, float]]) -> dict[str, float]:
    """Least-squares line through ``(log10 n, log10 error)`` pairs."""
    pts = [(float(x), float(y)) for x, y in points]
    if len(pts) < 3:
        raise DomainError(f"need at least 3 points, got {len(pts)}")
    if any(x <= 0 or y <= 0 for x, y in pts):
        raise DomainError("log-log fit requires strictly positive coordinates")
    lx = np.log10([x for x, _ in pts])
    ly = np.log10([y for _, y in pts])
    slope, intercept = np.polyfit(lx, ly, 1)
    resid = ly - (slope * lx + intercept)
    ss_res = float(np.dot(resid, resid))
    ss_tot = float(np.dot(ly - ly.mean(), ly - ly.mean()))
    r2 = 1.0 if ss_tot < 1e-30 else 1.0 - ss_res / ss_tot
    return {"slope": float(slope), "intercept": float(intercept), "r2": r2}


def total_complexity(vsc: int, esc: int) -> int:
    """Total sampled entries: sample count times entries observed per sample."""
    if vsc < 1 or esc < 1:
        raise InvalidArgumentError("vsc and esc must be >= 1")
    return int(vsc) * int(esc)


@dataclass
class ExperimentOutput:
    config: ExperimentConfig
    rows: list[ResultRow]
    medians: list[dict]
    summary: list[dict] = field(default_factory=list)
    paths: list[Path] = field(default_factory=list)


def _run_tasks(tasks: dict, fn: Callable, threads: int) -> dict:
    """Evaluate ``{key: args}`` with ``fn`` and deterministic key order."""
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            futures = {key: pool.submit(fn, *args) for key, args in tasks.items()}
            return {key: futures[key].result() for key in tasks}
    return {key: fn(*args) for key, args in tasks.items()}


def _timed(fn: Callable[[], SimResult]) -> tuple[SimResult, float]:
    start = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - start


def _median(values: Iterable[float]) -> float:
    return float(np.median(list(values)))


class _Runner:
    def __init__(self, cfg: ExperimentConfig, progress: Callable[[str], None] | None):
        self.cfg = cfg
        self.progress = progress or (lambda msg: None)
        self.rows: list[ResultRow] = []
        self.medians: list[dict] = []
        self.summary: list[dict] = []

    def note(self, msg: str) -> None:
        self.progress(msg)

    def add_row(self, row: ResultRow) -> None:
        self.rows.append(row)

    # ----- experiments 1..3: error curves over a grid -----

    def run_curves(self) -> None:
        cfg = self.cfg
        if cfg.experiment == 1:
            combos = [
                (a, dl, t)
                for a in cfg.alphas
                for di, dl in enumerate(cfg.deltas)
                for t in _EXP1_TAGS
                # the raw-sample baseline is delta-independent; emit it once
                if _EXP1_TAGS[t][0] != 0.0 or di == 0
            ]
            xs = list(cfg.n_grid)
        elif cfg.experiment == 2:
            combos = [(a, dl, "hatT") for a in cfg.alphas for dl in cfg.deltas]
            xs = list(cfg.n_grid)
        else:
            combos = [(a, dl, "hatT") for a in cfg.alphas for dl in cfg.deltas]
            xs = [cfg.n_grid[0]]

        tasks = {}
        for alpha, delta, tag in combos:
            for n in xs:
                for trial in range(cfg.trials):
                    seed = derive_seed(cfg.seed, cfg.experiment, trial)
                    tasks[(alpha, delta, tag, n, trial)] = (alpha, delta, tag, n, seed)
        results = _run_tasks(tasks, self._curve_trial, cfg.threads)

        for alpha, delta, tag in combos:
            for n in xs:
                errs = []
                for trial in range(cfg.trials):
                    sim, secs = results[(alpha, delta, tag, n, trial)]
                    seed = tasks[(alpha, delta, tag, n, trial)][4]
                    eff_delta = delta * _EXP1_TAGS[tag][0] if cfg.experiment == 1 else delta
                    self.add_row(
                        ResultRow(cfg.experiment, cfg.d, alpha, eff_delta, n, tag, trial, sim.rel_error, secs, seed)
                    )
                    errs.append(sim.rel_error)
                self.medians.append(
                    {
                        "experiment": cfg.experiment,
                        "d": cfg.d,
                        "alpha": alpha,
                        "delta": delta * _EXP1_TAGS[tag][0] if cfg.experiment == 1 else delta,
                        "n": n,
                        "tag": tag,
                        "trials": cfg.trials,
                        "median_rel_error": _median(errs),
                    }
                )
            self.note(f"experiment {cfg.experiment}: finished series alpha={alpha} delta={delta} tag={tag}")

        if cfg.experiment == 2:
            for alpha, delta, tag in combos:
                pts = [
                    (m["n"], m["median_rel_error"])
                    for m in self.medians
                    if (m["alpha"], m["delta"], m["tag"]) == (alpha, delta, tag)
                ]
                fit = fit_loglog_slope(pts)
                self.summary.append(
                    {
                        "experiment": 2,
                        "d": cfg.d,
                        "alpha": alpha,
                        "delta": delta,
                        "tag": tag,
                        "slope": fit["slope"],
                        "intercept": fit["intercept"],
                        "r2": fit["r2"],
                    }
                )

    def _curve_trial(self, alpha: float, delta: float, tag: str, n: int, seed: int):
        cfg = self.cfg
        if cfg.experiment == 1:
            scale, dither, corr = _EXP1_TAGS[tag]
            delta = delta * scale
        else:
            dither, corr = Dither.TRIANGULAR, Correction.TRIANGULAR_QUARTER
        return _timed(
            lambda: simulate_estimate(
                cfg.d,
                n,
                seed,
                num_freqs=cfg.num_freqs,
                alpha=alpha,
                delta=delta,
                dither=dither,
                correction=corr,
                normalize=cfg.normalize,
            )
        )

    # ----- experiment 4: total complexity versus dimension -----

    def run_total_complexity(self) -> None:
        cfg = self.cfg
        delta = cfg.deltas[0]
        variants = [
            (vi, tag, kfix)
            for vi, (tag, kfix) in enumerate((("fullrank", None), ("rank10", cfg.rank_freqs)))
            if tag in cfg.variants
        ]
        for vi, tag, kfix in variants:
            for ai, alpha in enumerate(cfg.alphas):
                for d in cfg.d_grid:
                    k = kfix if kfix is not None else max(1, d // 2)
                    ruler = ruler_alpha(d, alpha)
                    probe = self._make_probe(tag, vi, ai, alpha, d, k, delta)
                    n_star, capped = self._bisect(probe, cfg.eps, cfg.n_cap)
                    self.summary.append(
                        {
                            "experiment": 4,
                            "tag": tag,
                            "alpha": alpha,
                            "d": d,
                            "esc": ruler.size,
                            "n_star": n_star,
                            "total": total_complexity(n_star, ruler.size),
                            "capped": int(capped),
                        }
                    )
                    self.note(
                        f"experiment 4: {tag} alpha={alpha} d={d}: n*={n_star}"
                        f"{' (capped)' if capped else ''} esc={ruler.size}"
                    )

    def _make_probe(self, tag: str, vi: int, ai: int, alpha: float, d: int, k: int, delta: float):
        cfg = self.cfg
        cache: dict[int, float] = {}

        def probe(n: int) -> float:
            if n in cache:
                return cache[n]
            tasks = {
                trial: (d, n, derive_seed(cfg.seed, 4, vi, ai, d, trial), k, alpha, delta)
                for trial in range(cfg.trials)
            }
            results = _run_tasks(tasks, self._exp4_trial, cfg.threads)
            errs = []
            for trial in range(cfg.trials):
                sim, secs = results[trial]
                self.add_row(ResultRow(4, d, alpha, delta, n, tag, trial, sim.rel_error, secs, tasks[trial][2]))
                errs.append(sim.rel_error)
            med = _median(errs)
            cache[n] = med
            self.medians.append(
                {
                    "experiment": 4,
                    "d": d,
                    "alpha": alpha,
                    "delta": delta,
                    "n": n,
                    "tag": tag,
                    "trials": cfg.trials,
                    "median_rel_error": med,
                }
            )
            return med

        return probe

    def _exp4_trial(self, d: int, n: int, seed: int, k: int, alpha: float, delta: float):
        return _timed(
            lambda: simulate_estimate(
                d,
                n,
                seed,
                num_freqs=k,
                alpha=alpha,
                delta=delta,
                dither=Dither.TRIANGULAR,
                correction=Correction.TRIANGULAR_QUARTER,
                normalize=self.cfg.normalize,
            )
        )

    @staticmethod
    def _bisect(probe: Callable[[int], float], eps: float, cap: int) -> tuple[int, bool]:
        """Smallest n (within ~5%) whose median error meets eps, doubling then halving."""
        if probe(1) <= eps:
            return 1, False
        lo, hi = 1, 2
        while probe(hi) > eps:
            lo, hi = hi, hi * 2
            if hi > cap:
                return cap, True
        while hi - lo > max(1, lo // 20):
            mid = (lo + hi) // 2
            if probe(mid) <= eps:
                hi = mid
            else:
                lo = mid
        return hi, False

    # ----- experiment 5: banded matrices, thresholded estimator -----

    def run_banded(self) -> None:
        cfg = self.cfg
        delta = cfg.deltas[0]
        alpha = cfg.alphas[0]
        n = cfg.n_grid[0]
        m = cfg.bandwidth
        tags = ("hatT", "breveZeta", "breveM")
        for d in cfg.d_grid:
            tasks = {}
            for tag in tags:
                for trial in range(cfg.trials):
                    seed = derive_seed(cfg.seed, 5, trial)
                    tasks[(tag, trial)] = (tag, d, n, seed, alpha, delta, m)
            results = _run_tasks(tasks, self._exp5_trial, cfg.threads)
            per_tag: dict[str, list[SimResult]] = {t: [] for t in tags}
            for tag in tags:
                errs = []
                for trial in range(cfg.trials):
                    sim, secs = results[(tag, trial)]
                    seed = tasks[(tag, trial)][3]
                    self.add_row(ResultRow(5, d, alpha, delta, n, tag, trial, sim.rel_error, secs, seed))
                    per_tag[tag].append(sim)
                    errs.append(sim.rel_error)
                self.medians.append(
                    {
                        "experiment": 5,
                        "d": d,
                        "alpha": alpha,
                        "delta": delta,
                        "n": n,
                        "tag": tag,
                        "trials": cfg.trials,
                        "median_rel_error": _median(errs),
                    }
                )
            thresh = per_tag["breveZeta"]
            tail_zero = np.mean([np.all(s.estimate.a_hat[m:] == 0.0) for s in thresh])
            survival = np.mean([np.all(s.estimate.a_hat[:m] != 0.0) for s in thresh])
            self.summary.append(
                {
                    "experiment": 5,
                    "tag": "breveZeta",
                    "d": d,
                    "n": n,
                    "delta": delta,
                    "median_rel_error": _median([s.rel_error for s in thresh]),
                    "median_zeta": _median([s.zeta for s in thresh]),
                    "tail_zero_fraction": float(tail_zero),
                    "nonzero_survival_fraction": float(survival),
                }
            )
            self.note(
                f"experiment 5: d={d}: tail-zero {tail_zero:.3f}, survival {survival:.3f}"
            )

    def _exp5_trial(self, tag: str, d: int, n: int, seed: int, alpha: float, delta: float, m: int):
        kwargs = dict(
            gen="banded",
            bandwidth=m,
            alpha=alpha,
            delta=delta,
            dither=Dither.TRIANGULAR,
            correction=Correction.TRIANGULAR_QUARTER,
        )
        if tag == "breveZeta":
            kwargs["threshold_auto"] = (self.cfg.thresh_c, self.cfg.thresh_p)
        elif tag == "breveM":
            kwargs["band_est"] = m
        return _timed(lambda: simulate_estimate(d, n, seed, **kwargs))


def run_experiment(
    cfg: ExperimentConfig, progress: Callable[[str], None] | None = None
) -> ExperimentOutput:
    """Run one experiment, write its CSVs and plot script, return everything.

    Output is deterministic for a fixed config seed except for the
    wall-time ``seconds`` column of the trial CSV.
    """
    runner = _Runner(cfg, progress)
    if cfg.experiment in (1, 2, 3):
        runner.run_curves()
    elif cfg.experiment == 4:
        runner.run_total_complexity()
    else:
        runner.run_banded()

    runner.rows.sort(key=ResultRow.key)
    out = ExperimentOutput(cfg, runner.rows, runner.medians, runner.summary)
    out.paths = _write_outputs(out)
    return out


def _write_outputs(out: ExperimentOutput) -> list[Path]:
    cfg = out.config
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    paths = []

    trial_path = cfg.out_dir / f"experiment{cfg.experiment}.csv"
    with open(trial_path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(TRIAL_SCHEMA)
        for row in out.rows:
            writer.writerow(row.csv_values())
    paths.append(trial_path)

    median_path = cfg.out_dir / f"experiment{cfg.experiment}_medians.csv"
    _write_dicts(median_path, out.medians)
    paths.append(median_path)

    if out.summary:
        name = "slopes" if cfg.experiment == 2 else "summary"
        summary_path = cfg.out_dir / f"experiment{cfg.experiment}_{name}.csv"
        _write_dicts(summary_path, out.summary)
        paths.append(summary_path)

    source = paths[-1] if cfg.experiment == 4 else median_path
    paths.append(emit_plot_script(source))
    return paths


def _write_dicts(path: Path, records: list[dict]) -> None:
    with open(path, "w", newline="") as fh:
        if not records:
            return
        writer = csv.DictWriter(fh, fieldnames=list(records[0].keys()))
        writer.writeheader()
        writer.writerows(records)


def _read_csv(path: Path) -> list[dict]:
    with open(path, newline="") as fh:
        return list(csv.DictReader(fh))


def emit_plot_script(csv_path: str | Path) -> Path:
    """Write a gnuplot script next to a medians or summary CSV.

    Error-versus-samples experiments get log-log axes; the quantization
    sweep and the banded experiment are linear in x; the complexity
    summary is plotted log-log in dimension.  Data is inlined so the
    script is self-contained.
    """
    csv_path = Path(csv_path)
    if not csv_path.exists():
        raise EmptyInputError(f"no such CSV: {csv_path}")
    records = _read_csv(csv_path)
    if not records:
        raise EmptyInputError(f"CSV has no data rows: {csv_path}")

    exp = int(records[0]["experiment"])
    if "total" in records[0]:
        x_field, y_field = "d", "total"
        series_fields = ("tag", "alpha")
        logscale, xlabel, ylabel = "xy", "dimension d", "total samples (n x |R|)"
    elif exp in (1, 2):
        x_field = "n"
        y_field = "median_rel_error" if "median_rel_error" in records[0] else "rel_error"
        series_fields = ("tag", "alpha", "delta")
        logscale, xlabel, ylabel = "xy", "samples n", "relative error"
    elif exp == 3:
        x_field, y_field = "delta", "median_rel_error"
        series_fields = ("tag", "alpha")
        logscale, xlabel, ylabel = "", "quantization level", "relative error"
    else:
        x_field, y_field = "d", "median_rel_error"
        series_fields = ("tag",)
        logscale, xlabel, ylabel = "", "dimension d", "relative error"

    series: dict[tuple, list[tuple[float, float]]] = {}
    for rec in records:
        key = tuple(rec.get(f, "") for f in series_fields)
        series.setdefault(key, []).append((float(rec[x_field]), float(rec[y_field])))

    script_path = csv_path.with_suffix(".gp")
    lines = [
        f"# generated from {csv_path.name}",
        "set terminal pngcairo size 960,640",
        f'set output "{csv_path.stem}.png"',
        f'set xlabel "{xlabel}"',
        f'set ylabel "{ylabel}"',
        "set key outside",
    ]
    if logscale:
        lines.append(f"set logscale {logscale}")
    blocks = []
    plots = []
    for i, (key, pts) in enumerate(sorted(series.items())):
        name = f"$series{i}"
        title = " ".join(f"{f}={v}" for f, v in zip(series_fields, key) if v != "")
        blocks.append(name + " << EOD")
        blocks.extend(f"{x} {y}" for x, y in sorted(pts))
        blocks.append("EOD")
        plots.append(f'{name} using 1:2 with linespoints title "{title}"')
    lines.extend(blocks)
    lines.append("plot \\\n  " + ", \\\n  ".join(plots))
    script_path.write_text("\n".join(lines) + "\n")
    return script_path
