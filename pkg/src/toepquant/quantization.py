"""Memoryless dithered quantization on the half-integer grid.

The quantizer maps ``x`` to ``delta * (floor(x / delta) + 1/2)``; a random
dither may be added before quantization.  The *error* is output minus
dithered input and always lies in ``[-delta/2, delta/2]``; the *noise* is
output minus original input.  A triangular dither (sum of two independent
uniforms on ``[-delta/2, delta/2]``) makes the noise second moment equal
to ``delta^2 / 4`` independently of the input, which is what the
bias-corrected estimator relies on.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .exceptions import InvalidArgumentError, NumericError

__all__ = [
    "Dither",
    "QuantizerConfig",
    "QuantizationTrace",
    "quantize_scalar",
    "draw_dither",
    "quantize_vector",
    "noise_moment_report",
]


class Dither(str, enum.Enum):
    NONE = "none"
    UNIFORM = "uniform"
    TRIANGULAR = "triangular"


@dataclass(frozen=True)
class QuantizerConfig:
    """Quantization level plus dither kind; ``delta == 0`` means pass-through."""

    delta: float
    dither: Dither = Dither.TRIANGULAR

    def __post_init__(self) -> None:
        if not math.isfinite(self.delta) or self.delta < 0:
            raise InvalidArgumentError(f"delta must be finite and >= 0, got {self.delta}")
        object.__setattr__(self, "dither", Dither(self.dither))


@dataclass(frozen=True)
class QuantizationTrace:
    """One quantization pass: input, dither, output, error and noise vectors."""

    x: np.ndarray
    tau: np.ndarray
    output: np.ndarray
    error: np.ndarray  # output - (x + tau), in [-delta/2, delta/2]
    noise: np.ndarray  # output - x == error + tau
    delta: float


def _grid_round(values: np.ndarray, delta: float) -> np.ndarray:
    return delta * (np.floor(values / delta) + 0.5)


def quantize_scalar(x: float, delta: float) -> float:
    """Quantize one value to the grid ``delta * (Z + 1/2)``.

    Values exactly on a cell boundary (``x/delta`` integral) map to the
    upper cell's midpoint, matching the mathematical floor.
    """
    if delta <= 0:
        raise InvalidArgumentError(f"delta must be positive, got {delta}")
    if not math.isfinite(x):
        raise NumericError(f"cannot quantize non-finite value {x}")
    return float(delta * (math.floor(x / delta) + 0.5))


def draw_dither(cfg: QuantizerConfig, size, rng: np.random.Generator) -> np.ndarray:
    """Draw i.i.d. dither of the configured kind."""
    if cfg.delta == 0 or cfg.dither is Dither.NONE:
        return np.zeros(size)
    half = cfg.delta / 2.0
    tau = rng.uniform(-half, half, size)
    if cfg.dither is Dither.TRIANGULAR:
        tau = tau + rng.uniform(-half, half, size)
    return tau


def quantize_vector(x: np.ndarray, cfg: QuantizerConfig, rng: np.random.Generator) -> QuantizationTrace:
    """Dither and quantize a vector, returning the full trace."""
    x = np.asarray(x, dtype=np.float64)
    if not np.all(np.isfinite(x)):
        raise NumericError("input contains non-finite values")
    if cfg.delta == 0:
        zero = np.zeros_like(x)
        return QuantizationTrace(x, zero, x.copy(), zero.copy(), zero.copy(), 0.0)
    tau = draw_dither(cfg, x.shape, rng)
    output = _grid_round(x + tau, cfg.delta)
    return QuantizationTrace(x, tau, output, output - (x + tau), output - x, cfg.delta)


def noise_moment_report(traces: Sequence[QuantizationTrace] | Iterable[QuantizationTrace]) -> dict[str, float]:
    """Pool empirical error/noise moments over one or more traces.

    ``cross_moment_xi`` averages ``noise_i * noise_j`` over distinct
    coordinate pairs within each trace (NaN if every trace has length one).
    Under triangular dither the noise second moment concentrates at
    ``delta^2 / 4`` and the cross moment at zero; under uniform dither the
    second moment is input-dependent and no particular value is implied.
    """
    traces = list(traces)
    if not traces:
        raise InvalidArgumentError("at least one trace is required")
    omega = np.concatenate([t.error.ravel() for t in traces])
    xi = np.concatenate([t.noise.ravel() for t in traces])
    cross_num = 0.0
    cross_den = 0
    for t in traces:
        v = t.noise.ravel()
        m = v.size
        if m >= 2:
            s = v.sum()
            cross_num += s * s - np.dot(v, v)
            cross_den += m * (m - 1)
    return {
        "mean_omega": float(omega.mean()),
        "var_omega": float(omega.var()),
        "mean_xi": float(xi.mean()),
        "second_moment_xi": float(np.mean(xi * xi)),
        "cross_moment_xi": float(cross_num / cross_den) if cross_den else float("nan"),
    }
