"""Rulers: index sets that realize every pairwise distance.

A ruler for dimension ``d`` is a subset ``R`` of ``{0, ..., d-1}`` such
that every distance ``s`` in ``{0, ..., d-1}`` is realized by some ordered
pair of elements of ``R``.  The estimator averages sample products over
the ordered pairs at each distance, so rulers carry their full pair index.

Indices are 0-based internally; the CLI prints them 1-based.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .exceptions import IndexOutOfRangeError, InvalidArgumentError, NotARulerError

__all__ = [
    "Ruler",
    "full_ruler",
    "ruler_alpha",
    "is_ruler",
    "pairs_at_distance",
    "coverage_coefficient",
    "phi_bound",
]


def _round_half_up(x: float) -> int:
    return int(math.floor(x + 0.5))


@dataclass(frozen=True)
class Ruler:
    """A validated ruler with a precomputed ordered-pair index.

    ``pair_counts[s]`` is the number of ordered pairs ``(j, k)`` in
    ``R x R`` with ``|j - k| == s``; it is ``|R|`` at ``s = 0`` and even
    for ``s >= 1``.
    """

    d: int
    indices: np.ndarray
    pair_counts: np.ndarray = field(init=False, repr=False)
    _dist: np.ndarray = field(init=False, repr=False)

    def __post_init__(self) -> None:
        idx = np.unique(np.asarray(self.indices, dtype=np.int64))
        if idx.size == 0:
            raise InvalidArgumentError("a ruler needs at least one index")
        if self.d < 1:
            raise InvalidArgumentError(f"dimension must be positive, got {self.d}")
        if idx.min() < 0 or idx.max() >= self.d:
            raise IndexOutOfRangeError(
                f"ruler indices must lie in [0, {self.d}), got [{idx.min()}, {idx.max()}]"
            )
        idx.flags.writeable = False
        object.__setattr__(self, "indices", idx)

        dist = np.abs(idx[:, None] - idx[None, :])
        counts = np.bincount(dist.ravel(), minlength=self.d)
        if np.any(counts == 0):
            missing = np.flatnonzero(counts == 0).tolist()
            raise NotARulerError(
                f"index set does not realize distances {missing}", missing=missing
            )
        counts.flags.writeable = False
        dist.flags.writeable = False
        object.__setattr__(self, "pair_counts", counts)
        object.__setattr__(self, "_dist", dist)

    @property
    def size(self) -> int:
        return int(self.indices.size)

    def position_pairs(self, s: int) -> tuple[np.ndarray, np.ndarray]:
        """Row/column positions (into ``indices``) of the ordered pairs at distance ``s``."""
        self._check_distance(s)
        rows, cols = np.nonzero(self._dist == s)
        return rows, cols

    def distance_matrix(self) -> np.ndarray:
        """|R| x |R| matrix of pairwise index distances."""
        return self._dist

    def _check_distance(self, s: int) -> None:
        if not 0 <= s < self.d:
            raise IndexOutOfRangeError(f"distance must lie in [0, {self.d}), got {s}")


def is_ruler(indices, d: int) -> tuple[bool, list[int]]:
    """Check the ruler property; return (ok, sorted missing distances)."""
    idx = np.unique(np.asarray(list(indices), dtype=np.int64))
    if idx.size == 0:
        return False, list(range(d))
    if idx.min() < 0 or idx.max() >= d:
        raise IndexOutOfRangeError(f"indices must lie in [0, {d})")
    realized = np.zeros(d, dtype=bool)
    dist = np.abs(idx[:, None] - idx[None, :]).ravel()
    realized[dist] = True
    missing = np.flatnonzero(~realized).tolist()
    return not missing, missing


def full_ruler(d: int) -> Ruler:
    """The ruler containing every index ``0..d-1``."""
    if d < 1:
        raise InvalidArgumentError(f"dimension must be positive, got {d}")
    return Ruler(d, np.arange(d, dtype=np.int64))


def ruler_alpha(d: int, alpha: float) -> Ruler:
    """Two-block ruler: a dense prefix plus an arithmetic tail from the top.

    With ``r1 = round(d^alpha)`` and ``step = round(d^(1-alpha))``, take the
    block ``{0, ..., r1-1}`` plus the tail ``{d-1 - i*step}`` for
    ``i = 0..r1-1`` (clipped at zero).  Rounding can leave a distance
    uncovered for some (d, alpha); in that case the smallest index covering
    the largest missing distance is added greedily until the set is a ruler.
    """
    if d < 2:
        raise InvalidArgumentError(f"dimension must be at least 2, got {d}")
    if not 0.5 <= alpha <= 1.0:
        raise InvalidArgumentError(f"alpha must lie in [1/2, 1], got {alpha}")
    r1 = max(1, _round_half_up(d**alpha))
    step = max(1, _round_half_up(d ** (1.0 - alpha)))
    chosen = set(range(min(r1, d)))
    for i in range(r1):
        j = d - 1 - i * step
        if j >= 0:
            chosen.add(j)

    ok, missing = is_ruler(chosen, d)
    while not ok:
        s = missing[-1]
        j = min(
            j
            for j in range(d)
            if j not in chosen and ((j - s) in chosen or (j + s) in chosen)
        )
        chosen.add(j)
        ok, missing = is_ruler(chosen, d)
    return Ruler(d, np.fromiter(sorted(chosen), dtype=np.int64))


def pairs_at_distance(ruler: Ruler, s: int) -> set[tuple[int, int]]:
    """Ordered index pairs ``(j, k)`` of the ruler with ``|j - k| == s``."""
    rows, cols = ruler.position_pairs(s)
    idx = ruler.indices
    return {(int(idx[r]), int(idx[c])) for r, c in zip(rows, cols)}


def coverage_coefficient(ruler: Ruler) -> float:
    """Sum over distances ``s >= 1`` of ``1 / |R_s|`` (ordered-pair counts).

    Computed with exact float summation, so rulers whose pair counts match
    give bit-identical coefficients.
    """
    return math.fsum(1.0 / int(c) for c in ruler.pair_counts[1:])


def phi_bound(d: int, alpha: float) -> float:
    """Closed-form ceiling for the coverage coefficient of ``ruler_alpha``.

    Evaluates ``d^(2-2a) + d^(1-a) * ln d`` with the hidden constant of the
    second term fixed to one; a heuristic envelope, not a certified bound.
    """
    if d < 2:
        raise InvalidArgumentError(f"dimension must be at least 2, got {d}")
    return float(d ** (2.0 - 2.0 * alpha) + d ** (1.0 - alpha) * math.log(d))
