"""Statistical and exact verification of the shape-count and uniformity claims.

Monte Carlo corners are exact dyadic rationals (64-bit numerator over 2^64),
so classification never leaves integer arithmetic and results are bit-stable
for a given seed regardless of worker count.
"""
from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .digitize import (
    AngleSpec,
    Slopes,
    angle_thresholds,
    column_interval,
    digitize_angle_path,
    is_pixel_center,
)
from .errors import PixelCenterHit, WindowTooSmall
from .exact import extended_gcd, floor_exact
from .partition import partition_unit_square
from .shapes import enumerate_shapes

# 0.999 quantiles of the chi-square distribution by degrees of freedom.
CHI2_Q999 = {
    1: 10.827566, 2: 13.815511, 3: 16.266236, 4: 18.466827, 5: 20.515006,
    6: 22.457744, 7: 24.321886, 8: 26.124482, 9: 27.877165, 10: 29.588298,
    11: 31.264134, 12: 32.909490, 13: 34.528179, 14: 36.123274, 15: 37.697298,
    16: 39.252355, 17: 40.790217, 18: 42.312396, 19: 43.820196, 20: 45.314747,
    21: 46.797038, 22: 48.267942, 23: 49.728232, 24: 51.178598,
}

_BLOCK = 1 << 15
_Q_BITS = 64
_Q = 1 << _Q_BITS
_HALF_Q = 1 << (_Q_BITS - 1)


@dataclass(frozen=True)
class ClassHistogram:
    """Sampled class counts for one slope pair, with a uniformity statistic."""

    slopes: tuple[int, int, int, int]
    n: int
    seed: int
    counts: tuple[int, ...]
    chisq: float
    resampled: int = 0

    @property
    def count(self) -> int:
        return len(self.counts)

    @property
    def frequencies(self) -> tuple[float, ...]:
        return tuple(c / self.n for c in self.counts)

    @property
    def threshold(self) -> float:
        return CHI2_Q999[len(self.counts) - 1]

    @property
    def passed(self) -> bool:
        return self.chisq < self.threshold

    def to_json_dict(self) -> dict:
        return {
            "slopes": list(self.slopes),
            "classes": self.count,
            "samples": self.n,
            "seed": self.seed,
            "counts": list(self.counts),
            "frequencies": list(self.frequencies),
            "chi_square": self.chisq,
            "threshold": self.threshold,
            "resampled_centers": self.resampled,
            "pass": self.passed,
        }

    def table(self) -> str:
        a, b, c, d = self.slopes
        lines = [
            f"slopes {a}/{b} and {c}/{d}  classes={self.count}  "
            f"samples={self.n}  seed={self.seed}",
            "class  count      frequency",
        ]
        for j, cnt in enumerate(self.counts):
            lines.append(f"{j:<6d} {cnt:<10d} {cnt / self.n:.6f}")
        verdict = "PASS" if self.passed else "FAIL"
        lines.append(
            f"chi-square {self.chisq:.3f} vs 0.999 quantile "
            f"{self.threshold:.3f} ({self.count - 1} dof): {verdict}"
        )
        return "\n".join(lines)


def _count_block(slopes_tuple, seed, block, take):
    """Classify `take` dyadic-rational corners from one seeded block."""
    a, b, c, d = slopes_tuple
    det = a * d - b * c
    big_d = abs(det)
    _, x, y = extended_gcd(a, b)
    rng = random.Random(f"{seed}/{block}")
    counts = [0] * big_d
    resampled = 0
    for _ in range(take):
        while True:
            px = rng.getrandbits(_Q_BITS)
            py = rng.getrandbits(_Q_BITS)
            if px != _HALF_Q or py != _HALF_Q:
                break
            resampled += 1  # corner fell on a pixel center
        nx = px - _HALF_Q  # numerator of x0 - 1/2 over 2^64
        ny = py - _HALF_Q
        alpha = -((-(a * nx - b * ny)) >> _Q_BITS)  # exact ceiling
        beta = -((-(c * nx - d * ny)) >> _Q_BITS)
        counts[(beta - alpha * x * c + alpha * y * d) % big_d] += 1
    return counts, resampled


def sample_class_frequencies(
    slopes: Slopes, n: int, seed: int, workers: int = 1
) -> ClassHistogram:
    """Classify n uniform corners; deterministic in (n, seed), independent of
    workers because randomness is tied to fixed-size blocks of the index range."""
    if n < 1:
        raise ValueError("need n >= 1")
    big_d = slopes.count
    blocks = [
        (slopes.as_tuple(), seed, i, min(_BLOCK, n - i * _BLOCK))
        for i in range((n + _BLOCK - 1) // _BLOCK)
    ]
    counts = [0] * big_d
    resampled = 0
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = pool.map(_count_block, *zip(*blocks))
    else:
        results = (_count_block(*args) for args in blocks)
    for block_counts, block_resampled in results:
        for j, cnt in enumerate(block_counts):
            counts[j] += cnt
        resampled += block_resampled
    expected = n / big_d
    chisq = sum((cnt - expected) ** 2 / expected for cnt in counts)
    return ClassHistogram(slopes.as_tuple(), n, seed, tuple(counts), chisq, resampled)


def exact_class_areas(slopes: Slopes) -> list[Fraction]:
    """Exact area of each partition cell (edge-vector determinant); all 1/D."""
    return [cell.area for cell in partition_unit_square(slopes)]


# --- the center-membership property ---------------------------------------------


def _integer_tie_in_window(a, b, alpha, m_range, n_range) -> bool:
    """Does the line a*m - b*n = alpha pass through a window pixel center?"""
    if alpha.denominator != 1:
        return False
    t = int(alpha)
    for m in m_range:
        v = a * m - t
        if b == 0:
            if v == 0:
                return True
        elif v % b == 0 and n_range[0] <= v // b <= n_range[1]:
            return True
    return False


def hobby_region_check(spec: AngleSpec, window: int) -> bool:
    """Compare the digitized angular path against center membership.

    For every window column the multiset-parity of the digitized path's
    horizontal edges must sit exactly at the heights where pixel-center
    membership flips; that is the boundary form of "a pixel belongs to the
    digitized region iff its center lies in the undigitized region".
    """
    if is_pixel_center(spec.corner):
        raise PixelCenterHit("corner is a pixel center")
    alpha, beta = angle_thresholds(spec)
    slopes = spec.slopes
    m0, n0 = floor_exact(spec.corner[0]), floor_exact(spec.corner[1])
    w = window
    m_range = range(m0 - w - 1, m0 + w + 2)
    n_range = (n0 - w - 1, n0 + w + 1)
    if _integer_tie_in_window(spec.a, spec.b, alpha, m_range, n_range) or (
        _integer_tie_in_window(spec.c, spec.d, beta, m_range, n_range)
    ):
        raise PixelCenterHit("a boundary line passes through a window pixel center")

    path = digitize_angle_path(spec, w + 4)

    edge_parity: dict[tuple[int, int], int] = {}
    for (x1, y1), (x2, y2) in zip(path, path[1:]):
        if y1 == y2:
            key = (min(x1, x2), y1)
            edge_parity[key] = edge_parity.get(key, 0) ^ 1

    a, b, c, d = slopes.as_tuple()
    for m in range(m0 - w, m0 + w + 1):
        flips = set()
        iv = column_interval(a, b, c, d, alpha, beta, m)
        if iv is not None:
            lo, hi = iv
            if lo is not None and hi is not None and lo > hi:
                pass  # empty column
            else:
                if lo is not None and n0 - w <= lo <= n0 + w:
                    flips.add(lo)
                if hi is not None and n0 - w <= hi + 1 <= n0 + w:
                    flips.add(hi + 1)
        path_edges = {
            k for (col, k), parity in edge_parity.items()
            if col == m and parity and n0 - w <= k <= n0 + w
        }
        if flips != path_edges:
            return False
    return True


# --- exhaustive small-slope sweep ------------------------------------------------


def coprime_pairs(bound: int) -> list[tuple[int, int]]:
    from .exact import gcd

    return [
        (p, q)
        for p in range(-bound, bound + 1)
        for q in range(-bound, bound + 1)
        if gcd(p, q) == 1
    ]


@dataclass(frozen=True)
class SweepEntry:
    slopes: tuple[int, int, int, int]
    expected: int
    classes: int
    window: int
    areas_ok: bool
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.error is None and self.classes == self.expected and self.areas_ok


@dataclass
class SweepReport:
    max_shapes: int
    max_entry: int
    entries: list[SweepEntry] = field(default_factory=list)

    @property
    def failures(self) -> list[SweepEntry]:
        return [e for e in self.entries if not e.ok]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json_dict(self) -> dict:
        return {
            "max_shapes": self.max_shapes,
            "max_entry": self.max_entry,
            "pairs": len(self.entries),
            "failures": [
                {
                    "slopes": list(e.slopes),
                    "expected": e.expected,
                    "classes": e.classes,
                    "areas_ok": e.areas_ok,
                    "error": e.error,
                }
                for e in self.failures
            ],
            "pass": self.ok,
        }

    def table(self) -> str:
        counts: dict[int, int] = {}
        for e in self.entries:
            counts[e.expected] = counts.get(e.expected, 0) + 1
        lines = [
            f"slope pairs with entries <= {self.max_entry} and 1 <= D <= {self.max_shapes}: "
            f"{len(self.entries)}",
            "D      pairs",
        ]
        for d in sorted(counts):
            lines.append(f"{d:<6d} {counts[d]}")
        for e in self.failures:
            lines.append(f"FAIL {e.slopes}: classes={e.classes} expected={e.expected} error={e.error}")
        lines.append("sweep: PASS" if self.ok else "sweep: FAIL")
        return "\n".join(lines)


def theorem_sweep(max_shapes: int, max_entry: int | None = None) -> SweepReport:
    """Check class count == D and all cell areas == 1/D over every coprime
    slope pair with entries bounded by max_entry and 1 <= D <= max_shapes."""
    if max_shapes < 1:
        raise ValueError("max_shapes must be >= 1")
    bound = max_shapes if max_entry is None else max_entry
    report = SweepReport(max_shapes, bound)
    pairs = coprime_pairs(bound)
    for a, b in pairs:
        for c, d in pairs:
            det = a * d - b * c
            if det == 0 or abs(det) > max_shapes:
                continue
            slopes = Slopes(a, b, c, d)
            expected = slopes.count
            try:
                shapes = enumerate_shapes(slopes)
                areas_ok = all(
                    area == Fraction(1, expected) for area in exact_class_areas(slopes)
                )
                report.entries.append(
                    SweepEntry(
                        slopes.as_tuple(), expected, len({s.bitmap for s in shapes}),
                        shapes[0].window, areas_ok,
                    )
                )
            except WindowTooSmall as exc:
                report.entries.append(
                    SweepEntry(slopes.as_tuple(), expected, 0, 0, False, str(exc))
                )
    return report
