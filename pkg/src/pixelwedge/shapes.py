"""Translation-equivalence classes of digitized angles.

A corner (x0, y0) with slope pairs (a, b), (c, d) digitizes to the pixel set
{(m, n) : a*m - b*n >= alpha, c*m - d*n >= beta} with exact rational
thresholds; only their ceilings matter, and integer parameter pairs fall into
exactly D = |ad - bc| classes under integer translation. This module computes
the class arithmetic in closed form and materialises canonical window-clipped
bitmaps so that two parameter pairs are equivalent iff their bitmaps are
literally equal.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .digitize import AngleSpec, PixelIndex, Slopes, column_interval, angle_thresholds
from .errors import InvalidAxis, WindowTooSmall
from .exact import ceil_exact, extended_gcd, floor_exact

PixelSet = frozenset  # of (m, n) pixel indices


@dataclass(frozen=True)
class RegionParams:
    """Exact thresholds of one digitized angle and their integer ceilings."""

    alpha: Fraction
    beta: Fraction
    alpha_ceil: int
    beta_ceil: int


def region_params(spec: AngleSpec) -> RegionParams:
    alpha, beta = angle_thresholds(spec)
    return RegionParams(alpha, beta, ceil_exact(alpha), ceil_exact(beta))


def shift_params(slopes: Slopes, alpha: int, beta: int, k: int, l: int) -> tuple[int, int]:
    """Parameters of the region translated by (k, l): R(shifted) == R(a,b) + (k,l)."""
    return (alpha + k * slopes.a - l * slopes.b, beta + k * slopes.c - l * slopes.d)


def class_of_params(slopes: Slopes, alpha: int, beta: int) -> int:
    """Class index j in [0, D): the unique j with R(alpha, beta) ~ R(0, j).

    Any Bezout pair (k0, l0) with k0*a - l0*b == alpha moves alpha to zero;
    the second threshold then lands at beta - (k0*c - l0*d), determined
    modulo ad - bc.
    """
    _, x, y = extended_gcd(slopes.a, slopes.b)
    k0, l0 = alpha * x, alpha * y
    return (beta - k0 * slopes.c + l0 * slopes.d) % slopes.count


def class_index(spec: AngleSpec) -> int:
    p = region_params(spec)
    return class_of_params(spec.slopes, p.alpha_ceil, p.beta_ceil)


def equivalent(p1: RegionParams, p2: RegionParams, slopes: Slopes) -> bool:
    """Whether two digitized angles have the same shape (integer translate).

    Closed form: solve k*a - l*b = d_alpha by Bezout; the general solution
    shifts the second difference by multiples of ad - bc, so equivalence is a
    single congruence test.
    """
    d_alpha = p1.alpha_ceil - p2.alpha_ceil
    d_beta = p1.beta_ceil - p2.beta_ceil
    _, x, y = extended_gcd(slopes.a, slopes.b)
    k0, l0 = d_alpha * x, d_alpha * y
    return (d_beta - (k0 * slopes.c - l0 * slopes.d)) % slopes.count == 0


def params_apex(slopes: Slopes, alpha, beta) -> tuple[Fraction, Fraction]:
    """Intersection point of the boundary lines a*m - b*n = alpha,
    c*m - d*n = beta, in pixel-index coordinates."""
    det = slopes.b * slopes.c - slopes.a * slopes.d
    m = Fraction(-slopes.d * alpha + slopes.b * beta, 1) / det
    n = Fraction(-slopes.c * alpha + slopes.a * beta, 1) / det
    return m, n


def region_anchor(slopes: Slopes, alpha: int, beta: int) -> PixelIndex:
    """Window anchor for R(alpha, beta): floor of the boundary-line crossing.

    Depends on the region only, and shifts by exactly (k, l) when the region
    is translated by (k, l), so equivalent regions clip identically.
    """
    m, n = params_apex(slopes, alpha, beta)
    return floor_exact(m), floor_exact(n)


Columns = tuple[tuple[int, int, int], ...]  # (column, row_lo, row_hi) inclusive


def _window_columns(slopes: Slopes, alpha: int, beta: int, window: int) -> tuple[Columns, PixelIndex]:
    """Absolute per-column pixel intervals of R(alpha, beta) clipped to the
    anchored window, plus the anchor."""
    am, an = region_anchor(slopes, alpha, beta)
    a, b, c, d = slopes.as_tuple()
    cols = []
    for m in range(am - window, am + window + 1):
        iv = column_interval(a, b, c, d, alpha, beta, m)
        if iv is None:
            continue
        lo, hi = iv
        lo = an - window if lo is None else max(lo, an - window)
        hi = an + window if hi is None else min(hi, an + window)
        if lo <= hi:
            cols.append((m, lo, hi))
    return tuple(cols), (am, an)


def class_fingerprint(slopes: Slopes, alpha: int, beta: int, window: int) -> tuple[Columns, PixelIndex]:
    """Canonical (translation-normalised) column table of the windowed region
    and the anchor's position in canonical coordinates.

    Equivalent parameter pairs produce identical fingerprints at equal window.
    """
    cols, (am, an) = _window_columns(slopes, alpha, beta, window)
    if not cols:
        return (), (0, 0)
    min_m = min(m for m, _, _ in cols)
    min_n = min(lo for _, lo, _ in cols)
    sig = tuple((m - min_m, lo - min_n, hi - min_n) for m, lo, hi in cols)
    return sig, (am - min_m, an - min_n)


def _pixels_of(sig: Columns) -> PixelSet:
    return frozenset((m, n) for m, lo, hi in sig for n in range(lo, hi + 1))


def canonicalize(ps) -> PixelSet:
    """Translate a pixel set so its minimum occupied column and row are 0."""
    ps = frozenset(ps)
    if not ps:
        return ps
    min_m = min(m for m, _ in ps)
    min_n = min(n for _, n in ps)
    return frozenset((m - min_m, n - min_n) for m, n in ps)


@dataclass(frozen=True)
class ShapeClass:
    """One translation-equivalence class, materialised as a canonical bitmap."""

    slopes: tuple[int, int, int, int]
    index: int
    window: int
    bitmap: PixelSet
    corner_pixel: PixelIndex  # boundary-line crossing pixel, canonical coords

    def to_json_dict(self) -> dict:
        return {
            "slopes": list(self.slopes),
            "index": self.index,
            "window": self.window,
            "pixels": sorted(self.bitmap),
        }


def default_window(slopes: Slopes) -> int:
    return 2 * (abs(slopes.a) + abs(slopes.b) + abs(slopes.c) + abs(slopes.d))


def _shape_from_params(slopes: Slopes, alpha: int, beta: int, window: int, index: int) -> ShapeClass:
    sig, corner = class_fingerprint(slopes, alpha, beta, window)
    return ShapeClass(slopes.as_tuple(), index, window, _pixels_of(sig), corner)


def enumerate_shapes(slopes: Slopes, window: int | None = None) -> list[ShapeClass]:
    """All D shape classes as canonical windowed bitmaps, index order 0..D-1.

    The window grows by doubling (up to 8x the starting size) if two classes
    collide inside it; distinct classes have distinct unclipped regions, so
    some finite window always separates them.
    """
    base = default_window(slopes) if window is None else window
    if base < 1:
        raise ValueError("window must be >= 1")
    d = slopes.count
    for factor in (1, 2, 4, 8):
        w = base * factor
        sigs = [class_fingerprint(slopes, 0, j, w) for j in range(d)]
        keys = {sig for sig, _ in sigs}
        if any(not sig for sig, _ in sigs):
            continue  # some class has no pixel in window: grow
        if len(keys) == d:
            return [
                ShapeClass(slopes.as_tuple(), j, w, _pixels_of(sig), corner)
                for j, (sig, corner) in enumerate(sigs)
            ]
    raise WindowTooSmall(
        f"classes of {slopes.as_tuple()} not pairwise distinct within window {base * 8}"
    )


def shape_of_spec(spec: AngleSpec, window: int | None = None) -> ShapeClass:
    """Canonical windowed bitmap of one concrete digitized angle."""
    slopes = spec.slopes
    w = default_window(slopes) if window is None else window
    p = region_params(spec)
    return _shape_from_params(
        slopes, p.alpha_ceil, p.beta_ceil, w, class_of_params(slopes, p.alpha_ceil, p.beta_ceil)
    )


# --- reflections ---------------------------------------------------------------

_AXES = ("horizontal", "vertical", "diagonal45", "antidiagonal45")


def reflection_symmetric(ps, axis: str, anchor) -> bool:
    """Whether reflecting every pixel across the axis reproduces the set.

    Horizontal/vertical axes may sit on pixel-corner lines (integer anchor) or
    pixel-center lines (half-integer anchor). Diagonal axes map pixels to
    pixels only when they pass through pixel corners, i.e. integer offset.
    """
    if axis not in _AXES:
        raise InvalidAxis(f"unknown axis {axis!r}")
    anchor = Fraction(anchor)
    ps = frozenset(ps)
    if axis in ("horizontal", "vertical"):
        twice = anchor * 2
        if twice.denominator != 1:
            raise InvalidAxis("axis must sit on a pixel-corner or pixel-center line")
        t = int(twice)
        if axis == "vertical":
            reflected = {(t - 1 - m, n) for m, n in ps}
        else:
            reflected = {(m, t - 1 - n) for m, n in ps}
    else:
        if anchor.denominator != 1:
            raise InvalidAxis("diagonal axes must pass through pixel corners")
        t = int(anchor)
        if axis == "diagonal45":  # the line y = x + t
            reflected = {(n - t, m + t) for m, n in ps}
        else:  # the line y = -x + t
            reflected = {(t - n - 1, t - m - 1) for m, n in ps}
    return reflected == ps
