"""Exact piecewise-linear functions on [0, 2] and the upsilon invariant.

A function is stored as strictly increasing rational breakpoints running
from 0 to 2, the value at 0, and one rational slope per segment; continuity
is built in because values are always derived from the left.  Equal adjacent
slopes are merged on construction, so equality of canonical forms is plain
structural equality.  All arithmetic uses fractions.Fraction; no floating
point enters anywhere.

The upsilon function of an L-space knot with gap-set complement S and genus
g is the upper envelope of the 2g + 1 lines

    y = -2 #(S intersect [0, m)) - t (g - m),        m = 0, ..., 2g.

Because the slopes m - g are consecutive integers the envelope is built by a
single convex sweep over the slope-sorted lines.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

from . import knotexpr, semigroup
from .errors import ConstraintError, NotLSpace, OutOfDomain
from .knotexpr import KnotCombination, KnotExpr, LSpaceStatus
from .semigroup import FormalSemigroup

TWO = Fraction(2)


@dataclass(frozen=True)
class PiecewiseLinear:
    """Continuous piecewise-linear function on [0, 2] in canonical form."""

    breakpoints: tuple[Fraction, ...]
    value_at_zero: Fraction
    slopes: tuple[Fraction, ...]

    def __post_init__(self):
        bps = tuple(Fraction(b) for b in self.breakpoints)
        slopes = tuple(Fraction(s) for s in self.slopes)
        v0 = Fraction(self.value_at_zero)
        if len(bps) < 2 or len(slopes) != len(bps) - 1:
            raise ValueError("need one slope per segment and at least one segment")
        if bps[0] != 0 or bps[-1] != TWO:
            raise ValueError("the domain must be exactly [0, 2]")
        if any(bps[i] >= bps[i + 1] for i in range(len(bps) - 1)):
            raise ValueError("breakpoints must be strictly increasing")
        if any(slopes[i] == slopes[i + 1] for i in range(len(slopes) - 1)):
            # canonical form: merge runs of equal adjacent slopes
            merged_b = [bps[0]]
            merged_s = [slopes[0]]
            for i in range(1, len(slopes)):
                if slopes[i] == merged_s[-1]:
                    continue
                merged_b.append(bps[i])
                merged_s.append(slopes[i])
            merged_b.append(bps[-1])
            bps, slopes = tuple(merged_b), tuple(merged_s)
        object.__setattr__(self, "breakpoints", bps)
        object.__setattr__(self, "slopes", slopes)
        object.__setattr__(self, "value_at_zero", v0)

    @cached_property
    def breakpoint_values(self) -> tuple[Fraction, ...]:
        vals = [self.value_at_zero]
        for i, s in enumerate(self.slopes):
            vals.append(vals[-1] + s * (self.breakpoints[i + 1] - self.breakpoints[i]))
        return tuple(vals)

    @property
    def is_zero(self) -> bool:
        return self.value_at_zero == 0 and self.slopes == (Fraction(0),)

    def __call__(self, t) -> Fraction:
        t = Fraction(t)
        if t < 0 or t > TWO:
            raise OutOfDomain(f"t = {t} lies outside [0, 2]")
        i = bisect_right(self.breakpoints, t) - 1
        if i == len(self.slopes):
            i -= 1  # t == 2
        return self.breakpoint_values[i] + self.slopes[i] * (t - self.breakpoints[i])

    def scaled(self, c) -> PiecewiseLinear:
        c = Fraction(c)
        if c == 0:
            return ZERO
        return PiecewiseLinear(
            self.breakpoints, c * self.value_at_zero, tuple(c * s for s in self.slopes)
        )

    def mirrored(self) -> PiecewiseLinear:
        """The function t -> f(2 - t)."""
        bps = tuple(TWO - b for b in reversed(self.breakpoints))
        slopes = tuple(-s for s in reversed(self.slopes))
        return PiecewiseLinear(bps, self.breakpoint_values[-1], slopes)

    def __neg__(self) -> PiecewiseLinear:
        return self.scaled(-1)

    def __add__(self, other: PiecewiseLinear) -> PiecewiseLinear:
        return pl_combine([(1, self), (1, other)])

    def __sub__(self, other: PiecewiseLinear) -> PiecewiseLinear:
        return pl_combine([(1, self), (-1, other)])

    def __rmul__(self, c) -> PiecewiseLinear:
        return self.scaled(c)

    def __str__(self):
        parts = []
        for i, s in enumerate(self.slopes):
            parts.append(f"[{self.breakpoints[i]}, {self.breakpoints[i + 1]}]: slope {s}")
        return "; ".join(parts)


ZERO = PiecewiseLinear((0, 2), 0, (0,))


def envelope(lines) -> PiecewiseLinear:
    """Pointwise maximum over [0, 2] of lines given as (slope, intercept) pairs."""
    best: dict[Fraction, Fraction] = {}
    for slope, intercept in lines:
        slope, intercept = Fraction(slope), Fraction(intercept)
        if slope not in best or intercept > best[slope]:
            best[slope] = intercept
    if not best:
        raise ConstraintError("the envelope of no lines is undefined")
    # convex sweep: hull entries are (slope, intercept, start), where start is
    # the abscissa from which the line realizes the maximum (None = -infinity)
    hull: list[tuple[Fraction, Fraction, Fraction | None]] = []
    for slope in sorted(best):
        intercept = best[slope]
        while hull:
            s0, b0, start0 = hull[-1]
            x = (b0 - intercept) / (slope - s0)
            if start0 is None or x > start0:
                hull.append((slope, intercept, x))
                break
            hull.pop()
        else:
            hull.append((slope, intercept, None))
    bps = [Fraction(0)]
    slopes = []
    value_at_zero = None
    for i, (slope, intercept, start) in enumerate(hull):
        end = hull[i + 1][2] if i + 1 < len(hull) else None
        if start is not None and start >= TWO:
            break
        if end is not None and end <= 0:
            continue
        if value_at_zero is None:
            value_at_zero = intercept  # first active line covers t = 0
        if start is not None and start > 0:
            bps.append(start)
        slopes.append(slope)
    bps.append(TWO)
    return PiecewiseLinear(tuple(bps), value_at_zero, tuple(slopes))


def pl_combine(terms) -> PiecewiseLinear:
    """Exact linear combination sum(c * f) over merged breakpoints."""
    pairs = [(Fraction(c), f) for c, f in terms if Fraction(c) != 0]
    if not pairs:
        return ZERO
    bps = sorted({b for _, f in pairs for b in f.breakpoints})
    value_at_zero = sum((c * f.value_at_zero for c, f in pairs), Fraction(0))
    idx = [0] * len(pairs)
    slopes = []
    for j in range(len(bps) - 1):
        t = bps[j]
        total = Fraction(0)
        for k, (c, f) in enumerate(pairs):
            while f.breakpoints[idx[k] + 1] <= t:
                idx[k] += 1
            total += c * f.slopes[idx[k]]
        slopes.append(total)
    return PiecewiseLinear(tuple(bps), value_at_zero, tuple(slopes))


def evaluate(f: PiecewiseLinear, t) -> Fraction:
    """Exact value of f at t in [0, 2]."""
    return f(t)


def jump_spectrum(f: PiecewiseLinear) -> dict[Fraction, Fraction]:
    """Derivative jump at each interior breakpoint; canonical form makes all jumps nonzero."""
    return {
        f.breakpoints[i]: f.slopes[i] - f.slopes[i - 1] for i in range(1, len(f.slopes))
    }


def upsilon_from_semigroup(sg: FormalSemigroup) -> PiecewiseLinear:
    """Upsilon as the upper envelope of the member-count lines of the gap set."""
    g = sg.genus
    lines = []
    count = 0
    for m in range(2 * g + 1):
        if m > 0 and (m - 1) in sg:
            count += 1
        lines.append((m - g, -2 * count))
    return envelope(lines)


@lru_cache(maxsize=None)
def torus_consecutive_upsilon(n: int) -> PiecewiseLinear:
    """Upsilon of the (n, n+1) torus knot; its jumps are n at each 2i/n, 0 < i < n."""
    if n < 2:
        raise ConstraintError(f"consecutive torus knots need n >= 2, got {n}")
    return upsilon_from_semigroup(semigroup.from_generators({n, n + 1}))


@lru_cache(maxsize=None)
def upsilon_of_knot(knot: KnotExpr) -> PiecewiseLinear:
    """Upsilon of a single certified (or candidate) L-space knot."""
    cert = knotexpr.certify_lspace(knot)
    if cert.status is LSpaceStatus.NOT_LSPACE:
        raise NotLSpace(cert.reason or f"{knot} is not an L-space knot")
    return upsilon_from_semigroup(semigroup.from_alexander(knotexpr.alexander(knot)))


def upsilon_of_combination(comb: KnotCombination) -> PiecewiseLinear:
    """Multiplicity-weighted sum of the upsilon functions of a combination."""
    return pl_combine([(mult, upsilon_of_knot(k)) for k, mult in comb.items()])
