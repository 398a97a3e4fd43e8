"""The equimeasurable pair (f, g) separating membership in the Morrey space.

f stacks the blocks n^((1-lam+eps)/p) on consecutive intervals just
right of angle 0, so prefix arcs (0, t) see a ratio growing like
t^(-eps); g carries the same blocks on the short, well-separated arcs
gamma_n near 1/sqrt(n), which keeps its ratio uniformly bounded.  Both
functions use blocks n = 16..N; analytic evaluators with certified tail
enclosures cover statements about the untruncated f.

Floating-point layout: the canonical angular length of block n is
ell_n = gr_n - gl_n where gr_n = fl(1/sqrt(n)) and gl_n = fl(gr_n -
fl(1/(n*(n+1)))).  f tiles these exact lengths downward from 1/16, so
both functions recover identical per-block lengths from breakpoint
differences and compare equimeasurable at tolerance 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import tau

import numpy as np

from .circle_step import Arc, make_step
from .errors import (
    ArcOutsideDomain,
    EpsOutOfRange,
    IndexOutOfRange,
    LambdaOutOfRange,
    NTooSmall,
    OverlapDetected,
    POutOfRange,
    TOutOfRange,
    YOutOfRange,
)

N_MIN = 16


@dataclass(frozen=True)
class CounterexampleParams:
    """(p, lam, eps) with 0 < eps < min(lam/2, 1 - lam)."""

    p: float
    lam: float
    eps: float

    def __post_init__(self):
        if not (self.p >= 1 and math.isfinite(self.p)):
            raise POutOfRange(f"p must satisfy 1 <= p < inf, got {self.p}")
        if not (0.0 < self.lam < 1.0):
            raise LambdaOutOfRange(f"lambda must lie in (0, 1), got {self.lam}")
        cap = min(self.lam / 2.0, 1.0 - self.lam)
        if not (0.0 < self.eps < cap):
            raise EpsOutOfRange(
                f"eps must lie in (0, {cap}) for lambda={self.lam}, got {self.eps}"
            )

    @property
    def alpha(self):
        """Block-height exponent (1 - lam + eps) / p."""
        return (1.0 - self.lam + self.eps) / self.p


def validate_params(p, lam, eps):
    return CounterexampleParams(float(p), float(lam), float(eps))


@dataclass(frozen=True)
class BoundedValue:
    """Certified interval enclosure [lo, hi] of an exact quantity."""

    lo: float
    hi: float

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"invalid enclosure [{self.lo}, {self.hi}]")

    @property
    def width(self):
        return self.hi - self.lo


@dataclass(frozen=True)
class IndexBounds:
    """Indices of the rightmost (n0) and leftmost (n1) block arcs
    reachable by a test arc; raw, computed over all of N."""

    n0: int
    n1: int


def _gamma_endpoints(n):
    gr = 1.0 / math.sqrt(n)
    gl = gr - 1.0 / (n * (n + 1))
    return gl, gr


def gamma_arc(n):
    """The n-th block arc (1/sqrt(n) - 1/(n(n+1)), 1/sqrt(n)), n >= 16."""
    if n < N_MIN:
        raise NTooSmall(f"block arcs exist for n >= {N_MIN}, got {n}")
    gl, gr = _gamma_endpoints(n)
    return Arc(gl, gr - gl)


def build_g(params, N):
    """Step function with value n^alpha on gamma_n for n = 16..N, else 0."""
    if N < N_MIN:
        raise NTooSmall(f"N must be >= {N_MIN}, got {N}")
    alpha = params.alpha
    bps, vals = [], []
    prev_gr = 0.0
    for n in range(N, N_MIN - 1, -1):
        gl, gr = _gamma_endpoints(n)
        if gl <= prev_gr:
            raise OverlapDetected(f"block arcs for n={n + 1} and n={n} overlap")
        bps.extend((gl, gr))
        vals.extend((float(n) ** alpha, 0.0))
        prev_gr = gr
    return make_step(bps, vals)


def build_f(params, N):
    """Step function stacking the same blocks contiguously below 1/16.

    Block n sits on (r - ell_n, r) where r tiles downward from 1/16 and
    ell_n is the canonical block length; the breakpoints agree with the
    ideal 1/(n+1), 1/n to within ~1e-13 while the recovered lengths
    match g's exactly.
    """
    if N < N_MIN:
        raise NTooSmall(f"N must be >= {N_MIN}, got {N}")
    alpha = params.alpha
    rights = []
    r = 1.0 / 16.0
    for n in range(N_MIN, N + 1):
        gl, gr = _gamma_endpoints(n)
        ell = gr - gl
        left = r - ell
        if r - left != ell:
            raise OverlapDetected(f"length tiling lost exactness at n={n}")
        rights.append(r)
        r = left
    bps = [r] + rights[::-1]
    vals = [float(n) ** alpha for n in range(N, N_MIN - 1, -1)] + [0.0]
    return make_step(bps, vals)


def arc_index_bounds(arc):
    """Raw (n0, n1) index bounds for an arc inside (0, 1/4).

    n1 is the largest n with inf < 1/sqrt(n); n0 the smallest n whose
    block-arc left endpoint lies below sup.
    """
    inf_t = arc.start
    sup_t = arc.start + arc.length
    if not (0.0 < inf_t and sup_t <= 0.25):
        raise ArcOutsideDomain(
            f"arc ({inf_t}, {sup_t}) not contained in (0, 1/4)"
        )

    n1 = max(1, int(1.0 / inf_t ** 2) - 2)
    while inf_t < 1.0 / math.sqrt(n1 + 1):
        n1 += 1
    while n1 > 1 and not inf_t < 1.0 / math.sqrt(n1):
        n1 -= 1

    def h(n):
        return 1.0 / math.sqrt(n) - 1.0 / (n * (n + 1))

    # h is decreasing for n >= 2; sup < 1/4 keeps n0 well past the
    # non-monotone head, but scan defensively
    n0 = max(2, int(1.0 / sup_t ** 2) - 2)
    while not sup_t > h(n0):
        n0 += 1
    while n0 > 2 and sup_t > h(n0 - 1):
        n0 -= 1
    if sup_t > h(1):
        n0 = 1
    return IndexBounds(n0, n1)


def gamma_index_range(arc):
    """Clamped index range of block arcs actually met by the arc.

    Returns IndexBounds over n >= 16, or None when the arc intersects
    no block arc at all.
    """
    raw = arc_index_bounds(arc)
    n0 = max(raw.n0, N_MIN)
    if n0 > raw.n1:
        return None
    return IndexBounds(n0, raw.n1)


def divergence_lower_bound(params, t):
    """The analytic lower bound C(lam, eps) * t^(-eps) on the prefix
    ratio of the untruncated f, valid for 0 < t < 1/16."""
    if not (0.0 < t < 1.0 / 16.0):
        raise TOutOfRange(f"t must lie in (0, 1/16), got {t}")
    lam, eps = params.lam, params.eps
    c = (4.0 * math.pi) ** (lam - 1.0) / (2.0 ** eps * (lam - eps))
    return c * t ** (-eps)


# relative inflation covering accumulated rounding in the exact partial sums
_SUM_GUARD = 1e-13
_CHUNK = 1 << 22


def _block_sum(a_exp, lo, hi):
    """Sum of n^a_exp / (n(n+1)) for n = lo..hi, in chunks."""
    total = 0.0
    n = lo
    while n <= hi:
        m = min(hi, n + _CHUNK - 1)
        x = np.arange(n, m + 1, dtype=np.float64)
        total += float(np.sum(x ** a_exp / (x * (x + 1.0))))
        n = m + 1
    return total


def f_prefix_ratio(params, t, tail_tol):
    """Certified enclosure of the Morrey ratio of the untruncated f on
    the prefix arc (0, t).

    Exact block terms are summed up to a cutoff M; the remaining tail of
    sum n^(1-lam+eps)/(n(n+1)) is enclosed between the integrals of
    x^(-1-lam+eps) over [M+2, inf) and [M, inf).  The cutoff grows until
    hi - lo <= tail_tol * lo.
    """
    if not (0.0 < t < 1.0 / 16.0):
        raise TOutOfRange(f"t must lie in (0, 1/16), got {t}")
    if tail_tol <= 0.0:
        raise ValueError(f"tail_tol must be positive, got {tail_tol}")
    lam, eps = params.lam, params.eps
    a_exp = 1.0 - lam + eps
    beta = lam - eps

    n_b = math.floor(1.0 / t)
    partial = float(n_b) ** a_exp * max(0.0, t - 1.0 / (n_b + 1))

    factor = tau ** (lam - 1.0) * t ** (-lam)
    cutoff = n_b
    exact = 0.0
    while True:
        t_lo = (cutoff + 2.0) ** (-beta) / beta
        t_hi = float(cutoff) ** (-beta) / beta
        lo = (partial + exact + t_lo) * factor * (1.0 - _SUM_GUARD)
        hi = (partial + exact + t_hi) * factor * (1.0 + _SUM_GUARD)
        if hi - lo <= tail_tol * lo or cutoff > n_b * 10 ** 7:
            return BoundedValue(lo, hi)
        new_cutoff = cutoff * 2
        exact += _block_sum(a_exp, cutoff + 1, new_cutoff)
        cutoff = new_cutoff


def phi(lam, y):
    """The ratio-control function (sqrt(y) - 1)^(-lam) (y^(lam/2) - 1)."""
    if not (y > 1.0):
        raise YOutOfRange(f"phi is defined for y > 1, got {y}")
    return (math.sqrt(y) - 1.0) ** (-lam) * (y ** (lam / 2.0) - 1.0)


_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


def _golden_max(fun, a, b, tol=1e-12):
    """Golden-section maximization of a unimodal function on [a, b]."""
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc, fd = fun(c), fun(d)
    while b - a > tol:
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = fun(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = fun(d)
    return max(fc, fd)


def phi_sup(lam, samples=100_000):
    """Numerical supremum of phi over (1, inf).

    Dense log-spaced sampling of (1, 1e12] plus golden-section
    refinement around the best sample; the limit 1 at infinity is a
    final candidate rather than an assumption.
    """
    if not (0.0 < lam < 1.0):
        raise LambdaOutOfRange(f"lambda must lie in (0, 1), got {lam}")
    u = np.logspace(-9.0, 12.0, samples)       # u = y - 1
    y = 1.0 + u
    vals = (np.sqrt(y) - 1.0) ** (-lam) * (y ** (lam / 2.0) - 1.0)
    k = int(np.argmax(vals))
    lo = math.log(u[max(0, k - 1)])
    hi = math.log(u[min(samples - 1, k + 1)])
    refined = _golden_max(lambda s: phi(lam, 1.0 + math.exp(s)), lo, hi)
    return max(float(np.max(vals)), refined, 1.0)


def g_ratio_upper_bound(params):
    """Upper bound on the Morrey ratio of g over all arcs.

    The multi-block case is bounded by 2^(lam+3) * M_lam / (pi * lam);
    single-block arcs are below 1, hence the max with 1.
    """
    lam = params.lam
    return max(1.0, 2.0 ** (lam + 3.0) * phi_sup(lam) / (math.pi * lam))


def measure_lower_bound_check(n0, n1):
    """Verify the arc-measure lower bound used in the boundedness proof:
    1/sqrt(n0) - 1/(n0(n0+1)) - 1/sqrt(n1) >= (1/sqrt(n0) - 1/sqrt(n1))/2."""
    if not (N_MIN <= n0 < n1):
        raise IndexOutOfRange(f"need 16 <= n0 < n1, got ({n0}, {n1})")
    lhs = 1.0 / math.sqrt(n0) - 1.0 / (n0 * (n0 + 1)) - 1.0 / math.sqrt(n1)
    rhs = 0.5 * (1.0 / math.sqrt(n0) - 1.0 / math.sqrt(n1))
    return lhs >= rhs
