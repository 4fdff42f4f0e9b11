"""Closed-form bounds, generalized binomials, root solvers, and the
two-coloring min-max optimization.

All bounds are returned as reals and never rounded; comparison layers are
expected to apply their own slack.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

ROOT_TOL = 1e-12
_GOLD = (math.sqrt(5) - 1) / 2


def binom_real(x: float, s: int) -> float:
    """Generalized binomial (x)(x-1)...(x-s+1)/s! for real x."""
    if s < 0:
        raise ValueError("s must be nonnegative")
    prod = 1.0
    for i in range(s):
        prod *= x - i
    return prod / math.factorial(s)


def kk_root(m: float, k: int) -> float:
    """The unique x >= k with binom_real(x, k) = m, for m >= 1."""
    if m < 1:
        raise ValueError("m must be at least 1")
    if k < 1:
        raise ValueError("k must be at least 1")
    lo = float(k)
    hi = float(k) + 1.0
    while binom_real(hi, k) < m:
        hi = k + 2 * (hi - k)
    # binom_real is strictly increasing in x on [k, inf)
    while hi - lo > ROOT_TOL:
        mid = (lo + hi) / 2
        if binom_real(mid, k) < m:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def kk_shadow_bound(m: int, k: int, s: int) -> float:
    """Shadow lower bound: a k-graph with m edges has at least this many
    s-subsets covered by its edges."""
    if not 1 <= s <= k:
        raise ValueError(f"need 1 <= s <= k, got s={s}, k={k}")
    if m < 1:
        raise ValueError("m must be at least 1")
    return binom_real(kk_root(m, k), s)


def _check_tsk(k: int, t: int, s: int) -> None:
    if not 1 <= t <= k - 1:
        raise ValueError(f"need 1 <= t <= k-1, got t={t}, k={k}")
    if not 1 <= s <= k:
        raise ValueError(f"need 1 <= s <= k, got s={s}, k={k}")


def general_lower_bound(n: int, r: int, k: int, t: int, s: int) -> float:
    """r^(-s/(k-t)) * C(n, s): valid for every r-coloring of K^k_n."""
    _check_tsk(k, t, s)
    if r < 1:
        raise ValueError("r must be at least 1")
    return r ** (-s / (k - t)) * math.comb(n, s)


def density_component_bound(n: int, k: int, t: int, s: int, delta: float) -> float:
    """delta^(s/(k-t)) * C(n, s): some t-tight component of any k-graph with
    at least delta*C(n,k) edges has an s-shadow this large."""
    _check_tsk(k, t, s)
    if not 0 <= delta <= 1:
        raise ValueError("delta must lie in [0, 1]")
    return delta ** (s / (k - t)) * math.comb(n, s)


def asymptotic_upper_bound(n: int, r: int, k: int, t: int, s: int, eps: float) -> float:
    """(1+eps) * r^(-s/(k-t)) * C(n, s)."""
    if eps <= 0:
        raise ValueError("eps must be positive")
    return (1 + eps) * general_lower_bound(n, r, k, t, s)


def fg_vertex_bound(n: int, r: int, k: int) -> tuple[int, float]:
    """Smallest q with r <= q^(k-1) + ... + q + 1, and the vertex bound n/q."""
    if r < 1:
        raise ValueError("r must be at least 1")
    if k < 2:
        raise ValueError("k must be at least 2")
    q = 1
    while sum(q**i for i in range(k)) < r:
        q += 1
    return q, n / q


def reference_bounds(n: int, r: int) -> dict[str, float]:
    """Graph-case reference values for comparison output."""
    if r < 2:
        raise ValueError("r must be at least 2")
    return {
        "spanning_vertices": n / (r - 1),
        "component_edges": math.comb(n, 2) / (r * r - r + 1.25),
    }


def _golden_min(fun: Callable[[float], float], a: float, b: float, iters: int) -> float:
    c = b - _GOLD * (b - a)
    d = a + _GOLD * (b - a)
    fc, fd = fun(c), fun(d)
    for _ in range(iters):
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _GOLD * (b - a)
            fc = fun(c)
        else:
            a, c, fc = c, d, fd
            d = a + _GOLD * (b - a)
            fd = fun(d)
    return (a + b) / 2


def _bisect_root(fun: Callable[[float], float], lo: float, hi: float, tol: float) -> float:
    flo = fun(lo)
    if flo * fun(hi) > 0:
        raise ValueError("root not bracketed")
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if flo * fun(mid) <= 0:
            hi = mid
        else:
            lo = mid
    return (lo + hi) / 2


def _minmax_objective(x: float, y: float) -> float:
    x3 = x * x * x
    return max(y**3 * x3, (1 - y) * x3, (1 - (1 - x) ** 3 - y * x3) / 2)


@dataclass(frozen=True)
class MinMaxResult:
    x: float
    y: float
    value: float
    grid_min: float
    lower_certificate: float


def optimize_2323(grid_step: float = 0.005, refine_iters: int = 120) -> MinMaxResult:
    """Minimize max(y^3 x^3, (1-y) x^3, (1-(1-x)^3 - y x^3)/2) over
    x in [0.5, 1], y in [0, 1].

    An exhaustive grid scan locates the basin and yields a Lipschitz lower
    certificate (the objective is 6-Lipschitz on the box); nested
    golden-section refinement (outer in x, inner in y; the objective is
    unimodal in each) then sharpens the minimizer. The reported value is
    always an attained objective value, hence an upper bound on the minimum.
    """
    if not 0 < grid_step <= 0.1:
        raise ValueError("grid_step must lie in (0, 0.1]")
    if refine_iters < 0:
        raise ValueError("refine_iters must be nonnegative")
    nx = int(round(0.5 / grid_step))
    ny = int(round(1.0 / grid_step))
    grid_min = math.inf
    bx = by = 0.0
    for i in range(nx + 1):
        x = 0.5 + i * grid_step
        for j in range(ny + 1):
            y = j * grid_step
            v = _minmax_objective(x, y)
            if v < grid_min:
                grid_min, bx, by = v, x, y

    def inner_min(x: float) -> float:
        y = _golden_min(lambda yy: _minmax_objective(x, yy), 0.0, 1.0, refine_iters)
        return _minmax_objective(x, y)

    if refine_iters > 0:
        x_star = _golden_min(
            inner_min, max(0.5, bx - 2 * grid_step), min(1.0, bx + 2 * grid_step), refine_iters
        )
        y_star = _golden_min(
            lambda yy: _minmax_objective(x_star, yy), 0.0, 1.0, refine_iters
        )
    else:
        x_star, y_star = bx, by
    value = _minmax_objective(x_star, y_star)
    if value > grid_min:
        x_star, y_star, value = bx, by, grid_min
    # any box point is within grid_step/2 of a grid point in each coordinate
    lower = grid_min - 6 * grid_step
    return MinMaxResult(x=x_star, y=y_star, value=value, grid_min=grid_min, lower_certificate=lower)


@dataclass(frozen=True)
class SpecialConstants:
    x0: float
    lambda_2313: float
    z_root: float
    minmax_2323: float
    minmax_argmin: tuple[float, float]
    lambda_target_2323: Fraction = field(default=Fraction(3, 8))


def special_constants(grid_step: float = 0.005) -> SpecialConstants:
    """Constants of the two-coloring analysis.

    x0 is computed both in closed form, (sqrt(21)-3)/2, and as the root of
    2x^3 + (1-x)^3 = 1 on (1/2, 1); the two must agree to 1e-12.
    """
    x0_closed = (math.sqrt(21) - 3) / 2
    x0_root = _bisect_root(lambda x: 2 * x**3 + (1 - x) ** 3 - 1, 0.5, 1.0, 1e-14)
    if abs(x0_closed - x0_root) > 1e-12:
        raise AssertionError("closed form and bisection disagree on x0")
    lam = 6 * math.sqrt(21) - 27
    z = _bisect_root(lambda z: (1 - z) ** 3 - z, 0.0, 1.0, 1e-14)
    mm = optimize_2323(grid_step=grid_step)
    return SpecialConstants(
        x0=x0_closed,
        lambda_2313=lam,
        z_root=z,
        minmax_2323=mm.value,
        minmax_argmin=(mm.x, mm.y),
    )


@dataclass(frozen=True)
class BoundReport:
    kind: str
    params: dict
    value: float


_BOUND_KINDS = {
    "general_lower": (general_lower_bound, ("n", "r", "k", "t", "s")),
    "density_lower": (density_component_bound, ("n", "k", "t", "s", "delta")),
    "kk_shadow": (kk_shadow_bound, ("m", "k", "s")),
    "fg_vertex": (None, ("n", "r", "k")),
    "asymptotic_upper": (asymptotic_upper_bound, ("n", "r", "k", "t", "s", "eps")),
    "reference": (None, ("n", "r")),
}


def evaluate_bound(kind: str, **params) -> BoundReport:
    """Dispatch a named bound; returns a report with the evaluated value."""
    if kind not in _BOUND_KINDS:
        raise ValueError(f"unknown bound kind {kind!r}")
    fun, names = _BOUND_KINDS[kind]
    missing = [p for p in names if p not in params]
    if missing:
        raise ValueError(f"bound {kind!r} requires parameters {missing}")
    args = {p: params[p] for p in names}
    if kind == "fg_vertex":
        q, value = fg_vertex_bound(**args)
        return BoundReport(kind=kind, params={**args, "q": q}, value=value)
    if kind == "reference":
        table = reference_bounds(**args)
        return BoundReport(kind=kind, params={**args, **table}, value=table["spanning_vertices"])
    return BoundReport(kind=kind, params=args, value=fun(**args))
