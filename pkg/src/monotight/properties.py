"""Seeded randomized verification suites.

Each suite returns a report dict with the seed, trial count and violation
count; the CLI `verify` subcommand and the acceptance tests both run these.
"""

from __future__ import annotations

import math
import random

from . import bounds
from .constructions import blow_up, padded_index_set
from .core import (
    Coloring,
    Hypergraph,
    _component_indices,
    _shadow_members,
    colex_edges,
    mask_to_vertices,
    measure,
)
from .search import random_coloring, verify_r2a

SLACK = 1e-9


def random_hypergraph(n: int, k: int, rng: random.Random) -> Hypergraph:
    """Non-empty k-graph on {1..n}: each edge kept with one shared random
    probability (re-drawn until at least one edge survives)."""
    all_edges = list(colex_edges(n, k))
    while True:
        p = rng.random()
        edges = [e for e in all_edges if rng.random() < p]
        if edges:
            return Hypergraph(n, k, edges)


def _max_shadow_by_ts(c: Coloring) -> dict[tuple[int, int], int]:
    """measure(c, t, s).value for every valid (t, s), sharing component work."""
    k = c.k
    by_color: list[list[int]] = [[] for _ in range(c.r + 1)]
    for rank, mask in enumerate(colex_edges(c.n, k)):
        by_color[c.colors[rank]].append(mask)
    out: dict[tuple[int, int], int] = {}
    for t in range(1, k):
        for s in range(1, k + 1):
            out[(t, s)] = 0
    for col in range(1, c.r + 1):
        masks = by_color[col]
        if not masks:
            continue
        for t in range(1, k):
            for comp in _component_indices(masks, t):
                comp_masks = [masks[i] for i in comp]
                for s in range(1, k + 1):
                    cnt = len(comp_masks) if s == k else len(_shadow_members(comp_masks, s, k))
                    if cnt > out[(t, s)]:
                        out[(t, s)] = cnt
    return out


def verify_lowerbound(trials: int = 1000, seed: int = 0) -> dict:
    """Random colorings: the largest monochromatic component shadow is at
    least r^(-s/(k-t)) * C(n, s) for every valid (t, s)."""
    rng = random.Random(seed)
    grid = [
        (n, r, k)
        for n in (6, 8, 10, 12)
        for r in (2, 3, 4)
        for k in (3, 4)
    ]
    violations = []
    for trial in range(trials):
        n, r, k = grid[trial % len(grid)]
        c = random_coloring(n, r, k, seed=rng.randrange(2**63))
        values = _max_shadow_by_ts(c)
        for (t, s), val in values.items():
            bound = bounds.general_lower_bound(n, r, k, t, s)
            if val < bound - SLACK:
                violations.append({"n": n, "r": r, "k": k, "t": t, "s": s, "value": val, "bound": bound})
    return {"suite": "lowerbound", "trials": trials, "seed": seed, "violations": violations}


def verify_kk(trials: int = 500, seed: int = 0) -> dict:
    """Random k-graphs: the s-shadow count dominates the Kruskal-Katona
    bound binom(x, s) with binom(x, k) = |G|."""
    rng = random.Random(seed)
    violations = []
    for trial in range(trials):
        k = 3 if trial % 2 == 0 else 4
        n = rng.randint(k + 1, 10)
        g = random_hypergraph(n, k, rng)
        for s in range(1, k + 1):
            actual = len(_shadow_members(g.edges, s, k))
            bound = bounds.kk_shadow_bound(len(g.edges), k, s)
            if actual < bound - SLACK:
                violations.append({"n": n, "k": k, "s": s, "edges": len(g.edges), "actual": actual, "bound": bound})
    return {"suite": "kk", "trials": trials, "seed": seed, "violations": violations}


def verify_density(trials: int = 300, seed: int = 0) -> dict:
    """Random k-graphs of density delta: for every t some t-tight component
    has s-shadow at least delta^(s/(k-t)) * C(n, s) for all s simultaneously."""
    rng = random.Random(seed)
    violations = []
    for trial in range(trials):
        k = 3 if trial % 2 == 0 else 4
        n = rng.randint(k + 1, 10)
        g = random_hypergraph(n, k, rng)
        delta = len(g.edges) / math.comb(n, k)
        for t in range(1, k):
            comps = _component_indices(g.edges, t)
            ok = False
            for comp in comps:
                comp_masks = [g.edges[i] for i in comp]
                if all(
                    (len(comp_masks) if s == k else len(_shadow_members(comp_masks, s, k)))
                    >= bounds.density_component_bound(n, k, t, s, delta) - SLACK
                    for s in range(1, k + 1)
                ):
                    ok = True
                    break
            if not ok:
                violations.append({"n": n, "k": k, "t": t, "delta": delta})
    return {"suite": "density", "trials": trials, "seed": seed, "violations": violations}


def verify_blowup(trials: int = 200, seed: int = 0, pair_checks: int = 10_000) -> dict:
    """Random base colorings on K^3_6 blown up to n in {15, 21}:

    (i) edge intersections never exceed the intersections of their padded
        part index sets;
    (ii) the measured value of the blow-up obeys the recursive bound
        sum_l ceil(n/(n0-k+1))^s * C(s-1, l-1) * M(n0, r, k, t, l; c0).
    """
    rng = random.Random(seed)
    n0, k = 6, 3
    combos = [(r, n) for r in (2, 3) for n in (15, 21)]
    ts_pairs = [(1, 2), (1, 3), (2, 3)]
    violations = []
    for trial in range(trials):
        r, n = combos[trial % len(combos)]
        c0 = random_coloring(n0, r, k, seed=rng.randrange(2**63))
        c = blow_up(c0, n)
        all_edges = list(colex_edges(n, k))
        for _ in range(pair_checks):
            e = all_edges[rng.randrange(len(all_edges))]
            f = all_edges[rng.randrange(len(all_edges))]
            pe = padded_index_set(e, n, n0, k)
            pf = padded_index_set(f, n, n0, k)
            if (e & f).bit_count() > (pe & pf).bit_count():
                violations.append({"kind": "intersection", "r": r, "n": n, "e": mask_to_vertices(e), "f": mask_to_vertices(f)})
        base_m = {}
        for t in (1, 2):
            for ell in (1, 2, 3):
                base_m[(t, ell)] = measure(c0, t, ell).value
        ceil_m = -(-n // (n0 - k + 1))
        for t, s in ts_pairs:
            lhs = measure(c, t, s).value
            rhs = sum(
                ceil_m**s * math.comb(s - 1, ell - 1) * base_m[(t, ell)]
                for ell in range(1, s + 1)
            )
            if lhs > rhs:
                violations.append({"kind": "recursive-bound", "r": r, "n": n, "t": t, "s": s, "lhs": lhs, "rhs": rhs})
    return {"suite": "blowup", "trials": trials, "seed": seed, "violations": violations}


def verify_r2a_suite(cases: list[tuple[int, int, int, int]] | None = None) -> dict:
    """Exhaustive two-coloring complete-shadow checks for a case list."""
    if cases is None:
        cases = [(5, 4, 1, 1), (5, 4, 1, 2), (6, 4, 1, 2), (6, 4, 2, 2), (5, 2, 1, 1), (6, 2, 1, 1)]
    reports = [verify_r2a(n, k, t, s) for (n, k, t, s) in cases]
    failed = [rep for rep in reports if not rep["pass"]]
    return {"suite": "r2a", "cases": reports, "violations": failed}
