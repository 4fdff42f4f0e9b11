import math
import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monotight.core import (
    Coloring,
    Hypergraph,
    colex_edges,
    colex_rank,
    colex_unrank,
    mask_to_vertices,
    measure,
    shadow,
    t_tight_components,
    vertices_to_mask,
    _component_indices,
    _shadow_members,
)
from monotight.constructions import all_red, majority_coloring, parity_coloring


def naive_components(edges, t):
    """Literal fixpoint merge: repeatedly union any two sets holding edges
    that intersect in at least t vertices."""
    sets = [{i} for i in range(len(edges))]
    changed = True
    while changed:
        changed = False
        for a in range(len(sets)):
            for b in range(a + 1, len(sets)):
                if any(
                    (edges[i] & edges[j]).bit_count() >= t
                    for i in sets[a]
                    for j in sets[b]
                ):
                    sets[a] |= sets[b]
                    del sets[b]
                    changed = True
                    break
            if changed:
                break
    return sorted(tuple(sorted(s)) for s in sets)


class TestColexRanking:
    def test_first_and_last(self):
        assert colex_rank({1, 2, 3}, 5, 3) == 0
        assert colex_rank({3, 4, 5}, 5, 3) == 9

    def test_roundtrip_all_of_c53(self):
        for sub in combinations(range(1, 6), 3):
            mask = vertices_to_mask(sub)
            assert colex_unrank(colex_rank(mask, 5, 3), 5, 3) == mask

    @given(st.integers(5, 16), st.integers(2, 5), st.data())
    def test_roundtrip_random(self, n, k, data):
        k = min(k, n)
        rank = data.draw(st.integers(0, math.comb(n, k) - 1))
        mask = colex_unrank(rank, n, k)
        assert mask.bit_count() == k
        assert colex_rank(mask, n, k) == rank

    def test_colex_edges_order_matches_rank(self):
        for n, k in [(5, 3), (7, 2), (8, 4), (6, 6)]:
            ranks = [colex_rank(e, n, k) for e in colex_edges(n, k)]
            assert ranks == list(range(math.comb(n, k)))

    def test_errors(self):
        with pytest.raises(ValueError):
            colex_unrank(10, 5, 3)
        with pytest.raises(ValueError):
            colex_rank({1, 2}, 5, 3)
        with pytest.raises(ValueError):
            colex_rank({1, 2, 9}, 5, 3)


class TestHypergraph:
    def test_invariants_enforced(self):
        with pytest.raises(ValueError):
            Hypergraph.from_vertex_lists(5, 3, [[1, 2]])
        with pytest.raises(ValueError):
            Hypergraph.from_vertex_lists(5, 3, [[1, 2, 6]])
        with pytest.raises(ValueError):
            Hypergraph.from_vertex_lists(5, 3, [[1, 2, 3], [3, 2, 1]])

    def test_complete(self):
        assert len(Hypergraph.complete(6, 3)) == 20


class TestComponents:
    def test_chain_t1(self):
        h = Hypergraph.from_vertex_lists(7, 3, [[1, 2, 3], [3, 4, 5], [5, 6, 7]])
        part = t_tight_components(h, 1)
        assert part.components == [[0, 1, 2]]

    def test_chain_t2_singletons(self):
        h = Hypergraph.from_vertex_lists(7, 3, [[1, 2, 3], [3, 4, 5], [5, 6, 7]])
        part = t_tight_components(h, 2)
        assert part.components == [[0], [1], [2]]

    def test_empty(self):
        h = Hypergraph(5, 3, [])
        assert t_tight_components(h, 1).components == []

    def test_t_out_of_range(self):
        h = Hypergraph.from_vertex_lists(5, 3, [[1, 2, 3]])
        with pytest.raises(ValueError):
            t_tight_components(h, 3)
        with pytest.raises(ValueError):
            t_tight_components(h, 0)

    def test_against_naive_oracle(self):
        rng = random.Random(7)
        for _ in range(200):
            n = rng.randint(4, 9)
            pool = list(colex_edges(n, 3))
            edges = [e for e in pool if rng.random() < rng.random()]
            if not edges:
                continue
            t = rng.randint(1, 2)
            got = sorted(tuple(c) for c in _component_indices(edges, t))
            assert got == naive_components(edges, t)

    def test_order_independence(self):
        rng = random.Random(11)
        for _ in range(40):
            n = rng.randint(4, 8)
            pool = list(colex_edges(n, 3))
            edges = [e for e in pool if rng.random() < 0.4]
            if not edges:
                continue
            t = rng.randint(1, 2)
            base = {frozenset(edges[i] for i in c) for c in _component_indices(edges, t)}
            shuffled = edges[:]
            rng.shuffle(shuffled)
            other = {
                frozenset(shuffled[i] for i in c)
                for c in _component_indices(shuffled, t)
            }
            assert base == other


class TestShadow:
    def test_single_edge(self):
        e = vertices_to_mask([1, 2, 3])
        sh = shadow([e], 2)
        assert sh.count == 3
        assert {mask_to_vertices(m) for m in sh.members} == {(1, 2), (1, 3), (2, 3)}

    def test_s_equals_k_identity(self):
        e = vertices_to_mask([1, 2, 3])
        sh = shadow([e], 3)
        assert sh.members == {e}

    def test_complete_hypergraph_shadow_complete(self):
        sh = shadow(colex_edges(5, 3), 2)
        assert sh.count == math.comb(5, 2)

    def test_empty_and_errors(self):
        assert shadow([], 2).count == 0
        with pytest.raises(ValueError):
            shadow([vertices_to_mask([1, 2, 3])], 4)
        with pytest.raises(ValueError):
            shadow([vertices_to_mask([1, 2, 3])], 0)

    def test_nesting(self):
        # E^(s) is the union of s-subsets of E^(s') for s <= s'
        rng = random.Random(3)
        for _ in range(30):
            n = rng.randint(5, 9)
            edges = [e for e in colex_edges(n, 4) if rng.random() < 0.3]
            if not edges:
                continue
            for s, s2 in [(1, 2), (2, 3), (1, 3), (3, 4)]:
                upper = _shadow_members(edges, s2, 4)
                expanded = _shadow_members(list(upper), s, s2)
                assert _shadow_members(edges, s, 4) == expanded
                assert len(upper) <= math.comb(n, s2)


class TestMeasure:
    def test_all_red_spans(self):
        assert measure(all_red(5, 3, 2), 1, 1).value == 5

    def test_majority_paper_value(self):
        assert measure(majority_coloring(6), 2, 2).value == 12

    def test_parity_paper_value(self):
        assert measure(parity_coloring(12), 2, 3).value == 90

    def test_tie_breaking_prefers_lower_color(self):
        # two colors, fully symmetric halves: witness must come from color 1
        c = parity_coloring(8)
        res = measure(c, 2, 3)
        assert res.witness_color == 1

    def test_witness_consistency(self):
        c = majority_coloring(7)
        res = measure(c, 1, 2)
        masks = list(colex_edges(7, 3))
        comp = [masks[i] for i in res.witness_component]
        assert len(_shadow_members(comp, 2, 3)) == res.value

    def test_unused_color_never_selected(self):
        c = Coloring(5, 3, 3, [1] * math.comb(5, 3))
        assert measure(c, 1, 1).witness_color == 1

    def test_parameter_errors(self):
        c = all_red(5, 3, 2)
        with pytest.raises(ValueError):
            measure(c, 3, 1)
        with pytest.raises(ValueError):
            measure(c, 1, 4)

    def test_monotone_under_edge_additions(self):
        # pruning soundness: adding edges never shrinks the max component shadow
        rng = random.Random(13)
        for _ in range(30):
            n = rng.randint(5, 9)
            pool = list(colex_edges(n, 3))
            rng.shuffle(pool)
            t = rng.randint(1, 2)
            s = rng.randint(1, 3)
            prev = 0
            edges = []
            for e in pool[: rng.randint(2, len(pool))]:
                edges.append(e)
                cur = max(
                    len(c) if s == 3 else len(_shadow_members([edges[i] for i in c], s, 3))
                    for c in _component_indices(edges, t)
                )
                assert cur >= prev
                prev = cur
