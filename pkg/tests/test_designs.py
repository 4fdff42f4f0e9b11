import math
from itertools import combinations

import pytest

from monotight.core import mask_to_vertices
from monotight.designs import (
    SteinerSystem,
    affine_plane,
    builtin_design,
    partition_blocks,
    tset_degree,
)


@pytest.mark.parametrize("q,classes", [(2, 3), (3, 4), (5, 6), (7, 8)])
def test_affine_plane_valid(q, classes):
    d = affine_plane(q)
    d.validate()
    assert len(d.blocks) == q * (q + 1)
    assert len(d.parallel_classes()) == classes
    for cls in d.parallel_classes():
        assert len(cls) == q
        # a parallel class covers every point exactly once
        union = 0
        for bi in cls:
            assert union & d.blocks[bi] == 0
            union |= d.blocks[bi]
        assert union == (1 << d.n) - 1


def test_affine_plane_rejects_composite():
    with pytest.raises(ValueError):
        affine_plane(4)
    with pytest.raises(ValueError):
        affine_plane(1)


def test_fano_every_pair_once():
    d = builtin_design("fano")
    d.validate()
    assert len(d.blocks) == 7


def test_s348_every_triple_once_and_complement_closed():
    d = builtin_design("s348")
    d.validate()
    assert len(d.blocks) == 14
    full = (1 << 8) - 1
    blocks = set(d.blocks)
    for b in d.blocks:
        assert (full ^ b) in blocks


def test_ag23_matches_affine_plane_3():
    d = builtin_design("ag23")
    d.validate()
    ap = affine_plane(3)
    ap.validate()
    assert (d.n, d.h, d.k) == (ap.n, ap.h, ap.k)
    assert len(d.blocks) == len(ap.blocks)


def test_validator_catches_broken_design():
    d = builtin_design("fano")
    broken = SteinerSystem(7, 3, 2, d.blocks[:-1] + [d.blocks[0]])
    with pytest.raises(ValueError):
        broken.validate()


def test_partition_fano_t1():
    d = builtin_design("fano")
    classes, lb = partition_blocks(d, 1)
    assert len(classes) == 7
    assert lb == 3  # pair degree through a point: (7-1)/(3-1)


def test_partition_s348_complement_paired():
    d = builtin_design("s348")
    classes, lb = partition_blocks(d, 1, order="complement-paired")
    assert len(classes) == 7
    assert all(len(cls) == 2 for cls in classes)
    assert lb == 7
    full = (1 << 8) - 1
    for cls in classes:
        assert d.blocks[cls[0]] ^ d.blocks[cls[1]] == full


@pytest.mark.parametrize("q", [2, 3, 5])
def test_partition_affine_plane_given_order(q):
    d = affine_plane(q)
    classes, _ = partition_blocks(d, 1)
    assert len(classes) == q + 1


def test_partition_classes_are_conflict_free_and_cover():
    for name in ("fano", "s348", "ag23"):
        d = builtin_design(name)
        for t in range(1, d.k + 1):
            classes, lb = partition_blocks(d, t)
            seen = sorted(i for cls in classes for i in cls)
            assert seen == list(range(len(d.blocks)))
            for cls in classes:
                for i, j in combinations(cls, 2):
                    assert (d.blocks[i] & d.blocks[j]).bit_count() < t
            assert len(classes) >= lb


def test_tset_degree_formula():
    d = builtin_design("s348")
    # triples through a fixed vertex pair: (8-2)/(4-2)
    assert tset_degree(d, 2) == 3
    assert tset_degree(d, 1) == (7 * 6) // (3 * 2)


def test_partition_errors():
    d = builtin_design("fano")
    with pytest.raises(ValueError):
        partition_blocks(d, 0)
    with pytest.raises(ValueError):
        partition_blocks(d, 1, order="sideways")
    with pytest.raises(ValueError):
        builtin_design("petersen")
