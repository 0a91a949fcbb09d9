"""Smoke tests for the python bindings: build objects, run the main
operations, check a few known values."""

import pytest

import diramsey as dr


def test_tree_construction_and_props():
    p4 = dr.directed_path(4)
    assert p4.order == 4
    assert p4.is_path()
    assert p4.is_out_directed()
    star = dr.out_star(4)
    assert dr.out_leaves(star) == 3
    with pytest.raises(ValueError):
        dr.OrientedTree(3, [(0, 1), (1, 0)])


def test_oracle_and_longest_path():
    edges = [(i, j, 1) for i in range(4) for j in range(i + 1, 4)]
    host = dr.ColouredDigraph(4, "T", 1, edges)
    assert host.validate() is None
    emb = dr.contains_monochromatic_copy(host, 1, dr.directed_path(4))
    assert emb is not None
    assert dr.check_embedding(host, dr.directed_path(4), emb) is None
    assert len(dr.longest_monochromatic_directed_path(host, 1)) == 4


def test_tree_toolkit():
    p4 = dr.directed_path(4)
    core, original = dr.k_core(p4, 2)
    assert original == [0, 1]
    blocks = dr.block_decomposition(dr.oriented_path_from_blocks([3, 2, 3], True))
    assert blocks["block_orders"] == [4, 3, 4]
    assert blocks["longest_block_length"] == 3
    closure, input_map = dr.symmetric_closure(dr.OrientedTree(4, [(0, 1), (0, 2), (1, 3)], 0))
    assert closure.order == 5
    layers = dr.alternating_layers(dr.OrientedTree(3, [(0, 1), (2, 1)]), 0)
    assert layers == [[0, 1], [2]]


def test_constructions_and_check():
    lex = dr.build_lexicographic(3, 2, 2)
    assert lex["ok"]
    assert lex["host"].order == 6
    assert dr.verify_no_monochromatic_copy(lex["host"], dr.directed_path(4))
    lay = dr.build_layered(2, 3, "blownup")
    assert lay["ok"]
    assert lay["host"].order == 16


def test_exact_values():
    p3 = dr.directed_path(3)
    rt = dr.oriented_ramsey_exact([p3, p3], 6)
    assert rt["value"] == 5
    r = dr.directed_ramsey_exact([p3, p3], 5)
    assert r["value"] == 3
    assert dr.count_tournaments(4) == 4


def test_embedders():
    edges = [(i, j, 1 if (i + j) % 2 else 2) for i in range(6) for j in range(i + 1, 6)]
    host = dr.ColouredDigraph(6, "T", 2, edges)
    res = dr.ramsey_path_embed_tournament(host, dr.directed_path(2))
    assert res["embedding"] is not None
    out = dr.ghrv_dichotomy(host, 1, 0)
    assert "path" in out
