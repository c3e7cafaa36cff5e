import kop


def test_cycle_tree_decomposition():
    emb = kop.canned("c5")
    assert emb.n == 5 and emb.m == 5
    assert kop.outerplanarity_index(emb) == 1
    td = kop.tree_decompose(emb)
    assert td.width == 2
    r = kop.check_td(emb, td)
    assert r["ok"] and r["width"] == 2


def test_k4_branch_decomposition():
    emb = kop.canned("k4")
    bd = kop.branch_decompose(emb)
    assert 3 <= bd.width <= 5
    r = kop.check_bd(emb, bd)
    assert r["ok"] and r["width"] == bd.width
    assert "s bd" in bd.to_text(emb)


def test_generator_determinism_and_bounds():
    a = kop.generate(3, 120, seed=11)
    b = kop.generate(3, 120, seed=11)
    assert a.to_text() == b.to_text()
    assert kop.outerplanarity_index(a) == 3
    td = kop.tree_decompose(a)
    assert td.width <= 8
    again = kop.Embedding.from_text(a.to_text())
    assert again.to_text() == a.to_text()


def test_oracles_agree_with_theory():
    c5 = kop.canned("c5")
    assert kop.oracle_treewidth(c5) == 2
    assert kop.oracle_branchwidth(c5) == 2
    t, b = 2, 2
    assert max(b, 2) <= t + 1 <= max(3 * b // 2, 2)


def test_errors_surface_as_exceptions():
    import pytest

    with pytest.raises(Exception):
        kop.canned("nope")
    with pytest.raises(Exception):
        kop.build_embedding(2, [[1], []], (0, 1))


def test_pace_output_shape():
    emb = kop.canned("grid4x4")
    td = kop.tree_decompose(emb)
    text = td.to_text()
    assert text.startswith("s td ")
    assert kop.check_td(emb, td)["ok"]
