import networkx as nx
import pytest

from antikekule.generators import FamilySpec, corpus, generate
from antikekule.graph_core import bipartition, bridges, is_connected, is_cubic
from antikekule.matching import has_perfect_matching, tutte_witness
from antikekule.search import _triangles


def test_every_output_simple_connected_cubic(small_corpus):
    for spec, g in small_corpus:
        assert is_connected(g), spec.label()
        assert is_cubic(g), spec.label()
        assert len(set(g.edges)) == g.m, spec.label()


def test_t36_structure():
    for n in range(1, 5):
        g = generate(FamilySpec("t36", (n,)))
        assert g.n == 4 * n + 4
        assert bridges(g) == ()
        assert not bipartition(g).is_bipartite
        assert len(_triangles(g)) == 4


def test_t36_1_has_two_edge_cut():
    g = generate(FamilySpec("t36", (1,)))
    found = False
    for e1 in range(g.m):
        for e2 in range(e1 + 1, g.m):
            if not is_connected(g, (e1, e2)):
                found = True
    assert found


def test_tube46_0_isomorphic_to_cube():
    g = generate(FamilySpec("tube46", (0,)))
    cube = generate(FamilySpec("cube"))
    ng = nx.Graph(list(g.edges))
    nc = nx.Graph(list(cube.edges))
    assert nx.is_isomorphic(ng, nc)


def test_tube46_sizes_and_bipartite():
    for n in range(0, 4):
        g = generate(FamilySpec("tube46", (n,)))
        assert g.n == 8 + 6 * n
        assert bipartition(g).is_bipartite


def test_hex_lattices_bipartite():
    for fam in ("torus_hex", "klein_hex"):
        for p, q in [(2, 2), (2, 3), (3, 3), (2, 4)]:
            g = generate(FamilySpec(fam, (p, q)))
            assert g.n == 2 * p * q
            assert bipartition(g).is_bipartite
            assert is_cubic(g) and is_connected(g)


def test_no_pm_gadget():
    g = generate(FamilySpec("no_pm_gadget"))
    assert g.n == 16
    assert not has_perfect_matching(g)
    w = tutte_witness(g)
    assert w is not None and w.u == (15,) and w.odd_components == 3


def test_bridged_double_gadget():
    g = generate(FamilySpec("bridged_double_gadget"))
    assert g.n == 10
    assert len(bridges(g)) == 1
    assert has_perfect_matching(g)


def test_random_cubic_reproducible():
    a = generate(FamilySpec("random_cubic", (10,), seed=7))
    b = generate(FamilySpec("random_cubic", (10,), seed=7))
    assert a.edges == b.edges
    c = generate(FamilySpec("random_cubic", (10,), seed=8))
    assert a.edges != c.edges


def test_random_cubic_requires_seed_and_even_n():
    with pytest.raises(ValueError):
        generate(FamilySpec("random_cubic", (10,)))
    with pytest.raises(ValueError):
        generate(FamilySpec("random_cubic", (9,), seed=1))


def test_generate_rejects_bad_arity():
    with pytest.raises(ValueError, match="parameter"):
        generate(FamilySpec("t36"))
    with pytest.raises(ValueError, match="unknown family"):
        generate(FamilySpec("dodecahedron"))


def test_corpus_contents():
    labels = [spec.label() for spec, _ in corpus(8, 0)]
    for expected in ("k4", "k33", "cube", "t36(1)", "tube46(0)", "torus_hex(2,2)"):
        assert expected in labels
    labels20 = [spec.label() for spec, _ in corpus(20, 0)]
    for expected in ("petersen", "t36(4)", "tube46(2)", "torus_hex(2,3)", "no_pm_gadget"):
        assert expected in labels20
    assert all(g.n <= 20 for _, g in corpus(20, 0))


def test_corpus_seeded_randoms():
    entries = corpus(20, 3)
    randoms = [spec for spec, _ in entries if spec.family == "random_cubic"]
    # 3 per even n in [4, 20]
    assert len(randoms) == 3 * 9
    assert corpus(20, 3)[-1][1].edges == entries[-1][1].edges  # deterministic


def test_corpus_requires_max_n():
    with pytest.raises(ValueError):
        corpus(6)
