"""Acceptance suite: one test per acceptance criterion, one pass/fail line each.

Each test prints "criterion NN PASS|FAIL <summary>" and asserts the stated
tolerance, including the wall-clock budget where one applies.
"""

import json
import random
import time
from itertools import combinations

import networkx as nx
import pytest

from antikekule.cli import main as cli_main
from antikekule.generators import FamilySpec, corpus, generate
from antikekule.graph_core import bipartition, bridges, build, is_connected, is_cubic
from antikekule.graph_io import emit_graph6, parse_graph6
from antikekule.matching import (
    brute_force_maximum_matching,
    check_odd_component_consistency,
    has_perfect_matching,
    maximum_matching,
    tutte_witness,
)
from antikekule.search import (
    candidate_from_bridge,
    candidate_from_triangle,
    enumerate_smallest,
    is_anti_kekule,
)


def report_line(num, ok, summary):
    status = "PASS" if ok else "FAIL"
    print(f"criterion {num:02d} {status} {summary}")
    assert ok, f"criterion {num}: {summary}"


def unpruned_ak(g):
    report = enumerate_smallest(g, prune=False)
    assert report.complete
    return report.ak


def test_criterion_01_bridgeless_cubic_bounds():
    """Bridgeless cubic, n <= 16: un-pruned ak is 3 or 4.  Budget 600 s."""
    start = time.monotonic()
    checked = 0
    randoms = 0
    for spec, g in corpus(16, 4):
        if not is_cubic(g) or bridges(g) or not has_perfect_matching(g):
            continue
        ak = unpruned_ak(g)
        assert ak in (3, 4), f"{spec.label()}: ak={ak}"
        checked += 1
        randoms += spec.family == "random_cubic"
    elapsed = time.monotonic() - start
    ok = checked > 0 and randoms >= 25 and elapsed <= 600
    report_line(1, ok, f"{checked} graphs ({randoms} random), {elapsed:.1f}s")


def test_criterion_02_cubic_bipartite_ak4():
    """Connected cubic bipartite: ak = 4 exactly, un-pruned.  Budget 900 s."""
    start = time.monotonic()
    specs = [
        FamilySpec("k33"),
        FamilySpec("cube"),
        FamilySpec("tube46", (0,)),
        FamilySpec("tube46", (1,)),
        FamilySpec("tube46", (2,)),
        FamilySpec("torus_hex", (2, 2)),
        FamilySpec("torus_hex", (2, 3)),
        FamilySpec("torus_hex", (3, 3)),
        FamilySpec("klein_hex", (2, 2)),
    ]
    for spec in specs:
        g = generate(spec)
        assert bipartition(g).is_bipartite, spec.label()
        ak = unpruned_ak(g)
        assert ak == 4, f"{spec.label()}: ak={ak}"
    elapsed = time.monotonic() - start
    report_line(2, elapsed <= 900, f"{len(specs)} graphs all ak=4, {elapsed:.1f}s")


def bridged_variant(seed):
    """Join two seeded cubic graphs through one subdivision vertex each."""
    g1 = generate(FamilySpec("random_cubic", (8,), seed=seed))
    g2 = generate(FamilySpec("random_cubic", (8,), seed=seed + 5000))
    a, b = g1.edges[0]
    c, d = g2.edges[0]
    x, y = 16, 17
    pairs = [e for e in g1.edges if e != (a, b)]
    pairs += [(u + 8, v + 8) for u, v in g2.edges if (u, v) != (c, d)]
    pairs += [(a, x), (b, x), (c + 8, y), (d + 8, y), (x, y)]
    g = build(18, pairs)
    assert is_cubic(g) and is_connected(g) and bridges(g)
    return g


def test_criterion_03_bridged_ak_le_2():
    """Cubic with a bridge: ak <= 2; bridge candidate verifies when ak >= 1."""
    graphs = [generate(FamilySpec("bridged_double_gadget"))]
    graphs += [bridged_variant(s) for s in range(1, 7)]
    checked = 0
    for g in graphs:
        ak = unpruned_ak(g)
        assert ak <= 2, f"ak={ak}"
        if ak >= 1:
            cand = candidate_from_bridge(g)
            assert is_anti_kekule(g, cand.edges)
        checked += 1
    report_line(3, checked >= 6, f"{checked} bridged graphs, ak<=2 with candidates")


def test_criterion_04_quadrangle_tubes_ak4():
    """(4,6)-fullerene tubes: ak = 4 for tube46(0..2)."""
    values = [unpruned_ak(generate(FamilySpec("tube46", (n,)))) for n in range(3)]
    report_line(4, values == [4, 4, 4], f"tube46(0..2) ak={values}")


def test_criterion_05_triangle_tubes_ak3():
    """(3,6)-fullerene tubes: ak = 3 for t36(1..4), with triangle candidates."""
    ok = True
    values = []
    for n in range(1, 5):
        g = generate(FamilySpec("t36", (n,)))
        ak = unpruned_ak(g)
        values.append(ak)
        cand = candidate_from_triangle(g)
        ok = ok and ak == 3 and cand is not None and is_anti_kekule(g, cand.edges)
    report_line(5, ok, f"t36(1..4) ak={values} with verified triangle candidates")


def test_criterion_06_torus_and_klein_ak4():
    """Toroidal and Klein-bottle hexagonal lattices: ak = 4."""
    values = {}
    for fam, p, q in [
        ("torus_hex", 2, 2),
        ("torus_hex", 2, 3),
        ("torus_hex", 3, 3),
        ("klein_hex", 2, 2),
    ]:
        values[f"{fam}({p},{q})"] = unpruned_ak(generate(FamilySpec(fam, (p, q))))
    ok = all(v == 4 for v in values.values())
    report_line(6, ok, f"lattice ak values {values}")


def test_criterion_07_k4_exact_family():
    """ak(K4) = 3 with exactly the four triangles, against an exhaustive oracle."""
    g = generate(FamilySpec("k4"))
    report = enumerate_smallest(g, prune=False)

    h0 = nx.Graph(list(g.edges))
    oracle = []
    for s in combinations(range(6), 3):
        h = h0.copy()
        h.remove_edges_from(g.edges[e] for e in s)
        pm = 2 * len(nx.max_weight_matching(h, maxcardinality=True)) == 4
        if nx.is_connected(h) and not pm:
            oracle.append(s)
    triangles = {
        tuple(sorted(g.edge_id(x, y) for x, y in combinations(tri, 2)))
        for tri in combinations(range(4), 3)
    }
    ok = (
        report.ak == 3
        and set(report.smallest_sets) == set(oracle) == triangles
        and len(report.smallest_sets) == 4
    )
    report_line(7, ok, f"ak=3 with {len(report.smallest_sets)} sets == oracle")


def test_criterion_08_matching_oracle():
    """Blossom matches brute force on the corpus and 1000 seeded random graphs."""
    for spec, g in corpus(16, 2):
        if g.n <= 12 and g.m <= 30:
            assert maximum_matching(g).size == brute_force_maximum_matching(g).size

    rng = random.Random(20260823)
    probs = (0.1, 0.2, 0.3, 0.4, 0.5)
    checked = 0
    while checked < 1000:
        n = rng.randrange(2, 13)
        p = probs[checked % len(probs)]
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        g = build(n, pairs)
        if g.m > 30:
            continue
        assert maximum_matching(g).size == brute_force_maximum_matching(g).size
        checked += 1
    report_line(8, checked == 1000, f"{checked} random graphs + corpus agree")


def test_criterion_09_tutte_duality():
    """No perfect matching iff a Tutte witness exists, corpus n <= 14."""
    checked = 0
    for spec, g in corpus(14, 2):
        if g.n > 14:
            continue
        w = tutte_witness(g)
        assert (w is None) == has_perfect_matching(g), spec.label()
        if w is not None:
            assert check_odd_component_consistency(g, w)
        checked += 1
    report_line(9, checked > 0, f"{checked} graphs, witness iff no perfect matching")


def test_criterion_10_scaling_and_prune_monotonicity():
    """26-vertex un-pruned enumeration within 300 s; pruning never screens more."""
    g = generate(FamilySpec("tube46", (3,)))
    assert g.n == 26 and g.m == 39
    plain = enumerate_smallest(g, prune=False, jobs=1)
    screened = 39 + 741 + 9139 + 82251  # C(39,1) + ... + C(39,4)
    ok = plain.ak == 4 and plain.subsets_screened == screened and plain.elapsed <= 300

    for spec, h in corpus(14, 1):
        if h.m > 24:
            continue
        pruned = enumerate_smallest(h, prune=True)
        unpruned = enumerate_smallest(h, prune=False)
        ok = ok and pruned.subsets_screened <= unpruned.subsets_screened
        ok = ok and pruned.ak == unpruned.ak
    report_line(10, ok, f"n=26 screen of {plain.subsets_screened} in {plain.elapsed:.1f}s")


def test_criterion_11_graph6_roundtrip():
    """parse(emit) identity on the corpus; 'C~' golden; under one second."""
    start = time.monotonic()
    for spec, g in corpus(16, 2):
        g2 = parse_graph6(emit_graph6(g))
        assert g2.n == g.n and sorted(g2.edges) == sorted(g.edges), spec.label()
    k4 = generate(FamilySpec("k4"))
    parsed = parse_graph6("C~")
    ok = (
        emit_graph6(k4) == "C~"
        and parsed.n == 4
        and sorted(parsed.edges) == sorted(k4.edges)
    )
    elapsed = time.monotonic() - start
    ok = ok and elapsed < 1.0
    report_line(11, ok, f"corpus round-trips, C~<->K4, {elapsed:.3f}s")


def test_criterion_12_cli_determinism(capsys, tmp_path):
    """`ak --json` byte-identical between --jobs 1 and --jobs 4 on 10 graphs."""
    entries = [(s, g) for s, g in corpus(14, 1) if has_perfect_matching(g)][:10]
    assert len(entries) == 10
    ok = True
    for spec, g in entries:
        path = tmp_path / f"{spec.label().replace(',', '_')}.g6"
        path.write_text(emit_graph6(g) + "\n")
        outputs = []
        for jobs in ("1", "4"):
            code = cli_main(["ak", str(path), "--json", "--all-sets", "--jobs", jobs])
            assert code == 0, spec.label()
            outputs.append(capsys.readouterr().out)
            json.loads(outputs[-1])  # well-formed
        ok = ok and outputs[0] == outputs[1]
    report_line(12, ok, f"{len(entries)} graphs byte-identical across job counts")
