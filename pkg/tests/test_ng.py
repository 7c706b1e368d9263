import itertools
import json
import random
from pathlib import Path

import pytest

from conftest import audit_patterns
from gfree.coloring import chi_g
from gfree.enumerate import enumerate_small_graphs, enumerate_up_to
from gfree.formats import encode_graph6
from gfree.graph import Graph, disjoint_union
from gfree.named import clique_plus_independent, complete, complete_bipartite, cycle, empty
from gfree.ng import (
    Witness,
    WitnessMismatch,
    check_refined_conditions,
    default_witnesses,
    ng_sum,
    verify_corpus,
    witness_suite,
)
from gfree.patterns import PatternSpec
from oracles import brute_chi

GOLDEN = Path(__file__).parent / "golden" / "sharp_n6.json"
K3 = PatternSpec.single(complete(3), label="K3")
K4 = PatternSpec.single(complete(4), label="K4")
CYCLES = PatternSpec.all_two_regular()


@pytest.mark.parametrize("h, pat, chis, total", [
    (complete_bipartite(4, 4), "self", (2, 1), 3),
    (cycle(5), "self", (2, 2), 4),
    (clique_plus_independent(3, 3), K3, (2, 2), 4),
    (clique_plus_independent(6, 4), K4, (3, 2), 5),
])
def test_ng_sum_sharp_examples(h, pat, chis, total):
    pat = PatternSpec.single(h) if pat == "self" else pat
    rec = ng_sum(h, pat)
    assert (rec.chi, rec.chi_complement, rec.sum) == (*chis, total)
    assert rec.sum == -(-h.n // pat.delta) + 1
    assert rec.sharp and rec.slack == 0
    assert not rec.violations


def test_ng_sum_k5_arboricity():
    assert brute_chi(complete(5), None) == 3
    assert brute_chi(empty(5), None) == 1
    rec = ng_sum(complete(5), CYCLES)
    assert (rec.chi, rec.chi_complement, rec.sum) == (3, 1, 4)
    assert rec.bound == 4 and rec.sharp


def test_ng_branches():
    rec = ng_sum(cycle(6), CYCLES)
    assert {c.name for c in rec.claims} >= {"general", "cycles"}
    rec = ng_sum(Graph(9, [(0, 1)]), K4)
    assert {c.name for c in rec.claims} >= {"general", "complete-kd"}
    assert rec.bound <= -(-9 // 3) + 2


def test_complement_involution():
    rng = random.Random(8)
    for _ in range(25):
        n = rng.randint(1, 8)
        g = Graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.5])
        for pat in (K3, CYCLES):
            a, b = ng_sum(g, pat), ng_sum(g.complement(), pat)
            assert (a.chi, a.chi_complement) == (b.chi_complement, b.chi)
            assert a.sum == b.sum and a.bound == b.bound
            assert a.sum >= 2


def test_refined_condition_iii_from_induced_cycle():
    # 9 vertices, d = 3: vertices 0..5 induce C6
    g = Graph(9, list(cycle(6).edges()) + [(6, 7), (7, 8), (0, 8)])
    rep = check_refined_conditions(g, 3)
    assert rep.applicable and rep.k == 3
    assert rep.cond_iii and rep.cond_ii
    assert rep.holds is True


def test_refined_conditions_complete_graph():
    rep = check_refined_conditions(complete(9), 3)
    assert not rep.cond_ii and not rep.cond_iii


def test_refined_not_applicable():
    assert not check_refined_conditions(complete(8), 3).applicable
    assert not check_refined_conditions(complete(6), 2).applicable


def test_refined_iii_implies_ii_random():
    rng = random.Random(12)
    for _ in range(40):
        g = Graph(9, [e for e in itertools.combinations(range(9), 2) if rng.random() < rng.choice([0.3, 0.5, 0.7])])
        rep = check_refined_conditions(g, 3, evaluate_sum=True)
        if rep.cond_iii:
            assert rep.cond_ii
        assert rep.sum <= rep.k + 2
        if rep.any:
            assert rep.holds


def test_witness_suite():
    recs = witness_suite()
    assert len(recs) == 6 and all(r.sharp for r in recs)
    assert witness_suite([]) == []


def test_witness_k9_plus_4k1():
    # (k, delta) = (4, 3): K_{(k-1)delta} + (delta+1)K1 = K9 + 4K1, n = 13
    h = clique_plus_independent(9, 4)
    rec = ng_sum(h, K4)
    assert (rec.chi, rec.chi_complement, rec.sum) == (4, 2, 6)
    assert rec.sum == -(-13 // 3) + 1


def test_witness_mismatch_names_witness():
    bad = Witness("wrong", cycle(5), PatternSpec.single(cycle(5)), 3, 2)
    with pytest.raises(WitnessMismatch, match="wrong.*chi=2"):
        witness_suite([bad])


def test_default_witness_list():
    names = [w.name for w in default_witnesses()]
    assert names[0].startswith("K4,4") and names[-1].startswith("K3+3K1")


def test_verify_n4_k3():
    rep = verify_corpus(enumerate_small_graphs(4), [K3])
    assert len(rep.entries) == 11
    assert rep.ok and rep.violations == []


def test_verify_c5_k2_classic():
    k2 = PatternSpec.single(complete(2), label="K2")
    rep = verify_corpus([cycle(5)], [k2])
    (e,) = rep.entries
    assert (e.record.chi, e.record.chi_complement, e.record.sum) == (3, 3, 6)
    assert e.record.sum <= 5 + 1 and e.record.sharp


def test_verify_empty():
    rep = verify_corpus([], [K3])
    assert rep.entries == [] and rep.ok
    assert json.loads(rep.to_json())["summary"]["pairs"] == 0


def test_verify_from_graph6_lines_skips_bad(caplog):
    lines = ["Dhc", "not-a-graph", "", "A_"]
    rep = verify_corpus(lines, [K3])
    assert rep.skipped == [2]
    assert [e.record.graph6 for e in rep.entries] == ["A_", "Dhc"]


def test_report_json_schema():
    rep = verify_corpus(enumerate_small_graphs(3), [K3, CYCLES])
    doc = json.loads(rep.to_json())
    assert set(doc) == {"summary", "violations", "chromatic_bound_violations", "sharp", "records"}
    assert doc["summary"]["pairs"] == 8
    rec = doc["records"][0]
    for key in ("graph6", "pattern", "chi", "chi_complement", "sum", "branch", "bound", "slack", "sharp",
                "claims", "bounds"):
        assert key in rec
    order = [(r["graph6"], r["pattern"]) for r in doc["records"]]
    assert order == sorted(order)
    assert "sharp" in rep.table()


def test_parallel_matches_serial():
    gs = enumerate_small_graphs(5)
    a = verify_corpus(gs, [K3, CYCLES], workers=1)
    b = verify_corpus(gs, [K3, CYCLES], workers=2)
    assert a.to_json() == b.to_json()


def test_sharp_golden():
    rep = verify_corpus(enumerate_up_to(6), audit_patterns(), certificates=False)
    assert rep.sharp == json.loads(GOLDEN.read_text())


def test_chi_consistency_with_record():
    g = disjoint_union(complete(4), cycle(5))
    rec = ng_sum(g, K3)
    assert rec.chi == chi_g(g, K3)
    assert rec.graph6 == encode_graph6(g)
