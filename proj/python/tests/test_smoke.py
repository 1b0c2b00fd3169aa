import pytest

import degseq


def test_sequence_layer():
    assert degseq.parse_sequence("1 3 1 1") == [3, 1, 1, 1]
    assert degseq.is_graphic([2, 2, 2, 2, 2])
    assert not degseq.is_graphic([3, 3, 1, 1])
    assert degseq.omega_of_sequence([7] * 10) == 5
    assert degseq.classify_basic_profile([2, 2, 2, 2, 2]) == ("NontrivialBasicProfile", 2)
    assert degseq.classify_basic_profile([2, 2, 2, 2]) == ("NotOddLength", None)
    with pytest.raises(degseq.ParseError):
        degseq.parse_sequence("2,-1")
    with pytest.raises(degseq.DomainError):
        degseq.omega_of_sequence([3, 3, 1, 1])


def test_realizers():
    g = degseq.realize_tree([2, 1, 1])
    assert g.degrees() == [2, 1, 1]
    assert degseq.Graph.from_graph6(g.graph6()) == g
    g = degseq.realize_with_clique([3, 3, 2, 2, 2], 3)
    assert g.has_edge(0, 1) and g.has_edge(0, 2) and g.has_edge(1, 2)
    graph, matching = degseq.realize_bipartite_with_matching([2, 2], [2, 1, 1])
    assert len(matching) == 2
    assert degseq.count_realizations([2, 2, 2, 2, 2]) == 12
    assert degseq.count_realizations([2, 2, 2, 2, 2], up_to_isomorphism=True) == 1
    with pytest.raises(degseq.ArgumentError):
        degseq.realize_bipartite_with_matching([1, 1], [2])
    with pytest.raises(degseq.InfeasibleError):
        degseq.realize_low_degree(2, 2)


def test_witnesses():
    graph, witness, plan = degseq.build_basic_witness([4] * 7)
    assert graph.degrees() == [4] * 7
    assert witness["order"] == 4
    assert plan["case"] == "CaseOne"
    assert degseq.verify_witness(graph, witness) == (True, "ok")
    witness["paths"][0]["mid"] = witness["branch_vertices"][1]
    ok, reason = degseq.verify_witness(graph, witness)
    assert not ok and reason == "overlapping paths"

    c5 = degseq.Graph.from_graph6("Dhc")
    assert degseq.chromatic_number(c5) == 3
    order, w = degseq.h1_of_graph(c5)
    assert order == 3 and degseq.verify_witness(c5, w)[0]
    g, w, chi = degseq.witness_pipeline(c5)
    assert chi == 3 and w["order"] == 3


def test_oracles_and_bounds():
    assert degseq.chi_of_sequence([2, 2, 2, 2, 2]) == 3
    assert degseq.h1_of_sequence([1, 1]) == 2
    bounds = degseq.check_bounds(3, 2, 2)
    assert bounds["sf"]["tight"] and bounds["reed"]["tight"]
    assert "hajos" not in bounds
    assert degseq.check_bounds(6, 5, 7)["sf"]["slack"] == "3/5"
    report = degseq.sweep(5, ["sf", "reed"])
    assert report["clean"]
    tight = next(c for c in report["checks"] if c["check"] == "sf")["tight_cases"]
    assert "(2,2,2,2,2)" in tight
    with pytest.raises(degseq.ResourceError):
        degseq.sweep(99, ["sf"])
