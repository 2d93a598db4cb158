import json

import pytest

import bipdom

SAMPLE = "p cnf 4 3\n1 2 -3 0\n-1 2 4 0\n-2 3 4 0\n"
SAMPLE_B = "p cnf 4 3\n1 2 -3 0\n1 -2 4 0\n-2 -3 4 0\n"


def cycle(n):
    labels = [str(i) for i in range(1, n + 1)]
    return bipdom.Graph(labels, [(labels[i], labels[(i + 1) % n]) for i in range(n)])


def test_graph_basics():
    g = bipdom.Graph(["a", "b", "c"], [("a", "b"), ("b", "c")])
    assert g.vertices == ["a", "b", "c"]
    assert g.edges == [("a", "b"), ("b", "c")]
    assert bipdom.open_neighbors(g, "b") == ["a", "c"]
    assert bipdom.closed_neighbors(g, "a") == ["a", "b"]
    assert bipdom.is_bipartite(cycle(6))
    assert not bipdom.is_bipartite(cycle(5))
    assert bipdom.complement_edges(g) == [("a", "c")]
    assert bipdom.Graph.parse(g.to_text()) == g
    assert g.to_dot().startswith("graph {")


def test_domination():
    c6 = cycle(6)
    value, witness = bipdom.domination_number(c6)
    assert value == 2
    assert bipdom.is_dominating_set(c6, witness)
    value_t, witness_t = bipdom.total_domination_number(c6)
    assert value_t == 4
    assert bipdom.is_total_dominating_set(c6, witness_t)
    assert sorted(bipdom.enumerate_minimum_sets(c6)) == [["1", "4"], ["2", "5"], ["3", "6"]]


def test_perturbation():
    assert bipdom.bondage_number(cycle(4))["value"] == "3"
    assert bipdom.bondage_number(cycle(4), max_k=2)["value"] == ">2"
    star = bipdom.Graph(["h", "a", "b", "c"], [("h", "a"), ("h", "b"), ("h", "c")])
    assert bipdom.total_bondage_number(star)["value"] == "undefined"
    assert bipdom.reinforcement_number(star)["value"] == "0"
    r = bipdom.total_reinforcement_number(cycle(6))
    assert r["found"] and r["value"] == "1" and r["base"] == 4
    assert len(r["witness"]) == 1


def test_errors_carry_code_names():
    with pytest.raises(bipdom.BipdomError, match="^self-loop: "):
        bipdom.Graph(["a"], [("a", "a")])
    with pytest.raises(bipdom.BipdomError, match="^tautological-clause: "):
        bipdom.CnfInstance(3, [[1, -1, 2]])
    with pytest.raises(bipdom.BipdomError, match="^isolated-vertex: "):
        bipdom.total_domination_number(bipdom.Graph(["a", "b"], []))
    # The error type is a ValueError for callers that do not import it.
    with pytest.raises(ValueError):
        bipdom.CnfInstance.parse_dimacs("not dimacs")
    with pytest.raises(ValueError, match="unknown reduction kind"):
        bipdom.reduce("nope", bipdom.CnfInstance.parse_dimacs(SAMPLE))


def test_sat():
    inst = bipdom.CnfInstance.parse_dimacs(SAMPLE)
    assert (inst.num_vars, inst.num_clauses) == (4, 3)
    model = bipdom.solve_sat(inst)
    assert model is not None and bipdom.evaluate(inst, model)
    signs = [[(1 if m & 1 else -1), (2 if m & 2 else -2), (3 if m & 4 else -3)] for m in range(8)]
    assert bipdom.solve_sat(bipdom.CnfInstance(3, signs)) is None
    assert bipdom.random_instance(5, 7, seed=3) == bipdom.random_instance(5, 7, seed=3)


def test_bondage_reduction_and_witness():
    inst = bipdom.CnfInstance.parse_dimacs(SAMPLE)
    out = bipdom.reduce("bondage", inst)
    assert (out.kind, out.n, out.m) == ("bondage", 4, 3)
    assert (out.graph.vertex_count(), out.graph.edge_count()) == (30, 41)
    assert out.roles["u1"] == "literal+" and out.roles["c2"] == "clause" and out.roles["s2"] == "anchor"
    assert bipdom.domination_number(out.graph)[0] == 9
    vertices, edge = bipdom.assignment_to_witness(out, [False, True, False, True])
    assert vertices == ["nu1", "p1", "u2", "r2", "nu3", "p3", "u4", "r4", "s2"]
    assert edge is None
    minimum_set = ["s2", "v1", "q1", "u2", "r2", "u3", "r3", "u4", "r4"]
    assert bipdom.witness_to_assignment(out, minimum_set) == [False, True, True, True]


def test_total_reinforcement_added_edge():
    inst = bipdom.CnfInstance.parse_dimacs(SAMPLE_B)
    out = bipdom.reduce("total-reinforcement", inst)
    vertices, edge = bipdom.assignment_to_witness(out, [True, False, False, True])
    assert edge == ("s2", "u1")
    reinforced = bipdom.add_edges(out.graph, [edge])
    assert len(vertices) == 9 and bipdom.is_total_dominating_set(reinforced, vertices)


@pytest.mark.parametrize("kind", ["bondage", "total-bondage", "reinforcement", "total-reinforcement"])
def test_verify_and_fuzz(kind):
    inst = bipdom.CnfInstance.parse_dimacs(SAMPLE_B if kind == "total-reinforcement" else SAMPLE)
    report = bipdom.verify(kind, inst, deep=True)
    assert report.passed and report.sat and report.perturbation == "1"
    doc = json.loads(report.to_json())
    assert doc["kind"] == kind and doc["pass"] is True
    assert "PASS" in report.to_text()

    reports = bipdom.fuzz(kind, 3, 4, trials=3, seed=11)
    assert len(reports) == 3 and all(r.passed for r in reports)
    assert bipdom.fuzz(kind, 3, 4, trials=0, seed=11) == []
