import json
import os
import subprocess

import pytest

import xhtpy


def test_graph_basics():
    g = xhtpy.Graph(["a", "b"], [("a", "b"), ("b", "b")])
    assert g.order() == 2
    assert g.edge_count() == 2
    assert g.looped("b") and not g.looped("a")
    assert g.neighbors("b") == {"a", "b"}
    assert g.vertices == ["a", "b"]
    with pytest.raises(xhtpy.GraphError):
        xhtpy.Graph(["a"], [("a", "z")])


def test_product_and_interval():
    assert xhtpy.interval(2).edge_count() == 5
    k2 = xhtpy.named_graph("K2")
    assert xhtpy.product(k2, k2).edge_count() == 2
    assert xhtpy.count_homs(k2, xhtpy.named_graph("K3")) == 6


def test_stiff_reduction_of_figure_three():
    graphs, maps = xhtpy.parse_document(xhtpy.builtin_data("figure3"))
    d = graphs["D"]
    assert not xhtpy.is_stiff(d)
    seq = xhtpy.stiff_reduction(d)
    assert seq["resultVertices"] == ["2", "4", "5"]
    assert xhtpy.is_isomorphic(xhtpy.stiff_graph(d), graphs["B"]) is not None
    assert xhtpy.in_w(maps["f"])["verdict"] == "out"


def test_homotopy_and_equivalence():
    _, maps = xhtpy.parse_document(xhtpy.builtin_data("figure2"))
    f, h = maps["f"], maps["h"]
    assert xhtpy.one_step_homotopic(f, h)
    cert = xhtpy.are_homotopic(f, h)
    assert cert["type"] == "homotopy-certificate"
    assert xhtpy.is_equivalence(h)["verdict"] == "in"


def test_budget_error_is_distinct():
    _, maps = xhtpy.parse_document(xhtpy.builtin_data("figure1"))
    with pytest.raises(xhtpy.BudgetExceeded):
        xhtpy.count_homs(xhtpy.named_graph("C6"), xhtpy.named_graph("K3"), budget=3)
    assert xhtpy.in_w(maps["g"])["verdict"] == "out"
    assert xhtpy.in_w(maps["g"], copy_mode="induced")["verdict"] == "in"


def test_constructions():
    _, maps = xhtpy.parse_document(xhtpy.builtin_data("pushout_inputs"))
    cx = xhtpy.counterexample(maps["looped"])
    assert cx["equivalent"] is False
    cyl = xhtpy.mapping_cylinder(maps["simple"])
    assert "cylinder" in cyl
    p = xhtpy.pushout_graph(maps["simple"], maps["simple"])
    assert p.order() == 2


def test_verify_all():
    report = xhtpy.verify("all", seed=7)
    asserted = [c for c in report["claims"] if c["kind"] == "asserted"]
    assert asserted and all(c["verdict"] == "pass" for c in asserted)


def test_run_cli_in_process():
    code, out, _ = xhtpy.run_cli(["iso", "C6", "C6"])
    assert code == 0 and out.startswith("isomorphic")
    code, _, _ = xhtpy.run_cli(["in-w", "@figure1", "missing"])
    assert code == 2


@pytest.mark.skipif("XHTPY_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_binary_is_deterministic():
    cmd = [os.environ["XHTPY_CLI"], "verify-paper", "all", "--json", "--seed", "7"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second
    assert json.loads(first)["suite"] == "all"
