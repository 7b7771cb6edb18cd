"""Graph homotopy toolkit: folds, homotopies, constructions and class-W checks."""

import json

from ._core import (
    BudgetExceeded,
    Graph,
    GraphError,
    GraphMap,
    builtin_data,
    compose,
    count_homs,
    foldable_pairs,
    graphs_equivalent,
    interval,
    is_isomorphic,
    is_stiff,
    named_graph,
    one_step_homotopic,
    parse_document,
    product,
    pushout_graph,
    run_cli,
    stiff_graph,
)
from . import _core

__all__ = [
    "BudgetExceeded",
    "Graph",
    "GraphError",
    "GraphMap",
    "are_homotopic",
    "builtin_data",
    "compose",
    "count_homs",
    "counterexample",
    "foldable_pairs",
    "graphs_equivalent",
    "in_w",
    "interval",
    "is_equivalence",
    "is_isomorphic",
    "is_stiff",
    "mapping_cylinder",
    "named_graph",
    "one_step_homotopic",
    "parse_document",
    "product",
    "pushout",
    "pushout_graph",
    "run_cli",
    "stiff_graph",
    "stiff_reduction",
    "verify",
]


def stiff_reduction(graph, policy="first", seed=0):
    return json.loads(_core.stiff_reduction_json(graph, policy, seed))


def are_homotopic(f, g):
    return json.loads(_core.are_homotopic_json(f, g))


def is_equivalence(f, budget=0, map_budget=0):
    return json.loads(_core.is_equivalence_json(f, budget, map_budget))


def in_w(f, copy_mode="subgraph", image_mode="image"):
    return json.loads(_core.in_w_json(f, copy_mode, image_mode))


def pushout(f, g):
    return json.loads(_core.pushout_json(f, g))


def mapping_cylinder(f):
    return json.loads(_core.mapping_cylinder_json(f))


def counterexample(f):
    return json.loads(_core.counterexample_json(f))


def verify(suite="all", seed=0):
    return json.loads(_core.verify_suite_json(suite, seed))
