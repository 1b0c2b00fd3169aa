"""Degree-sequence certification: graphicality, clique forcing, realizations
and star-subdivided clique witnesses."""

import json as _json

from ._degseq import (
    ArgumentError,
    DomainError,
    Graph,
    InfeasibleError,
    InternalError,
    ParseError,
    ResourceError,
    chi_of_sequence,
    chromatic_number,
    classify_basic_profile,
    clique_number,
    count_realizations,
    h1_of_sequence,
    is_graphic,
    is_hypomatchable,
    largecl_check,
    maximum_matching,
    omega_of_sequence,
    parse_sequence,
    rao_omega_at_least,
    realize_any,
    realize_bipartite_with_matching,
    realize_low_degree,
    realize_tree,
    realize_with_clique,
    yinli_sufficient,
)
from . import _degseq as _core


def h1_of_graph(g):
    order, witness = _core.h1_of_graph(g)
    return order, (_json.loads(witness) if witness is not None else None)


def verify_witness(g, witness):
    """Returns (ok, reason) for a witness given as a dict."""
    return _core.verify_witness(g, _json.dumps(witness))


def build_basic_witness(degrees):
    graph, witness, plan = _core.build_basic_witness(list(degrees))
    return graph, _json.loads(witness), _json.loads(plan)


def witness_pipeline(g):
    (graph, witness), chi = _core.witness_pipeline(g)
    return graph, _json.loads(witness), chi


def check_bounds(chi, omega, delta, h1=None):
    return _json.loads(_core.check_bounds(chi, omega, delta, h1))


def sweep(n_max, checks):
    return _json.loads(_core.sweep(n_max, list(checks)))


__all__ = [name for name in dir() if not name.startswith("_")]
