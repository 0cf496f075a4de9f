"""Sublinear k-clique count estimation over degree/neighbor/pair queries."""

from ._core import (
    Graph,
    ParamError,
    ParseError,
    count_cliques_exact,
    count_cliques_naive,
    estimate,
    estimate_auto,
    gen_gnm,
    gen_path_plus_clique,
    load_graph,
    parse_graph,
)

__all__ = [
    "Graph",
    "ParamError",
    "ParseError",
    "count_cliques_exact",
    "count_cliques_naive",
    "estimate",
    "estimate_auto",
    "gen_gnm",
    "gen_path_plus_clique",
    "load_graph",
    "parse_graph",
]

__version__ = "0.1.0"
