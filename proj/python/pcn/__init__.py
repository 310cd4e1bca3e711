"""Procedure call network extraction and Google-matrix analysis."""

from pcn._core import (
    CallGraph,
    PcnError,
    RankVector,
    critical_set,
    degree_fit,
    kappa,
    load_edge_list,
    load_graph,
    pagerank,
    rank_decay_fit,
    save_graph,
    scan,
    spectrum,
    __version__,
)

__all__ = [
    "CallGraph",
    "PcnError",
    "RankVector",
    "critical_set",
    "degree_fit",
    "kappa",
    "load_edge_list",
    "load_graph",
    "pagerank",
    "rank_decay_fit",
    "save_graph",
    "scan",
    "spectrum",
    "__version__",
]
