"""Clique complexes of reflexive graphs and the sampled-map pipeline."""

import json as _json

from ._vrbridge import (
    CertificateError,
    Graph,
    InputError,
    SimplicialComplex,
    abelianization_rank,
    barycentric_subdivision,
    betti_numbers,
    complete_graph,
    cycle_graph,
    euler_characteristic,
    octahedron_graph,
    theta,
    vietoris_rips,
)
from ._vrbridge import run_pipeline as _run_pipeline


def run_pipeline(graph, domain="circle:64", map="quarter-arc", subdivisions=0, grid=50, seed=0):
    """Runs the sampled-map pipeline and returns its report as a dict."""
    return _json.loads(_run_pipeline(graph, domain, map, subdivisions, grid, seed))


__all__ = [
    "CertificateError",
    "Graph",
    "InputError",
    "SimplicialComplex",
    "abelianization_rank",
    "barycentric_subdivision",
    "betti_numbers",
    "complete_graph",
    "cycle_graph",
    "euler_characteristic",
    "octahedron_graph",
    "run_pipeline",
    "theta",
    "vietoris_rips",
]
