"""Exact X-basis analysis of graph states.

Symbolic results (X-chain groups, X-basis expansions, overlaps, Schmidt
decompositions, localization codes) are all exact and cross-checkable
against the dense integer statevector oracle in graphstates.oracle.
"""

from .bias import DyadicReal, bias_degree, enumerate_balanced, is_balanced, overlap
from .graphs import Bipartition, Graph, from_edges, named
from .localize import LocalizationCode, decode, extract_code, simulate
from .schmidt import schmidt_decomposition, schmidt_rank
from .xchains import factorize, x_representation, xchain_group

__all__ = [
    "Bipartition",
    "DyadicReal",
    "Graph",
    "LocalizationCode",
    "bias_degree",
    "decode",
    "enumerate_balanced",
    "extract_code",
    "factorize",
    "from_edges",
    "is_balanced",
    "named",
    "overlap",
    "schmidt_decomposition",
    "schmidt_rank",
    "simulate",
    "x_representation",
    "xchain_group",
]
