"""Exact-arithmetic twisted bialgebras of graphs, set compositions, and
quasishuffle words, with the V-coloured bosonic Fock functor."""

from .lincomb import LinComb
from .partitions import SetPartition
from .graphs import Graph
from .set_compositions import SetComposition
from .quasishuffle import Monomial, Word

__all__ = [
    "LinComb",
    "SetPartition",
    "Graph",
    "SetComposition",
    "Monomial",
    "Word",
]

__version__ = "0.1.0"
