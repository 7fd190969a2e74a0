"""Genus, Euler genus and Z2-genus lower bounds for small graphs.

Exact genus by rotation-system search, face tracing on general surfaces,
crosscap-model drawings with their GF(2) homology, and rank certificates for
K3,t and 2-amalgamations of Kuratowski wings.
"""

from .certify import (
    Certificate,
    HypothesisError,
    UnrealizableError,
    amalgam_certificate,
    check_lemma_k33,
    k3t_certificate,
    k3t_pigeonhole,
    orthogonality_check,
    ramsey_potential,
    wing_cycle_pairs,
)
from .corpus import CATALOG, load_drawing, load_witness, witness_dir, write_corpus
from .crosscap import (
    CrosscapDrawing,
    DrawingError,
    compress,
    cycle_homology,
    intersection_form,
    is_independently_even,
    normalize_forest,
    scheme_to_drawing,
)
from .embedding import (
    EmbeddingScheme,
    SchemeError,
    euler_formula_bound,
    euler_genus_of_scheme,
    genus_of_scheme,
    trace_faces,
)
from .facewidth import facewidth_projective
from .families import amalgam, complete_bipartite_3t, complete_graph, gen_kuratowski, k33
from .gf2 import BitVec, Gf2Matrix, rank
from .graph import CycleVec, Graph, GraphError, spanning_forest
from .parity import kuratowski_forest_parity, verify_kleitman
from .search import SearchResult, min_euler_genus_search, min_genus_search

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
