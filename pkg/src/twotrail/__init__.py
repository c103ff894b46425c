"""Exact toughness, 2K2-freeness, and spanning 2-trails in small graphs.

The package constructs spanning trails with maximum degree 4 (kept in their
Eulerian-subgraph form) over a dominating longest cycle, decides the two input
hypotheses exactly with witnesses, and ships the extremal family whose
toughness approaches 5/4 while no such trail exists.  Everything exponential
is desk-scale and cross-checked by independent brute-force oracles.
"""

__version__ = "0.1.0"

from .cover import (
    BipartiteInstance,
    CoverSubgraph,
    DeficientSet,
    build_cover,
    expand,
    max_matching,
    tightness_family,
)
from .cycles import (
    OrientedCycle,
    cyclic_distance,
    find_dominating_longest_cycle,
    find_longest_cycle,
    is_dominating,
    iter_longest_cycles,
)
from .errors import (
    EmptyGraph,
    LemmaViolation,
    MalformedInstance,
    NTooSmall,
    NoCycle,
    NonPositiveK,
    NotDominating,
    OutOfRangeLabel,
    ParseError,
    SelfLoop,
    SizeLimitExceeded,
    TwoTrailError,
    VertexNotOnCycle,
)
from .extremal import (
    ExtremalInstance,
    NoTrailCertificate,
    build_extremal,
    check_certificate,
    extremal_toughness_value,
    no_trail_certificate,
    structured_toughness,
)
from .graph import INFINITY, Graph, components, edge, induced, is_connected
from .recognition import (
    ToughnessCut,
    TwoK2Witness,
    find_induced_2k2,
    is_t_tough,
    min_degree,
    toughness_exact,
)
from .trail import (
    BuildFailure,
    CoverDecomposition,
    FailureTag,
    MergedPath,
    TrailCheck,
    TwoTrail,
    assemble_case1,
    assemble_case2,
    exterior_bipartite,
    find_spanning_2trail,
    merge_paths,
    minimize_components,
    oracle_exists_2trail,
    verify_2trail,
)

from_edges = Graph.from_edges

__all__ = [
    "__version__",
    "BipartiteInstance",
    "BuildFailure",
    "CoverDecomposition",
    "CoverSubgraph",
    "DeficientSet",
    "EmptyGraph",
    "ExtremalInstance",
    "FailureTag",
    "Graph",
    "INFINITY",
    "LemmaViolation",
    "MalformedInstance",
    "MergedPath",
    "NTooSmall",
    "NoCycle",
    "NoTrailCertificate",
    "NonPositiveK",
    "NotDominating",
    "OrientedCycle",
    "OutOfRangeLabel",
    "ParseError",
    "SelfLoop",
    "SizeLimitExceeded",
    "ToughnessCut",
    "TrailCheck",
    "TwoK2Witness",
    "TwoTrail",
    "TwoTrailError",
    "VertexNotOnCycle",
    "assemble_case1",
    "assemble_case2",
    "build_cover",
    "build_extremal",
    "check_certificate",
    "components",
    "cyclic_distance",
    "edge",
    "expand",
    "exterior_bipartite",
    "extremal_toughness_value",
    "find_dominating_longest_cycle",
    "find_induced_2k2",
    "find_longest_cycle",
    "find_spanning_2trail",
    "from_edges",
    "induced",
    "is_connected",
    "is_dominating",
    "is_t_tough",
    "iter_longest_cycles",
    "max_matching",
    "merge_paths",
    "min_degree",
    "minimize_components",
    "no_trail_certificate",
    "oracle_exists_2trail",
    "structured_toughness",
    "tightness_family",
    "toughness_exact",
    "verify_2trail",
]
