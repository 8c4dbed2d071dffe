"""Exact DP-coloring toolkit for small digraphs.

Covers pair colors across arcs; a digraph is colored by picking one color
per vertex so that the picked colors induce no directed cycle.  The package
decides colorability, computes the dichromatic, list and DP chromatic
numbers at desk scale, characterizes which hosts survive degree-sized
covers, and re-derives the structural results by exhaustive search.
"""

from .covers import (
    Configuration,
    Cover,
    bc_config_even,
    bc_config_odd,
    c_config,
    cover_from_lists,
    delete_h_arc,
    delete_vertex,
    is_degree_feasible,
    is_symmetric,
    k_config,
    make_cover,
    merge,
    symmetrize,
    transpose_pairs,
    validate_cover,
)
from .digraph import (
    Block,
    BlockDecomposition,
    Brick,
    Digraph,
    bidirect,
    blocks,
    build_digraph,
    canonical_form,
    classify_brick,
    degrees,
    enumerate_connected_digraphs,
    enumerate_connected_graphs,
    has_directed_cycle,
    instance_label,
    is_bidirected,
    is_complete_digraph,
    is_eulerian,
    underlying_is_connected,
)
from .files import (
    FormatError,
    format_cover,
    format_digraph,
    format_transversal,
    parse_cover,
    parse_digraph,
    parse_transversal,
)
from .harness import (
    SUITES,
    VerificationReport,
    verify_bidirected_equivalence,
    verify_bricks,
    verify_chain,
    verify_characterization,
    verify_merge,
)
from .recognizer import (
    BlockPiece,
    ConstructibleDecomposition,
    DegreeColorabilityVerdict,
    RecognitionResult,
    brooks_gap,
    build_bad_cover,
    classify_blocks,
    degree_colorability,
    is_dp_degree_colorable,
    recognize_constructible,
)
from .solver import (
    Budget,
    BudgetExceeded,
    ChromaticReport,
    KMaxExceeded,
    ShiftAmbiguous,
    ShiftUndefined,
    SolveResult,
    acyclic_transversals_excluding,
    chromatic_report,
    dichromatic_number,
    dp_chromatic_number,
    dp_colorable_k,
    dp_colorable_k_symmetric,
    dp_colorable_k_unreduced,
    dp_degree_colorable_oracle,
    enumerate_normalized_covers,
    find_acyclic_transversal,
    greedy_bound,
    greedy_transversal,
    is_list_colorable,
    is_minimal_uncolorable,
    list_chromatic_number,
    shift,
    transversal_is_acyclic,
    undirected_dp_chromatic_number,
)

__version__ = "0.1.0"
