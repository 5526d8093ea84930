"""Book numbers, triangle counts and extremal constructions for dense graphs."""

from __future__ import annotations

from .bipartite import (
    CutResult,
    ExtractionResult,
    cut_bound,
    is_bipartite,
    lemma1_cut,
    lemma2_extract,
    max_induced_bipartite,
)
from .canon import canonical_form, canonical_graph6, canonical_labeling, certificate, is_isomorphic
from .census import (
    BookProfile,
    above_mantel,
    bn_inequality_check,
    book_number,
    book_profile,
    degree_square_sum,
    edwards_check,
    rademacher_check,
    stats,
    triangle_count,
)
from .constructions import (
    PrismSpec,
    UpperConstruction,
    balanced_bipartite,
    in_conjecture_range,
    mubayi_upper,
    prism_blowup,
    s_graph,
    s_graph_book_number,
    s_graph_spec,
)
from .formats import Graph6ParseError, decode_graph6, encode_graph6, graph_from_json, graph_to_json, to_graph6
from .graph import Graph, GraphBuilder, GraphInputError, codegree, cross_edges, degree, edges_inside
from .search import (
    Certificate,
    SearchParams,
    SearchRefused,
    classical_suite,
    enumerate_filtered,
    recheck_certificate,
    stress_search,
    verify_conjecture,
)
from .surgery import (
    SurgeryInfeasible,
    SurgeryReport,
    TriPartition,
    UndefinedValue,
    bar_b,
    classify_triangles,
    tilde_t,
    tilde_t_doubled,
    to_G1,
    to_G2,
)

__version__ = "0.1.0"
