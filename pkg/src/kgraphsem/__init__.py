"""Certificates and verdicts for higher-rank graph algebras.

A finite higher-rank graph is presented by k pairwise commuting vertex
matrices; this package decides whether its type semigroup (equivalently, any
twist of its algebra, under the stated hypotheses) is stably finite or
purely infinite, and backs every verdict with an independently checkable
certificate: an invariant mass function, an integer lattice witness, or an
explicit absorbing identity. A brute-force class-table oracle confirms the
closed-form answers on finite windows.
"""

from .classify import (
    TWIST_NOTE,
    CstarVerdict,
    CstarVerdictKind,
    GordanAudit,
    GraphTrace,
    InfiniteElement,
    LatticeWitness,
    SemigroupVerdict,
    SemigroupVerdictKind,
    StateEvaluation,
    classify_cstar,
    classify_ray,
    classify_semigroup,
    gordan_audit,
    infinite_element_from_witness,
    lattice_meets_positives,
    solve_graph_trace,
    state_from_trace,
    verify_graph_trace,
    verify_infinite_element,
    verify_lattice_witness,
)
from .documents import (
    GRAPH_TAG,
    RAY_TAG,
    REPORT_TAG,
    OracleSummary,
    Report,
    build_report,
    canonical_json,
    document_for,
    graph_document,
    oracle_summary,
    parse_document,
    ray_document,
    report_from_json,
    report_to_json,
    report_to_text,
)
from .errors import (
    CertificateError,
    DocumentError,
    ExampleError,
    InternalCheckError,
    PresentationError,
    ResourceLimitError,
)
from .model import (
    KGraphPresentation,
    RayPresentation,
    RayReport,
    StructuralReport,
    Tri,
    check_degree,
    condition_L,
    degree_matrix,
    full_degree_cycle,
    hereditary_closure,
    is_cofinal,
    is_strongly_connected,
    require_valid,
    require_valid_ray,
    restrict,
    saturated_hereditary_closure,
    simplicity_status,
    structure_report,
    union_reach,
    validate,
    validate_ray,
)
from .oracle import (
    Box,
    ClassTable,
    ConicalAudit,
    OracleCrossCheck,
    approx_le,
    build_class_table,
    conical_audit,
    detect_properly_infinite,
    oracle_cross_check,
    refinement_search,
    sim_related,
)

__version__ = "0.1.0"

__all__ = [
    "TWIST_NOTE",
    "Box",
    "CertificateError",
    "ClassTable",
    "ConicalAudit",
    "CstarVerdict",
    "CstarVerdictKind",
    "DocumentError",
    "ExampleError",
    "GRAPH_TAG",
    "GordanAudit",
    "GraphTrace",
    "InfiniteElement",
    "InternalCheckError",
    "KGraphPresentation",
    "LatticeWitness",
    "OracleCrossCheck",
    "OracleSummary",
    "PresentationError",
    "RAY_TAG",
    "REPORT_TAG",
    "RayPresentation",
    "RayReport",
    "Report",
    "ResourceLimitError",
    "SemigroupVerdict",
    "SemigroupVerdictKind",
    "StateEvaluation",
    "StructuralReport",
    "Tri",
    "approx_le",
    "build_class_table",
    "build_report",
    "canonical_json",
    "check_degree",
    "classify_cstar",
    "classify_ray",
    "classify_semigroup",
    "condition_L",
    "conical_audit",
    "degree_matrix",
    "detect_properly_infinite",
    "document_for",
    "full_degree_cycle",
    "gordan_audit",
    "graph_document",
    "hereditary_closure",
    "infinite_element_from_witness",
    "is_cofinal",
    "is_strongly_connected",
    "lattice_meets_positives",
    "oracle_cross_check",
    "oracle_summary",
    "parse_document",
    "ray_document",
    "refinement_search",
    "report_from_json",
    "report_to_json",
    "report_to_text",
    "require_valid",
    "require_valid_ray",
    "restrict",
    "saturated_hereditary_closure",
    "sim_related",
    "simplicity_status",
    "solve_graph_trace",
    "state_from_trace",
    "structure_report",
    "union_reach",
    "validate",
    "validate_ray",
    "verify_graph_trace",
    "verify_infinite_element",
    "verify_lattice_witness",
    "__version__",
]
