"""Exact-arithmetic braid monodromy and group presentations for real line
arrangements."""

from arrgroup.geometry import (
    Arrangement,
    ArrangementError,
    IntersectionLattice,
    IntersectionPoint,
    Line,
    MultipleGraph,
    compute_lattice,
    graph_betti,
    multiple_point_graph,
    parse_arrangement,
)
from arrgroup.braid import (
    artin_apply,
    braid_inverse,
    format_braid,
    format_word,
    free_reduce,
    halftwist,
    parse_word,
    prefix_braid,
    word_inverse,
    word_mul,
)
from arrgroup.wiring import (
    PairList,
    Transform,
    WiringError,
    format_pairs,
    genericize,
    lefschetz_pairs,
    parse_pairs,
    simulate_sweep,
    validate_pairs,
    wiring_svg,
)
from arrgroup.vankampen import (
    CyclicRelation,
    Presentation,
    candidate_cf,
    is_conjugation_free,
    relabel_presentation,
    canonical_form,
    conjugate_parts,
    format_presentation,
    format_presentation_json,
    parse_presentation,
    parse_presentation_json,
    point_relation_words,
    presentation,
    projectivize,
)

from arrgroup.prover import (
    Budget,
    Certificate,
    ProveResult,
    ProverError,
    ReplayError,
    Verdict,
    cf_verdict,
    format_certificate,
    format_verdict,
    parse_certificate,
    prove_equivalent,
    replay,
)
from arrgroup.invariants import (
    AbelianInvariants,
    FiniteGroupTable,
    GroupTableError,
    HomCount,
    abelianization,
    builtin_group,
    format_group_table,
    hom_count,
    hom_count_scalar,
    parse_group_table,
    smith_diagonal,
)
from arrgroup.grouptheory import (
    GroupDescriptor,
    StructureError,
    descriptor_presentation,
    direct_sum,
    fan_structure,
    oka_sakamoto_split,
    semidirect_fixture,
    sub_arrangement,
)

__all__ = [
    "Arrangement",
    "ArrangementError",
    "IntersectionLattice",
    "IntersectionPoint",
    "Line",
    "MultipleGraph",
    "compute_lattice",
    "graph_betti",
    "multiple_point_graph",
    "parse_arrangement",
    "artin_apply",
    "braid_inverse",
    "format_braid",
    "format_word",
    "free_reduce",
    "halftwist",
    "parse_word",
    "prefix_braid",
    "word_inverse",
    "word_mul",
    "PairList",
    "Transform",
    "WiringError",
    "format_pairs",
    "genericize",
    "lefschetz_pairs",
    "parse_pairs",
    "simulate_sweep",
    "validate_pairs",
    "wiring_svg",
    "CyclicRelation",
    "Presentation",
    "canonical_form",
    "conjugate_parts",
    "format_presentation",
    "format_presentation_json",
    "parse_presentation",
    "parse_presentation_json",
    "point_relation_words",
    "presentation",
    "projectivize",
    "candidate_cf",
    "is_conjugation_free",
    "relabel_presentation",
    "Budget",
    "Certificate",
    "ProveResult",
    "ProverError",
    "ReplayError",
    "Verdict",
    "cf_verdict",
    "format_certificate",
    "format_verdict",
    "parse_certificate",
    "prove_equivalent",
    "replay",
    "AbelianInvariants",
    "FiniteGroupTable",
    "GroupTableError",
    "HomCount",
    "abelianization",
    "builtin_group",
    "format_group_table",
    "hom_count",
    "hom_count_scalar",
    "parse_group_table",
    "smith_diagonal",
    "GroupDescriptor",
    "StructureError",
    "descriptor_presentation",
    "direct_sum",
    "fan_structure",
    "oka_sakamoto_split",
    "semidirect_fixture",
    "sub_arrangement",
]
