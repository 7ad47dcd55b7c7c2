"""Torus-knot signatures, Gordian adjacency and crossing-change certificates."""
from __future__ import annotations

from gordian.adjacency import (
    AdjacencyVerdict,
    DistanceBounds,
    cbar_upper_bound,
    check_algebraic_adjacency_sufficient,
    check_gordian_adjacency,
    gordian_distance_lower_bound,
    gordian_distance_upper_bound,
    index2_candidate_scan,
    remark52_optimality_check,
    same_index_distance,
    signature_obstruction_scan,
)
from gordian.braid import BraidWord, garside_normal_form
from gordian.certificate import (
    Certificate,
    CertStep,
    apply_step,
    generate_prop21_certificate,
    theorem1_crossing_budget,
    verify_certificate,
)
from gordian.kernels import BACKEND
from gordian.seifert import (
    SeifertMatrix,
    alexander_polynomial,
    hermitian_form,
    seifert_matrix,
    signature_of_form,
    torus_braid,
    twist_knot_seifert_matrix,
)
from gordian.signature import (
    JumpSet,
    SignatureProfile,
    classical_signature,
    gg_linear_approx,
    is_regular,
    jump_set,
    lt_signature,
    signature_defect,
    signature_profile,
)
from gordian.torus import (
    TorusKnot,
    index,
    normalize,
    rasmussen_s,
    slice_genus,
    unknotting_number,
)

__version__ = "0.1.0"

__all__ = [
    "AdjacencyVerdict", "BACKEND", "BraidWord", "CertStep", "Certificate", "DistanceBounds",
    "JumpSet", "SeifertMatrix", "SignatureProfile", "TorusKnot", "alexander_polynomial",
    "apply_step", "cbar_upper_bound", "check_algebraic_adjacency_sufficient",
    "check_gordian_adjacency", "classical_signature", "garside_normal_form",
    "generate_prop21_certificate", "gg_linear_approx", "gordian_distance_lower_bound",
    "gordian_distance_upper_bound", "hermitian_form", "index", "index2_candidate_scan",
    "is_regular", "jump_set", "lt_signature", "normalize", "rasmussen_s",
    "remark52_optimality_check", "same_index_distance", "seifert_matrix", "signature_defect",
    "signature_of_form", "signature_obstruction_scan", "signature_profile", "slice_genus",
    "theorem1_crossing_budget", "torus_braid", "twist_knot_seifert_matrix", "unknotting_number",
    "verify_certificate",
]
