# wirtinger/services/__init__.py
from wirtinger.services.codec import (
    build_diagram,
    diagram_from_text,
    emit_diagram,
    emit_gauss,
    parse_gauss,
    resolve_strands,
    strand_names,
)
from wirtinger.services.coloring import extend_to_fixpoint, find_coloring_move, height
from wirtinger.services.search import enumerate_seed_sets, omega_upper_bound, wirtinger_number
from wirtinger.services.verify import (
    count_local_maxima,
    detect_cut_split,
    reconstruct_morse_profile,
    reduce_cut_split,
    verify_coloring,
)
from wirtinger.services.diagram import DiagramService
from wirtinger.services.bounds import twist_regions, twist_seeding, volume_lower_bound
from wirtinger.services.tabulate import TabulationService, compare_known, run_batch


__all__ = [
    "build_diagram",
    "diagram_from_text",
    "emit_diagram",
    "emit_gauss",
    "parse_gauss",
    "resolve_strands",
    "strand_names",
    "extend_to_fixpoint",
    "find_coloring_move",
    "height",
    "enumerate_seed_sets",
    "omega_upper_bound",
    "wirtinger_number",
    "count_local_maxima",
    "detect_cut_split",
    "reconstruct_morse_profile",
    "reduce_cut_split",
    "verify_coloring",
    "twist_regions",
    "twist_seeding",
    "volume_lower_bound",
    "DiagramService",
    "TabulationService",
    "compare_known",
    "run_batch",
]
