"""Zhang-Zhang polynomials of regular benzenoid strips.

Computes the ZZ (Clar covering) polynomial of any Kekulean regular
multi-tier benzenoid strip as the extended strict order polynomial of
its DIB poset, generates explicit Kekule structures and Clar covers,
and cross-validates everything against a brute-force graph oracle.
"""

from .dib_poset import (
    Dib,
    DibPoset,
    NaturalLabeling,
    build_poset,
    induced_subposets,
    natural_labeling,
)
from .errors import GuardExceeded, InvalidStripError, NonKekuleanError, StripParseError
from .extension_engine import (
    LinearExtensionRecord,
    descent_stats,
    extension_records,
    fixed_labels,
    linear_extensions,
)
from .kekule_bijection import (
    ClarCoverRecord,
    KekuleAssignment,
    OrderMap,
    enumerate_kekule,
    generate_clar_covers,
    kekule_from_map,
    map_from_kekule,
)
from .oracle import (
    ExplicitClarCover,
    count_proper_sextets,
    enumerate_clar_covers,
    enumerate_perfect_matchings,
    extract_ki,
    zz_from_covers,
    zz_from_matchings,
)
from .order_polynomials import (
    ClosedForm,
    ZzPolynomial,
    a_coefficients,
    binom,
    brute_force_strict_maps,
    closed_form,
    extended_poly_extension_formula,
    extended_poly_subposet_sum,
    strict_order_poly,
    zz_polynomial,
)
from .strip_geometry import (
    BenzenoidGraph,
    FragmentInfo,
    Hexagon,
    InterfaceProfile,
    StripSpec,
    ValidationReport,
    build_graph,
    fragment_info,
    interface_profile,
    parallelogram,
    parse_strip,
    shapes_from_graph,
    tier_offsets,
    validate,
)

__all__ = [
    "BenzenoidGraph",
    "ClarCoverRecord",
    "ClosedForm",
    "Dib",
    "DibPoset",
    "ExplicitClarCover",
    "FragmentInfo",
    "GuardExceeded",
    "Hexagon",
    "InterfaceProfile",
    "InvalidStripError",
    "KekuleAssignment",
    "LinearExtensionRecord",
    "NaturalLabeling",
    "NonKekuleanError",
    "OrderMap",
    "StripParseError",
    "StripSpec",
    "ValidationReport",
    "ZzPolynomial",
    "a_coefficients",
    "binom",
    "brute_force_strict_maps",
    "build_graph",
    "build_poset",
    "closed_form",
    "count_proper_sextets",
    "descent_stats",
    "enumerate_clar_covers",
    "enumerate_kekule",
    "enumerate_perfect_matchings",
    "extended_poly_extension_formula",
    "extended_poly_subposet_sum",
    "extension_records",
    "extract_ki",
    "fixed_labels",
    "fragment_info",
    "generate_clar_covers",
    "induced_subposets",
    "interface_profile",
    "kekule_from_map",
    "linear_extensions",
    "map_from_kekule",
    "natural_labeling",
    "parallelogram",
    "parse_strip",
    "shapes_from_graph",
    "strict_order_poly",
    "tier_offsets",
    "validate",
    "zz_from_covers",
    "zz_from_matchings",
    "zz_polynomial",
]

__version__ = "0.1.0"
