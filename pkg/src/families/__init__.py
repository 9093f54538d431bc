from .braids import (
    DEFAULT_PLAT_TWISTS,
    bridge_sphere_decomposition,
    closed_braid,
    plat_diagram,
    plat_from_word,
    torus_diagram,
)
from .connect_sum import trefoil_connect_sum
from .corpus import (
    FIGURE_EIGHT_PD,
    TREFOIL_PD,
    CorpusEntry,
    build_family,
    is_reduced,
    random_knot_corpus,
    standard_corpus,
)
from .lower_bounds import LowerBoundReport, tw_lower_bound_report
from .pretzel import pretzel_columns, pretzel_diagram
from .spec import FamilyError, FamilyKind, FamilySpec, parse_family_spec
from .two_bridge import (
    continued_fraction_value,
    odd_length_fraction,
    two_bridge_diagram,
    two_bridge_word,
)

__all__ = [
    "DEFAULT_PLAT_TWISTS",
    "FIGURE_EIGHT_PD",
    "TREFOIL_PD",
    "CorpusEntry",
    "FamilyError",
    "FamilyKind",
    "FamilySpec",
    "LowerBoundReport",
    "bridge_sphere_decomposition",
    "build_family",
    "closed_braid",
    "continued_fraction_value",
    "is_reduced",
    "odd_length_fraction",
    "parse_family_spec",
    "plat_diagram",
    "plat_from_word",
    "pretzel_columns",
    "pretzel_diagram",
    "random_knot_corpus",
    "standard_corpus",
    "torus_diagram",
    "trefoil_connect_sum",
    "tw_lower_bound_report",
    "two_bridge_diagram",
    "two_bridge_word",
]
