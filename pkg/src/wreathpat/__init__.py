"""Pattern matching and avoidance in colored permutations C_k wr S_n."""
from __future__ import annotations

from .bijection import certify_bijection, to_dyck_path, to_lattice_path
from .core import (
    EXACT,
    REDUCED,
    ColoredPattern,
    ColoredPermutation,
    InvalidInput,
    PatternSet,
    apply_phi,
    avoids,
    contains,
    count_matches,
    occurrences,
    parse_colored_permutation,
    parse_pattern,
    parse_patterns,
    patterns,
)
from .enumeration import BudgetExceeded, EnumSpec, count_avoiders, distribution, generate_all, sequence
from .registry import REGISTRY

__version__ = "0.1.0"

__all__ = [
    "EXACT", "REDUCED", "ColoredPattern", "ColoredPermutation", "InvalidInput", "PatternSet",
    "apply_phi", "avoids", "contains", "count_matches", "occurrences", "parse_colored_permutation",
    "parse_pattern", "parse_patterns", "patterns", "BudgetExceeded", "EnumSpec", "count_avoiders",
    "distribution", "generate_all", "sequence", "certify_bijection", "to_dyck_path",
    "to_lattice_path", "REGISTRY",
]
