"""Exact lambda-ring arithmetic on Burnside rings of symmetric groups,
with a brute-force G-set engine serving as an independent oracle."""

from .partitions import (
    Partition,
    alpha,
    composition_to_partition,
    enumerate_partitions,
    format_partition,
    lex_compare,
    multinomial,
    pad,
    parse_partition,
)
from .schur import (
    SchurElement,
    basis_element,
    cardinality,
    closed_lambda,
    degree,
    leading_term_check,
    recursive_lambda,
    schur_mul,
    sigma,
)
from .marks import (
    MarkVector,
    fixed_points,
    mark_matrix,
    marks_of,
    verify_injectivity,
)
from .engine import (
    BurnsideElement,
    CapExceeded,
    GroupFileError,
    GSet,
    PermGroup,
    Permutation,
    burnside_to_schur,
    cyclic_group,
    decompose,
    dihedral_group,
    disjoint_union,
    eq6_general,
    group_closure,
    induce,
    lambda_general,
    natural_gset,
    orbits,
    p_mu_gset,
    parse_group_file,
    parse_permutation,
    product_gset,
    restrict,
    schur_membership,
    schur_to_burnside,
    stabilizer,
    symmetric_group,
    symmetric_power,
    verify_lemma73,
    verify_lemma74,
    young_subgroup,
)

__all__ = [
    "Partition",
    "alpha",
    "composition_to_partition",
    "enumerate_partitions",
    "format_partition",
    "lex_compare",
    "multinomial",
    "pad",
    "parse_partition",
    "SchurElement",
    "basis_element",
    "cardinality",
    "closed_lambda",
    "degree",
    "leading_term_check",
    "recursive_lambda",
    "schur_mul",
    "sigma",
    "MarkVector",
    "fixed_points",
    "mark_matrix",
    "marks_of",
    "verify_injectivity",
    "BurnsideElement",
    "CapExceeded",
    "GroupFileError",
    "GSet",
    "PermGroup",
    "Permutation",
    "burnside_to_schur",
    "cyclic_group",
    "decompose",
    "dihedral_group",
    "disjoint_union",
    "eq6_general",
    "group_closure",
    "induce",
    "lambda_general",
    "natural_gset",
    "orbits",
    "p_mu_gset",
    "parse_group_file",
    "parse_permutation",
    "product_gset",
    "restrict",
    "schur_membership",
    "schur_to_burnside",
    "stabilizer",
    "symmetric_group",
    "symmetric_power",
    "verify_lemma73",
    "verify_lemma74",
    "young_subgroup",
]

__version__ = "0.1.0"
