"""Finite-field subgroups as cap sets: field arithmetic, subgroup/coset
enumeration, cap/Sidon/completeness checks and SET/EvenQuads card tables."""

from .caps import (
    CapReport,
    CompletenessReport,
    is_cap,
    is_cap_char2,
    is_cap_char3,
    is_complete_naive,
    is_complete_subgroup_reduced,
    is_sidon,
    line_test,
    represented,
    smallest_complete_bound,
    strong_structure_char2,
    strong_structure_char3,
)
from .ffield import (
    Element,
    FieldCtx,
    FieldError,
    FieldSpec,
    Poly,
    build_ctx,
    element_order,
    find_primitive_polynomial,
    is_irreducible,
    make_field,
    parse_poly,
    poly_rem,
)
from .groups import CosetFamily, SubgroupHandle, coset_family, coset_of, subgroup_of_order

__version__ = "0.1.0"
