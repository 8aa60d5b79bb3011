"""Self-dual repeated-root cyclic and negacyclic codes over finite fields.

Exact-arithmetic construction, classification, enumeration, and verification,
backed by the C++ core. Polynomials cross the boundary in the canonical
textual form ``c0 + c1*x + ... + ck*x^k`` with subfield elements written as
integer codes.
"""

from selfdual._core import (
    Code,
    Field,
    Poly,
    SelfdualError,
    __version__,
    claims_report,
    claims_table,
    classify_instance,
    cosets,
    count_selfdual_cyclic_char2,
    count_selfdual_negacyclic,
    dual,
    enumerate_selfdual_cyclic_char2,
    enumerate_selfdual_negacyclic,
    exists_selfdual_negacyclic,
    factor_xn_minus_a,
    is_irreducible,
    is_self_dual,
    is_self_reciprocal,
    make_code,
    make_field,
    mult_order,
    oracle_selfdual_search,
    parse_poly,
    poly,
    reciprocal,
)

__all__ = [
    "Code",
    "Field",
    "Poly",
    "SelfdualError",
    "__version__",
    "claims_report",
    "claims_table",
    "classify_instance",
    "cosets",
    "count_selfdual_cyclic_char2",
    "count_selfdual_negacyclic",
    "dual",
    "enumerate_selfdual_cyclic_char2",
    "enumerate_selfdual_negacyclic",
    "exists_selfdual_negacyclic",
    "factor_xn_minus_a",
    "is_irreducible",
    "is_self_dual",
    "is_self_reciprocal",
    "make_code",
    "make_field",
    "mult_order",
    "oracle_selfdual_search",
    "parse_poly",
    "poly",
    "reciprocal",
]
