"""Classification queries for finite simple groups inside PGL(n,C).

Thin wrapper around the C++ core. The heavy lifting (exact cyclotomic
arithmetic, clause solvers, embedded classification tables) lives in the
`_pglcat` extension module.
"""

from _pglcat import (  # noqa: F401
    DataError,
    DomainError,
    abelian_socle_structure,
    admissible_prime,
    blichfeldt_exponent_bound,
    can_be_quasiprimitive,
    canonical,
    classification_status,
    collins_index_bound,
    composite_cases,
    display_name,
    enumerate_up_to,
    factorize,
    groups_with_order_dividing,
    induced_character,
    is_simple,
    min_degree_psl,
    normalizer_group_orders,
    order,
    order_factored,
    polygon_count,
    run_cli,
    schur_multiplier,
    socles,
    tables,
    tz_for_degree,
    tz_for_group,
)

__all__ = [
    "DataError",
    "DomainError",
    "abelian_socle_structure",
    "admissible_prime",
    "blichfeldt_exponent_bound",
    "can_be_quasiprimitive",
    "canonical",
    "classification_status",
    "collins_index_bound",
    "composite_cases",
    "display_name",
    "enumerate_up_to",
    "factorize",
    "groups_with_order_dividing",
    "induced_character",
    "is_simple",
    "min_degree_psl",
    "normalizer_group_orders",
    "order",
    "order_factored",
    "polygon_count",
    "run_cli",
    "schur_multiplier",
    "socles",
    "tables",
    "tz_for_degree",
    "tz_for_group",
]
