"""p-dissection: Gamma(p) component bases, decomposition tables, relations, level ten."""

from klein_sieve.dissection.bases import gamma_p_basis, member_row, member_series, residue_of
from klein_sieve.dissection.decompose import (
    decompose,
    decompose_sigma_image,
    reexpand,
    verify_slash,
)
from klein_sieve.dissection.level10 import (
    garvan_checks,
    level10_basis,
    verify_garvan5,
    verify_u_expansions,
)
from klein_sieve.dissection.relations import (
    check_printed_relations,
    verify_klein_relation,
)

__all__ = [
    "gamma_p_basis", "member_row", "member_series", "residue_of",
    "decompose", "decompose_sigma_image", "reexpand", "verify_slash",
    "garvan_checks", "level10_basis", "verify_garvan5", "verify_u_expansions",
    "check_printed_relations", "verify_klein_relation",
]
