"""Classification of Fano Bott manifolds via signed rooted forests."""

from ._core import (
    InvalidMatrix,
    canonical_code,
    certify_diffeo,
    count,
    cut_rank_gf2,
    enumerate,
    enumerate_sve,
    equivalent,
    find_witness,
    from_phi_sigma,
    op1,
    op2,
    op3,
    peel_signature,
    rays,
    render_dot,
    replay,
    to_phi_sigma,
    validate,
)

__all__ = [
    "InvalidMatrix",
    "canonical_code",
    "certify_diffeo",
    "count",
    "cut_rank_gf2",
    "enumerate",
    "enumerate_sve",
    "equivalent",
    "find_witness",
    "from_phi_sigma",
    "op1",
    "op2",
    "op3",
    "peel_signature",
    "rays",
    "render_dot",
    "replay",
    "to_phi_sigma",
    "validate",
]
