"""Exact connection coefficients between Hermite, Laguerre and Jacobi polynomials."""

from ._orthoconn import (
    DenominatorPole,
    Error,
    InvalidInput,
    NonTerminating,
    PoleInParams,
    UnsupportedPair,
    ZeroDenominatorParameter,
    binomial,
    closed_form_connection,
    connection_oracle,
    evaluate_terminating,
    factorial,
    hermite,
    hermite_via_1f1,
    jacobi_at_one_minus_x,
    laguerre,
    pochhammer,
    run_cli,
    shifted_jacobi,
    sweep_identities,
    verify_theorem,
)

__all__ = [
    "DenominatorPole",
    "Error",
    "InvalidInput",
    "NonTerminating",
    "PoleInParams",
    "UnsupportedPair",
    "ZeroDenominatorParameter",
    "binomial",
    "closed_form_connection",
    "connection_oracle",
    "evaluate_terminating",
    "factorial",
    "hermite",
    "hermite_via_1f1",
    "jacobi_at_one_minus_x",
    "laguerre",
    "pochhammer",
    "run_cli",
    "shifted_jacobi",
    "sweep_identities",
    "verify_theorem",
]
