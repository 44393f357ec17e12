"""Gap probabilities of p-Airy kernels and the PDEs they satisfy."""

from ._gapprob import (
    acceptance,
    check_target,
    derive,
    fd_partial,
    gap_logdet,
    hirota_table,
    kernel,
    pde_residual,
    pearcey_airy_limit,
    phi,
    schur_check,
    target,
    target_ids,
    theta,
    topological_tau,
)

__all__ = [
    "acceptance",
    "check_target",
    "derive",
    "fd_partial",
    "gap_logdet",
    "hirota_table",
    "kernel",
    "pde_residual",
    "pearcey_airy_limit",
    "phi",
    "schur_check",
    "target",
    "target_ids",
    "theta",
    "topological_tau",
]
