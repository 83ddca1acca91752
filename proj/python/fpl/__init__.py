"""Finite frame potentials, dual frames and fusion frames."""

from ._core import (
    FpError,
    Frame,
    canonical_dual,
    canonical_dual_fusion,
    conjecture_harness,
    cross_frame_potential,
    cross_fusion_potential,
    cross_gramian,
    cross_potential_bound,
    frame_potential,
    frame_potential_bound,
    fusion_potential,
    is_dual,
    is_tight,
    log_phi_offdiagonal,
    max_offdiagonal,
    minimize_mu,
    pth_bound,
    pth_cross_potential,
    run_cli,
    welch_constant,
)

__all__ = [
    "FpError",
    "Frame",
    "canonical_dual",
    "canonical_dual_fusion",
    "conjecture_harness",
    "cross_frame_potential",
    "cross_fusion_potential",
    "cross_gramian",
    "cross_potential_bound",
    "frame_potential",
    "frame_potential_bound",
    "fusion_potential",
    "is_dual",
    "is_tight",
    "log_phi_offdiagonal",
    "max_offdiagonal",
    "minimize_mu",
    "pth_bound",
    "pth_cross_potential",
    "run_cli",
    "welch_constant",
]
