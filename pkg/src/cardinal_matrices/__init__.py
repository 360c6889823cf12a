"""Exact construction and analysis of Cardinal's approximate-divisor matrices."""

__version__ = "0.1.0"

from .divisors import DivisorSet, build_divisor_set, involution, locate_block, predecessor, successor
from .matrices import IntMatrix, RatMatrix
from .mertens import CoeffVector, MertensTable, MobiusTable, block_sums, mertens, sieve_mobius
from .algebra import dirichlet_convolve, hom_image, rho, verify_commutativity, verify_homomorphism
from .cardinal import check_floor_commutation, m_matrix, m_matrix_via_mertens, t_inverse, t_matrix, u_inverse, u_matrix
from .deformed import difference_matrices, m_tilde, u_tilde, u_tilde_inverse, u_tilde_plus, z_tilde_and_w
from .spectral import (
    ScanRecord,
    SpectralReport,
    eigen_spectrum,
    frobenius_norm_sq,
    homotopy_track,
    operator_norm,
    rh_scan,
)

__all__ = [
    "DivisorSet", "build_divisor_set", "involution", "locate_block", "predecessor", "successor",
    "IntMatrix", "RatMatrix",
    "CoeffVector", "MertensTable", "MobiusTable", "block_sums", "mertens", "sieve_mobius",
    "dirichlet_convolve", "hom_image", "rho", "verify_commutativity", "verify_homomorphism",
    "check_floor_commutation", "m_matrix", "m_matrix_via_mertens", "t_inverse", "t_matrix", "u_inverse", "u_matrix",
    "difference_matrices", "m_tilde", "u_tilde", "u_tilde_inverse", "u_tilde_plus", "z_tilde_and_w",
    "ScanRecord", "SpectralReport", "eigen_spectrum", "frobenius_norm_sq", "homotopy_track", "operator_norm", "rh_scan",
]
