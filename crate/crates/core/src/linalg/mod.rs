//! Dense symmetric matrices, graph matrices and the Jacobi eigensolver.

mod jacobi;
mod matrix;
mod spectrum;

pub use jacobi::{symmetric_eigenvalues, MAX_SWEEPS, RELATIVE_OFF_TOL};
pub use matrix::{adjacency, normalized_laplacian, DenseSymMatrix, MAX_DENSE_ORDER};
pub use spectrum::{round_sig12, SpectrumMultiset, DEFAULT_TOL};

use crate::error::Result;
use crate::graph::Graph;

/// Eigenvalues of the normalized Laplacian of `g`.
pub fn laplacian_spectrum(g: &Graph) -> Result<SpectrumMultiset> {
    symmetric_eigenvalues(&normalized_laplacian(g)?)
}

/// Eigenvalues of the adjacency matrix of `g`.
pub fn adjacency_spectrum(g: &Graph) -> Result<SpectrumMultiset> {
    symmetric_eigenvalues(&adjacency(g)?)
}

/// Entrywise product `(A∙B)_ij = A_ij B_ij`.
pub fn hadamard(a: &DenseSymMatrix, b: &DenseSymMatrix) -> Result<DenseSymMatrix> {
    a.hadamard(b)
}
