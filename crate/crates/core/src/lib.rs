//! Normalized Laplacian spectra of generalized subdivision-vertex and
//! subdivision-edge coronas of regular graphs.
//!
//! The crate builds both coronas with a fixed block labelling, computes
//! their spectra with a dense Jacobi eigensolver, predicts the same spectra
//! from the spectra of the base and attached graphs, and compares the two.

pub mod acceptance;
pub mod corona;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod linalg;
pub mod predictor;
pub mod verifier;

pub use corona::{
    build_corona, build_uniform_corona, subdivision_edge_corona, subdivision_vertex_corona, CoronaLayout,
    CoronaMode,
};
pub use error::{Error, Result};
pub use graph::{Graph, RegularityCertificate};
pub use linalg::{
    hadamard, laplacian_spectrum, normalized_laplacian, symmetric_eigenvalues, DenseSymMatrix,
    SpectrumMultiset,
};
pub use predictor::{
    coronal_chi, predict_edge_corona, predict_vertex_corona, real_roots_cubic, real_roots_quadratic,
    AttachmentSpec, PredictedSpectrum, RegularGraphSpec,
};
pub use verifier::{
    check_cospectral, cospectral_corona_pair, verify_theorem, CospectralityCertificate, VerificationReport,
};
