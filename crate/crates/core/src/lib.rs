//! Exact formal Poisson cohomology of quadratic Poisson tensors.
//!
//! Strongly r-matrix induced quadratic structures `Λ = Σ α^{ij} Y_i ∧ Y_j`
//! (with `Y_i` commuting linear vector fields) have their Lichnerowicz–Poisson
//! cohomology reduced to the Koszul cohomology of the commuting operators
//! `X_i − div X_i` acting on homogeneous polynomials.

pub mod catalog;
pub mod cohomology;
pub mod error;
pub mod frame;
pub mod grassmann;
pub mod koszul;
pub mod linalg;
pub mod minors;
pub mod multivector;
pub mod poly;
pub mod scalar;
pub mod report;
pub mod spectrum;
pub mod structure_file;
pub mod suites;

pub use error::Error;
pub use frame::{LinFrame, SrmiStructure};
pub use linalg::Matrix;
pub use multivector::{MultiVec, MultiVecBasis};
pub use poly::{HomPoly, MonomialBasis, MultiIndex};
pub use scalar::{Gaussian, Rational, Scalar};

pub type QPoly = HomPoly<Rational>;
pub type GPoly = HomPoly<Gaussian>;
pub type QMatrix = Matrix<Rational>;
pub type GMatrix = Matrix<Gaussian>;
pub type QMultiVec = MultiVec<Rational>;
pub type GMultiVec = MultiVec<Gaussian>;
