//! Exact-arithmetic toolkit for locally conformally Kähler structures on
//! finite-dimensional real Lie algebras.
//!
//! Algebras are encoded by structure constants over arbitrary-precision
//! rationals. On top of that sit alternating forms with the
//! Chevalley–Eilenberg and twisted differentials, exact cohomology ranks,
//! invariant complex structures with their complex-subalgebra
//! correspondence, and the certification engine: Lee forms, Hermitian
//! metrics certified positive definite by Sylvester minors, Lee/Reeb
//! fields, Vaisman (Killing) verdicts, torus averaging as a zero-weight
//! projection, and the reductive existence classifier.
//!
//! Every verdict is a certificate: no floating point appears anywhere.

pub mod algebra;
pub mod catalog;
pub mod cohomology;
pub mod complex;
pub mod exterior;
pub mod gaussian;
pub mod lck;
pub mod linalg;
mod mpoly;
pub mod rational;

pub use algebra::{LieAlgebra, RankConfig, Subspace, Vector};
pub use catalog::{builtin, CatalogEntry};
pub use complex::{Branch, Endomorphism};
pub use exterior::KForm;
pub use gaussian::GaussianRational;
pub use lck::{CheckRecord, CheckStatus, CosetPresentation, LckCertificate};
pub use rational::Rational;
