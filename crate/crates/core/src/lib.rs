//! Quaternary Hermitian self-dual codes built from modified four
//! μ-circulant generator matrices: construction, verification, minimum
//! weight certification, equivalence testing, classification, Gleason-type
//! weight enumerators and the associated quantum code parameters.

pub mod circulant;
pub mod classifier;
pub mod code;
pub mod constructions;
pub mod equivalence;
pub mod error;
pub mod gf4;
pub mod gleason;
pub mod poly;
pub mod quantum;
pub mod reproduce;
pub mod scalar;
pub mod tables;
pub mod weight;

pub use circulant::{CirculantSpec, ShiftMatrix};
pub use code::LinearCode;
pub use error::{Error, Result};
pub use gf4::{Gf4, Gf4Matrix, Gf4Vector};
pub use poly::Poly;
pub use weight::{EnumerationBudget, Method, WeightReport};

/// Polynomials over GF(4), used for cyclic codes.
pub type Gf4Poly = Poly<Gf4>;
/// Integer polynomials, used for weight-enumerator basis expansions.
pub type IntPoly = Poly<num_bigint::BigInt>;
