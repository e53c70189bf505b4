//! Exact computation with Specht modules of the symmetric group:
//! standard bases via Garnir straightening, characters and exterior-power
//! density, and construction + verification of non-thickness certificates.

pub mod error;
pub mod symcomb;
pub mod exactla;
pub mod specht;
pub mod density;
pub mod thickness;

pub use error::{Error, Result};
pub use symcomb::{Partition, CycleType, Permutation, Tableau, SkewShape};
pub use exactla::{ExactMatrix, Subspace};
pub use specht::{ColumnTabloid, SpechtModule, SpechtPolynomial, SpechtVector};
pub use density::CharacterVector;
pub use thickness::{CoverDesign, DiagramBounds, NonThickCertificate, VerificationReport};
