//! The Specht module V_λ: polynomial oracle, sign-normalized column
//! tabloids, the Garnir relation, straightening to the standard basis, and
//! exact action matrices.

mod poly;
mod tabloid;
mod module;

pub use poly::{specht_polynomial, SpechtPolynomial};
pub use tabloid::{canonicalize, find_violation, ColumnTabloid, GarnirMove};
pub use module::{shared_module, SpechtModule, SpechtVector};
