//! Exact constructions of the irreducible representations of the three-string braid
//! group quotients `Q_X`, where `g1` and `g2` satisfy `∏ (g - x) = 0` over `x ∈ X`.

pub mod analysis;
pub mod braidword;
pub mod cli;
pub mod error;
pub mod field;
pub mod linalg;
pub mod poly;
pub mod reps;
pub mod spectral;

pub use error::{Error, Result};
pub use field::{Context, FieldContext, FieldElement, Rational};
pub use linalg::Matrix;
pub use poly::Polynomial;
pub use reps::{build_rep, ParameterSet, RepSpec, Representation};
