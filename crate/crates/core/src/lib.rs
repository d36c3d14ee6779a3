//! Exact-arithmetic toolkit for homogeneous Lagrangian orbit geometry in
//! complex projective space.

pub mod builtin;
pub mod error;
pub mod linalg;
pub mod orbit;
pub mod rep;
pub mod scalar;

pub use error::{Error, Result};
pub use linalg::Matrix;
pub use orbit::{OrbitReport, TangentFrame};
pub use rep::{GroupElement, LieAlgebraElement, Monomial, RepSpace, RepVector};
pub use scalar::{Rational, Scalar};
