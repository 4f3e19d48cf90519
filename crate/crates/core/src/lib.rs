//! Exact computations with symbol systems of symmetric forms and the
//! projective varieties they determine.
//!
//! Everything is over `Q`. Homogeneous polynomials stand for symmetric
//! multilinear forms, subspaces of forms are kept in reduced echelon form,
//! and the base-locus questions go through a small Gröbner engine.

pub mod error;
pub mod forms;
pub mod groebner;
pub mod linalg;
pub mod model;
pub mod order;
pub mod poly;
pub mod sample;
pub mod scalar;
pub mod space;
pub mod symbol;
pub mod text;

pub use error::{Error, Result};
pub use forms::{FFSystem, Parametrization};
pub use groebner::{GroebnerBasis, GroebnerConfig};
pub use model::{EulerModel, ProjectivePoint};
pub use order::MonomialOrder;
pub use poly::{Monomial, Polynomial, VarContext, Vector};
pub use scalar::Scalar;
pub use space::FormSpace;
pub use symbol::{prolong, SymbolSystem, Violation};
