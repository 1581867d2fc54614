//! Exact computer algebra for reduced plane projective curves.
//!
//! Given a homogeneous polynomial f in x, y, z over Q or a prime field,
//! this crate computes the module of Jacobian syzygies with its minimal
//! generators and exponents, the determinant-pairing ideal, second-order
//! syzygies with their signed maximal minors and the resulting Fitting
//! ideal, Hilbert series, the Tjurina number and the graded invariants of
//! the Jacobian module, and classifies the curve (free, nearly free,
//! plus-one generated, 3-syzygy, maximal Tjurina).

pub mod audit;
pub mod classify;
pub mod curve;
pub mod error;
pub mod field;
pub mod groebner;
pub mod hilbert;
pub mod matrix;
pub mod monomial;
pub mod parser;
pub mod poly;

pub use error::{Error, Result};
pub use field::{Field, FieldSpec, PrimeField, Rationals, DEFAULT_PRIME};
pub use groebner::{GradedSubmodule, GroebnerBasis, ModuleElement};
pub use hilbert::HilbertData;
pub use monomial::Monomial;
pub use parser::parse_polynomial;
pub use poly::{partial_derivatives, Poly};
