//! Exact Levine-Tristram signatures, Alexander polynomials, nullities and
//! 4-genus bounds for knots and links given by braid words or Seifert matrices.

pub mod bounds;
pub mod braid;
pub mod catalog;
pub mod error;
pub mod factor;
pub mod hermitian;
pub mod input;
pub mod laurent;
pub mod matrix;
pub mod oracle;
pub mod poly;
pub mod quad;
pub mod roots;
pub mod scalar;
pub mod seifert;
pub mod signature;

pub use error::{Error, Result};

use num_bigint::BigInt;
use num_rational::BigRational;

pub type Rational = BigRational;
pub type IntPoly = poly::Poly<BigInt>;
pub type RatPoly = poly::Poly<BigRational>;
pub type IntLaurent = laurent::LaurentPoly<BigInt>;
pub type IntMatrix = matrix::Matrix<BigInt>;
