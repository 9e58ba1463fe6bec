//! Finite-field arithmetic and the polynomial and matrix utilities built on it.

pub mod embed;
pub mod field;
pub mod linalg;
pub mod parse;
pub mod poly;

pub use embed::Embedding;
pub use field::{Field, FieldElem};
pub use linalg::Mat;
pub use parse::{parse_coords, parse_field_spec, parse_scalar};
pub use poly::UniPoly;
