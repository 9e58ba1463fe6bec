//! Orbits of `PGL(2, q)` on the points, lines and planes of `PG(3, q)`
//! relative to the twisted cubic.
//!
//! Lines are handled through the Klein quadric as pairs `(phi_L, z5)` of a
//! binary quartic and a scalar. The number of points of each point orbit on
//! a generic line is computed from the rational roots of `phi_L` and the
//! number of points of an elliptic curve `E_L`. Every formula has a brute
//! force counterpart, and [`census`] compares the two over whole orbits.
//!
//! ```
//! use twisted_cubic::algebra::Field;
//! use twisted_cubic::incidence::{brute_decompose, decompose};
//! use twisted_cubic::klein::Line;
//!
//! let f = Field::prime(7)?;
//! let l = Line::from_ints(&f, [0, 0, 1, 0, 0, 1])?;
//! assert_eq!(decompose(&l)?.counts, brute_decompose(&l).counts);
//! # Ok::<(), twisted_cubic::Error>(())
//! ```

pub mod algebra;
pub mod census;
pub mod elliptic;
pub mod error;
pub mod forms;
pub mod identities;
pub mod incidence;
pub mod klein;

pub use error::{Error, Result};

#[cfg(doctest)]
pub mod book {
    #[doc = include_str!("../../../README.md")]
    pub struct Readme;
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub struct Introduction;
    #[doc = include_str!("../../../book/src/fields.md")]
    pub struct Fields;
    #[doc = include_str!("../../../book/src/forms.md")]
    pub struct Forms;
    #[doc = include_str!("../../../book/src/lines.md")]
    pub struct Lines;
    #[doc = include_str!("../../../book/src/incidence.md")]
    pub struct Incidence;
    #[doc = include_str!("../../../book/src/elliptic.md")]
    pub struct Elliptic;
    #[doc = include_str!("../../../book/src/census.md")]
    pub struct Census;
    #[doc = include_str!("../../../book/src/cli.md")]
    pub struct Cli;
}
