//! Exact symplectic multilinear algebra on `V = H_1(X; Q)` of a closed oriented
//! surface of genus `g`.
//!
//! The crate covers the splitting `∧³V = ∧³ₒV ⊕ δ∧V`, the invariant pairings
//! `ω₃`, `q` and `Φ`, Johnson elements of subsurfaces and bounding pairs, and a
//! weight-graded model of the `𝔖₃`-invariant third homology of the
//! three-point configuration space on which the Torelli group acts
//! unipotently.
//!
//! Every coefficient is an arbitrary-precision rational, so all identities
//! are checked by exact equality.
//!
//! ```
//! use torelli::{fixtures, h3::{variation, TorelliParams}};
//!
//! let fig = fixtures::figure_one();
//! let var = variation(&fig.bounding_pair, &fig.top, &TorelliParams::default()).unwrap();
//! assert_eq!(var.sym2().to_string(), "a2·a3");
//! ```

pub mod error;
pub mod exterior;
pub mod fixtures;
pub mod forms;
pub mod h3;
pub mod johnson;
pub mod linalg;
pub mod report;
pub mod sample;
pub mod text;

pub use error::{Error, Result};
pub use exterior::{Multivector, Sym2, SymplecticSpace, Vector};
pub use forms::{omega3, phi, q2, Transvection};
pub use h3::{act, dimension_audit, lift_tube, variation, GradedH3Element, TorelliParams};
pub use johnson::{bounding_pair_action_on_v, johnson_bp, johnson_element, BoundingPairSpec, SubsurfaceSpec};
pub use linalg::LinearMap;

/// Exact rational scalar used for every coefficient.
pub type Rational = num_rational::BigRational;

/// Shorthand for the rational `num / den`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

/// Shorthand for the integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
