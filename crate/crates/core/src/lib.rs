//! Exact decision procedures for real stability of bivariate polynomials.
//!
//! A nonzero `p(x, y)` with rational coefficients is real stable exactly when
//! the one-parameter family `t -> p(γ + t, t)` is real-rooted for every real
//! `γ` and the top homogeneous form, restricted to the segment between the
//! two axis directions and normalized to be nonnegative at its midpoint, has
//! no zero in the open segment. Both conditions are decided here with
//! exact rational arithmetic, and every negative verdict carries a witness
//! that can be checked independently.
//!
//! The family condition is reduced to univariate nonnegativity in two ways:
//! through subdiscriminants computed by a subresultant remainder sequence
//! ([`fastrr`]), and through elementary symmetric functions of scaled Hankel
//! moment matrices ([`simplerr`]). Nonnegativity and root counting live in
//! [`univar`].

pub mod bipoly;
mod error;
pub mod family;
pub mod fastrr;
pub mod interp;
pub mod matrix;
pub mod operators;
pub mod ops;
pub mod poly;
pub mod rat;
pub mod simplerr;
pub mod stability;
pub mod univar;

pub use bipoly::BiPoly;
pub use error::{Error, Result};
pub use family::{edge_restriction, shift_substitute, specialize, ParamPoly};
pub use interp::{interpolate, Interpolator};
pub use matrix::RatMatrix;
pub use poly::{derivative, eval, gcd, UniPoly};
pub use rat::Rat;
pub use stability::{is_real_stable, Algorithm, StabilityVerdict, Witness};
