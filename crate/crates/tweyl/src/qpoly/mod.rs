//! Exact scalar and polynomial arithmetic.
//!
//! Everything downstream (lattice weights, commutation-equation checks,
//! normal forms, module matrices) reduces to computations in `Q`, `Q[u]`,
//! and `Q(u)`; this module is that foundation.  All representations are
//! canonical so that `==` is semantic equality throughout.

mod arith;
mod bezout;
mod io;
mod poly;
mod rat;
mod ratfunc;
mod roots;

pub use bezout::bezout;
pub use io::{poly_from_json, poly_to_json, PolyFileError};
pub use poly::Poly;
pub use rat::{ParseRatError, Rat};
pub use ratfunc::RatFunc;
pub use roots::{roots_rational, RootMultiset};

/// Errors from polynomial-level operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QPolyError {
    /// Vanishing order of the zero function is undefined.
    #[error("vanishing order of the zero function is undefined")]
    ZeroFunction,
    /// The polynomial has a factor with no rational roots.
    #[error("polynomial does not split over the rationals; residual factor {residual}")]
    IrrationalRoots { residual: Poly },
}
