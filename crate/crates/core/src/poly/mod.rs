//! The polynomial ring `GF(2)[e_1, .., e_n, x]`, Groebner bases, and
//! truncated graded quotient rings.

mod groebner;
mod monomial;
mod polynomial;
mod quotient;

pub use groebner::{buchberger, ideal_equal, reduce, reduce_basis};
pub use monomial::{Monomial, MAX_VARS};
pub use polynomial::{parse_poly, Gf2Poly, PolyDisplay, PolyRing};
pub use quotient::QuotientRing;
pub(crate) use quotient::combine_actions;
