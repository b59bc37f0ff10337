//! Exact arithmetic kernel.
//!
//! [`SparsePoly`] is a Laurent polynomial in the torus variables `T^w` and a
//! polynomial in `y`, over arbitrary-precision rationals. [`RatExpr`] keeps a
//! numerator over a factored denominator `∏ (1 - T^w)`; no multivariate gcd
//! is ever taken, and equality is decided by cross-multiplication.

mod character;
mod poly;
mod ratexpr;

pub use character::Character;
pub(crate) use poly::pow_q;
pub use poly::{poly_arith, poly_div_exact, q, qf, ArithOp, Monomial, SparsePoly, Q};
pub use ratexpr::{
    ratexpr_arith, ratexpr_equal, reduce, substitute, EvalPoint, LatticeMap, RatExpr, Substituted, Substitution,
    DEFAULT_SEED,
};
