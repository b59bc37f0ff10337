//! Exact localized torus-equivariant Hirzebruch `χ_y` classes of quadratic
//! cones, projective quadrics and their hyperplane-pair degenerations.
//!
//! * [`algebra`]: sparse Laurent polynomials over big rationals and rational
//!   expressions with factored `(1 - T^w)` denominators.
//! * [`torus`]: weight conventions for `C^n` and `P^{n-1}`.
//! * [`hirzebruch`]: localized classes built from h-factors and additivity.
//! * [`identities`]: pointwise verification of the degeneration formulas and
//!   `χ_y` integrals.
//! * [`positivity`]: nonnegative `δ, S_w` representations with exact
//!   round-trip checks.
//! * [`specialize`]: diagonal closed forms, CSM limits, multidegrees.
//! * [`suite`]: the numbered acceptance checks.
//! * [`cli`]: the `eck` command line.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod format;
pub mod hirzebruch;
pub mod identities;
pub mod positivity;
pub mod specialize;
pub mod suite;
pub mod torus;

pub use error::{Error, Result};
