//! Localized equivariant Hirzebruch classes.
//!
//! A localized class is the restriction of `td_y^T(Y → M)` to a fixed point
//! divided by the Euler class of the ambient tangent representation there.
//! Smooth germs contribute one h-factor per tangent weight; singular and open
//! spaces are assembled by additivity (inclusion–exclusion and complements).
//! Classes of closed subvarieties are stored as 0 at fixed points they miss,
//! so every projective class is a total map over the fixed points of
//! `P^{n-1}`.

mod affine;
mod hexpr;
mod projective;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

pub(crate) use affine::affine_any;
pub use affine::{affine_class, cone_pushforward, degeneration_complement};
pub use hexpr::{hfactor, reduced_hfactor, smooth_local, Factor, HExpr, Product};
pub(crate) use projective::projective_any;
pub use projective::projective_class;

use crate::algebra::RatExpr;
use crate::error::Error;
use crate::torus::GeometryConfig;

/// Spaces living in `P^{n-1}`: the ambient space, the quadric `Q_n`, the
/// hyperplane pair `X_n = {x_{-m} x_m = 0}`, and their complements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ProjectiveSpace {
    P,
    Q,
    X,
    Qc,
    Xc,
}

/// Spaces living in `C^n`: the ambient space, the cone `CQ_n`, the
/// hyperplane pair `CX_n`, their complements, and `C^n \ {0}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum AffineSpace {
    Cn,
    CQ,
    CX,
    CCQ,
    CCX,
    Cstar,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(untagged)]
pub enum Space {
    Projective(ProjectiveSpace),
    Affine(AffineSpace),
}

impl Space {
    pub const ALL: [Space; 11] = [
        Space::Projective(ProjectiveSpace::P),
        Space::Projective(ProjectiveSpace::Q),
        Space::Projective(ProjectiveSpace::X),
        Space::Projective(ProjectiveSpace::Qc),
        Space::Projective(ProjectiveSpace::Xc),
        Space::Affine(AffineSpace::Cn),
        Space::Affine(AffineSpace::CQ),
        Space::Affine(AffineSpace::CX),
        Space::Affine(AffineSpace::CCQ),
        Space::Affine(AffineSpace::CCX),
        Space::Affine(AffineSpace::Cstar),
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Space::Projective(ProjectiveSpace::P) => "P",
            Space::Projective(ProjectiveSpace::Q) => "Q",
            Space::Projective(ProjectiveSpace::X) => "X",
            Space::Projective(ProjectiveSpace::Qc) => "Qc",
            Space::Projective(ProjectiveSpace::Xc) => "Xc",
            Space::Affine(AffineSpace::Cn) => "Cn",
            Space::Affine(AffineSpace::CQ) => "CQ",
            Space::Affine(AffineSpace::CX) => "CX",
            Space::Affine(AffineSpace::CCQ) => "CCQ",
            Space::Affine(AffineSpace::CCX) => "CCX",
            Space::Affine(AffineSpace::Cstar) => "Cstar",
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Display for ProjectiveSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Space::Projective(*self).fmt(f)
    }
}

impl fmt::Display for AffineSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Space::Affine(*self).fmt(f)
    }
}

impl FromStr for Space {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Space::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown space '{s}'")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Point {
    Fixed(i32),
    Origin,
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Fixed(i) => write!(f, "p_{i}"),
            Point::Origin => f.write_str("origin"),
        }
    }
}

impl Serialize for Point {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LocalValue {
    pub point: Point,
    pub expr: HExpr,
    pub value: RatExpr,
}

/// A localized class: one value per fixed point of `P^{n-1}`, or a single
/// value at the origin of `C^n`.
#[derive(Clone, Debug, PartialEq)]
pub struct LocalClass {
    pub geometry: GeometryConfig,
    pub space: Space,
    pub values: Vec<LocalValue>,
}

impl LocalClass {
    pub fn is_projective(&self) -> bool {
        matches!(self.space, Space::Projective(_))
    }

    pub fn at(&self, point: Point) -> Option<&RatExpr> {
        self.values.iter().find(|v| v.point == point).map(|v| &v.value)
    }

    /// Value at the origin of an affine class.
    pub fn origin(&self) -> Option<&RatExpr> {
        self.at(Point::Origin)
    }
}
