//! Pointwise verification of the degeneration identities, and `χ_y` genera.
//!
//! Restriction to the fixed points is injective for the spaces involved, so
//! every identity is checked as an equality of localized values.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use num_traits::Zero;

use crate::algebra::{q, RatExpr, SparsePoly, DEFAULT_SEED, Q};
use crate::error::{Error, Result};
use crate::hirzebruch::{
    affine_any, cone_pushforward, degeneration_complement, hfactor, projective_any, AffineSpace, LocalClass, Point,
    ProjectiveSpace,
};
use crate::specialize::{closed_form, diagonalize};
use crate::torus::GeometryConfig;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FormulaId {
    Proj,
    Con,
    Dope,
    Expl,
    RemarkK,
    ClosedForm,
    MilnorDivY,
    BlowupConsistency,
}

impl FormulaId {
    pub const ALL: [FormulaId; 8] = [
        FormulaId::Proj,
        FormulaId::Con,
        FormulaId::Dope,
        FormulaId::Expl,
        FormulaId::RemarkK,
        FormulaId::ClosedForm,
        FormulaId::MilnorDivY,
        FormulaId::BlowupConsistency,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            FormulaId::Proj => "proj",
            FormulaId::Con => "con",
            FormulaId::Dope => "dope",
            FormulaId::Expl => "expl",
            FormulaId::RemarkK => "remark_k",
            FormulaId::ClosedForm => "closed_form",
            FormulaId::MilnorDivY => "milnor_div_y",
            FormulaId::BlowupConsistency => "blowup_consistency",
        }
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FormulaId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        FormulaId::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown formula '{s}'")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointCheck {
    pub point: String,
    pub equal: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub formula: FormulaId,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub per_point: Vec<PointCheck>,
    pub verified: bool,
    /// Holds only under the convention `Q_0 = ∅`.
    pub convention_dependent: bool,
    #[serde(skip)]
    pub timing_ms: f64,
}

/// Checks one identity with the default equality seed.
pub fn verify(formula: FormulaId, n: usize, k: Option<usize>) -> Result<VerificationReport> {
    verify_seeded(formula, n, k, DEFAULT_SEED)
}

pub fn verify_seeded(formula: FormulaId, n: usize, k: Option<usize>, seed: u64) -> Result<VerificationReport> {
    let start = Instant::now();
    let g = GeometryConfig::new(n)?;
    if formula == FormulaId::RemarkK && k.is_none() {
        return Err(Error::InvalidParameter("remark_k needs k".into()));
    }
    let cx = Checker {
        seed,
        checks: Vec::new(),
    };
    let checks = match formula {
        FormulaId::Proj => proj(&g, cx)?,
        FormulaId::Con => con(&g, cx)?,
        FormulaId::Dope => dope(&g, cx)?,
        FormulaId::Expl => expl(&g, cx)?,
        FormulaId::RemarkK => remark_k(&g, k.unwrap(), cx)?,
        FormulaId::ClosedForm => closed(&g, cx)?,
        FormulaId::MilnorDivY => milnor(&g, cx)?,
        FormulaId::BlowupConsistency => blowup(&g, cx)?,
    };
    Ok(VerificationReport {
        formula,
        n,
        k: if formula == FormulaId::RemarkK { k } else { None },
        verified: checks.iter().all(|c| c.equal),
        per_point: checks,
        convention_dependent: formula == FormulaId::Proj && n == 2,
        timing_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

/// Runs independent verifications in parallel; results keep the input order.
pub fn verify_many(jobs: &[(FormulaId, usize, Option<usize>)], seed: u64) -> Vec<Result<VerificationReport>> {
    jobs.par_iter().map(|&(f, n, k)| verify_seeded(f, n, k, seed)).collect()
}

struct Checker {
    seed: u64,
    checks: Vec<PointCheck>,
}

impl Checker {
    fn check(&mut self, label: impl Into<String>, lhs: &RatExpr, rhs: &RatExpr) {
        let equal = lhs.equals_seeded(rhs, self.seed);
        self.checks.push(PointCheck {
            point: label.into(),
            equal,
        });
    }

    fn done(self) -> Result<Vec<PointCheck>> {
        Ok(self.checks)
    }
}

fn y_times(r: &RatExpr) -> RatExpr {
    r.mul_poly(&SparsePoly::y(r.arity()))
}

fn proj_class(kind: ProjectiveSpace, g: &GeometryConfig) -> Result<LocalClass> {
    projective_any(kind, g)
}

/// Value of a class on `P^{n-3}` at a fixed point of `P^{n-1}`; zero at `p_{±m}`.
fn lower_value(lower: &LocalClass, i: i32, arity: usize) -> RatExpr {
    lower
        .at(Point::Fixed(i))
        .map(|v| v.padded(arity))
        .unwrap_or_else(|| RatExpr::zero(arity))
}

fn proj(g: &GeometryConfig, mut cx: Checker) -> Result<Vec<PointCheck>> {
    let a = g.arity();
    let xc = proj_class(ProjectiveSpace::Xc, g)?;
    let qc = proj_class(ProjectiveSpace::Qc, g)?;
    let qq = proj_class(ProjectiveSpace::Q, g)?;
    let xx = proj_class(ProjectiveSpace::X, g)?;
    let low = projective_any(ProjectiveSpace::Qc, &GeometryConfig::any(g.n() - 2))?;
    for &i in g.indices() {
        let p = Point::Fixed(i);
        let rhs = y_times(&lower_value(&low, i, a));
        let open = xc.at(p).unwrap() - qc.at(p).unwrap();
        let closed = qq.at(p).unwrap() - xx.at(p).unwrap();
        cx.check(format!("{p}: Xc - Qc"), &open, &rhs);
        cx.check(format!("{p}: Q - X"), &closed, &rhs);
    }
    cx.done()
}

/// `CCQ_{n'}` on the coordinates of `C^{n'}` via the blowup of the origin.
fn ccq_pushforward(n: usize, arity: usize) -> Result<RatExpr> {
    let g = GeometryConfig::any(n);
    let qc = projective_any(ProjectiveSpace::Qc, &g)?;
    Ok(cone_pushforward(&qc, n)?.padded(arity))
}

fn origin_value(kind: AffineSpace, g: &GeometryConfig) -> Result<RatExpr> {
    Ok(affine_any(kind, g)?.origin().unwrap().clone())
}

fn con(g: &GeometryConfig, mut cx: Checker) -> Result<Vec<PointCheck>> {
    let a = g.arity();
    let ccx = origin_value(AffineSpace::CCX, g)?;
    let ccq = ccq_pushforward(g.n(), a)?;
    let rhs = y_times(&ccq_pushforward(g.n() - 2, a)?);
    cx.check("origin", &(&ccx - &ccq), &rhs);
    cx.done()
}

fn dope(g: &GeometryConfig, mut cx: Checker) -> Result<Vec<PointCheck>> {
    let a = g.arity();
    let cn = origin_value(AffineSpace::Cn, g)?;
    let cq = &cn - &ccq_pushforward(g.n(), a)?;
    let cx_ = origin_value(AffineSpace::CX, g)?;
    let low = GeometryConfig::any(g.n() - 2);
    let rest = &origin_value(AffineSpace::Cn, &low)? - &origin_value(AffineSpace::CQ, &low)?;
    cx.check("origin", &(&cq - &cx_), &y_times(&rest.padded(a)));
    cx.done()
}

/// `CQ_{n'}` inside `C^n` built by additivity alone:
/// `CQ_{n'} = -y CQ_{n'-2} + C^{n'-2} (h_a + h_b - 1 + y)` with `a, b = t ± t_{m'}`.
fn cq_additive(g: &GeometryConfig, n: usize) -> Result<RatExpr> {
    let a = g.arity();
    if n < 2 {
        return Ok(RatExpr::one(a));
    }
    let low = GeometryConfig::any(n - 2);
    let c_low = origin_value(AffineSpace::Cn, &low)?.padded(a);
    let top = (n / 2) as i32;
    let ha = hfactor(&g.coordinate_weight(top))?;
    let hb = hfactor(&g.coordinate_weight(-top))?;
    let one = RatExpr::one(a);
    let y = RatExpr::from_poly(SparsePoly::y(a));
    let bracket = &(&(&ha + &hb) - &one) + &y;
    let prev = cq_additive(g, n - 2)?;
    Ok(&(&c_low * &bracket) - &y_times(&prev))
}

fn expl(g: &GeometryConfig, mut cx: Checker) -> Result<Vec<PointCheck>> {
    let a = g.arity();
    let ccq = origin_value(AffineSpace::CCQ, g)?;
    let cn = origin_value(AffineSpace::Cn, g)?;
    cx.check("origin", &ccq, &(&cn - &cq_additive(g, g.n())?));
    // h_a + h_b - 1 + y = -(1+y)(T^2 - 1) / ((1 - T T_m^{-1})(1 - T T_m))
    let top = g.m() as i32;
    let (wa, wb) = (g.coordinate_weight(top), g.coordinate_weight(-top));
    let lhs = &(&(&hfactor(&wa)? + &hfactor(&wb)?) - &RatExpr::one(a)) + &RatExpr::from_poly(SparsePoly::y(a));
    let one = SparsePoly::one(a);
    let one_y = &one + &SparsePoly::y(a);
    let t2 = SparsePoly::t_mono(&g.t().scale(2));
    let num = -&(&one_y * &(&t2 - &one));
    cx.check("origin: bracket", &lhs, &RatExpr::new(num, [wa, wb])?);
    cx.done()
}

fn remark_k(g: &GeometryConfig, k: usize, mut cx: Checker) -> Result<Vec<PointCheck>> {
    let a = g.arity();
    let ystar = degeneration_complement(g.n(), k)?.value;
    let ccq = ccq_pushforward(g.n(), a)?;
    let low_n = 2 * k + g.is_odd() as usize;
    let sign = SparsePoly::y(a).scale(&q(-1)).pow((g.m() - k) as u32);
    let rhs = ccq_pushforward(low_n, a)?.mul_poly(&sign);
    cx.check("origin", &(&ccq - &ystar), &rhs);
    cx.done()
}

fn closed(g: &GeometryConfig, mut cx: Checker) -> Result<Vec<PointCheck>> {
    let diag = diagonalize(&affine_any(AffineSpace::CCQ, g)?)?;
    cx.check("origin (diagonal)", &diag, &closed_form(g.n())?);
    cx.done()
}

fn milnor(g: &GeometryConfig, mut cx: Checker) -> Result<Vec<PointCheck>> {
    let a = g.arity();
    let zero = RatExpr::zero(a);
    let qq = proj_class(ProjectiveSpace::Q, g)?;
    let xx = proj_class(ProjectiveSpace::X, g)?;
    for &i in g.indices() {
        let p = Point::Fixed(i);
        let diff = (qq.at(p).unwrap() - xx.at(p).unwrap()).subs_y(&Q::zero());
        cx.check(format!("{p}: (Q - X)|y=0"), &diff, &zero);
    }
    let cq = &origin_value(AffineSpace::Cn, g)? - &ccq_pushforward(g.n(), a)?;
    let diff = (&cq - &origin_value(AffineSpace::CX, g)?).subs_y(&Q::zero());
    cx.check("origin: (CQ - CX)|y=0", &diff, &zero);
    cx.done()
}

fn blowup(g: &GeometryConfig, mut cx: Checker) -> Result<Vec<PointCheck>> {
    for (p, c) in [
        (ProjectiveSpace::Qc, AffineSpace::CCQ),
        (ProjectiveSpace::Xc, AffineSpace::CCX),
    ] {
        let push = cone_pushforward(&proj_class(p, g)?, g.n())?;
        cx.check(format!("origin: {c}"), &push, &origin_value(c, g)?);
    }
    cx.done()
}

/// `χ_y` genus: the sum of the localized values, which must be a polynomial
/// in `y` alone.
pub fn integrate_projective(c: &LocalClass) -> Result<SparsePoly> {
    if !c.is_projective() {
        return Err(Error::InvalidParameter(format!(
            "integration needs a projective class, got {}",
            c.space
        )));
    }
    let a = c.geometry.arity();
    let mut acc = RatExpr::zero(a);
    for v in &c.values {
        acc = acc.checked_add(&v.value)?;
    }
    let r = acc.reduce();
    match r.as_poly() {
        Some(p) if p.y_coefficients().is_some() => Ok(p.clone()),
        _ => Err(Error::ResidualTDependence),
    }
}

/// Coefficients of `χ_y` in increasing powers of `y`.
pub fn chi_y(kind: ProjectiveSpace, n: usize) -> Result<Vec<Q>> {
    let c = crate::hirzebruch::projective_class(kind, n)?;
    Ok(integrate_projective(&c)?.y_coefficients().unwrap())
}
