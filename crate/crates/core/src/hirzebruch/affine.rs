use super::{AffineSpace, Factor, HExpr, LocalClass, LocalValue, Point, Space};
use crate::algebra::{RatExpr, SparsePoly};
use crate::error::{Error, Result};
use crate::hirzebruch::reduced_hfactor;
use crate::torus::GeometryConfig;

/// Localized class at the origin of `C^n`.
///
/// `CCX` is `(h(T T_m) - 1)(h(T T_m^{-1}) - 1) ∏_{0<j<m} h(T T_j) h(T T_j^{-1})`,
/// times `h(T)` for odd `n`. `CCQ` is `Σ_{k<m} (-y)^k CCX_{n-2k}`, plus
/// `(-y)^m (h(T) - 1)` for odd `n`. Closed spaces are complements in `C^n`.
/// Conventions: `CCQ_0 = ∅`, `C^0` is a point.
pub fn affine_class(kind: AffineSpace, n: usize) -> Result<LocalClass> {
    if n < 2 && !matches!(kind, AffineSpace::Cn | AffineSpace::Cstar) {
        return Err(Error::InvalidDimension {
            n,
            reason: "quadric cones need n >= 2",
        });
    }
    affine_any(kind, &GeometryConfig::any(n))
}

pub(crate) fn affine_any(kind: AffineSpace, g: &GeometryConfig) -> Result<LocalClass> {
    let pairs: Vec<i32> = (1..=g.m() as i32).collect();
    let zero = g.is_odd();
    let cn = || affine_space(g, g.indices());
    let expr = match kind {
        AffineSpace::Cn => cn(),
        AffineSpace::Cstar if g.n() == 1 => HExpr::product(g.arity(), vec![Factor::Reduced(g.t())]),
        AffineSpace::Cstar => cn().minus(HExpr::one(g.arity())),
        AffineSpace::CCX => pair_complement(g, &pairs, zero)?,
        AffineSpace::CX => cn().minus(pair_complement(g, &pairs, zero)?),
        AffineSpace::CCQ => pair_cone_complement(g, &pairs, zero),
        AffineSpace::CQ => cn().minus(pair_cone_complement(g, &pairs, zero)),
    };
    let value = expr.to_rat()?;
    Ok(LocalClass {
        geometry: g.clone(),
        space: Space::Affine(kind),
        values: vec![LocalValue {
            point: Point::Origin,
            expr,
            value,
        }],
    })
}

/// `∏ h(T^{t + t_j})` over the given coordinates.
pub(crate) fn affine_space(g: &GeometryConfig, coords: &[i32]) -> HExpr {
    HExpr::product(
        g.arity(),
        coords.iter().map(|&j| Factor::H(g.coordinate_weight(j))).collect(),
    )
}

/// Complement of `{x_{-top} x_top = 0}` in the coordinate space spanned by
/// the pairs `±pairs` (and `x_0` when `zero`), with `top` the last pair.
fn pair_complement(g: &GeometryConfig, pairs: &[i32], zero: bool) -> Result<HExpr> {
    let (&top, rest) = pairs.split_last().ok_or(Error::InvalidDimension {
        n: g.n(),
        reason: "hyperplane pair needs n >= 2",
    })?;
    let mut factors = Vec::with_capacity(2 * pairs.len() + 1);
    if zero {
        factors.push(Factor::H(g.t()));
    }
    factors.push(Factor::Reduced(g.coordinate_weight(top)));
    factors.push(Factor::Reduced(g.coordinate_weight(-top)));
    for &j in rest {
        factors.push(Factor::H(g.coordinate_weight(j)));
        factors.push(Factor::H(g.coordinate_weight(-j)));
    }
    Ok(HExpr::product(g.arity(), factors))
}

/// Complement of the quadratic cone `Σ_{j ∈ pairs} x_{-j} x_j (+ x_0^2) = 0`
/// in the coordinate space it lives in, peeling pairs from the top.
fn pair_cone_complement(g: &GeometryConfig, pairs: &[i32], zero: bool) -> HExpr {
    let a = g.arity();
    let minus_y = -SparsePoly::y(a);
    let mut acc = HExpr::zero(a);
    let mut weight = SparsePoly::one(a);
    for len in (1..=pairs.len()).rev() {
        let term = pair_complement(g, &pairs[..len], zero).expect("nonempty pairs");
        acc = acc.plus(term.scaled(&weight));
        weight = &weight * &minus_y;
    }
    if zero {
        acc = acc.plus(HExpr::product(a, vec![Factor::Reduced(g.t())]).scaled(&weight));
    }
    acc
}

/// Complement `Y^*` of the special fibre `Σ_{i>k} x_{-i} x_i = 0` of the
/// degeneration that scales the first `k` pairs (and `x_0`) by `λ`:
/// the coordinates `±1..±k` (and `x_0`) stay free, the remaining pairs carry
/// a smaller cone complement.
pub fn degeneration_complement(n: usize, k: usize) -> Result<LocalValue> {
    let g = GeometryConfig::new(n)?;
    if k >= g.m() {
        return Err(Error::InvalidParameter(format!(
            "k = {k} must satisfy k <= m - 1 = {}",
            g.m() as i64 - 1
        )));
    }
    let k = k as i32;
    let mut free: Vec<i32> = g.indices().iter().copied().filter(|j| j.abs() <= k).collect();
    free.sort_by_key(|&j| (j.abs(), -j));
    let upper: Vec<i32> = (k + 1..=g.m() as i32).collect();
    let expr = affine_space(&g, &free).times(&pair_cone_complement(&g, &upper, false));
    let value = expr.to_rat()?;
    Ok(LocalValue {
        point: Point::Origin,
        expr,
        value,
    })
}

/// Pushes a projective class through the blowup of the origin.
///
/// The blowup is the total space of `O(-1)` over `P^{n-1}`; its fixed points
/// are the `p_i` on the exceptional divisor, with extra tangent weight
/// `t + t_i` along the fibre. Removing the zero section turns that h-factor
/// into `h - 1`, and summing over the fibre of the origin gives
/// `Σ_i (h(T^{t + t_i}) - 1) · c(p_i)`.
pub fn cone_pushforward(proj: &LocalClass, n: usize) -> Result<RatExpr> {
    if !proj.is_projective() || proj.geometry.n() != n {
        return Err(Error::InvalidParameter(format!(
            "pushforward to C^{n} needs a projective class over P^{}, got {} over n = {}",
            n as i64 - 1,
            proj.space,
            proj.geometry.n()
        )));
    }
    let g = &proj.geometry;
    let mut acc = RatExpr::zero(g.arity());
    for v in &proj.values {
        let Point::Fixed(i) = v.point else { continue };
        if v.value.is_zero() {
            continue;
        }
        let fibre = reduced_hfactor(&g.coordinate_weight(i))?;
        acc = acc.checked_add(&fibre.checked_mul(&v.value)?)?;
    }
    Ok(acc)
}
