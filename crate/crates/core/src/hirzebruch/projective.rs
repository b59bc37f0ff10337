use super::{Factor, HExpr, LocalClass, LocalValue, Point, ProjectiveSpace, Space};
use crate::algebra::Character;
use crate::error::{Error, Result};
use crate::torus::GeometryConfig;

/// Localized class of `kind` at every fixed point of `P^{n-1}`.
///
/// `P` is the tangent product. `Qc` follows the quadric-complement formula:
/// at `p_i` on the quadric it is `(h(T^{-2t_i}) - 1)` times the h-factors of
/// the remaining tangent weights, off the quadric (only `p_0`, odd `n`) it
/// equals `P`. `Q = P - Qc`. `X` is inclusion–exclusion of the coordinate
/// hyperplanes `{x_m = 0}`, `{x_{-m} = 0}` and their intersection, and
/// `Xc = P - X`.
///
/// For odd `n` the localized class of `Q` at `p_i`, `i ≠ 0`, comes out as the
/// tangent product over all `t_j - t_i` with `j ≠ ±i`, which includes the
/// factor `h(T_i^{-1})` from the direction `x_0`.
pub fn projective_class(kind: ProjectiveSpace, n: usize) -> Result<LocalClass> {
    let g = GeometryConfig::new(n)?;
    projective_any(kind, &g)
}

pub(crate) fn projective_any(kind: ProjectiveSpace, g: &GeometryConfig) -> Result<LocalClass> {
    if matches!(kind, ProjectiveSpace::X | ProjectiveSpace::Xc) && g.m() == 0 {
        return Err(Error::InvalidDimension {
            n: g.n(),
            reason: "hyperplane pair needs n >= 2",
        });
    }
    let values = g
        .indices()
        .iter()
        .map(|&i| {
            let expr = local_expr(kind, g, i);
            Ok(LocalValue {
                point: Point::Fixed(i),
                value: expr.to_rat()?,
                expr,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LocalClass {
        geometry: g.clone(),
        space: Space::Projective(kind),
        values,
    })
}

fn local_expr(kind: ProjectiveSpace, g: &GeometryConfig, i: i32) -> HExpr {
    match kind {
        ProjectiveSpace::P => ambient(g, i),
        ProjectiveSpace::Qc => quadric_complement(g, i),
        ProjectiveSpace::Q => ambient(g, i).minus(quadric_complement(g, i)),
        ProjectiveSpace::X => hyperplane_pair(g, i),
        ProjectiveSpace::Xc => ambient(g, i).minus(hyperplane_pair(g, i)),
    }
}

fn ambient(g: &GeometryConfig, i: i32) -> HExpr {
    HExpr::product(g.arity(), g.tangent_weights(i).into_iter().map(Factor::H).collect())
}

/// Tangent product of the coordinate subspace `{x_j = 0 : j ∈ cut}` at `p_i`;
/// zero when `p_i` is not on it.
fn coordinate_subspace(g: &GeometryConfig, i: i32, cut: &[i32]) -> HExpr {
    if cut.contains(&i) {
        return HExpr::zero(g.arity());
    }
    let ti = g.t_index(i);
    let normal: Vec<Character> = cut.iter().map(|&j| &g.t_index(j) - &ti).collect();
    let factors = g
        .tangent_weights(i)
        .into_iter()
        .filter(|w| !normal.contains(w))
        .map(Factor::H)
        .collect();
    HExpr::product(g.arity(), factors)
}

fn quadric_complement(g: &GeometryConfig, i: i32) -> HExpr {
    // p_0 is not on the quadric: x_0^2 = 1 there.
    if i == 0 {
        return ambient(g, i);
    }
    let normal = &g.t_index(-i) - &g.t_index(i);
    let mut factors = vec![Factor::Reduced(normal.clone())];
    factors.extend(g.tangent_weights(i).into_iter().filter(|w| *w != normal).map(Factor::H));
    HExpr::product(g.arity(), factors)
}

fn hyperplane_pair(g: &GeometryConfig, i: i32) -> HExpr {
    let m = g.m() as i32;
    coordinate_subspace(g, i, &[m])
        .plus(coordinate_subspace(g, i, &[-m]))
        .minus(coordinate_subspace(g, i, &[m, -m]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{q, RatExpr};
    use crate::hirzebruch::{hfactor, smooth_local};

    fn ch(e: &[i32]) -> Character {
        Character::from_slice(e)
    }

    fn h(e: &[i32]) -> RatExpr {
        hfactor(&ch(e)).unwrap()
    }

    fn hm1(e: &[i32]) -> RatExpr {
        &h(e) - &RatExpr::one(e.len())
    }

    #[test]
    fn quadric_complement_bullet_n4() {
        // (h(T_1^-2) - 1) h(T_2 T_1^-1) h(T_2^-1 T_1^-1)
        let c = projective_class(ProjectiveSpace::Qc, 4).unwrap();
        let expect = &(&hm1(&[0, -2, 0]) * &h(&[0, -1, 1])) * &h(&[0, -1, -1]);
        assert!(c.at(Point::Fixed(1)).unwrap().equals(&expect));
    }

    #[test]
    fn hyperplane_complement_bullets_n4() {
        let c = projective_class(ProjectiveSpace::Xc, 4).unwrap();
        // |i| < m: h(T_1^-2) (h(T_2 T_1^-1) - 1)(h(T_2^-1 T_1^-1) - 1)
        let inner = &(&h(&[0, -2, 0]) * &hm1(&[0, -1, 1])) * &hm1(&[0, -1, -1]);
        assert!(c.at(Point::Fixed(1)).unwrap().equals(&inner));
        // |i| = m: (h(T_2^-2) - 1) h(T_1 T_2^-1) h(T_1^-1 T_2^-1)
        let outer = &(&hm1(&[0, 0, -2]) * &h(&[0, 1, -1])) * &h(&[0, -1, -1]);
        assert!(c.at(Point::Fixed(2)).unwrap().equals(&outer));
    }

    #[test]
    fn two_point_quadric_in_p1() {
        let c = projective_class(ProjectiveSpace::Q, 2).unwrap();
        for v in &c.values {
            assert!(v.value.equals(&RatExpr::one(2)), "{}: {}", v.point, v.value);
        }
    }

    #[test]
    fn quadric_matches_smooth_tangent_product() {
        for n in 2..=7 {
            let g = GeometryConfig::new(n).unwrap();
            let c = projective_class(ProjectiveSpace::Q, n).unwrap();
            for &i in g.indices() {
                let got = c.at(Point::Fixed(i)).unwrap();
                if i == 0 {
                    assert!(got.is_zero() || got.reduce().is_zero(), "n={n}: p_0 is off Q");
                    continue;
                }
                let tangent: Vec<Character> = g
                    .indices()
                    .iter()
                    .filter(|&&j| j != i && j != -i)
                    .map(|&j| &g.t_index(j) - &g.t_index(i))
                    .collect();
                let expect = smooth_local(&tangent, g.arity()).unwrap();
                assert!(got.equals(&expect), "n={n} p_{i}");
            }
        }
    }

    #[test]
    fn additivity_closure() {
        for n in 2..=6 {
            let p = projective_class(ProjectiveSpace::P, n).unwrap();
            for (a, b) in [
                (ProjectiveSpace::Q, ProjectiveSpace::Qc),
                (ProjectiveSpace::X, ProjectiveSpace::Xc),
            ] {
                let ca = projective_class(a, n).unwrap();
                let cb = projective_class(b, n).unwrap();
                for ((va, vb), vp) in ca.values.iter().zip(&cb.values).zip(&p.values) {
                    assert!((&va.value + &vb.value).equals(&vp.value));
                }
            }
        }
    }

    #[test]
    fn collapse_at_y_minus_one() {
        for n in 2..=6 {
            let g = GeometryConfig::new(n).unwrap();
            let p = projective_class(ProjectiveSpace::P, n).unwrap();
            let qc = projective_class(ProjectiveSpace::Qc, n).unwrap();
            let one = RatExpr::one(g.arity());
            for &i in g.indices() {
                let pt = Point::Fixed(i);
                assert!(p.at(pt).unwrap().subs_y(&q(-1)).equals(&one));
                let expect = if i == 0 { one.clone() } else { RatExpr::zero(g.arity()) };
                assert!(qc.at(pt).unwrap().subs_y(&q(-1)).equals(&expect));
            }
        }
    }

    #[test]
    fn degenerate_bases() {
        let g1 = GeometryConfig::any(1);
        let c = projective_any(ProjectiveSpace::Qc, &g1).unwrap();
        assert_eq!(c.values.len(), 1);
        assert_eq!(c.values[0].value, RatExpr::one(1));
        let g0 = GeometryConfig::any(0);
        assert!(projective_any(ProjectiveSpace::Qc, &g0).unwrap().values.is_empty());
        assert!(projective_any(ProjectiveSpace::X, &g1).is_err());
        assert!(projective_class(ProjectiveSpace::P, 1).is_err());
    }
}
