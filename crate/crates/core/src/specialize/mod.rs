//! Specializations after `T_i → 1`: closed forms in `T, y`, series
//! expansion at `T = e^{-t}`, the CSM limit and the multidegree.

mod series;

use num_traits::{One, Zero};

pub use series::{BiSeries, TPoly, ULaurent};

use crate::algebra::{q, Character, LatticeMap, RatExpr, SparsePoly, Q};
use crate::error::{Error, Result};
use crate::hirzebruch::{affine_class, AffineSpace, LocalClass};

/// The lattice map `t ↦ t`, `t_k ↦ 0` onto the rank one lattice of `t`.
pub fn diagonal_map(arity: usize) -> Result<LatticeMap> {
    let images = (0..arity).map(|k| Character::from_slice(&[(k == 0) as i32])).collect();
    LatticeMap::new(images, 1)
}

/// Restricts an affine class to the diagonal circle.
pub fn diagonalize(c: &LocalClass) -> Result<RatExpr> {
    let v = match (c.is_projective(), c.origin()) {
        (false, Some(v)) => v,
        _ => {
            return Err(Error::InvalidParameter(format!(
                "diagonalize needs an affine class, got {}",
                c.space
            )))
        }
    };
    v.map_lattice(&diagonal_map(v.arity())?)
}

fn tt() -> Character {
    Character::from_slice(&[1])
}

/// Closed form of the diagonal `CCQ_n`:
///
/// `(1+y)^2 T^2 Σ_{i=1}^m (-y)^{m-i} (1+yT)^{2i-2} / (1-T)^{2i}` for `n = 2m`,
/// and `(-y)^m (1+y)T/(1-T) + (1+y)^2 T^2 Σ_{i=1}^m (-y)^{m-i} (1+yT)^{2i-1} / (1-T)^{2i+1}`
/// for `n = 2m+1`.
pub fn closed_form(n: usize) -> Result<RatExpr> {
    if n < 2 {
        return Err(Error::InvalidDimension {
            n,
            reason: "closed forms need n >= 2",
        });
    }
    let m = (n / 2) as u32;
    let odd = n % 2 == 1;
    let one = SparsePoly::one(1);
    let y = SparsePoly::y(1);
    let t = SparsePoly::t_mono(&tt());
    let one_y = &one + &y;
    let one_yt = &one + &(&y * &t);
    let minus_y = -y.clone();
    let lead = &(&one_y * &one_y) * &(&t * &t);
    let mut acc = RatExpr::zero(1);
    for i in 1..=m {
        let e = if odd { 2 * i - 1 } else { 2 * i - 2 };
        let num = &(&lead * &minus_y.pow(m - i)) * &one_yt.pow(e);
        let den = if odd { 2 * i + 1 } else { 2 * i };
        acc = acc.checked_add(&RatExpr::new(num, std::iter::repeat_n(tt(), den as usize))?)?;
    }
    if odd {
        let num = &(&minus_y.pow(m) * &one_y) * &t;
        acc = acc.checked_add(&RatExpr::new(num, [tt()])?)?;
    }
    Ok(acc)
}

/// The CSM polynomials in the displayed form
/// `Σ_{i=0}^{m-1} t^{2i} (1+t)^{2(m-i-1)}`, plus `t^{2m}` for odd `n`.
pub fn csm_sum_formula(n: usize) -> TPoly {
    let m = n / 2;
    let mut acc = if n % 2 == 1 {
        TPoly::t_pow(2 * m)
    } else {
        TPoly::default()
    };
    let one_t = TPoly::from_ints(&[1, 1]);
    for i in 0..m {
        acc = acc.add(&TPoly::t_pow(2 * i).mul(&one_t.pow((2 * (m - i - 1)) as u32)));
    }
    acc
}

/// Odd-`n` variant `t^{2m} + Σ_{i=0}^{m-1} t^{2i} (1+t)^{2(m-i)-1}`; this is
/// what the limit of the diagonal `CCQ_{2m+1}` produces.
pub fn csm_sum_formula_odd(n: usize) -> TPoly {
    let m = n / 2;
    let one_t = TPoly::from_ints(&[1, 1]);
    (0..m).fold(TPoly::t_pow(2 * m), |acc, i| {
        acc.add(&TPoly::t_pow(2 * i).mul(&one_t.pow((2 * (m - i) - 1) as u32)))
    })
}

/// How `y` enters a series expansion.
#[derive(Clone, Debug, PartialEq)]
pub enum YSpec {
    /// `y = u - 1`
    Shifted,
    /// `y = u`, keeping `y` symbolic
    Symbolic,
    Value(Q),
}

/// Expands a diagonal class as a series in `t`, with `T = e^{-ut}` when
/// `scale_t` and `T = e^{-t}` otherwise. `order` is the number of terms kept
/// past the leading pole.
pub fn expand(diag: &RatExpr, y: &YSpec, scale_t: bool, order: usize) -> Result<BiSeries> {
    if diag.arity() != 1 {
        return Err(Error::ArityMismatch {
            left: diag.arity(),
            right: 1,
        });
    }
    let order = order as i32;
    let u = ULaurent::monomial(1, Q::one());
    let y_power = |p: u32| match y {
        YSpec::Shifted => u.sub(&ULaurent::constant(Q::one())).pow(p),
        YSpec::Symbolic => u.pow(p),
        YSpec::Value(v) => ULaurent::constant(crate::algebra::pow_q(v, p as i32)),
    };
    let mut num = BiSeries::constant(ULaurent::zero(), order);
    for (mono, c) in diag.numerator().terms() {
        let a = mono.chr.entries()[0] as i64;
        let coeff = y_power(mono.ypow).scale(c);
        num = num.add(&BiSeries::exp(-a, scale_t, order).scale(&coeff));
    }
    let one = BiSeries::constant(ULaurent::constant(Q::one()), order + 1);
    let mut acc = num;
    for (w, &mult) in diag.denominator() {
        let c = w.entries()[0] as i64;
        let d = one.add(&BiSeries::exp(-c, scale_t, order + 1).scale(&ULaurent::constant(q(-1))));
        let inv = d.inverse()?;
        for _ in 0..mult {
            acc = acc.mul(&inv);
        }
    }
    Ok(acc)
}

/// CSM class of a diagonal affine class on `C^n`: the `u^0` part of the
/// expansion at `y = u - 1`, `T = e^{-ut}`, times `t^n`.
pub fn csm(diag: &RatExpr, n: usize, order: usize) -> Result<TPoly> {
    if order < n + 2 {
        return Err(Error::TruncationTooLow { order, needed: n + 2 });
    }
    let s = expand(diag, &YSpec::Shifted, true, order)?;
    let mut coeffs: Vec<Q> = Vec::new();
    for j in s.min()..s.cutoff() {
        let c = s.coeff(j).unwrap();
        if c.terms().any(|(e, _)| e < 0) {
            return Err(Error::NonvanishingNegativeUPart { t_degree: j });
        }
        let c0 = c.coeff(0);
        let deg = j + n as i32;
        if deg < 0 {
            if !c0.is_zero() {
                return Err(Error::NonvanishingNegativeUPart { t_degree: j });
            }
            continue;
        }
        let deg = deg as usize;
        if coeffs.len() <= deg {
            coeffs.resize(deg + 1, Q::zero());
        }
        coeffs[deg] = c0;
    }
    Ok(TPoly::new(coeffs))
}

/// CSM class of an affine space over `C^n` at the default truncation `n + 4`.
pub fn csm_of(kind: AffineSpace, n: usize) -> Result<TPoly> {
    let diag = diagonalize(&affine_class(kind, n)?)?;
    csm(&diag, n, n + 4)
}

/// Lowest term `(c, d)` of the diagonal class at `y = 0`, `T = e^{-t}`,
/// meaning `c t^d`.
pub fn multidegree(diag: &RatExpr, n: usize) -> Result<(Q, i32)> {
    let s = expand(diag, &YSpec::Value(Q::zero()), false, n + 4)?;
    (s.min()..s.cutoff())
        .map(|j| (s.coeff(j).unwrap().coeff(0), j))
        .find(|(c, _)| !c.is_zero())
        .ok_or(Error::ZeroClass)
}

/// Lowest term with `y` kept symbolic: coefficients of `y^0, y^1, ...` and
/// the `t` degree.
pub fn bottom_term(diag: &RatExpr, n: usize) -> Result<(Vec<Q>, i32)> {
    let s = expand(diag, &YSpec::Symbolic, false, n + 4)?;
    for j in s.min()..s.cutoff() {
        let c = s.coeff(j).unwrap();
        if c.is_zero() {
            continue;
        }
        let top = c.terms().map(|(e, _)| e).max().unwrap_or(0);
        return Ok(((0..=top).map(|e| c.coeff(e)).collect(), j));
    }
    Err(Error::ZeroClass)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::qf;
    use crate::hirzebruch::hfactor;

    fn diag(kind: AffineSpace, n: usize) -> RatExpr {
        diagonalize(&affine_class(kind, n).unwrap()).unwrap()
    }

    #[test]
    fn todd_series() {
        let h = hfactor(&tt()).unwrap();
        let s = expand(&h, &YSpec::Value(Q::zero()), false, 3).unwrap();
        let c: Vec<Q> = (-1..2).map(|j| s.coeff(j).unwrap().coeff(0)).collect();
        assert_eq!(c, vec![q(1), qf(1, 2), qf(1, 12)]);
    }

    #[test]
    fn diagonal_ccx2() {
        let one = SparsePoly::one(1);
        let y = SparsePoly::y(1);
        let t = SparsePoly::t_mono(&tt());
        let num = &(&(&one + &y) * &(&one + &y)) * &(&t * &t);
        let expect = RatExpr::new(num, [tt(), tt()]).unwrap();
        assert!(diag(AffineSpace::CCX, 2).equals(&expect));
    }

    #[test]
    fn closed_forms_small() {
        for n in 2..=6 {
            assert!(diag(AffineSpace::CCQ, n).equals(&closed_form(n).unwrap()), "n={n}");
        }
        assert!(closed_form(1).is_err());
    }

    #[test]
    fn csm_even_and_odd() {
        assert_eq!(csm_of(AffineSpace::CCQ, 2).unwrap(), TPoly::from_ints(&[1]));
        assert_eq!(csm_of(AffineSpace::CCQ, 4).unwrap().to_string(), "1 + 2t + 2t^2");
        assert_eq!(csm_of(AffineSpace::CCQ, 3).unwrap(), TPoly::from_ints(&[1, 1, 1]));
        assert_eq!(csm_of(AffineSpace::CCQ, 5).unwrap(), csm_sum_formula_odd(5));
        assert_eq!(csm_of(AffineSpace::CCX, 4).unwrap(), TPoly::from_ints(&[1, 2, 1]));
        let d = diag(AffineSpace::CCQ, 4);
        assert!(matches!(csm(&d, 4, 5), Err(Error::TruncationTooLow { .. })));
    }

    #[test]
    fn multidegree_examples() {
        assert_eq!(multidegree(&diag(AffineSpace::CQ, 2), 2).unwrap(), (q(2), -1));
        assert_eq!(multidegree(&diag(AffineSpace::CQ, 4), 4).unwrap(), (q(2), -3));
        assert_eq!(multidegree(&diag(AffineSpace::Cn, 3), 3).unwrap(), (q(1), -3));
        assert_eq!(multidegree(&RatExpr::zero(1), 3), Err(Error::ZeroClass));
    }

    #[test]
    fn non_affine_rejected() {
        let p = crate::hirzebruch::projective_class(crate::hirzebruch::ProjectiveSpace::P, 3).unwrap();
        assert!(diagonalize(&p).is_err());
    }
}
