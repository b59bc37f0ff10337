use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::character::Character;
use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

/// `y^ypow · T^chr`. The derived order is lexicographic on `(ypow, chr)`,
/// which is a group order on the exponent lattice and hence compatible with
/// multiplication.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial {
    pub ypow: u32,
    pub chr: Character,
}

impl Monomial {
    pub fn new(ypow: u32, chr: Character) -> Self {
        Monomial { ypow, chr }
    }

    pub fn one(arity: usize) -> Self {
        Monomial {
            ypow: 0,
            chr: Character::zero(arity),
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            ypow: self.ypow + other.ypow,
            chr: &self.chr + &other.chr,
        }
    }

    /// Exponent of variable `v`, where `v = 0` is `y` and `v = k + 1` is
    /// lattice entry `k`.
    fn exponent(&self, v: usize) -> i64 {
        if v == 0 {
            self.ypow as i64
        } else {
            self.chr.entries()[v - 1] as i64
        }
    }
}

/// Which ring operation `poly_arith` should apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// A Laurent polynomial in `T, T_1, ..., T_m` and polynomial in `y`, with
/// exact rational coefficients.
///
/// Terms are kept sorted ascending by [`Monomial`] order with no zero
/// coefficients, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SparsePoly {
    arity: usize,
    terms: Vec<(Monomial, Q)>,
}

impl SparsePoly {
    pub fn zero(arity: usize) -> Self {
        SparsePoly {
            arity,
            terms: Vec::new(),
        }
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, Q::one())
    }

    pub fn constant(arity: usize, c: Q) -> Self {
        Self::term(arity, 0, Character::zero(arity), c)
    }

    pub fn term(arity: usize, ypow: u32, chr: Character, c: Q) -> Self {
        assert_eq!(chr.arity(), arity, "character arity");
        if c.is_zero() {
            return Self::zero(arity);
        }
        SparsePoly {
            arity,
            terms: vec![(Monomial::new(ypow, chr), c)],
        }
    }

    /// `T^w`.
    pub fn t_mono(w: &Character) -> Self {
        Self::term(w.arity(), 0, w.clone(), Q::one())
    }

    /// `y`.
    pub fn y(arity: usize) -> Self {
        Self::term(arity, 1, Character::zero(arity), Q::one())
    }

    /// `1 - T^w`.
    pub fn one_minus(w: &Character) -> Self {
        Self::one(w.arity()) - Self::t_mono(w)
    }

    /// Builds the canonical form from arbitrary (possibly repeated or zero) terms.
    pub fn from_terms(arity: usize, terms: impl IntoIterator<Item = (Monomial, Q)>) -> Self {
        let mut acc: BTreeMap<Monomial, Q> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.chr.arity(), arity, "character arity");
            *acc.entry(m).or_insert_with(Q::zero) += c;
        }
        SparsePoly {
            arity,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> &[(Monomial, Q)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == Monomial::one(self.arity) && self.terms[0].1.is_one()
    }

    pub fn leading(&self) -> Option<&(Monomial, Q)> {
        self.terms.last()
    }

    /// Coefficient of `y^ypow T^chr`.
    pub fn coeff(&self, ypow: u32, chr: &Character) -> Q {
        let key = Monomial::new(ypow, chr.clone());
        self.terms
            .binary_search_by(|(m, _)| m.cmp(&key))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| Q::zero())
    }

    fn check_arity(&self, other: &Self) -> Result<()> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: other.arity,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.arity));
        }
        let mut acc: HashMap<Monomial, Q> = HashMap::with_capacity(self.len() * other.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                *acc.entry(ma.mul(mb)).or_insert_with(Q::zero) += ca * cb;
            }
        }
        let mut terms: Vec<(Monomial, Q)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        Ok(SparsePoly {
            arity: self.arity,
            terms,
        })
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        let sign = |c: &Q| if negate_other { -c } else { c.clone() };
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match ma.cmp(mb) {
                Ordering::Less => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((mb.clone(), sign(cb)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = ca + sign(cb);
                    if !c.is_zero() {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(|(m, c)| (m.clone(), sign(c))));
        SparsePoly {
            arity: self.arity,
            terms: out,
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero(self.arity);
        }
        SparsePoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    /// Multiplies by `y^ypow T^chr`; order is preserved so no re-sort is needed.
    pub fn shift(&self, ypow: u32, chr: &Character) -> Self {
        let mono = Monomial::new(ypow, chr.clone());
        SparsePoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, c)| (m.mul(&mono), c.clone())).collect(),
        }
    }

    /// Multiplies by `1 - T^w`.
    pub fn mul_one_minus(&self, w: &Character) -> Self {
        self.merge(&self.shift(0, w), true)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.arity);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    fn exponent_bounds(&self) -> Vec<(i64, i64)> {
        let nv = self.arity + 1;
        let mut b = vec![(i64::MAX, i64::MIN); nv];
        for (m, _) in &self.terms {
            for (v, bound) in b.iter_mut().enumerate() {
                let e = m.exponent(v);
                bound.0 = bound.0.min(e);
                bound.1 = bound.1.max(e);
            }
        }
        b
    }

    /// Exact division: returns `q` with `q * d == self`.
    ///
    /// Leading terms are peeled off in monomial order. Every exponent of a
    /// true quotient lies in the box `[min_p - min_d, max_p - max_d]` per
    /// variable, and quotient monomials strictly decrease, so leaving the box
    /// proves non-divisibility and the loop is finite.
    pub fn div_exact(&self, d: &Self) -> Result<Self> {
        self.check_arity(d)?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(self.arity));
        }
        if d.len() == 1 {
            let (dm, dc) = &d.terms[0];
            if dm.ypow > self.terms[0].0.ypow {
                return Err(Error::NotDivisible);
            }
            let inv = dc.recip();
            let neg = -&dm.chr;
            let mut out = Vec::with_capacity(self.len());
            for (m, c) in &self.terms {
                if m.ypow < dm.ypow {
                    return Err(Error::NotDivisible);
                }
                out.push((Monomial::new(m.ypow - dm.ypow, &m.chr + &neg), c * &inv));
            }
            return Ok(SparsePoly {
                arity: self.arity,
                terms: out,
            });
        }

        let pb = self.exponent_bounds();
        let db = d.exponent_bounds();
        let qbox: Vec<(i64, i64)> = pb.iter().zip(&db).map(|(p, d)| (p.0 - d.0, p.1 - d.1)).collect();
        if qbox.iter().any(|(lo, hi)| lo > hi) || qbox[0].0 < 0 && qbox[0].1 < 0 {
            return Err(Error::NotDivisible);
        }

        let (dlm, dlc) = d.leading().expect("nonzero divisor");
        let dlc_inv = dlc.recip();
        let mut rem: BTreeMap<Monomial, Q> = self.terms.iter().cloned().collect();
        let mut quot: Vec<(Monomial, Q)> = Vec::new();
        while let Some((rm, rc)) = rem.pop_last() {
            let ypow = rm.ypow as i64 - dlm.ypow as i64;
            if ypow < 0 {
                return Err(Error::NotDivisible);
            }
            let qm = Monomial::new(ypow as u32, &rm.chr - &dlm.chr);
            let inside = qbox.iter().enumerate().all(|(v, (lo, hi))| {
                let e = qm.exponent(v);
                *lo <= e && e <= *hi
            });
            if !inside {
                return Err(Error::NotDivisible);
            }
            let qc = &rc * &dlc_inv;
            // the leading product cancels rm exactly; subtract the rest
            for (m, c) in d.terms.iter().rev().skip(1) {
                let key = qm.mul(m);
                let delta = &qc * c;
                match rem.get_mut(&key) {
                    Some(v) => {
                        *v -= delta;
                        if v.is_zero() {
                            rem.remove(&key);
                        }
                    }
                    None => {
                        rem.insert(key, -delta);
                    }
                }
            }
            quot.push((qm, qc));
        }
        quot.reverse();
        Ok(SparsePoly {
            arity: self.arity,
            terms: quot,
        })
    }

    /// `Some(coefficients of y^0, y^1, ...)` when no torus variable occurs.
    pub fn y_coefficients(&self) -> Option<Vec<Q>> {
        if self.terms.iter().any(|(m, _)| !m.chr.is_zero()) {
            return None;
        }
        let deg = self.terms.last().map_or(0, |(m, _)| m.ypow as usize + 1);
        let mut out = vec![Q::zero(); deg];
        for (m, c) in &self.terms {
            out[m.ypow as usize] = c.clone();
        }
        Some(out)
    }

    pub fn y_degree(&self) -> Option<u32> {
        self.terms.last().map(|(m, _)| m.ypow)
    }

    /// Substitutes a constant for `y`.
    pub fn subs_y(&self, value: &Q) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (Monomial::new(0, m.chr.clone()), c * pow_q(value, m.ypow as i32)));
        Self::from_terms(self.arity, terms)
    }

    /// Applies a linear map to every exponent character.
    pub fn map_characters(&self, arity: usize, f: impl Fn(&Character) -> Character) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (Monomial::new(m.ypow, f(&m.chr)), c.clone()));
        Self::from_terms(arity, terms)
    }

    pub fn padded(&self, arity: usize) -> Self {
        assert!(arity >= self.arity, "cannot shrink arity");
        SparsePoly {
            arity,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.ypow, m.chr.padded(arity)), c.clone()))
                .collect(),
        }
    }

    /// Evaluates at `T_k = t_values[k]`, `y = y_value`.
    pub fn eval(&self, t_values: &[Q], y_value: &Q) -> Q {
        assert_eq!(t_values.len(), self.arity);
        let mut acc = Q::zero();
        for (m, c) in &self.terms {
            let mut v = c * pow_q(y_value, m.ypow as i32);
            for (x, &e) in t_values.iter().zip(m.chr.entries()) {
                if e != 0 {
                    v *= pow_q(x, e);
                }
            }
            acc += v;
        }
        acc
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_integer())
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.iter().all(|(_, c)| !c.is_negative())
    }
}

pub(crate) fn pow_q(x: &Q, e: i32) -> Q {
    if e == 0 {
        Q::one()
    } else {
        num_traits::Pow::pow(x, e)
    }
}

/// Applies `kind` to `a` and `b`; errors on arity mismatch.
pub fn poly_arith(a: &SparsePoly, b: &SparsePoly, kind: ArithOp) -> Result<SparsePoly> {
    match kind {
        ArithOp::Add => a.checked_add(b),
        ArithOp::Sub => a.checked_sub(b),
        ArithOp::Mul => a.checked_mul(b),
    }
}

pub fn poly_div_exact(p: &SparsePoly, d: &SparsePoly) -> Result<SparsePoly> {
    p.div_exact(d)
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&SparsePoly> for &SparsePoly {
            type Output = SparsePoly;
            fn $method(self, rhs: &SparsePoly) -> SparsePoly {
                self.$checked(rhs).expect("operand arity")
            }
        }
        impl $tr<SparsePoly> for SparsePoly {
            type Output = SparsePoly;
            fn $method(self, rhs: SparsePoly) -> SparsePoly {
                (&self).$checked(&rhs).expect("operand arity")
            }
        }
        impl $tr<&SparsePoly> for SparsePoly {
            type Output = SparsePoly;
            fn $method(self, rhs: &SparsePoly) -> SparsePoly {
                (&self).$checked(rhs).expect("operand arity")
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        SparsePoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        -&self
    }
}

impl fmt::Debug for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparsePoly({})", self)
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::format::poly(self, crate::format::Style::Text))
    }
}
