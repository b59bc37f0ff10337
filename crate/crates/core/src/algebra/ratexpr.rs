use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::character::Character;
use super::poly::{ArithOp, SparsePoly, Q};
use crate::error::{Error, Result};

/// Seed used by [`ratexpr_equal`] for its evaluation prefilter.
pub const DEFAULT_SEED: u64 = 0x5eed_0c0e;

/// A numerator over a product of factors `(1 - T^w)`.
///
/// Each stored `w` is nonzero with positive leading entry. A factor with a
/// negative `w` is rewritten at construction via
/// `1 / (1 - T^{-v}) = -T^v / (1 - T^v)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatExpr {
    num: SparsePoly,
    den: BTreeMap<Character, u32>,
}

impl RatExpr {
    pub fn new(num: SparsePoly, factors: impl IntoIterator<Item = Character>) -> Result<Self> {
        let arity = num.arity();
        let mut num = num;
        let mut den = BTreeMap::new();
        for w in factors {
            if w.arity() != arity {
                return Err(Error::ArityMismatch {
                    left: arity,
                    right: w.arity(),
                });
            }
            if w.is_zero() {
                return Err(Error::ZeroWeight);
            }
            let v = if w.is_positive() {
                w
            } else {
                let v = -w;
                num = -num.shift(0, &v);
                v
            };
            *den.entry(v).or_insert(0) += 1;
        }
        Ok(RatExpr { num, den })
    }

    pub fn from_poly(num: SparsePoly) -> Self {
        RatExpr {
            num,
            den: BTreeMap::new(),
        }
    }

    pub fn zero(arity: usize) -> Self {
        Self::from_poly(SparsePoly::zero(arity))
    }

    pub fn one(arity: usize) -> Self {
        Self::from_poly(SparsePoly::one(arity))
    }

    pub fn arity(&self) -> usize {
        self.num.arity()
    }

    pub fn numerator(&self) -> &SparsePoly {
        &self.num
    }

    /// Denominator factors `w` with multiplicities.
    pub fn denominator(&self) -> &BTreeMap<Character, u32> {
        &self.den
    }

    pub fn denominator_factors(&self) -> impl Iterator<Item = &Character> {
        self.den.iter().flat_map(|(w, &k)| std::iter::repeat_n(w, k as usize))
    }

    pub fn denominator_poly(&self) -> SparsePoly {
        self.denominator_factors()
            .fold(SparsePoly::one(self.arity()), |acc, w| acc.mul_one_minus(w))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn check_arity(&self, other: &Self) -> Result<()> {
        if self.arity() != other.arity() {
            return Err(Error::ArityMismatch {
                left: self.arity(),
                right: other.arity(),
            });
        }
        Ok(())
    }

    /// Numerator of `self` scaled to the denominator `lcm`.
    fn lift(&self, lcm: &BTreeMap<Character, u32>) -> SparsePoly {
        let mut p = self.num.clone();
        for (w, &k) in lcm {
            let have = self.den.get(w).copied().unwrap_or(0);
            for _ in have..k {
                p = p.mul_one_minus(w);
            }
        }
        p
    }

    fn lcm(&self, other: &Self) -> BTreeMap<Character, u32> {
        let mut l = self.den.clone();
        for (w, &k) in &other.den {
            let e = l.entry(w.clone()).or_insert(0);
            *e = (*e).max(k);
        }
        l
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        self.combine(other, false)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        self.combine(other, true)
    }

    fn combine(&self, other: &Self, subtract: bool) -> Result<Self> {
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(if subtract { -other } else { other.clone() });
        }
        let lcm = self.lcm(other);
        let a = self.lift(&lcm);
        let b = other.lift(&lcm);
        let num = if subtract {
            a.checked_sub(&b)?
        } else {
            a.checked_add(&b)?
        };
        Ok(RatExpr { num, den: lcm })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let num = self.num.checked_mul(&other.num)?;
        if num.is_zero() {
            return Ok(Self::zero(self.arity()));
        }
        let mut den = self.den.clone();
        for (w, &k) in &other.den {
            *den.entry(w.clone()).or_insert(0) += k;
        }
        Ok(RatExpr { num, den })
    }

    pub fn mul_poly(&self, p: &SparsePoly) -> Self {
        let num = &self.num * p;
        if num.is_zero() {
            return Self::zero(self.arity());
        }
        RatExpr {
            num,
            den: self.den.clone(),
        }
    }

    /// Removes every denominator factor that divides the numerator exactly.
    pub fn reduce(&self) -> Self {
        if self.num.is_zero() {
            return Self::zero(self.arity());
        }
        let mut num = self.num.clone();
        let mut den = BTreeMap::new();
        for (w, &k) in &self.den {
            let d = SparsePoly::one_minus(w);
            let mut left = k;
            while left > 0 {
                match num.div_exact(&d) {
                    Ok(qt) => {
                        num = qt;
                        left -= 1;
                    }
                    Err(_) => break,
                }
            }
            if left > 0 {
                den.insert(w.clone(), left);
            }
        }
        RatExpr { num, den }
    }

    /// Identity of rational functions, decided by cross-multiplication.
    pub fn equals(&self, other: &Self) -> bool {
        self.equals_seeded(other, DEFAULT_SEED)
    }

    /// As [`equals`](Self::equals) with an explicit prefilter seed. The seed
    /// only affects how fast an inequality is detected, never the verdict.
    pub fn equals_seeded(&self, other: &Self, seed: u64) -> bool {
        if self.arity() != other.arity() {
            return false;
        }
        if self == other {
            return true;
        }
        if !self.prefilter(other, seed, 2) {
            return false;
        }
        let lcm = self.lcm(other);
        self.lift(&lcm) == other.lift(&lcm)
    }

    /// `false` only when some evaluation proves the two sides differ.
    fn prefilter(&self, other: &Self, seed: u64, points: usize) -> bool {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut tried = 0;
        let mut done = 0;
        while done < points && tried < 8 * points {
            tried += 1;
            let point = EvalPoint::random(self.arity(), &mut rng);
            if let (Ok(a), Ok(b)) = (self.eval(&point), other.eval(&point)) {
                if a != b {
                    return false;
                }
                done += 1;
            }
        }
        true
    }

    pub fn eval(&self, point: &EvalPoint) -> Result<Q> {
        if point.t.len() != self.arity() {
            return Err(Error::ArityMismatch {
                left: self.arity(),
                right: point.t.len(),
            });
        }
        let mut den = Q::one();
        for w in self.denominator_factors() {
            let v = Q::one() - SparsePoly::t_mono(w).eval(&point.t, &point.y);
            if v.is_zero() {
                return Err(Error::DenominatorVanishes);
            }
            den *= v;
        }
        Ok(self.num.eval(&point.t, &point.y) / den)
    }

    /// Applies a lattice map to numerator exponents and denominator weights.
    pub fn map_lattice(&self, map: &LatticeMap) -> Result<Self> {
        if map.source_arity() != self.arity() {
            return Err(Error::IllFormedMap(format!(
                "map expects arity {}, expression has {}",
                map.source_arity(),
                self.arity()
            )));
        }
        let num = self.num.map_characters(map.target_arity(), |c| map.apply(c));
        let mut factors = Vec::new();
        for w in self.denominator_factors() {
            let img = map.apply(w);
            if img.is_zero() {
                return Err(Error::DenominatorVanishes);
            }
            factors.push(img);
        }
        RatExpr::new(num, factors)
    }

    /// Substitutes a constant for `y`; denominators do not involve `y`.
    pub fn subs_y(&self, value: &Q) -> Self {
        let num = self.num.subs_y(value);
        if num.is_zero() {
            return Self::zero(self.arity());
        }
        RatExpr {
            num,
            den: self.den.clone(),
        }
    }

    pub fn padded(&self, arity: usize) -> Self {
        RatExpr {
            num: self.num.padded(arity),
            den: self.den.iter().map(|(w, &k)| (w.padded(arity), k)).collect(),
        }
    }

    /// `Some(p)` when the denominator is empty.
    pub fn as_poly(&self) -> Option<&SparsePoly> {
        self.den.is_empty().then_some(&self.num)
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero(self.arity());
        }
        RatExpr {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }
}

/// Applies `kind`; the result is passed through [`RatExpr::reduce`] when `reduce` is set.
pub fn ratexpr_arith(a: &RatExpr, b: &RatExpr, kind: ArithOp, reduce: bool) -> Result<RatExpr> {
    let r = match kind {
        ArithOp::Add => a.checked_add(b)?,
        ArithOp::Sub => a.checked_sub(b)?,
        ArithOp::Mul => a.checked_mul(b)?,
    };
    Ok(if reduce { r.reduce() } else { r })
}

pub fn ratexpr_equal(a: &RatExpr, b: &RatExpr) -> bool {
    a.equals(b)
}

pub fn reduce(a: &RatExpr) -> RatExpr {
    a.reduce()
}

/// A rational point: values for `T, T_1, ..., T_m` and for `y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalPoint {
    pub t: Vec<Q>,
    pub y: Q,
}

/// Ratios of consecutive primes: 2/3, 3/5, 5/7, ...
const PRIMES: [i64; 16] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53];

impl EvalPoint {
    pub fn new(t: Vec<Q>, y: Q) -> Self {
        EvalPoint { t, y }
    }

    /// Distinct prime-ratio values for the torus variables, another for `y`.
    pub fn random(arity: usize, rng: &mut impl Rng) -> Self {
        let ratio = |i: usize| Q::new(PRIMES[i].into(), PRIMES[i + 1].into());
        let mut pool: Vec<usize> = (0..PRIMES.len() - 1).collect();
        let mut pick = || {
            let i = rng.gen_range(0..pool.len());
            pool.swap_remove(i)
        };
        let t = (0..arity).map(|_| ratio(pick())).collect();
        let y = ratio(pick());
        EvalPoint { t, y }
    }
}

/// A linear map of weight lattices, given by the images of the basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeMap {
    images: Vec<Character>,
    target: usize,
}

impl LatticeMap {
    pub fn new(images: Vec<Character>, target_arity: usize) -> Result<Self> {
        if let Some(bad) = images.iter().find(|c| c.arity() != target_arity) {
            return Err(Error::IllFormedMap(format!(
                "image {bad} has arity {}, expected {target_arity}",
                bad.arity()
            )));
        }
        Ok(LatticeMap {
            images,
            target: target_arity,
        })
    }

    pub fn source_arity(&self) -> usize {
        self.images.len()
    }

    pub fn target_arity(&self) -> usize {
        self.target
    }

    pub fn apply(&self, c: &Character) -> Character {
        let mut out = Character::zero(self.target);
        for (e, img) in c.entries().iter().zip(&self.images) {
            if *e != 0 {
                out = &out + &img.scale(*e);
            }
        }
        out
    }
}

/// Either form of substitution.
#[derive(Clone, Debug)]
pub enum Substitution {
    Lattice(LatticeMap),
    Point(EvalPoint),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Substituted {
    Expr(RatExpr),
    Value(Q),
}

pub fn substitute(a: &RatExpr, s: &Substitution) -> Result<Substituted> {
    match s {
        Substitution::Lattice(map) => a.map_lattice(map).map(Substituted::Expr),
        Substitution::Point(p) => a.eval(p).map(Substituted::Value),
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&RatExpr> for &RatExpr {
            type Output = RatExpr;
            fn $method(self, rhs: &RatExpr) -> RatExpr {
                self.$checked(rhs).expect("operand arity")
            }
        }
        impl $tr<RatExpr> for RatExpr {
            type Output = RatExpr;
            fn $method(self, rhs: RatExpr) -> RatExpr {
                (&self).$checked(&rhs).expect("operand arity")
            }
        }
        impl $tr<&RatExpr> for RatExpr {
            type Output = RatExpr;
            fn $method(self, rhs: &RatExpr) -> RatExpr {
                (&self).$checked(rhs).expect("operand arity")
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &RatExpr {
    type Output = RatExpr;
    fn neg(self) -> RatExpr {
        RatExpr {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatExpr {
    type Output = RatExpr;
    fn neg(self) -> RatExpr {
        -&self
    }
}

impl fmt::Debug for RatExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatExpr({})", self)
    }
}

impl fmt::Display for RatExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::format::ratexpr(self, crate::format::Style::Text))
    }
}
