use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::algebra::{q, Q};
use crate::error::{Error, Result};

/// A Laurent polynomial in `u` with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ULaurent(BTreeMap<i32, Q>);

impl ULaurent {
    pub fn zero() -> Self {
        ULaurent(BTreeMap::new())
    }

    pub fn constant(c: Q) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(e: i32, c: Q) -> Self {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert(e, c);
        }
        ULaurent(m)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeff(&self, e: i32) -> Q {
        self.0.get(&e).cloned().unwrap_or_else(Q::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &Q)> {
        self.0.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_exponent(&self) -> Option<i32> {
        self.0.keys().next().copied()
    }

    fn add_term(&mut self, e: i32, c: Q) {
        if c.is_zero() {
            return;
        }
        let entry = self.0.entry(e).or_insert_with(Q::zero);
        *entry += c;
        if entry.is_zero() {
            self.0.remove(&e);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&e, c) in &other.0 {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&q(-1)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&a, ca) in &self.0 {
            for (&b, cb) in &other.0 {
                out.add_term(a + b, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        ULaurent(self.0.iter().map(|(&e, x)| (e, x * c)).collect())
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::constant(Q::one()), |acc, _| acc.mul(self))
    }

    fn as_monomial(&self) -> Option<(i32, &Q)> {
        (self.0.len() == 1).then(|| self.0.iter().next().map(|(&e, c)| (e, c)).unwrap())
    }
}

/// A truncated Laurent series in `t` whose coefficients are Laurent
/// polynomials in `u`: coefficients are known for `min <= j < cutoff`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiSeries {
    min: i32,
    cutoff: i32,
    coeffs: Vec<ULaurent>,
}

impl BiSeries {
    pub fn new(min: i32, coeffs: Vec<ULaurent>) -> Self {
        let cutoff = min + coeffs.len() as i32;
        BiSeries { min, cutoff, coeffs }
    }

    pub fn constant(c: ULaurent, cutoff: i32) -> Self {
        let mut coeffs = vec![ULaurent::zero(); cutoff.max(0) as usize];
        if cutoff > 0 {
            coeffs[0] = c;
        }
        BiSeries { min: 0, cutoff, coeffs }
    }

    /// `e^{a t}`, or `e^{a u t}` when `with_u` is set.
    pub fn exp(a: i64, with_u: bool, cutoff: i32) -> Self {
        let mut coeffs = Vec::with_capacity(cutoff.max(0) as usize);
        let mut c = Q::one();
        for j in 0..cutoff.max(0) {
            if j > 0 {
                c = c * q(a) / q(j as i64);
            }
            coeffs.push(ULaurent::monomial(if with_u { j } else { 0 }, c.clone()));
        }
        BiSeries { min: 0, cutoff, coeffs }
    }

    pub fn min(&self) -> i32 {
        self.min
    }

    pub fn cutoff(&self) -> i32 {
        self.cutoff
    }

    /// Coefficient of `t^j`, `None` beyond the truncation.
    pub fn coeff(&self, j: i32) -> Option<ULaurent> {
        if j >= self.cutoff {
            None
        } else if j < self.min {
            Some(ULaurent::zero())
        } else {
            Some(self.coeffs[(j - self.min) as usize].clone())
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let min = self.min.min(other.min);
        let cutoff = self.cutoff.min(other.cutoff);
        let coeffs = (min..cutoff)
            .map(|j| self.coeff(j).unwrap().add(&other.coeff(j).unwrap()))
            .collect();
        BiSeries { min, cutoff, coeffs }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let min = self.min + other.min;
        let cutoff = (self.cutoff + other.min).min(other.cutoff + self.min);
        let mut coeffs = vec![ULaurent::zero(); (cutoff - min).max(0) as usize];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let k = i + j;
                if k >= coeffs.len() {
                    break;
                }
                coeffs[k] = coeffs[k].add(&a.mul(b));
            }
        }
        BiSeries { min, cutoff, coeffs }
    }

    pub fn scale(&self, c: &ULaurent) -> Self {
        BiSeries {
            min: self.min,
            cutoff: self.cutoff,
            coeffs: self.coeffs.iter().map(|x| x.mul(c)).collect(),
        }
    }

    /// Drops leading zero coefficients.
    pub fn normalized(&self) -> Self {
        let skip = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        BiSeries {
            min: self.min + skip as i32,
            cutoff: self.cutoff,
            coeffs: self.coeffs[skip..].to_vec(),
        }
    }

    /// Multiplicative inverse; the leading coefficient must be a monomial `c u^e`.
    pub fn inverse(&self) -> Result<Self> {
        let s = self.normalized();
        let Some(lead) = s.coeffs.first() else {
            return Err(Error::NotInvertible);
        };
        let (e, c) = lead.as_monomial().ok_or(Error::NotInvertible)?;
        let lead_inv = ULaurent::monomial(-e, c.recip());
        let len = s.coeffs.len();
        let mut out: Vec<ULaurent> = Vec::with_capacity(len);
        out.push(lead_inv.clone());
        for k in 1..len {
            let mut acc = ULaurent::zero();
            for i in 1..=k {
                acc = acc.add(&s.coeffs[i].mul(&out[k - i]));
            }
            out.push(acc.mul(&lead_inv).scale(&q(-1)));
        }
        Ok(BiSeries {
            min: -s.min,
            cutoff: -s.min + len as i32,
            coeffs: out,
        })
    }
}

/// A polynomial in the cohomology generator `t`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TPoly(Vec<Q>);

impl TPoly {
    pub fn new(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        TPoly(coeffs)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| q(c)).collect())
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.0
    }

    pub fn is_nonnegative_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer() && !c.is_negative())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        let get = |p: &Self, i: usize| p.0.get(i).cloned().unwrap_or_else(Q::zero);
        Self::new((0..n).map(|i| get(self, i) + get(other, i)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.0.is_empty() || other.0.is_empty() {
            return TPoly::default();
        }
        let mut out = vec![Q::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(TPoly::from_ints(&[1]), |acc, _| acc.mul(self))
    }

    /// `t^k`
    pub fn t_pow(k: usize) -> Self {
        let mut c = vec![Q::zero(); k + 1];
        c[k] = Q::one();
        TPoly(c)
    }

    pub fn render(&self, latex: bool) -> String {
        let mut parts: Vec<(bool, String)> = Vec::new();
        for (k, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let coeff = if mag.is_integer() {
                mag.numer().to_string()
            } else if latex {
                format!("\\frac{{{}}}{{{}}}", mag.numer(), mag.denom())
            } else {
                format!("{}/{}", mag.numer(), mag.denom())
            };
            let var = match k {
                0 => String::new(),
                1 => "t".to_string(),
                k if latex => format!("t^{{{k}}}"),
                k => format!("t^{k}"),
            };
            let body = match (k, mag.is_one()) {
                (0, _) => coeff,
                (_, true) => var,
                (_, false) => format!("{coeff}{var}"),
            };
            parts.push((c.is_negative(), body));
        }
        if parts.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (neg, body)) in parts.into_iter().enumerate() {
            match (i, neg) {
                (0, false) => out.push_str(&body),
                (0, true) => out.push_str(&format!("-{body}")),
                (_, false) => out.push_str(&format!(" + {body}")),
                (_, true) => out.push_str(&format!(" - {body}")),
            }
        }
        out
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}
