use std::fmt;

use serde::Serialize;

use crate::algebra::{Character, RatExpr, SparsePoly};
use crate::error::{Error, Result};
use crate::format::{self, Style};

/// `h(T^w) = (1 + y T^w) / (1 - T^w)`, the contribution of one smooth
/// tangent direction of weight `w` to a localized class.
pub fn hfactor(w: &Character) -> Result<RatExpr> {
    if w.is_zero() {
        return Err(Error::ZeroWeight);
    }
    let a = w.arity();
    RatExpr::new(SparsePoly::one(a) + SparsePoly::y(a).shift(0, w), [w.clone()])
}

/// `h(T^w) - 1 = (1 + y) T^w / (1 - T^w)`, the contribution of a punctured line.
pub fn reduced_hfactor(w: &Character) -> Result<RatExpr> {
    if w.is_zero() {
        return Err(Error::ZeroWeight);
    }
    let a = w.arity();
    let num = (SparsePoly::one(a) + SparsePoly::y(a)).shift(0, w);
    RatExpr::new(num, [w.clone()])
}

/// Localized class of a smooth germ with the given tangent weights.
pub fn smooth_local(weights: &[Character], arity: usize) -> Result<RatExpr> {
    weights
        .iter()
        .try_fold(RatExpr::one(arity), |acc, w| acc.checked_mul(&hfactor(w)?))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Factor {
    /// `h(T^w)`
    H(Character),
    /// `h(T^w) - 1`
    Reduced(Character),
}

impl Factor {
    pub fn weight(&self) -> &Character {
        match self {
            Factor::H(w) | Factor::Reduced(w) => w,
        }
    }

    pub fn to_rat(&self) -> Result<RatExpr> {
        match self {
            Factor::H(w) => hfactor(w),
            Factor::Reduced(w) => reduced_hfactor(w),
        }
    }

    fn map(&self, f: &impl Fn(&Character) -> Character) -> Factor {
        match self {
            Factor::H(w) => Factor::H(f(w)),
            Factor::Reduced(w) => Factor::Reduced(f(w)),
        }
    }

    fn render(&self, style: Style) -> String {
        let arg = t_arg(self.weight(), style);
        match (self, style) {
            (Factor::H(_), _) => format!("h({arg})"),
            (Factor::Reduced(_), Style::Text) => format!("(h({arg}) - 1)"),
            (Factor::Reduced(_), Style::Latex) => format!("\\left(h({arg}) - 1\\right)"),
        }
    }
}

fn t_arg(w: &Character, style: Style) -> String {
    let parts = format::t_monomial(w, style);
    match style {
        Style::Text => parts.join("*"),
        Style::Latex => parts.join(" "),
    }
}

/// A coefficient polynomial (in practice a polynomial in `y`) times a
/// product of h-factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Product {
    pub coeff: SparsePoly,
    pub factors: Vec<Factor>,
}

/// A sum of [`Product`]s: the unexpanded shape of a localized class, kept
/// alongside its expanded [`RatExpr`] for display.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HExpr {
    arity: usize,
    terms: Vec<Product>,
}

impl HExpr {
    pub fn zero(arity: usize) -> Self {
        HExpr {
            arity,
            terms: Vec::new(),
        }
    }

    pub fn one(arity: usize) -> Self {
        Self::product(arity, Vec::new())
    }

    pub fn product(arity: usize, factors: Vec<Factor>) -> Self {
        HExpr {
            arity,
            terms: vec![Product {
                coeff: SparsePoly::one(arity),
                factors,
            }],
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> &[Product] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scaled(mut self, c: &SparsePoly) -> Self {
        if c.is_zero() {
            return Self::zero(self.arity);
        }
        for t in &mut self.terms {
            t.coeff = &t.coeff * c;
        }
        self
    }

    pub fn plus(mut self, other: HExpr) -> Self {
        debug_assert_eq!(self.arity, other.arity);
        self.terms.extend(other.terms);
        self
    }

    pub fn minus(self, other: HExpr) -> Self {
        let neg = SparsePoly::constant(other.arity, crate::algebra::q(-1));
        self.plus(other.scaled(&neg))
    }

    pub fn times(&self, other: &HExpr) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                let mut factors = a.factors.clone();
                factors.extend(b.factors.iter().cloned());
                terms.push(Product {
                    coeff: &a.coeff * &b.coeff,
                    factors,
                });
            }
        }
        HExpr {
            arity: self.arity,
            terms,
        }
    }

    pub fn to_rat(&self) -> Result<RatExpr> {
        let mut acc = RatExpr::zero(self.arity);
        for t in &self.terms {
            let mut p = RatExpr::from_poly(t.coeff.clone());
            for f in &t.factors {
                p = p.checked_mul(&f.to_rat()?)?;
            }
            acc = acc.checked_add(&p)?;
        }
        Ok(acc)
    }

    pub fn map_characters(&self, arity: usize, f: impl Fn(&Character) -> Character) -> Self {
        HExpr {
            arity,
            terms: self
                .terms
                .iter()
                .map(|t| Product {
                    coeff: t.coeff.map_characters(arity, &f),
                    factors: t.factors.iter().map(|x| x.map(&f)).collect(),
                })
                .collect(),
        }
    }

    pub fn padded(&self, arity: usize) -> Self {
        self.map_characters(arity, |c| c.padded(arity))
    }

    pub fn render(&self, style: Style) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let sep = match style {
            Style::Text => " * ",
            Style::Latex => " ",
        };
        let mut out = String::new();
        for (i, t) in self.terms.iter().enumerate() {
            let factors: Vec<String> = t.factors.iter().map(|f| f.render(style)).collect();
            let coeff_neg = t.coeff.len() == 1 && t.coeff.terms()[0].1 < crate::algebra::q(0);
            let (negative, coeff) = if coeff_neg {
                (true, -&t.coeff)
            } else {
                (false, t.coeff.clone())
            };
            let coeff_str = if coeff.is_one() {
                None
            } else if coeff.len() == 1 {
                Some(format::poly(&coeff, style))
            } else {
                Some(match style {
                    Style::Text => format!("({})", format::poly(&coeff, style)),
                    Style::Latex => format!("\\left({}\\right)", format::poly(&coeff, style)),
                })
            };
            let mut body: Vec<String> = coeff_str.into_iter().collect();
            body.extend(factors);
            let body = if body.is_empty() {
                "1".to_string()
            } else {
                body.join(sep)
            };
            match (i, negative) {
                (0, false) => out.push_str(&body),
                (0, true) => out.push_str(&format!("-{body}")),
                (_, false) => out.push_str(&format!(" + {body}")),
                (_, true) => out.push_str(&format!(" - {body}")),
            }
        }
        out
    }
}

impl fmt::Display for HExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(Style::Text))
    }
}
