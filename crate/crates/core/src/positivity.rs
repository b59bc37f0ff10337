//! Positive representations in the variables `δ = -1 - y` and
//! `S_w = T^w - 1`, one `S` per ambient weight of `C^n`.
//!
//! In these variables `h(T^w) = (S_w + δ(S_w + 1)) / S_w` and
//! `h(T^w) - 1 = δ(S_w + 1) / S_w`, and `-y = 1 + δ`. The forms are built
//! factor by factor, never by inverting a generic change of variables: the
//! ambient weights are linearly dependent, so a character has many
//! decompositions.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::algebra::{q, Character, Monomial, RatExpr, SparsePoly, Q};
use crate::error::{Error, Result};
use crate::hirzebruch::{affine_class, AffineSpace, Factor};
use crate::torus::GeometryConfig;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PositiveKind {
    CCQ,
    CQ,
}

impl PositiveKind {
    pub fn space(&self) -> AffineSpace {
        match self {
            PositiveKind::CCQ => AffineSpace::CCQ,
            PositiveKind::CQ => AffineSpace::CQ,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Subject {
    pub kind: PositiveKind,
    pub n: usize,
}

/// `num / ∏ S_w^{den_w}`. The numerator is a [`SparsePoly`] whose `y` slot
/// carries the power of `δ` and whose character entries are `S` exponents,
/// one per entry of `weights`.
#[derive(Clone, Debug, PartialEq)]
pub struct SPolynomial {
    pub subject: Option<Subject>,
    pub weights: Vec<Character>,
    pub num: SparsePoly,
    pub den: Vec<u32>,
}

impl SPolynomial {
    pub fn new(weights: Vec<Character>, num: SparsePoly, den: Vec<u32>) -> Result<Self> {
        if num.arity() != weights.len() || den.len() != weights.len() {
            return Err(Error::ArityMismatch {
                left: weights.len(),
                right: num.arity(),
            });
        }
        if num.terms().iter().any(|(m, _)| m.chr.entries().iter().any(|&e| e < 0)) {
            return Err(Error::InvalidParameter("S exponents must be nonnegative".into()));
        }
        Ok(SPolynomial {
            subject: None,
            weights,
            num,
            den,
        })
    }

    pub fn constant(weights: Vec<Character>, c: Q) -> Self {
        let k = weights.len();
        SPolynomial {
            subject: None,
            num: SparsePoly::constant(k, c),
            den: vec![0; k],
            weights,
        }
    }

    fn slots(&self) -> usize {
        self.weights.len()
    }

    fn with(&self, num: SparsePoly, den: Vec<u32>) -> Self {
        SPolynomial {
            subject: self.subject,
            weights: self.weights.clone(),
            num,
            den,
        }
    }

    fn s(&self, slot: usize) -> SparsePoly {
        SparsePoly::t_mono(&Character::basis(self.slots(), slot))
    }

    fn delta(&self) -> SparsePoly {
        SparsePoly::y(self.slots())
    }

    fn slot_of(&self, w: &Character) -> Result<usize> {
        self.weights
            .iter()
            .position(|v| v == w)
            .ok_or_else(|| Error::StructuralRewriteFailed(format!("{w} is not an ambient weight")))
    }

    /// `h(T^w)` or `h(T^w) - 1` as a positive form.
    pub fn factor(&self, f: &Factor) -> Result<Self> {
        let slot = self.slot_of(f.weight())?;
        let s = self.s(slot);
        let one = SparsePoly::one(self.slots());
        let s1 = &(&s + &one) * &self.delta();
        let num = match f {
            Factor::H(_) => &s + &s1,
            Factor::Reduced(_) => s1,
        };
        let mut den = vec![0; self.slots()];
        den[slot] = 1;
        Ok(self.with(num, den))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let den = self.den.iter().zip(&other.den).map(|(a, b)| a + b).collect();
        self.with(&self.num * &other.num, den)
    }

    /// Multiplies numerator and denominator by `S` powers up to `den`.
    fn lifted(&self, den: &[u32]) -> SparsePoly {
        let shift: Vec<i32> = den.iter().zip(&self.den).map(|(a, b)| (a - b) as i32).collect();
        self.num.shift(0, &Character::from_slice(&shift))
    }

    pub fn add(&self, other: &Self) -> Self {
        let den: Vec<u32> = self.den.iter().zip(&other.den).map(|(a, b)| *a.max(b)).collect();
        self.with(&self.lifted(&den) + &other.lifted(&den), den)
    }

    /// Multiplies by a polynomial in `δ`.
    pub fn scale_delta(&self, p: &SparsePoly) -> Self {
        self.with(&self.num * p, self.den.clone())
    }

    pub fn negative_terms(&self) -> impl Iterator<Item = &(Monomial, Q)> {
        self.num.terms().iter().filter(|(_, c)| c.is_negative())
    }

    /// Back-substitutes `S_w = T^w - 1`, `δ = -1 - y`.
    pub fn to_ratexpr(&self) -> Result<RatExpr> {
        let arity = self.weights.iter().map(Character::arity).max().unwrap_or(1);
        let one = SparsePoly::one(arity);
        let mut subs = vec![-&(&one + &SparsePoly::y(arity))];
        subs.extend(self.weights.iter().map(|w| &SparsePoly::t_mono(w) - &one));
        let terms: Vec<(Vec<u32>, Q)> = self
            .num
            .terms()
            .iter()
            .map(|(m, c)| {
                let mut e = vec![m.ypow];
                e.extend(m.chr.entries().iter().map(|&x| x as u32));
                (e, c.clone())
            })
            .collect();
        let num = horner(&terms, 0, &subs, arity);
        // ∏ S_w^{d_w} = ∏ (-(1 - T^w))^{d_w}
        let total: u32 = self.den.iter().sum();
        let num = if total % 2 == 1 { -num } else { num };
        let factors = self
            .weights
            .iter()
            .zip(&self.den)
            .flat_map(|(w, &d)| std::iter::repeat_n(w.clone(), d as usize));
        RatExpr::new(num, factors)
    }

    pub fn render(&self) -> String {
        let var = |k: usize| format!("S_{{{}}}", self.weights[k]);
        let mut out = String::new();
        for (i, (m, c)) in self.num.terms().iter().enumerate() {
            let mut parts = Vec::new();
            match m.ypow {
                0 => {}
                1 => parts.push("δ".to_string()),
                d => parts.push(format!("δ^{d}")),
            }
            for (k, &e) in m.chr.entries().iter().enumerate() {
                match e {
                    0 => {}
                    1 => parts.push(var(k)),
                    e => parts.push(format!("{}^{e}", var(k))),
                }
            }
            let mag = c.abs();
            if parts.is_empty() || !mag.is_one() {
                parts.insert(0, mag.to_string());
            }
            let sign = match (i, c.is_negative()) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            };
            out.push_str(sign);
            out.push_str(&parts.join("*"));
        }
        if out.is_empty() {
            out.push('0');
        }
        let den: Vec<String> = self
            .den
            .iter()
            .enumerate()
            .filter(|(_, &d)| d > 0)
            .map(|(k, &d)| if d == 1 { var(k) } else { format!("{}^{d}", var(k)) })
            .collect();
        if den.is_empty() {
            out
        } else {
            format!("({out}) / ({})", den.join("*"))
        }
    }
}

impl fmt::Display for SPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn horner(terms: &[(Vec<u32>, Q)], var: usize, subs: &[SparsePoly], arity: usize) -> SparsePoly {
    if terms.is_empty() {
        return SparsePoly::zero(arity);
    }
    if var == subs.len() {
        let c = terms.iter().fold(Q::zero(), |acc, (_, c)| acc + c);
        return SparsePoly::constant(arity, c);
    }
    let mut groups: BTreeMap<u32, Vec<(Vec<u32>, Q)>> = BTreeMap::new();
    for t in terms {
        groups.entry(t.0[var]).or_default().push(t.clone());
    }
    let top = *groups.keys().next_back().unwrap();
    let mut acc = SparsePoly::zero(arity);
    for e in (0..=top).rev() {
        acc = &acc * &subs[var];
        if let Some(g) = groups.get(&e) {
            acc = &acc + &horner(g, var + 1, subs, arity);
        }
    }
    acc
}

fn ambient(g: &GeometryConfig) -> Vec<Character> {
    g.indices().iter().map(|&j| g.coordinate_weight(j)).collect()
}

/// `Σ c_k y^k` at `y = -1 - δ`, as a polynomial in `δ` over `slots` S-variables.
fn y_to_delta(p: &SparsePoly, slots: usize) -> Result<SparsePoly> {
    let coeffs = p
        .y_coefficients()
        .ok_or_else(|| Error::StructuralRewriteFailed("coefficient depends on T".into()))?;
    let one = SparsePoly::one(slots);
    let minus_y = &one + &SparsePoly::y(slots);
    let mut acc = SparsePoly::zero(slots);
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        // c y^k = c (-1)^k (1 + δ)^k
        let sign = if k % 2 == 0 { c.clone() } else { -c.clone() };
        acc = &acc + &minus_y.pow(k as u32).scale(&sign);
    }
    Ok(acc)
}

/// Positive form of `CCQ_n` or `CQ_n`.
///
/// `CCQ_n` is rewritten term by term from its decomposition into hyperplane
/// pair complements, with `(-y)^k = (1 + δ)^k`. `CQ_n` follows the recursion
/// `CQ_n = (1 + δ) CQ_{n-2} + C^{n-2} · δ(T^2 - 1)/(S_a S_b)`, `a, b = t ± t_m`,
/// where `T^2 - 1` is `S_t^2 + 2S_t` for odd `n` and `S_a S_b + S_a + S_b`
/// for even `n`.
pub fn to_positive_form(kind: PositiveKind, n: usize) -> Result<SPolynomial> {
    if n < 2 {
        return Err(Error::InvalidDimension {
            n,
            reason: "positive forms need n >= 2",
        });
    }
    let g = GeometryConfig::new(n)?;
    let base = SPolynomial::constant(ambient(&g), Q::one());
    let mut out = match kind {
        PositiveKind::CCQ => ccq_form(&g, &base)?,
        PositiveKind::CQ => cq_form(&g, &base, n)?,
    };
    out.subject = Some(Subject { kind, n });
    Ok(out)
}

fn ccq_form(g: &GeometryConfig, base: &SPolynomial) -> Result<SPolynomial> {
    let class = affine_class(AffineSpace::CCQ, g.n())?;
    let expr = &class.values[0].expr;
    let mut acc = SPolynomial::constant(base.weights.clone(), Q::zero());
    for p in expr.terms() {
        let mut term = base.scale_delta(&y_to_delta(&p.coeff, base.slots())?);
        for f in &p.factors {
            term = term.mul(&base.factor(f)?);
        }
        acc = acc.add(&term);
    }
    Ok(acc)
}

fn cq_form(g: &GeometryConfig, base: &SPolynomial, n: usize) -> Result<SPolynomial> {
    if n < 2 {
        return Ok(base.clone());
    }
    let slots = base.slots();
    let top = (n / 2) as i32;
    let lower: Vec<i32> = g.indices().iter().copied().filter(|j| j.abs() < top).collect();
    let mut c_low = base.clone();
    for j in lower {
        c_low = c_low.mul(&base.factor(&Factor::H(g.coordinate_weight(j)))?);
    }
    let a = base.slot_of(&g.coordinate_weight(top))?;
    let b = base.slot_of(&g.coordinate_weight(-top))?;
    let (sa, sb) = (base.s(a), base.s(b));
    let t_squared_minus_one = if g.is_odd() {
        let st = base.s(base.slot_of(&g.t())?);
        &(&st * &st) + &st.scale(&q(2))
    } else {
        &(&(&sa * &sb) + &sa) + &sb
    };
    let mut den = vec![0; slots];
    den[a] = 1;
    den[b] = 1;
    let corr = base.with(&t_squared_minus_one * &base.delta(), den);
    let one_delta = &SparsePoly::one(slots) + &base.delta();
    let prev = cq_form(g, base, n - 2)?;
    Ok(prev.scale_delta(&one_delta).add(&c_low.mul(&corr)))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub delta: u32,
    pub s: Vec<i32>,
    pub coeff: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    pub subject: Option<Subject>,
    #[serde(serialize_with = "ser_spoly")]
    pub spoly: SPolynomial,
    pub terms: usize,
    pub nonnegative: bool,
    pub witness: Option<Witness>,
    pub roundtrip_ok: bool,
}

fn ser_spoly<S: serde::Serializer>(p: &SPolynomial, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(p)
}

/// Scans the coefficients and back-substitutes into `T, y`.
///
/// The round trip compares against the class named by the subject; forms
/// without a subject have nothing to compare with and report `false`.
pub fn check_nonnegative(p: &SPolynomial) -> Certificate {
    let witness = p.negative_terms().next().map(|(m, c)| Witness {
        delta: m.ypow,
        s: m.chr.entries().to_vec(),
        coeff: c.to_string(),
    });
    let roundtrip_ok = match p.subject {
        Some(sub) => roundtrip(p, sub).unwrap_or(false),
        None => false,
    };
    Certificate {
        subject: p.subject,
        spoly: p.clone(),
        terms: p.num.len(),
        nonnegative: witness.is_none(),
        witness,
        roundtrip_ok,
    }
}

fn roundtrip(p: &SPolynomial, sub: Subject) -> Result<bool> {
    let class = affine_class(sub.kind.space(), sub.n)?;
    Ok(p.to_ratexpr()?.equals(class.origin().unwrap()))
}

/// At `δ = 0` only the pure `S` part survives; it must match the class at
/// `y = -1`.
pub fn delta_zero_consistent(p: &SPolynomial) -> Result<bool> {
    let sub = p
        .subject
        .ok_or_else(|| Error::InvalidParameter("form has no subject".into()))?;
    let class = affine_class(sub.kind.space(), sub.n)?;
    let at_zero = p.with(p.num.subs_y(&Q::zero()), p.den.clone());
    Ok(at_zero.to_ratexpr()?.equals(&class.origin().unwrap().subs_y(&q(-1))))
}
