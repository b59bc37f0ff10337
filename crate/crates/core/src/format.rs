//! Plain-text and LaTeX rendering.
//!
//! Torus variables print as `T` (the scaling circle) and `T1, T2, ...`
//! (`T_{1}, ...` in LaTeX); `T^w` expands entrywise.

use num_traits::{One, Signed};

use crate::algebra::{Character, Monomial, RatExpr, SparsePoly, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Style {
    Text,
    Latex,
}

fn var_name(k: usize, style: Style) -> String {
    match (k, style) {
        (0, _) => "T".to_string(),
        (k, Style::Text) => format!("T{k}"),
        (k, Style::Latex) => format!("T_{{{k}}}"),
    }
}

fn power(base: &str, e: i64, style: Style) -> String {
    match (e, style) {
        (1, _) => base.to_string(),
        (e, Style::Text) => format!("{base}^{e}"),
        (e, Style::Latex) => format!("{base}^{{{e}}}"),
    }
}

/// `T^w` as a product of variable powers; empty for `w = 0`.
pub fn t_monomial(w: &Character, style: Style) -> Vec<String> {
    w.entries()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e != 0)
        .map(|(k, &e)| power(&var_name(k, style), e as i64, style))
        .collect()
}

fn monomial_factors(m: &Monomial, style: Style) -> Vec<String> {
    let mut f = Vec::new();
    if m.ypow > 0 {
        f.push(power("y", m.ypow as i64, style));
    }
    f.extend(t_monomial(&m.chr, style));
    f
}

fn join(factors: &[String], style: Style) -> String {
    match style {
        Style::Text => factors.join("*"),
        Style::Latex => factors.join(" "),
    }
}

pub fn rational(c: &Q, style: Style) -> String {
    if c.is_integer() {
        return c.numer().to_string();
    }
    match style {
        Style::Text => format!("{}/{}", c.numer(), c.denom()),
        Style::Latex => {
            let sign = if c.is_negative() { "-" } else { "" };
            format!("{sign}\\frac{{{}}}{{{}}}", c.numer().abs(), c.denom())
        }
    }
}

/// Joins signed terms as `a + b - c`.
fn signed_sum(terms: impl IntoIterator<Item = (bool, String)>) -> String {
    let mut out = String::new();
    for (i, (negative, body)) in terms.into_iter().enumerate() {
        match (i, negative) {
            (0, false) => out.push_str(&body),
            (0, true) => {
                out.push('-');
                out.push_str(&body);
            }
            (_, false) => {
                out.push_str(" + ");
                out.push_str(&body);
            }
            (_, true) => {
                out.push_str(" - ");
                out.push_str(&body);
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn poly(p: &SparsePoly, style: Style) -> String {
    signed_sum(p.terms().iter().map(|(m, c)| {
        let mag = c.abs();
        let mut factors = monomial_factors(m, style);
        if factors.is_empty() || !mag.is_one() {
            factors.insert(0, rational(&mag, style));
        }
        (c.is_negative(), join(&factors, style))
    }))
}

fn wrap(s: String, style: Style) -> String {
    match style {
        Style::Text => format!("({s})"),
        Style::Latex => format!("\\left({s}\\right)"),
    }
}

/// `(1 - T^w)` with the exponent spelled out.
pub fn one_minus(w: &Character, style: Style) -> String {
    wrap(format!("1 - {}", join(&t_monomial(w, style), style)), style)
}

pub fn ratexpr(r: &RatExpr, style: Style) -> String {
    let num = poly(r.numerator(), style);
    if r.denominator().is_empty() {
        return num;
    }
    let den: Vec<String> = r
        .denominator()
        .iter()
        .map(|(w, &k)| {
            let f = one_minus(w, style);
            if k == 1 {
                f
            } else {
                power(&f, k as i64, style)
            }
        })
        .collect();
    match style {
        Style::Text => format!("({num}) / {}", den.join("")),
        Style::Latex => format!("\\frac{{{num}}}{{{}}}", den.join(" ")),
    }
}
