//! Localized classes rebuilt from first principles: tangent weights at the
//! fixed points and the factor `h(T^w) = (1 + y T^w)/(1 - T^w)`, with no use
//! of the crate's class constructors.

#![allow(dead_code)]

use eck::algebra::{q, Character, RatExpr, SparsePoly};

pub fn arity(n: usize) -> usize {
    n / 2 + 1
}

pub fn indices(n: usize) -> Vec<i32> {
    let m = (n / 2) as i32;
    let mut v: Vec<i32> = (-m..=-1).collect();
    if n % 2 == 1 {
        v.push(0);
    }
    v.extend(1..=m);
    v
}

/// `t_j` with `t_{-j} = -t_j`, `t_0 = 0`.
pub fn tj(a: usize, j: i32) -> Character {
    let mut e = vec![0; a];
    if j != 0 {
        e[j.unsigned_abs() as usize] = j.signum();
    }
    Character::from_slice(&e)
}

pub fn t(a: usize) -> Character {
    let mut e = vec![0; a];
    e[0] = 1;
    Character::from_slice(&e)
}

/// Weight of the coordinate `x_j` on `C^n`.
pub fn coord(a: usize, j: i32) -> Character {
    &t(a) + &tj(a, j)
}

pub fn one(a: usize) -> RatExpr {
    RatExpr::one(a)
}

pub fn y(a: usize) -> RatExpr {
    RatExpr::from_poly(SparsePoly::y(a))
}

pub fn minus_y_pow(a: usize, k: u32) -> RatExpr {
    RatExpr::from_poly(SparsePoly::y(a).scale(&q(-1)).pow(k))
}

pub fn h(w: &Character) -> RatExpr {
    let a = w.arity();
    let num = &SparsePoly::one(a) + &(&SparsePoly::y(a) * &SparsePoly::t_mono(w));
    RatExpr::new(num, [w.clone()]).unwrap()
}

pub fn hm1(w: &Character) -> RatExpr {
    &h(w) - &one(w.arity())
}

pub fn prod(a: usize, items: impl IntoIterator<Item = RatExpr>) -> RatExpr {
    items.into_iter().fold(one(a), |acc, x| &acc * &x)
}

pub fn sum(a: usize, items: impl IntoIterator<Item = RatExpr>) -> RatExpr {
    items.into_iter().fold(RatExpr::zero(a), |acc, x| &acc + &x)
}

/// Tangent weights `t_j - t_i` at `p_i` of the projective space on `coords`.
pub fn tangent(a: usize, coords: &[i32], i: i32) -> Vec<Character> {
    coords
        .iter()
        .filter(|&&j| j != i)
        .map(|&j| &tj(a, j) - &tj(a, i))
        .collect()
}

pub fn p_local(a: usize, coords: &[i32], i: i32) -> RatExpr {
    prod(a, tangent(a, coords, i).iter().map(h))
}

/// Complement of `Σ x_{-j} x_j (+ x_0^2) = 0` at `p_i`.
pub fn qc_local(a: usize, coords: &[i32], i: i32) -> RatExpr {
    if i == 0 {
        return p_local(a, coords, i);
    }
    let normal = &tj(a, -i) - &tj(a, i);
    let rest = tangent(a, coords, i).into_iter().filter(|w| *w != normal);
    &hm1(&normal) * &prod(a, rest.map(|w| h(&w)))
}

/// The coordinate subspace `{x_j = 0 : j ∈ cut}` at `p_i`.
fn subspace_local(a: usize, coords: &[i32], cut: &[i32], i: i32) -> RatExpr {
    if cut.contains(&i) {
        return RatExpr::zero(a);
    }
    let normal: Vec<Character> = cut.iter().map(|&j| &tj(a, j) - &tj(a, i)).collect();
    prod(
        a,
        tangent(a, coords, i)
            .into_iter()
            .filter(|w| !normal.contains(w))
            .map(|w| h(&w)),
    )
}

/// `{x_{-m} x_m = 0}` at `p_i`.
pub fn x_local(n: usize, i: i32) -> RatExpr {
    let a = arity(n);
    let m = (n / 2) as i32;
    let c = indices(n);
    &(&subspace_local(a, &c, &[m], i) + &subspace_local(a, &c, &[-m], i)) - &subspace_local(a, &c, &[m, -m], i)
}

/// `C^n` minus the cone over the quadric on `coords`, by pushing the
/// projective complement through the blowup of the origin.
pub fn ccq_push(a: usize, coords: &[i32]) -> RatExpr {
    sum(a, coords.iter().map(|&i| &hm1(&coord(a, i)) * &qc_local(a, coords, i)))
}

pub fn cn(a: usize, coords: &[i32]) -> RatExpr {
    prod(a, coords.iter().map(|&j| h(&coord(a, j))))
}

/// `C^n` minus `{x_{-m} x_m = 0}`.
pub fn ccx(n: usize) -> RatExpr {
    let a = arity(n);
    let m = (n / 2) as i32;
    prod(
        a,
        indices(n).into_iter().map(|j| {
            if j.abs() == m {
                hm1(&coord(a, j))
            } else {
                h(&coord(a, j))
            }
        }),
    )
}
