//! Weight conventions for the torus acting on `C^n` and `P^{n-1}`.
//!
//! Coordinates are labelled `j ∈ {-m, ..., -1, [0], 1, ..., m}` with `m =
//! floor(n/2)`, the label 0 present only for odd `n`. Coordinate `x_j` has
//! affine weight `t + t_j` under `t_{-j} = -t_j`, `t_0 = 0`, so the quadratic
//! form `Σ x_{-i} x_i (+ x_0^2)` has weight `2t`. The circle `t` acts
//! trivially on `P^{n-1}`, and the tangent weights at the fixed point `p_i`
//! are `t_j - t_i` for `j ≠ i`.
//!
//! Every character for a given `n` has arity `m + 1`, entry 0 being `t`.

use serde::Serialize;

use crate::algebra::Character;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GeometryConfig {
    n: usize,
    m: usize,
    indices: Vec<i32>,
}

impl GeometryConfig {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidDimension {
                n,
                reason: "ambient dimension must be at least 2",
            });
        }
        Ok(Self::any(n))
    }

    /// Also admits the degenerate `n = 0, 1` used as recursion bases.
    pub(crate) fn any(n: usize) -> Self {
        let m = n / 2;
        let mut indices: Vec<i32> = (1..=m as i32).rev().map(|j| -j).collect();
        if n % 2 == 1 {
            indices.push(0);
        }
        indices.extend(1..=m as i32);
        GeometryConfig { n, m, indices }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn is_odd(&self) -> bool {
        self.n % 2 == 1
    }

    /// Lattice arity `m + 1`.
    pub fn arity(&self) -> usize {
        self.m + 1
    }

    pub fn indices(&self) -> &[i32] {
        &self.indices
    }

    /// `t_j` in this lattice.
    pub fn t_index(&self, j: i32) -> Character {
        Character::torus(self.arity(), j)
    }

    /// `t` in this lattice.
    pub fn t(&self) -> Character {
        Character::basis(self.arity(), 0)
    }

    /// Affine weight `t + t_j` of the coordinate `x_j`.
    pub fn coordinate_weight(&self, j: i32) -> Character {
        &self.t() + &self.t_index(j)
    }

    /// Tangent weights of `P^{n-1}` at `p_i`, in index order of `j`.
    pub fn tangent_weights(&self, i: i32) -> Vec<Character> {
        let ti = self.t_index(i);
        self.indices
            .iter()
            .filter(|&&j| j != i)
            .map(|&j| &self.t_index(j) - &ti)
            .collect()
    }
}

/// One fixed point of `P^{n-1}` with its local data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPointData {
    pub point: i32,
    pub tangent: Vec<Character>,
    pub coordinate_weight: Character,
}

/// Weights `t + t_j` of the coordinates of `C^n`, in index order.
pub fn ambient_weights(n: usize) -> Result<Vec<Character>> {
    if n < 1 {
        return Err(Error::InvalidDimension {
            n,
            reason: "affine space needs n >= 1",
        });
    }
    Ok(ambient_weights_any(n))
}

pub(crate) fn ambient_weights_any(n: usize) -> Vec<Character> {
    let g = GeometryConfig::any(n);
    g.indices().iter().map(|&j| g.coordinate_weight(j)).collect()
}

pub fn projective_fixed_data(n: usize) -> Result<Vec<FixedPointData>> {
    let g = GeometryConfig::new(n)?;
    Ok(fixed_data(&g))
}

pub(crate) fn fixed_data(g: &GeometryConfig) -> Vec<FixedPointData> {
    g.indices()
        .iter()
        .map(|&i| FixedPointData {
            point: i,
            tangent: g.tangent_weights(i),
            coordinate_weight: g.coordinate_weight(i),
        })
        .collect()
}

/// The lattice involution `t_k ↦ -t_k` (`t` fixed), which pairs `p_i` with `p_{-i}`.
pub fn involution(c: &Character) -> Character {
    let e: Vec<i32> = c
        .entries()
        .iter()
        .enumerate()
        .map(|(k, &x)| if k == 0 { x } else { -x })
        .collect();
    Character::from_slice(&e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ch(e: &[i32]) -> Character {
        Character::from_slice(e)
    }

    #[test]
    fn ambient_weights_small() {
        assert_eq!(ambient_weights(2).unwrap(), vec![ch(&[1, -1]), ch(&[1, 1])]);
        assert_eq!(
            ambient_weights(3).unwrap(),
            vec![ch(&[1, -1]), ch(&[1, 0]), ch(&[1, 1])]
        );
        let w5 = ambient_weights(5).unwrap();
        assert_eq!(w5.len(), 5);
        for w in [
            ch(&[1, 1, 0]),
            ch(&[1, -1, 0]),
            ch(&[1, 0, 1]),
            ch(&[1, 0, -1]),
            ch(&[1, 0, 0]),
        ] {
            assert!(w5.contains(&w));
        }
        assert!(ambient_weights(0).is_err());
    }

    #[test]
    fn pair_weights_sum_to_2t() {
        for n in 2..=9 {
            let g = GeometryConfig::new(n).unwrap();
            for j in 1..=g.m() as i32 {
                assert_eq!(&g.coordinate_weight(j) + &g.coordinate_weight(-j), g.t().scale(2));
            }
        }
    }

    #[test]
    fn tangent_examples() {
        let d2 = projective_fixed_data(2).unwrap();
        let p1 = d2.iter().find(|d| d.point == 1).unwrap();
        assert_eq!(p1.tangent, vec![ch(&[0, -2])]);

        let d3 = projective_fixed_data(3).unwrap();
        let p0 = d3.iter().find(|d| d.point == 0).unwrap();
        assert_eq!(p0.tangent, vec![ch(&[0, -1]), ch(&[0, 1])]);

        let d4 = projective_fixed_data(4).unwrap();
        let p1 = d4.iter().find(|d| d.point == 1).unwrap();
        let mut got = p1.tangent.clone();
        got.sort();
        let mut expect = vec![ch(&[0, -1, 1]), ch(&[0, -1, -1]), ch(&[0, -2, 0])];
        expect.sort();
        assert_eq!(got, expect);
        assert_eq!(p1.coordinate_weight, ch(&[1, 1, 0]));
    }

    #[test]
    fn index_order_and_counts() {
        assert_eq!(GeometryConfig::new(5).unwrap().indices(), &[-2, -1, 0, 1, 2]);
        assert_eq!(GeometryConfig::new(4).unwrap().indices(), &[-2, -1, 1, 2]);
        assert!(GeometryConfig::new(1).is_err());
        for n in 2..=9 {
            let data = projective_fixed_data(n).unwrap();
            assert_eq!(data.len(), n);
            let total: usize = data.iter().map(|d| d.tangent.len()).sum();
            assert_eq!(total, n * (n - 1));
            assert!(data.iter().flat_map(|d| &d.tangent).all(|w| w.entries()[0] == 0));
        }
    }

    #[test]
    fn involution_relabels_tangent_spaces() {
        for n in 2..=8 {
            let g = GeometryConfig::new(n).unwrap();
            for &i in g.indices() {
                let mut a: Vec<_> = g.tangent_weights(i).iter().map(involution).collect();
                let mut b = g.tangent_weights(-i);
                a.sort();
                b.sort();
                assert_eq!(a, b);
            }
        }
    }
}
