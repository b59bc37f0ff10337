use std::fmt;
use std::ops::{Add, Neg, Sub};

use smallvec::SmallVec;

/// An element of the weight lattice spanned by `t, t_1, ..., t_m`.
///
/// Entry 0 is the coefficient of `t` (the scaling circle acting on the affine
/// cone), entry `k >= 1` the coefficient of `t_k`. A character `w` also names
/// the Laurent monomial `T^w = e^{-w}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Character(SmallVec<[i32; 6]>);

impl Character {
    pub fn zero(arity: usize) -> Self {
        Character(SmallVec::from_elem(0, arity))
    }

    pub fn from_slice(entries: &[i32]) -> Self {
        Character(SmallVec::from_slice(entries))
    }

    /// The basis character `e_k`; `k = 0` is `t`.
    pub fn basis(arity: usize, k: usize) -> Self {
        assert!(k < arity, "basis index {k} out of range for arity {arity}");
        let mut c = Self::zero(arity);
        c.0[k] = 1;
        c
    }

    /// `t_j` under the conventions `t_{-j} = -t_j` and `t_0 = 0`.
    pub fn torus(arity: usize, j: i32) -> Self {
        let mut c = Self::zero(arity);
        if j != 0 {
            let k = j.unsigned_abs() as usize;
            assert!(k < arity, "torus index {j} out of range for arity {arity}");
            c.0[k] = j.signum();
        }
        c
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[i32] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// First nonzero entry is positive.
    pub fn is_positive(&self) -> bool {
        self.0.iter().find(|&&e| e != 0).is_some_and(|&e| e > 0)
    }

    pub fn scale(&self, k: i32) -> Self {
        Character(self.0.iter().map(|&e| e * k).collect())
    }

    /// Extends with zero entries; never shrinks.
    pub fn padded(&self, arity: usize) -> Self {
        let mut c = self.clone();
        if arity > c.0.len() {
            c.0.resize(arity, 0);
        }
        c
    }

    fn zip_with(&self, other: &Self, f: impl Fn(i32, i32) -> i32) -> Self {
        let n = self.arity().max(other.arity());
        let get = |c: &Self, i: usize| c.0.get(i).copied().unwrap_or(0);
        Character((0..n).map(|i| f(get(self, i), get(other, i))).collect())
    }
}

impl Add for &Character {
    type Output = Character;
    fn add(self, rhs: &Character) -> Character {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Add for Character {
    type Output = Character;
    fn add(self, rhs: Character) -> Character {
        &self + &rhs
    }
}

impl Sub for &Character {
    type Output = Character;
    fn sub(self, rhs: &Character) -> Character {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Sub for Character {
    type Output = Character;
    fn sub(self, rhs: Character) -> Character {
        &self - &rhs
    }
}

impl Neg for &Character {
    type Output = Character;
    fn neg(self) -> Character {
        self.scale(-1)
    }
}

impl Neg for Character {
    type Output = Character;
    fn neg(self) -> Character {
        self.scale(-1)
    }
}

impl serde::Serialize for Character {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.0.as_slice().serialize(s)
    }
}

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

/// Writes the character additively, e.g. `t - t_1 + 2t_3`.
impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let name = if k == 0 { "t".to_string() } else { format!("t_{k}") };
            let sign = if e < 0 { "-" } else { "+" };
            if first {
                if e < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if e.abs() != 1 {
                write!(f, "{}", e.abs())?;
            }
            f.write_str(&name)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
