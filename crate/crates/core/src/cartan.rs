//! Cartan data for the two rank-3 affine algebras in play: G2(1) (the crystal
//! side) and D4(3) (the geometric side).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AlgebraId {
    G2_1,
    D4_3,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CartanError {
    #[error("simple root index {0} out of range 0..=2")]
    IndexOutOfRange(usize),
    #[error("level is not defined for {0:?}")]
    UnsupportedAlgebra(AlgebraId),
}

/// Classical weight `k0 Λ0 + k1 Λ1 + k2 Λ2 + d δ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightVec {
    pub lambda: [i64; 3],
    #[serde(default)]
    pub delta: i64,
}

impl WeightVec {
    pub const ZERO: WeightVec = WeightVec { lambda: [0; 3], delta: 0 };

    pub const fn new(k0: i64, k1: i64, k2: i64) -> Self {
        WeightVec { lambda: [k0, k1, k2], delta: 0 }
    }

    pub const fn with_delta(k0: i64, k1: i64, k2: i64, d: i64) -> Self {
        WeightVec { lambda: [k0, k1, k2], delta: d }
    }

    /// `⟨α_i^∨, self⟩`, read off the Λ_i coefficient.
    pub fn pair(&self, i: usize) -> i64 {
        self.lambda[i]
    }

    /// Drops the δ part.
    pub fn classical(&self) -> Self {
        WeightVec { lambda: self.lambda, delta: 0 }
    }
}

impl Add for WeightVec {
    type Output = WeightVec;
    fn add(self, o: WeightVec) -> WeightVec {
        WeightVec {
            lambda: [self.lambda[0] + o.lambda[0], self.lambda[1] + o.lambda[1], self.lambda[2] + o.lambda[2]],
            delta: self.delta + o.delta,
        }
    }
}

impl Sub for WeightVec {
    type Output = WeightVec;
    fn sub(self, o: WeightVec) -> WeightVec {
        self + (-o)
    }
}

impl Neg for WeightVec {
    type Output = WeightVec;
    fn neg(self) -> WeightVec {
        WeightVec { lambda: [-self.lambda[0], -self.lambda[1], -self.lambda[2]], delta: -self.delta }
    }
}

impl Mul<WeightVec> for i64 {
    type Output = WeightVec;
    fn mul(self, w: WeightVec) -> WeightVec {
        WeightVec { lambda: [self * w.lambda[0], self * w.lambda[1], self * w.lambda[2]], delta: self * w.delta }
    }
}

impl fmt::Display for WeightVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, &k) in self.lambda.iter().enumerate() {
            if k != 0 {
                parts.push(format!("{k}L{i}"));
            }
        }
        if self.delta != 0 {
            parts.push(format!("{}d", self.delta));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join("+").replace("+-", "-"))
        }
    }
}

pub fn cartan_matrix(alg: AlgebraId) -> [[i64; 3]; 3] {
    match alg {
        AlgebraId::G2_1 => [[2, -1, 0], [-1, 2, -1], [0, -3, 2]],
        AlgebraId::D4_3 => [[2, -1, 0], [-1, 2, -3], [0, -1, 2]],
    }
}

/// Λ-expansion of α_i: column i of the Cartan matrix, plus δ for α_0.
pub fn simple_root(alg: AlgebraId, i: usize) -> Result<WeightVec, CartanError> {
    if i > 2 {
        return Err(CartanError::IndexOutOfRange(i));
    }
    let a = cartan_matrix(alg);
    Ok(WeightVec {
        lambda: [a[0][i], a[1][i], a[2][i]],
        delta: i64::from(i == 0),
    })
}

/// `⟨c, w⟩` with `c = α0^∨ + 2α1^∨ + α2^∨`.
pub fn level(alg: AlgebraId, w: &WeightVec) -> Result<i64, CartanError> {
    match alg {
        AlgebraId::G2_1 => Ok(w.lambda[0] + 2 * w.lambda[1] + w.lambda[2]),
        AlgebraId::D4_3 => Err(CartanError::UnsupportedAlgebra(alg)),
    }
}

/// Dominant weights of level `l` (coefficients nonnegative, δ = 0).
pub fn dominant_of_level(l: i64) -> Vec<WeightVec> {
    let mut out = Vec::new();
    for k1 in 0..=l / 2 {
        for k0 in 0..=l - 2 * k1 {
            out.push(WeightVec::new(k0, k1, l - 2 * k1 - k0));
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrices() {
        assert_eq!(cartan_matrix(AlgebraId::G2_1), [[2, -1, 0], [-1, 2, -1], [0, -3, 2]]);
        assert_eq!(cartan_matrix(AlgebraId::D4_3), [[2, -1, 0], [-1, 2, -3], [0, -1, 2]]);
        for alg in [AlgebraId::G2_1, AlgebraId::D4_3] {
            let a = cartan_matrix(alg);
            assert_eq!((a[0][0], a[1][1], a[2][2]), (2, 2, 2));
        }
    }

    #[test]
    fn transpose_duality() {
        let g = cartan_matrix(AlgebraId::G2_1);
        let d = cartan_matrix(AlgebraId::D4_3);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(g[i][j], d[j][i]);
            }
        }
    }

    #[test]
    fn roots() {
        assert_eq!(simple_root(AlgebraId::G2_1, 0).unwrap(), WeightVec::with_delta(2, -1, 0, 1));
        assert_eq!(simple_root(AlgebraId::G2_1, 1).unwrap(), WeightVec::new(-1, 2, -3));
        assert_eq!(simple_root(AlgebraId::G2_1, 2).unwrap(), WeightVec::new(0, -1, 2));
        assert_eq!(simple_root(AlgebraId::D4_3, 1).unwrap(), WeightVec::new(-1, 2, -1));
        assert_eq!(simple_root(AlgebraId::D4_3, 2).unwrap(), WeightVec::new(0, -3, 2));
        assert_eq!(simple_root(AlgebraId::D4_3, 3), Err(CartanError::IndexOutOfRange(3)));
    }

    #[test]
    fn pairing_recovers_matrix() {
        for alg in [AlgebraId::G2_1, AlgebraId::D4_3] {
            let a = cartan_matrix(alg);
            for i in 0..3 {
                let r = simple_root(alg, i).unwrap();
                for j in 0..3 {
                    assert_eq!(r.pair(j), a[j][i]);
                }
            }
        }
    }

    #[test]
    fn levels() {
        let l = |w| level(AlgebraId::G2_1, &w).unwrap();
        assert_eq!(l(WeightVec::new(1, 0, 0)), 1);
        assert_eq!(l(WeightVec::new(0, 1, 0)), 2);
        assert_eq!(l(WeightVec::new(2, 0, 1)), 3);
        assert_eq!(l(WeightVec::with_delta(0, 0, 0, 5)), 0);
        assert!(level(AlgebraId::D4_3, &WeightVec::ZERO).is_err());
        // the null root pairs to zero with every coroot
        let d = simple_root(AlgebraId::G2_1, 0).unwrap()
            + 2 * simple_root(AlgebraId::G2_1, 1).unwrap()
            + 3 * simple_root(AlgebraId::G2_1, 2).unwrap();
        assert_eq!(d.lambda, [0, 0, 0]);
    }

    #[test]
    fn dominant_counts() {
        assert_eq!(dominant_of_level(1).len(), 2);
        assert_eq!(dominant_of_level(2).len(), 4);
        assert!(dominant_of_level(2).contains(&WeightVec::new(0, 1, 0)));
    }
}
