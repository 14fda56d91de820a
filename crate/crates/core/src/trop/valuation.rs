//! Degree at `t = ∞` after the substitution `v ↦ t^{m_v}`: the valuation that
//! defines ultra-discretization, computed exactly.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::expr::{ExprError, PosExpr};
use super::tropical::TropRat;

/// Polynomial in `t` with big-integer coefficients (exponent ↦ coefficient).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly(BTreeMap<u32, BigInt>);

impl UniPoly {
    pub fn monomial(k: u32, c: BigInt) -> Self {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert(k, c);
        }
        UniPoly(m)
    }

    pub fn one() -> Self {
        UniPoly::monomial(0, BigInt::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.0.keys().next_back().copied()
    }

    fn low(&self) -> Option<u32> {
        self.0.keys().next().copied()
    }

    pub fn add(&self, o: &UniPoly) -> UniPoly {
        let mut m = self.0.clone();
        for (k, c) in &o.0 {
            *m.entry(*k).or_insert_with(BigInt::zero) += c;
        }
        m.retain(|_, c| !c.is_zero());
        UniPoly(m)
    }

    pub fn mul(&self, o: &UniPoly) -> UniPoly {
        let mut m: BTreeMap<u32, BigInt> = BTreeMap::new();
        for (a, x) in &self.0 {
            for (b, y) in &o.0 {
                *m.entry(a + b).or_insert_with(BigInt::zero) += x * y;
            }
        }
        m.retain(|_, c| !c.is_zero());
        UniPoly(m)
    }

    fn shift_down(&self, k: u32) -> UniPoly {
        UniPoly(self.0.iter().map(|(e, c)| (e - k, c.clone())).collect())
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(e, c)| match (e, c.is_one()) {
                (0, _) => c.to_string(),
                (1, true) => "t".into(),
                (1, false) => format!("{c}*t"),
                (_, true) => format!("t^{e}"),
                (_, false) => format!("{c}*t^{e}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `num/den`, kept with no common power of `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniRat {
    pub num: UniPoly,
    pub den: UniPoly,
}

impl UniRat {
    fn normalized(num: UniPoly, den: UniPoly) -> UniRat {
        assert!(!den.is_zero(), "zero denominator");
        let k = match (num.low(), den.low()) {
            (Some(a), Some(b)) => a.min(b),
            _ => 0,
        };
        UniRat { num: num.shift_down(k), den: den.shift_down(k) }
    }

    pub fn constant(c: BigInt) -> UniRat {
        UniRat { num: UniPoly::monomial(0, c), den: UniPoly::one() }
    }

    /// `t^k` for any integer `k`.
    pub fn t_pow(k: i64) -> UniRat {
        let e = k.unsigned_abs() as u32;
        if k >= 0 {
            UniRat { num: UniPoly::monomial(e, BigInt::one()), den: UniPoly::one() }
        } else {
            UniRat { num: UniPoly::one(), den: UniPoly::monomial(e, BigInt::one()) }
        }
    }

    pub fn mul(&self, o: &UniRat) -> UniRat {
        UniRat::normalized(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    pub fn div(&self, o: &UniRat) -> UniRat {
        UniRat::normalized(self.num.mul(&o.den), self.den.mul(&o.num))
    }

    pub fn add(&self, o: &UniRat) -> UniRat {
        if self.den == o.den {
            return UniRat::normalized(self.num.add(&o.num), self.den.clone());
        }
        UniRat::normalized(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den))
    }
}

impl fmt::Display for UniRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.num, self.den)
    }
}

/// `deg num − deg den`; requires a nonzero numerator.
pub fn deg_inf(u: &UniRat) -> i64 {
    let n = u.num.degree().expect("zero numerator has no degree") as i64;
    n - u.den.degree().unwrap() as i64
}

pub fn substitute_monomial(e: &PosExpr, m: &BTreeMap<String, i64>) -> Result<UniRat, ExprError> {
    Ok(match e {
        PosExpr::Const(k) => UniRat::constant(BigInt::from(k.clone())),
        PosExpr::Var(v) => UniRat::t_pow(*m.get(v).ok_or_else(|| ExprError::Unassigned(v.clone()))?),
        PosExpr::Mul(a, b) => substitute_monomial(a, m)?.mul(&substitute_monomial(b, m)?),
        PosExpr::Div(a, b) => substitute_monomial(a, m)?.div(&substitute_monomial(b, m)?),
        PosExpr::Add(..) => {
            let mut parts = e.summands().into_iter();
            let mut acc = substitute_monomial(parts.next().unwrap(), m)?;
            for p in parts {
                acc = acc.add(&substitute_monomial(p, m)?);
            }
            acc
        }
        PosExpr::Pow(a, k) => {
            let base = substitute_monomial(a, m)?;
            let mut acc = UniRat::constant(BigInt::one());
            for _ in 0..*k {
                acc = acc.mul(&base);
            }
            acc
        }
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleMismatch {
    pub m: BTreeMap<String, i64>,
    pub degree: i64,
    pub tropical: i64,
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleReport {
    pub samples: usize,
    pub seed: u64,
    pub mismatches: Vec<OracleMismatch>,
    pub pass: bool,
}

/// Draws `samples` exponent vectors with entries in `[-4, 4]` and compares
/// the degree of the substituted expression with the tropical value.
pub fn oracle_check(e: &PosExpr, tr: &TropRat, samples: usize, seed: u64) -> Result<OracleReport, ExprError> {
    let mut vars: BTreeSet<String> = e.variables();
    vars.extend(tr.variables());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut mismatches = Vec::new();
    for _ in 0..samples {
        let m: BTreeMap<String, i64> = vars.iter().map(|v| (v.clone(), rng.gen_range(-4..=4))).collect();
        let degree = deg_inf(&substitute_monomial(e, &m)?);
        let tropical = tr.eval(&m)?;
        if degree != tropical {
            mismatches.push(OracleMismatch { m, degree, tropical });
        }
    }
    Ok(OracleReport { samples, seed, pass: mismatches.is_empty(), mismatches })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trop::expr::parse;
    use crate::trop::tropical::ud;

    fn m(vals: &[(&str, i64)]) -> BTreeMap<String, i64> {
        vals.iter().map(|(k, v)| (k.to_string(), *v)).collect()
    }

    #[test]
    fn hand_substitution() {
        let e = parse("c*x0/x1 + x2").unwrap();
        let pt = m(&[("x0", 2), ("x1", 1), ("x2", 5), ("c", -1)]);
        let u = substitute_monomial(&e, &pt).unwrap();
        assert_eq!(u.to_string(), "(1 + t^5)/(1)");
        assert_eq!(deg_inf(&u), 5);
        assert_eq!(ud(&e).eval(&pt).unwrap(), 5);
        assert_eq!(deg_inf(&substitute_monomial(&parse("7").unwrap(), &m(&[])).unwrap()), 0);
    }

    #[test]
    fn degree_is_additive() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let e1 = parse("x + y^2/(z + 1)").unwrap();
        let e2 = parse("(x*z + 2*y)/(x + y + z)").unwrap();
        for _ in 0..40 {
            let pt: BTreeMap<String, i64> = ["x", "y", "z"].iter().map(|v| (v.to_string(), rng.gen_range(-4..=4))).collect();
            let u1 = substitute_monomial(&e1, &pt).unwrap();
            let u2 = substitute_monomial(&e2, &pt).unwrap();
            assert_eq!(deg_inf(&u1.mul(&u2)), deg_inf(&u1) + deg_inf(&u2));
            assert_eq!(deg_inf(&u1.div(&u2)), deg_inf(&u1) - deg_inf(&u2));
        }
    }

    #[test]
    fn oracle_and_negative_control() {
        let e = parse("(c*x0/x1 + x0*x2/(x1^2*x3))/(x0/x1 + x0*x2/(x1^2*x3))").unwrap();
        let t = ud(&e);
        assert!(oracle_check(&e, &t, 50, 1).unwrap().pass);
        let mut bad = t.clone();
        let mut terms = bad.num.terms().to_vec();
        terms[0].konst += 1;
        bad.num = crate::trop::tropical::TropPoly::from_terms(terms);
        assert!(!oracle_check(&e, &bad, 50, 1).unwrap().pass);
    }
}
