//! The positive geometric crystal on `V_1(x)` for `D4^(3)`, in exact rational
//! arithmetic, with randomized checks of the geometric crystal axioms.

pub mod rep;
pub mod schubert;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::cartan::{cartan_matrix, AlgebraId};
use crate::trop::{parse_named, ExprError, PosExpr};

pub type Rat = BigRational;

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Reduced-word coordinates for `(0,1,2,1,2,1)`.
pub const WORD: [usize; 6] = [0, 1, 2, 1, 2, 1];

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeomError {
    #[error("coordinate {0} is not strictly positive")]
    NotPositive(usize),
    #[error("index {0} out of range")]
    Index(usize),
    #[error(transparent)]
    Expr(#[from] ExprError),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatPoint([Rat; 6]);

impl RatPoint {
    pub fn new(x: [Rat; 6]) -> Result<Self, GeomError> {
        match x.iter().position(|v| !v.is_positive()) {
            Some(k) => Err(GeomError::NotPositive(k)),
            None => Ok(RatPoint(x)),
        }
    }

    pub fn ones() -> Self {
        RatPoint(std::array::from_fn(|_| int(1)))
    }

    pub fn coords(&self) -> &[Rat; 6] {
        &self.0
    }

    fn env(&self, c: &Rat) -> BTreeMap<String, Rat> {
        let mut m: BTreeMap<String, Rat> = (0..6).map(|k| (format!("x{k}"), self.0[k].clone())).collect();
        m.insert("c".into(), c.clone());
        m
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(|v| v.to_string()).collect()
    }
}

impl fmt::Display for RatPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(", "))
    }
}

pub const FORMULAS: &str = include_str!("../../data/d43.expr");

/// Transcribed action data. Cloning and editing lets tests corrupt a single
/// ingredient.
#[derive(Debug, Clone)]
pub struct GeomCrystal {
    defs: BTreeMap<String, PosExpr>,
}

impl GeomCrystal {
    pub fn standard() -> &'static GeomCrystal {
        static CELL: OnceLock<GeomCrystal> = OnceLock::new();
        CELL.get_or_init(|| GeomCrystal::from_text(FORMULAS).expect("bundled formulas parse"))
    }

    pub fn from_text(text: &str) -> Result<GeomCrystal, ExprError> {
        Ok(GeomCrystal { defs: parse_named(text)?.into_iter().collect() })
    }

    pub fn get(&self, name: &str) -> Option<&PosExpr> {
        self.defs.get(name)
    }

    pub fn definitions(&self) -> &BTreeMap<String, PosExpr> {
        &self.defs
    }

    /// Number of monomials in the sum defining `G`.
    pub fn g_len(&self) -> usize {
        self.defs["G"].summands().len()
    }

    /// Copy with the `k`-th monomial of `G` removed.
    pub fn without_g_monomial(&self, k: usize) -> GeomCrystal {
        let parts: Vec<PosExpr> = self.defs["G"].summands().into_iter().cloned().collect();
        let kept = parts.into_iter().enumerate().filter(|(j, _)| *j != k).map(|(_, p)| p);
        let g = kept.reduce(PosExpr::add).expect("G has more than one monomial");
        let mut defs = self.defs.clone();
        defs.insert("G".into(), g);
        GeomCrystal { defs }
    }

    fn eval(&self, name: &str, x: &RatPoint, c: &Rat) -> Rat {
        self.defs[name].eval_map(&x.env(c)).expect("closed formula on a positive point")
    }

    /// `e_i^c(x)`.
    pub fn e_act(&self, i: usize, c: &Rat, x: &RatPoint) -> Result<RatPoint, GeomError> {
        if !c.is_positive() {
            return Err(GeomError::NotPositive(6));
        }
        let mut y = x.0.clone();
        match i {
            0 => {
                let d = self.eval("D", x, c);
                let e = self.eval("E", x, c);
                let f = self.eval("F", x, c);
                let g = self.eval("G", x, c);
                let h = self.eval("H", x, c);
                let ce = c * &e;
                let c3e3 = &ce * &ce * &ce;
                let mult = [
                    &d / &ce,
                    &f / &ce,
                    &g / &c3e3,
                    &d * &h / (c * &ce * &f),
                    &d * &d * &d / (c * c * c * &g),
                    &d / (c * &h),
                ];
                for (k, m) in mult.iter().enumerate() {
                    y[k] *= m;
                }
            }
            1 => {
                for k in [1, 3, 5] {
                    y[k] *= self.eval(&format!("C{k}"), x, c);
                }
            }
            2 => {
                for k in [2, 4] {
                    y[k] *= self.eval(&format!("C{k}"), x, c);
                }
            }
            _ => return Err(GeomError::Index(i)),
        }
        Ok(RatPoint(y))
    }

    pub fn eps(&self, i: usize, x: &RatPoint) -> Result<Rat, GeomError> {
        if i > 2 {
            return Err(GeomError::Index(i));
        }
        Ok(self.eval(&format!("eps{i}"), x, &Rat::one()))
    }

    pub fn gamma(&self, i: usize, x: &RatPoint) -> Result<Rat, GeomError> {
        if i > 2 {
            return Err(GeomError::Index(i));
        }
        Ok(self.eval(&format!("gamma{i}"), x, &Rat::one()))
    }
}

pub fn e_act(i: usize, c: &Rat, x: &RatPoint) -> Result<RatPoint, GeomError> {
    GeomCrystal::standard().e_act(i, c, x)
}

pub fn eps(i: usize, x: &RatPoint) -> Result<Rat, GeomError> {
    GeomCrystal::standard().eps(i, x)
}

pub fn gamma(i: usize, x: &RatPoint) -> Result<Rat, GeomError> {
    GeomCrystal::standard().gamma(i, x)
}

/// Positive rational with numerator and denominator in `1..=7`.
pub fn random_rat(rng: &mut impl Rng) -> Rat {
    ratio(rng.gen_range(1..=7), rng.gen_range(1..=7))
}

pub fn random_point(rng: &mut impl Rng) -> RatPoint {
    RatPoint(std::array::from_fn(|_| random_rat(rng)))
}

fn rat_pow(c: &Rat, k: i64) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..k.unsigned_abs() {
        acc *= c;
    }
    if k < 0 {
        acc.recip()
    } else {
        acc
    }
}

/// Applies `e_{i_1}^{c_1} ⋯ e_{i_k}^{c_k}` with the rightmost factor first.
pub fn apply_word(gc: &GeomCrystal, word: &[(usize, Rat)], x: &RatPoint) -> RatPoint {
    word.iter().rev().fold(x.clone(), |acc, (i, c)| gc.e_act(*i, c, &acc).expect("valid index"))
}

/// Both sides of the six-factor relation for `a_ij = -3, a_ji = -1`.
pub fn six_factor_sides(gc: &GeomCrystal, i: usize, j: usize, c1: &Rat, c2: &Rat, x: &RatPoint) -> (RatPoint, RatPoint) {
    let p = |a: i64, b: i64| rat_pow(c1, a) * rat_pow(c2, b);
    let lhs = [(i, p(1, 0)), (j, p(3, 1)), (i, p(2, 1)), (j, p(3, 2)), (i, p(1, 1)), (j, p(0, 1))];
    let rhs = [(j, p(0, 1)), (i, p(1, 1)), (j, p(3, 2)), (i, p(2, 1)), (j, p(3, 1)), (i, p(1, 0))];
    (apply_word(gc, &lhs, x), apply_word(gc, &rhs, x))
}

fn braid3_sides(gc: &GeomCrystal, i: usize, j: usize, c1: &Rat, c2: &Rat, x: &RatPoint) -> (RatPoint, RatPoint) {
    let c12 = c1 * c2;
    let lhs = [(i, c1.clone()), (j, c12.clone()), (i, c2.clone())];
    let rhs = [(j, c2.clone()), (i, c12), (j, c1.clone())];
    (apply_word(gc, &lhs, x), apply_word(gc, &rhs, x))
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct GeomViolation {
    pub axiom: String,
    pub i: usize,
    pub j: Option<usize>,
    pub sample: usize,
    pub point: Vec<String>,
    pub c: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct GeomReport {
    pub samples: usize,
    pub seed: u64,
    pub checks: usize,
    pub violations: Vec<GeomViolation>,
    pub pass: bool,
}

/// All axiom checks at one random point. Returns `(checks, violations)`.
fn check_sample(gc: &GeomCrystal, seed: u64, sample: usize) -> (usize, Vec<GeomViolation>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(sample as u64);
    let x = random_point(&mut rng);
    let c1 = random_rat(&mut rng);
    let c2 = random_rat(&mut rng);
    let a = cartan_matrix(AlgebraId::D4_3);
    let mut checks = 0;
    let mut out = Vec::new();
    let mut record = |ok: bool, axiom: &str, i: usize, j: Option<usize>, cs: &[&Rat]| {
        checks += 1;
        if !ok {
            out.push(GeomViolation {
                axiom: axiom.into(),
                i,
                j,
                sample,
                point: x.to_strings(),
                c: cs.iter().map(|c| c.to_string()).collect(),
            });
        }
    };
    for i in 0..3 {
        let y = gc.e_act(i, &c1, &x).unwrap();
        record(gc.e_act(i, &Rat::one(), &x).unwrap() == x, "unit", i, None, &[]);
        record(y.0.iter().all(|v| v.is_positive()), "positivity", i, None, &[&c1]);
        for j in 0..3 {
            let ok = gc.gamma(j, &y).unwrap() == rat_pow(&c1, a[i][j]) * gc.gamma(j, &x).unwrap();
            record(ok, "gamma-shift", i, Some(j), &[&c1]);
        }
        record(gc.eps(i, &y).unwrap() == gc.eps(i, &x).unwrap() / &c1, "eps-shift", i, None, &[&c1]);
        let composed = gc.e_act(i, &c2, &y).unwrap();
        record(composed == gc.e_act(i, &(&c1 * &c2), &x).unwrap(), "action", i, None, &[&c1, &c2]);
    }
    for (i, j) in [(0, 2), (2, 0)] {
        let y = gc.e_act(j, &c1, &x).unwrap();
        record(gc.eps(i, &y).unwrap() == gc.eps(i, &x).unwrap(), "eps-commuting", i, Some(j), &[&c1]);
    }
    let lhs = gc.e_act(0, &c1, &gc.e_act(2, &c2, &x).unwrap()).unwrap();
    let rhs = gc.e_act(2, &c2, &gc.e_act(0, &c1, &x).unwrap()).unwrap();
    record(lhs == rhs, "commute", 0, Some(2), &[&c1, &c2]);
    let (l, r) = braid3_sides(gc, 0, 1, &c1, &c2, &x);
    record(l == r, "braid", 0, Some(1), &[&c1, &c2]);
    let (l, r) = six_factor_sides(gc, 1, 2, &c1, &c2, &x);
    record(l == r, "braid", 1, Some(2), &[&c1, &c2]);
    (checks, out)
}

pub fn axioms_check_with(gc: &GeomCrystal, samples: usize, seed: u64) -> GeomReport {
    let parts: Vec<(usize, Vec<GeomViolation>)> =
        (0..samples).into_par_iter().map(|k| check_sample(gc, seed, k)).collect();
    let checks = parts.iter().map(|p| p.0).sum();
    let violations: Vec<GeomViolation> = parts.into_iter().flat_map(|p| p.1).collect();
    GeomReport { samples, seed, checks, pass: violations.is_empty(), violations }
}

pub fn axioms_check(samples: usize, seed: u64) -> GeomReport {
    axioms_check_with(GeomCrystal::standard(), samples, seed)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    #[test]
    fn point_positivity() {
        let mut x: [Rat; 6] = std::array::from_fn(|_| int(1));
        assert!(RatPoint::new(x.clone()).is_ok());
        x[3] = int(0);
        assert_eq!(RatPoint::new(x), Err(GeomError::NotPositive(3)));
        assert!(e_act(0, &int(0), &RatPoint::ones()).is_err());
        assert!(e_act(3, &int(1), &RatPoint::ones()).is_err());
    }

    #[test]
    fn g_is_fully_transcribed() {
        assert_eq!(GeomCrystal::standard().g_len(), 56);
    }

    #[test]
    fn eps0_and_gamma_at_ones() {
        let x = RatPoint::ones();
        // E has six monomials
        assert_eq!(eps(0, &x).unwrap(), int(6));
        assert_eq!(eps(1, &x).unwrap(), int(3));
        assert_eq!(eps(2, &x).unwrap(), int(2));
        for i in 0..3 {
            assert_eq!(gamma(i, &x).unwrap(), int(1));
        }
    }

    #[test]
    fn action_property_for_e0() {
        let mut r = rng(11);
        for _ in 0..100 {
            let x = random_point(&mut r);
            let c1 = random_rat(&mut r);
            let c2 = random_rat(&mut r);
            let lhs = e_act(0, &c1, &e_act(0, &c2, &x).unwrap()).unwrap();
            assert_eq!(lhs, e_act(0, &(&c1 * &c2), &x).unwrap());
        }
    }

    #[test]
    fn seeded_axioms_pass() {
        let rep = axioms_check(6, 42);
        assert!(rep.pass, "{:?}", rep.violations);
        assert_eq!(rep.checks, 6 * 26);
    }

    #[test]
    fn dropping_a_g_monomial_breaks_axioms() {
        let bad = GeomCrystal::standard().without_g_monomial(17);
        assert_eq!(bad.g_len(), 55);
        let rep = axioms_check_with(&bad, 3, 42);
        assert!(!rep.pass);
        assert!(rep.violations.iter().any(|v| v.i == 0));
    }

    /// Only the orientation that matches the matrix (`a_12 = -3`) holds.
    #[test]
    fn six_factor_orientation() {
        let gc = GeomCrystal::standard();
        let mut r = rng(5);
        let mut reversed_fails = false;
        for _ in 0..10 {
            let x = random_point(&mut r);
            let c1 = random_rat(&mut r);
            let c2 = random_rat(&mut r);
            let (l, rr) = six_factor_sides(gc, 1, 2, &c1, &c2, &x);
            assert_eq!(l, rr);
            let (l, rr) = six_factor_sides(gc, 2, 1, &c1, &c2, &x);
            reversed_fails |= l != rr;
        }
        assert!(reversed_fails);
    }

    #[test]
    fn v1_stays_positive_under_e1_e2() {
        let mut r = rng(8);
        for _ in 0..10 {
            let x = random_point(&mut r);
            let c = random_rat(&mut r);
            for i in [1, 2] {
                let y = e_act(i, &c, &x).unwrap();
                assert!(rep::v1_vector(y.coords()).0.iter().all(|v| v.is_positive()));
            }
        }
    }
}
