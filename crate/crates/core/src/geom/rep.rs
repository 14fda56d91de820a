//! The 8-dimensional module `W(ϖ1)` and the one-parameter elements `Y_i(c)`.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cartan::WeightVec;

use super::{int, Rat};

/// Basis order `v1, v2, v3, v0, ∅, v̄3, v̄2, v̄1`.
pub const BASIS: [&str; 8] = ["v1", "v2", "v3", "v0", "empty", "vb3", "vb2", "vb1"];
const V1: usize = 0;
const V2: usize = 1;
const V3: usize = 2;
const V0: usize = 3;
const EMPTY: usize = 4;
const VB3: usize = 5;
const VB2: usize = 6;
const VB1: usize = 7;

pub type Mat8 = Vec<Vec<Rat>>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vector8(pub Vec<Rat>);

impl Vector8 {
    pub fn basis(k: usize) -> Self {
        let mut v = vec![Rat::zero(); 8];
        v[k] = Rat::one();
        Vector8(v)
    }

    pub fn apply(m: &Mat8, v: &Vector8) -> Vector8 {
        Vector8((0..8).map(|r| (0..8).fold(Rat::zero(), |acc, c| acc + &m[r][c] * &v.0[c])).collect())
    }
}

pub fn basis_weight(k: usize) -> WeightVec {
    let w = [
        WeightVec::new(-2, 1, 0),
        WeightVec::new(-1, -1, 1),
        WeightVec::new(-1, 2, -1),
        WeightVec::ZERO,
        WeightVec::ZERO,
        WeightVec::new(1, -2, 1),
        WeightVec::new(1, 1, -1),
        WeightVec::new(2, -1, 0),
    ];
    w[k]
}

fn zero8() -> Mat8 {
    vec![vec![Rat::zero(); 8]; 8]
}

fn half(n: i64) -> Rat {
    BigRational::new(n.into(), 2.into())
}

/// `(source, target, coefficient)` triples of each Chevalley generator.
fn table(f_side: bool, i: usize) -> Vec<(usize, usize, Rat)> {
    let one = || int(1);
    match (f_side, i) {
        (true, 0) => vec![
            (V0, V1, one()),
            (VB3, V2, one()),
            (VB2, V3, one()),
            (VB1, EMPTY, one()),
            (VB1, V0, half(1)),
            (EMPTY, V1, half(3)),
        ],
        (true, 1) => vec![(V1, V2, one()), (V3, V0, one()), (V0, VB3, int(2)), (VB2, VB1, one())],
        (true, 2) => vec![(V2, V3, one()), (VB3, VB2, one())],
        (false, 0) => vec![
            (V1, EMPTY, one()),
            (V1, V0, half(1)),
            (V2, VB3, one()),
            (V3, VB2, one()),
            (V0, VB1, one()),
            (EMPTY, VB1, half(3)),
        ],
        (false, 1) => vec![(V2, V1, one()), (V0, V3, int(2)), (VB3, V0, one()), (VB1, VB2, one())],
        (false, 2) => vec![(V3, V2, one()), (VB2, VB3, one())],
        _ => panic!("index {i} out of range"),
    }
}

fn matrix(f_side: bool, i: usize) -> Mat8 {
    let mut m = zero8();
    for (src, dst, k) in table(f_side, i) {
        m[dst][src] += k;
    }
    m
}

pub fn rep_f(i: usize) -> Mat8 {
    matrix(true, i)
}

pub fn rep_e(i: usize) -> Mat8 {
    matrix(false, i)
}

pub fn mat_mul(a: &Mat8, b: &Mat8) -> Mat8 {
    (0..8)
        .map(|r| (0..8).map(|c| (0..8).fold(Rat::zero(), |acc, k| acc + &a[r][k] * &b[k][c])).collect())
        .collect()
}

pub fn identity8() -> Mat8 {
    (0..8).map(|r| (0..8).map(|c| if r == c { Rat::one() } else { Rat::zero() }).collect()).collect()
}

fn pow_int(c: &Rat, k: i64) -> Rat {
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

/// `Y_i(c) = exp(f_i / c) · α_i^∨(c)`.
pub fn y_matrix(i: usize, c: &Rat) -> Mat8 {
    assert!(!c.is_zero(), "Y_i(c) needs c ≠ 0");
    let f = rep_f(i);
    let mut exp = identity8();
    let mut power = identity8();
    let mut fact = Rat::one();
    for k in 1..=3 {
        power = mat_mul(&power, &f);
        fact *= int(k) * c;
        for r in 0..8 {
            for s in 0..8 {
                exp[r][s] += &power[r][s] / &fact;
            }
        }
    }
    let mut diag = zero8();
    for k in 0..8 {
        diag[k][k] = pow_int(c, basis_weight(k).pair(i));
    }
    mat_mul(&exp, &diag)
}

/// `V1(x) = Y0(x0) Y1(x1) Y2(x2) Y1(x3) Y2(x4) Y1(x5) v1`.
pub fn v1_vector(x: &[Rat; 6]) -> Vector8 {
    let word = [0, 1, 2, 1, 2, 1];
    let mut v = Vector8::basis(V1);
    for k in (0..6).rev() {
        v = Vector8::apply(&y_matrix(word[k], &x[k]), &v);
    }
    v
}
