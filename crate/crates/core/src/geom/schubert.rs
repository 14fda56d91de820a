//! Action, `ε` and `γ` on a product `Y_{i_1}(c_1) ⋯ Y_{i_k}(c_k)` for an
//! arbitrary word, from the Cartan matrix alone.

use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{random_point, random_rat, GeomCrystal, Rat, WORD};
use crate::cartan::{cartan_matrix, AlgebraId};

fn pow(c: &Rat, k: i64) -> Rat {
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

/// `1/T_m` for each position `m` with `i_m = i`, where
/// `T_m = c_1^{a_{i_1,i}} ⋯ c_{m-1}^{a_{i_{m-1},i}} c_m`.
fn inverse_t(word: &[usize], a: &[[i64; 3]; 3], i: usize, cs: &[Rat]) -> Vec<(usize, Rat)> {
    let mut prefix = Rat::one();
    let mut out = Vec::new();
    for (m, (&im, cm)) in word.iter().zip(cs).enumerate() {
        if im == i {
            out.push((m, (&prefix * cm).recip()));
        }
        prefix *= pow(cm, a[im][i]);
    }
    out
}

/// New coordinates of `e_i^c` applied to the product with coordinates `cs`.
pub fn schubert_c(word: &[usize], a: &[[i64; 3]; 3], i: usize, c: &Rat, cs: &[Rat]) -> Vec<Rat> {
    assert_eq!(word.len(), cs.len(), "word and coordinates differ in length");
    let inv = inverse_t(word, a, i, cs);
    if inv.is_empty() {
        return cs.to_vec();
    }
    (0..cs.len())
        .map(|j| {
            let mut num = Rat::zero();
            let mut den = Rat::zero();
            for (m, v) in &inv {
                num += if *m <= j { c * v } else { v.clone() };
                den += if *m < j { c * v } else { v.clone() };
            }
            &cs[j] * num / den
        })
        .collect()
}

pub fn schubert_eps(word: &[usize], a: &[[i64; 3]; 3], i: usize, cs: &[Rat]) -> Rat {
    inverse_t(word, a, i, cs).into_iter().fold(Rat::zero(), |acc, (_, v)| acc + v)
}

pub fn schubert_gamma(word: &[usize], a: &[[i64; 3]; 3], i: usize, cs: &[Rat]) -> Rat {
    word.iter().zip(cs).fold(Rat::one(), |acc, (&ik, ck)| acc * pow(ck, a[ik][i]))
}

#[derive(Debug, Clone, Serialize)]
pub struct SchubertMismatch {
    pub quantity: String,
    pub i: usize,
    pub point: Vec<String>,
    pub c: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SchubertReport {
    pub samples: usize,
    pub seed: u64,
    pub mismatches: Vec<SchubertMismatch>,
    pub pass: bool,
}

/// Generic formulas on the word `(0,1,2,1,2,1)` against the transcribed
/// `e_1`, `e_2`, `ε_1`, `ε_2`, `γ_1`, `γ_2` at seeded random points.
pub fn cross_check(samples: usize, seed: u64) -> SchubertReport {
    let a = cartan_matrix(AlgebraId::D4_3);
    let gc = GeomCrystal::standard();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut mismatches = Vec::new();
    for _ in 0..samples {
        let x = random_point(&mut rng);
        let c = random_rat(&mut rng);
        for i in [1, 2] {
            let checks = [
                ("action", schubert_c(&WORD, &a, i, &c, x.coords()).as_slice() == gc.e_act(i, &c, &x).unwrap().coords().as_slice()),
                ("eps", schubert_eps(&WORD, &a, i, x.coords()) == gc.eps(i, &x).unwrap()),
                ("gamma", schubert_gamma(&WORD, &a, i, x.coords()) == gc.gamma(i, &x).unwrap()),
            ];
            for (q, ok) in checks {
                if !ok {
                    mismatches.push(SchubertMismatch { quantity: q.into(), i, point: x.to_strings(), c: c.to_string() });
                }
            }
        }
    }
    SchubertReport { samples, seed, pass: mismatches.is_empty(), mismatches }
}

#[cfg(test)]
mod tests {
    use super::super::{e_act, eps, gamma, int, RatPoint};
    use super::*;

    #[test]
    fn unit_and_empty() {
        let a = cartan_matrix(AlgebraId::D4_3);
        let cs: Vec<Rat> = (1..=6).map(int).collect();
        assert_eq!(schubert_c(&WORD, &a, 1, &int(1), &cs), cs);
        // no position carries index 0 in this word
        assert_eq!(schubert_c(&[1, 2, 1], &a, 0, &int(5), &cs[..3]), cs[..3].to_vec());
    }

    #[test]
    fn gamma1_closed_form() {
        let a = cartan_matrix(AlgebraId::D4_3);
        let x: Vec<Rat> = [2, 3, 5, 7, 11, 13].into_iter().map(int).collect();
        let want = &x[1] * &x[1] * &x[3] * &x[3] * &x[5] * &x[5] / (&x[0] * &x[2] * &x[4]);
        assert_eq!(schubert_gamma(&WORD, &a, 1, &x), want);
        let ones = vec![int(1); 6];
        assert_eq!(schubert_gamma(&WORD, &a, 1, &ones), int(1));
    }

    #[test]
    fn matches_transcribed_formulas() {
        let a = cartan_matrix(AlgebraId::D4_3);
        let mut rng = ChaCha8Rng::seed_from_u64(100);
        for _ in 0..100 {
            let x: RatPoint = random_point(&mut rng);
            let c = random_rat(&mut rng);
            for i in [1, 2] {
                let generic = schubert_c(&WORD, &a, i, &c, x.coords());
                assert_eq!(generic.as_slice(), e_act(i, &c, &x).unwrap().coords().as_slice());
                assert_eq!(schubert_eps(&WORD, &a, i, x.coords()), eps(i, &x).unwrap());
                assert_eq!(schubert_gamma(&WORD, &a, i, x.coords()), gamma(i, &x).unwrap());
            }
        }
    }
}
