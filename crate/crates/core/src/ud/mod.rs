//! The ultra-discretized crystal on `ℤ⁶`.
//!
//! Operators come from tables generated by tropicalizing the rational action
//! formulas with the parameter `c` kept symbolic, so `act(i, n, ·)` is the
//! tropical `e_i^c` at `c = n`. The tables are frozen in `tables.rs`; a test
//! regenerates them and compares byte for byte.

pub mod printed;
mod tables;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cartan::WeightVec;
use crate::crystal::{CrystalElt, ExtInt};
use crate::geom::GeomCrystal;
use crate::trop::{simplify, ud, TropPoly, TropRat};

pub use tables::TABLES;

/// Variable order of a table term: `c, x0, …, x5`.
pub const TERM_VARS: [&str; 7] = ["c", "x0", "x1", "x2", "x3", "x4", "x5"];

/// `(constant, coefficients over TERM_VARS)`.
pub type Term = (i64, [i64; 7]);

/// Increment of coordinate `coord` under `e_index`, as `max num − max den`.
#[derive(Debug)]
pub struct Increment {
    pub index: usize,
    pub coord: usize,
    pub source: &'static str,
    pub num: &'static [Term],
    pub den: &'static [Term],
}

/// Which formula drives each coordinate of each operator.
const SOURCES: [(usize, usize, &str); 11] = [
    (0, 0, "R0"),
    (0, 1, "R1"),
    (0, 2, "R2"),
    (0, 3, "R3"),
    (0, 4, "R4"),
    (0, 5, "R5"),
    (1, 1, "C1"),
    (1, 3, "C3"),
    (1, 5, "C5"),
    (2, 2, "C2"),
    (2, 4, "C4"),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct XPoint {
    pub x: [i64; 6],
}

impl XPoint {
    pub const ZERO: XPoint = XPoint { x: [0; 6] };

    pub fn new(x: [i64; 6]) -> Self {
        XPoint { x }
    }
}

impl fmt::Display for XPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d, e, g] = self.x;
        write!(f, "x=({a},{b},{c},{d},{e},{g})")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GreekCombos {
    pub alpha: i64,
    pub beta: i64,
    pub gamma: i64,
    pub delta: i64,
    pub epsilon: i64,
    pub phi: i64,
}

impl GreekCombos {
    pub fn as_array(&self) -> [i64; 6] {
        [self.alpha, self.beta, self.gamma, self.delta, self.epsilon, self.phi]
    }
}

/// Exponent vectors of the six monomials of `E`.
pub fn combos(p: &XPoint) -> GreekCombos {
    let [x0, x1, x2, x3, x4, x5] = p.x;
    GreekCombos {
        alpha: 2 * x0 + x2 + x3,
        beta: x1 + x2 + 2 * x3 + x5,
        gamma: x0 + x1 + 3 * x3,
        delta: x0 + x2 + 2 * x3,
        epsilon: x0 + x1 + x2 + x4,
        phi: x0 + x1 + x2 + x3 + x5,
    }
}

pub fn wt(i: usize, p: &XPoint) -> i64 {
    let [x0, x1, x2, x3, x4, x5] = p.x;
    match i {
        0 => 2 * x0 - x1 - x3 - x5,
        1 => 2 * (x1 + x3 + x5) - x0 - x2 - x4,
        2 => 2 * (x2 + x4) - 3 * (x1 + x3 + x5),
        _ => panic!("index {i} out of range"),
    }
}

pub fn eps(i: usize, p: &XPoint) -> i64 {
    let [x0, x1, x2, x3, x4, x5] = p.x;
    match i {
        0 => combos(p).as_array().into_iter().max().unwrap() - (3 * x0 + x2 + x3),
        1 => (x0 - x1).max(x0 + x2 - 2 * x1 - x3).max(x0 + x2 + x4 - 2 * x1 - 2 * x3 - x5),
        2 => (3 * x1 - x2).max(3 * x1 + 3 * x3 - 2 * x2 - x4),
        _ => panic!("index {i} out of range"),
    }
}

pub fn phi(i: usize, p: &XPoint) -> i64 {
    eps(i, p) + wt(i, p)
}

fn eval_max(terms: &[Term], v: &[i64; 7]) -> i64 {
    terms
        .iter()
        .map(|(k, e)| k + e.iter().zip(v).map(|(a, b)| a * b).sum::<i64>())
        .max()
        .expect("nonempty max")
}

impl Increment {
    pub fn eval(&self, n: i64, p: &XPoint) -> i64 {
        let mut v = [n; 7];
        v[1..].copy_from_slice(&p.x);
        eval_max(self.num, &v) - eval_max(self.den, &v)
    }
}

/// `ẽ_i^n`; the crystal `f̃_i` is `n = -1` and `ẽ_i` is `n = 1`.
pub fn act(i: usize, n: i64, p: &XPoint) -> XPoint {
    assert!(i < 3, "index {i} out of range");
    let mut out = *p;
    for inc in TABLES.iter().filter(|t| t.index == i) {
        out.x[inc.coord] += inc.eval(n, p);
    }
    out
}

impl CrystalElt for XPoint {
    fn f(&self, i: usize) -> Option<Self> {
        Some(act(i, -1, self))
    }
    fn e(&self, i: usize) -> Option<Self> {
        Some(act(i, 1, self))
    }
    fn eps(&self, i: usize) -> ExtInt {
        ExtInt::Fin(eps(i, self))
    }
    fn phi(&self, i: usize) -> ExtInt {
        ExtInt::Fin(phi(i, self))
    }
    fn wt(&self) -> WeightVec {
        WeightVec::new(wt(0, self), wt(1, self), wt(2, self))
    }
}

/// Tropicalized and simplified formula behind one table entry.
pub fn generated_increment(name: &str) -> TropRat {
    let gc = GeomCrystal::standard();
    let e = gc.get(name).unwrap_or_else(|| panic!("no formula named {name}"));
    simplify(&ud(e))
}

fn term_array(p: &TropPoly) -> Vec<Term> {
    p.terms()
        .iter()
        .map(|t| {
            assert!(t.exps.keys().all(|v| TERM_VARS.contains(&v.as_str())), "unexpected variable in {t}");
            (t.konst, std::array::from_fn(|k| t.exp(TERM_VARS[k])))
        })
        .collect()
}

fn render_terms(ts: &[Term]) -> String {
    let parts: Vec<String> = ts
        .iter()
        .map(|(k, e)| {
            let es: Vec<String> = e.iter().map(|v| v.to_string()).collect();
            format!("({k}, [{}])", es.join(", "))
        })
        .collect();
    format!("&[{}]", parts.join(", "))
}

/// Source text of `tables.rs`, regenerated from the bundled formulas.
pub fn render_tables() -> String {
    let mut s = String::new();
    s.push_str("// Generated by `ultracrystal trop freeze`. Do not edit by hand.\n");
    s.push_str("use super::Increment;\n\n");
    s.push_str("#[rustfmt::skip]\n");
    s.push_str("pub static TABLES: [Increment; 11] = [\n");
    for (index, coord, name) in SOURCES {
        let t = generated_increment(name);
        s.push_str(&format!(
            "    Increment {{ index: {index}, coord: {coord}, source: \"{name}\",\n        num: {},\n        den: {} }},\n",
            render_terms(&term_array(&t.num)),
            render_terms(&term_array(&t.den)),
        ));
    }
    s.push_str("];\n");
    s
}

/// A table entry back as a `TropRat` over `c, x0, …, x5`.
pub fn table_as_trop(inc: &Increment) -> TropRat {
    use crate::trop::TropTerm;
    let poly = |ts: &[Term]| {
        TropPoly::from_terms(
            ts.iter().map(|(k, e)| TropTerm::new(*k, TERM_VARS.iter().zip(e).map(|(v, x)| (v.to_string(), *x)))),
        )
    };
    TropRat { num: poly(inc.num), den: poly(inc.den) }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UdViolation {
    pub kind: String,
    pub x: [i64; 6],
    pub m: i64,
    pub n: i64,
}

#[derive(Debug, Clone, Serialize)]
pub struct PrintedComparison {
    pub operator: usize,
    pub c: i64,
    pub reading: String,
    pub agrees: bool,
    pub counterexample: Option<[i64; 6]>,
}

#[derive(Debug, Clone, Serialize)]
pub struct UdReport {
    pub radius: i64,
    pub span: i64,
    pub points_checked: usize,
    pub violations: Vec<UdViolation>,
    /// Informational: the displayed formulas against the generated tables.
    pub printed: Vec<PrintedComparison>,
    pub pass: bool,
}

fn apply_seq(p: &XPoint, w: &[(usize, i64)]) -> XPoint {
    w.iter().rev().fold(*p, |acc, (i, n)| act(*i, *n, &acc))
}

fn check_ud_point(p: &XPoint, span: i64) -> Vec<UdViolation> {
    let a = crate::cartan::cartan_matrix(crate::cartan::AlgebraId::D4_3);
    let mut out = Vec::new();
    let mut bad = |kind: &str, m: i64, n: i64| out.push(UdViolation { kind: kind.into(), x: p.x, m, n });
    for i in 0..3 {
        let q = act(i, -1, p);
        let shifts_ok = eps(i, &q) == eps(i, p) + 1
            && phi(i, &q) == phi(i, p) - 1
            && (0..3).all(|j| wt(j, &q) == wt(j, p) - a[i][j]);
        if !shifts_ok {
            bad(&format!("shifts-{i}"), -1, 0);
        }
    }
    for m in -span..=span {
        for n in -span..=span {
            for i in 0..3 {
                if act(i, m, &act(i, n, p)) != act(i, m + n, p) {
                    bad(&format!("action-{i}"), m, n);
                }
            }
            if apply_seq(p, &[(0, m), (1, m + n), (0, n)]) != apply_seq(p, &[(1, n), (0, m + n), (1, m)]) {
                bad("braid-01", m, n);
            }
            let l = apply_seq(p, &[(1, m), (2, 3 * m + n), (1, 2 * m + n), (2, 3 * m + 2 * n), (1, m + n), (2, n)]);
            let r = apply_seq(p, &[(2, n), (1, m + n), (2, 3 * m + 2 * n), (1, 2 * m + n), (2, 3 * m + n), (1, m)]);
            if l != r {
                bad("braid-12", m, n);
            }
            if apply_seq(p, &[(0, m), (2, n)]) != apply_seq(p, &[(2, n), (0, m)]) {
                bad("commute-02", m, n);
            }
        }
    }
    out
}

/// Exhaustive checks on `[-radius, radius]^6` with exponents in `[-span, span]`:
/// crystal shifts, the ℤ-action, and the tropical braid and commutation
/// relations. Also compares the displayed formulas with the tables on the
/// same cube (reported, not part of `pass`).
pub fn verify_ud(radius: i64, span: i64) -> UdReport {
    use rayon::prelude::*;
    let pts = crate::omega::cube(radius);
    let mut violations: Vec<UdViolation> = pts.flat_map_iter(|p| check_ud_point(&p, span)).collect();
    violations.sort_by(|a, b| (a.x, &a.kind, a.m, a.n).cmp(&(b.x, &b.kind, b.m, b.n)));
    let mut printed = Vec::new();
    for (i, c, reading) in [
        (0, -1, printed::LastRow::AsPrinted),
        (0, -1, printed::LastRow::Corrected),
        (0, 1, printed::LastRow::Corrected),
        (1, -1, printed::LastRow::Corrected),
        (1, 1, printed::LastRow::Corrected),
        (2, -1, printed::LastRow::Corrected),
        (2, 1, printed::LastRow::Corrected),
    ] {
        let first = printed::first_disagreement(i, c, radius, reading);
        printed.push(PrintedComparison {
            operator: i,
            c,
            reading: match reading {
                printed::LastRow::AsPrinted => "as-printed".into(),
                printed::LastRow::Corrected => "corrected".into(),
            },
            agrees: first.is_none(),
            counterexample: first.map(|p| p.x),
        });
    }
    UdReport {
        radius,
        span,
        points_checked: (2 * radius as usize + 1).pow(6),
        pass: violations.is_empty(),
        violations,
        printed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{cartan_matrix, AlgebraId};
    use crate::trop::oracle_check;
    use proptest::prelude::*;

    fn cube(r: i64) -> impl Iterator<Item = XPoint> {
        let side = 2 * r + 1;
        (0..side.pow(6)).map(move |mut k| {
            let mut x = [0; 6];
            for v in x.iter_mut() {
                *v = k % side - r;
                k /= side;
            }
            XPoint::new(x)
        })
    }

    #[test]
    fn frozen_tables_match_generator() {
        assert_eq!(render_tables(), include_str!("tables.rs"));
    }

    #[test]
    fn tables_pass_valuation_oracle() {
        let gc = GeomCrystal::standard();
        for inc in TABLES.iter() {
            let rep = oracle_check(gc.get(inc.source).unwrap(), &table_as_trop(inc), 30, 9).unwrap();
            assert!(rep.pass, "{}: {:?}", inc.source, rep.mismatches.first());
        }
    }

    #[test]
    fn combos_and_stats() {
        assert_eq!(combos(&XPoint::ZERO).as_array(), [0; 6]);
        assert_eq!(combos(&XPoint::new([1, 0, 0, 0, 0, 0])).as_array(), [2, 0, 1, 1, 1, 1]);
        assert_eq!(combos(&XPoint::new([0, 1, 1, 1, 1, 1])).as_array(), [2, 5, 4, 3, 3, 4]);
        let ones = XPoint::new([1; 6]);
        assert_eq!(wt(0, &ones), -1);
        assert_eq!(wt(1, &XPoint::new([0, 1, 0, 0, 0, 0])), 2);
        assert_eq!(eps(1, &ones), 0);
        assert_eq!(eps(0, &XPoint::new([1, 0, 0, 0, 0, 0])), -1);
        for i in 0..3 {
            assert_eq!(wt(i, &XPoint::ZERO), 0);
            assert_eq!(eps(i, &XPoint::ZERO), 0);
        }
    }

    #[test]
    fn inverse_sweep() {
        for p in cube(3) {
            for i in 0..3 {
                assert_eq!(act(i, 1, &act(i, -1, &p)), p, "i={i} {p}");
            }
        }
    }

    #[test]
    fn integer_action() {
        for p in cube(2) {
            for i in 0..3 {
                for m in -2..=2 {
                    for n in -2..=2 {
                        assert_eq!(act(i, m, &act(i, n, &p)), act(i, m + n, &p));
                    }
                }
            }
        }
    }

    #[test]
    fn tropical_verma_relations() {
        let seq = |p: &XPoint, w: &[(usize, i64)]| w.iter().rev().fold(*p, |acc, (i, n)| act(*i, *n, &acc));
        for p in cube(2) {
            for m in -1..=1 {
                for n in -1..=1 {
                    let l = seq(&p, &[(0, m), (1, m + n), (0, n)]);
                    let r = seq(&p, &[(1, n), (0, m + n), (1, m)]);
                    assert_eq!(l, r, "(0,1) at {p} m={m} n={n}");
                    let l = seq(&p, &[(1, m), (2, 3 * m + n), (1, 2 * m + n), (2, 3 * m + 2 * n), (1, m + n), (2, n)]);
                    let r = seq(&p, &[(2, n), (1, m + n), (2, 3 * m + 2 * n), (1, 2 * m + n), (2, 3 * m + n), (1, m)]);
                    assert_eq!(l, r, "(1,2) at {p} m={m} n={n}");
                    assert_eq!(seq(&p, &[(0, m), (2, n)]), seq(&p, &[(2, n), (0, m)]));
                }
            }
        }
    }

    proptest! {
        #[test]
        fn crystal_shifts(x in prop::array::uniform6(-20i64..20), i in 0usize..3) {
            let p = XPoint::new(x);
            let a = cartan_matrix(AlgebraId::D4_3);
            let q = act(i, -1, &p);
            prop_assert_eq!(eps(i, &q), eps(i, &p) + 1);
            prop_assert_eq!(phi(i, &q), phi(i, &p) - 1);
            for j in 0..3 {
                prop_assert_eq!(wt(j, &q), wt(j, &p) - a[i][j]);
                prop_assert_eq!(wt(j, &act(i, 4, &p)), wt(j, &p) + 4 * a[i][j]);
            }
        }
    }
}
