//! The perfect crystals `B_l` of type G2(1) and their limit `B_∞`.
//!
//! Coordinates `(b1, b2, b3, b̄3, b̄2, b̄1)` live in `ℤ/3`; they are stored
//! scaled by three so every comparison is an integer comparison.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cartan::{dominant_of_level, level, AlgebraId, WeightVec};
use crate::crystal::{bfs_graph, is_connected, CrystalElt, ExtInt, TLambda, Tensor};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Context {
    Limit,
    Level(i64),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PerfectError {
    #[error("t = {0:?} violates the congruence conditions")]
    Congruence([i64; 6]),
    #[error("t = {0:?} is not in B_{1}")]
    NotInLevel([i64; 6], i64),
    #[error("level must be positive, got {0}")]
    BadLevel(i64),
    #[error("case dispatch for t = {t:?} matched {matched:?} (expected exactly one)")]
    CaseDispatch { t: [i64; 6], matched: Vec<usize> },
    #[error("t = {0:?} is not a minimal element")]
    NotMinimal([i64; 6]),
    #[error("operator index {0} out of range")]
    Index(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BElt {
    t: [i64; 6],
    ctx: Context,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ZVector {
    pub z1: i64,
    pub z2: i64,
    pub z3: i64,
    pub three_z4: i64,
}

impl ZVector {
    /// `(0, z1, z1+z2, z1+z2+3z4, z1+z2+z3+3z4, 2z1+z2+z3+3z4)`
    pub fn a_vector(&self) -> [i64; 6] {
        let ZVector { z1, z2, z3, three_z4: w } = *self;
        [0, z1, z1 + z2, z1 + z2 + w, z1 + z2 + z3 + w, 2 * z1 + z2 + z3 + w]
    }
}

pub fn check_congruences(t: &[i64; 6]) -> bool {
    let [t1, t2, t3, tb3, tb2, tb1] = *t;
    t1.rem_euclid(3) == 0
        && tb1.rem_euclid(3) == 0
        && (t2 - t3).rem_euclid(3) == 0
        && (tb3 - tb2).rem_euclid(3) == 0
        && (t3 - tb3).rem_euclid(2) == 0
}

fn six_s(t: &[i64; 6]) -> i64 {
    let [t1, t2, t3, tb3, tb2, tb1] = *t;
    2 * t1 + 2 * t2 + t3 + tb3 + 2 * tb2 + 2 * tb1
}

fn exact_div(a: i64, d: i64) -> i64 {
    assert!(a % d == 0, "non-integral statistic {a}/{d}");
    a / d
}

/// Operator deltas in scaled units, one arm per table row.
const F0_DELTA: [[i64; 6]; 8] = [
    [3, 0, 0, 0, 0, 0],   // F1
    [0, 0, 3, 3, 0, -3],  // F2
    [0, 0, 6, 0, -3, 0],  // F3
    [0, 1, 4, -2, -2, 0], // F4, 3z4 = 1
    [0, 2, 2, -4, -1, 0], // F4, 3z4 = 2
    [0, 3, 0, -6, 0, 0],  // F4 otherwise
    [3, 0, -3, -3, 0, 0], // F5
    [0, 0, 0, 0, 0, -3],  // F6
];

const E0_DELTA: [[i64; 6]; 8] = [
    [-3, 0, 0, 0, 0, 0],   // E1
    [0, 0, -3, -3, 0, 3],  // E2
    [0, -2, -2, 4, 1, 0],  // E3, 3z4 = -1
    [0, -1, -4, 2, 2, 0],  // E3, 3z4 = -2
    [0, 0, -6, 0, 3, 0],   // E3 otherwise
    [0, -3, 0, 6, 0, 0],   // E4
    [-3, 0, 3, 3, 0, 0],   // E5
    [0, 0, 0, 0, 0, 3],    // E6
];

impl BElt {
    pub fn new(t: [i64; 6], ctx: Context) -> Result<Self, PerfectError> {
        if !check_congruences(&t) {
            return Err(PerfectError::Congruence(t));
        }
        if let Context::Level(l) = ctx {
            if l < 1 {
                return Err(PerfectError::BadLevel(l));
            }
            if t.iter().any(|&v| v < 0) || six_s(&t) > 6 * l {
                return Err(PerfectError::NotInLevel(t, l));
            }
        }
        Ok(BElt { t, ctx })
    }

    pub fn limit(t: [i64; 6]) -> Result<Self, PerfectError> {
        BElt::new(t, Context::Limit)
    }

    pub fn zero(ctx: Context) -> Self {
        BElt { t: [0; 6], ctx }
    }

    pub fn t(&self) -> [i64; 6] {
        self.t
    }

    pub fn context(&self) -> Context {
        self.ctx
    }

    pub fn with_context(&self, ctx: Context) -> Result<Self, PerfectError> {
        BElt::new(self.t, ctx)
    }

    pub fn s(&self) -> i64 {
        exact_div(six_s(&self.t), 6)
    }

    pub fn z(&self) -> ZVector {
        let [t1, t2, t3, tb3, tb2, tb1] = self.t;
        ZVector {
            z1: exact_div(tb1 - t1, 3),
            z2: exact_div(tb2 - tb3, 3),
            z3: exact_div(t3 - t2, 3),
            three_z4: exact_div(tb3 - t3, 2),
        }
    }

    pub fn a_vector(&self) -> [i64; 6] {
        self.z().a_vector()
    }

    /// Indices (1-based) of the (F) conditions that hold.
    pub fn f_conditions(&self) -> Vec<usize> {
        conditions(&self.z(), false)
    }

    pub fn e_conditions(&self) -> Vec<usize> {
        conditions(&self.z(), true)
    }

    pub fn case_f(&self) -> Result<usize, PerfectError> {
        unique(self.f_conditions(), self.t)
    }

    pub fn case_e(&self) -> Result<usize, PerfectError> {
        unique(self.e_conditions(), self.t)
    }

    /// Applies f̃_i; `Ok(None)` is the null result at the boundary of `B_l`.
    pub fn try_f(&self, i: usize) -> Result<Option<BElt>, PerfectError> {
        let [_, t2, t3, tb3, tb2, _] = self.t;
        let d: [i64; 6] = match i {
            0 => {
                let z = self.z();
                let row = match self.case_f()? {
                    1 => 0,
                    2 => 1,
                    3 => 2,
                    4 => match z.three_z4 {
                        1 => 3,
                        2 => 4,
                        _ => 5,
                    },
                    5 => 6,
                    _ => 7,
                };
                F0_DELTA[row]
            }
            1 => {
                let (p, q) = (tb2 - tb3, t2 - t3);
                let m = f1_case(p, q, false).map_err(|matched| PerfectError::CaseDispatch { t: self.t, matched })?;
                [[-3, 3, 0, 0, 0, 0], [0, 0, -3, 3, 0, 0], [0, 0, 0, 0, -3, 3]][m]
            }
            2 => {
                if tb3 <= t3 {
                    [0, -1, 2, 0, 0, 0]
                } else {
                    [0, 0, 0, -2, 1, 0]
                }
            }
            _ => return Err(PerfectError::Index(i)),
        };
        self.shifted(d)
    }

    pub fn try_e(&self, i: usize) -> Result<Option<BElt>, PerfectError> {
        let [_, t2, t3, tb3, tb2, _] = self.t;
        let d: [i64; 6] = match i {
            0 => {
                let z = self.z();
                let row = match self.case_e()? {
                    1 => 0,
                    2 => 1,
                    3 => match z.three_z4 {
                        -1 => 2,
                        -2 => 3,
                        _ => 4,
                    },
                    4 => 5,
                    5 => 6,
                    _ => 7,
                };
                E0_DELTA[row]
            }
            1 => {
                let (p, q) = (tb2 - tb3, t2 - t3);
                let m = f1_case(p, q, true).map_err(|matched| PerfectError::CaseDispatch { t: self.t, matched })?;
                [[0, 0, 0, 0, 3, -3], [0, 0, 3, -3, 0, 0], [3, -3, 0, 0, 0, 0]][m]
            }
            2 => {
                if tb3 >= t3 {
                    [0, 0, 0, 2, -1, 0]
                } else {
                    [0, 1, -2, 0, 0, 0]
                }
            }
            _ => return Err(PerfectError::Index(i)),
        };
        self.shifted(d)
    }

    fn shifted(&self, d: [i64; 6]) -> Result<Option<BElt>, PerfectError> {
        let mut t = self.t;
        for k in 0..6 {
            t[k] += d[k];
        }
        if !check_congruences(&t) {
            return Err(PerfectError::Congruence(t));
        }
        match self.ctx {
            Context::Level(l) if t.iter().any(|&v| v < 0) || six_s(&t) > 6 * l => Ok(None),
            _ => Ok(Some(BElt { t, ctx: self.ctx })),
        }
    }

    fn level_term(&self) -> i64 {
        match self.ctx {
            Context::Limit => 0,
            Context::Level(l) => l,
        }
    }

    pub fn eps_i(&self, i: usize) -> i64 {
        let [_, t2, t3, tb3, tb2, tb1] = self.t;
        match i {
            0 => {
                let z = self.z();
                self.phi_i(0) - (2 * z.z1 + z.z2 + z.z3 + z.three_z4)
            }
            1 => exact_div(tb1 + (tb3 - tb2 + (t2 - t3).max(0)).max(0), 3),
            2 => tb2 + exact_div((t3 - tb3).max(0), 2),
            _ => panic!("index {i} out of range"),
        }
    }

    pub fn phi_i(&self, i: usize) -> i64 {
        let [t1, t2, t3, tb3, tb2, _] = self.t;
        match i {
            0 => self.level_term() - self.s() + *self.a_vector().iter().max().unwrap(),
            1 => exact_div(t1 + (t3 - t2 + (tb2 - tb3).max(0)).max(0), 3),
            2 => t2 + exact_div((tb3 - t3).max(0), 2),
            _ => panic!("index {i} out of range"),
        }
    }

    pub fn weight(&self) -> WeightVec {
        WeightVec::new(
            self.phi_i(0) - self.eps_i(0),
            self.phi_i(1) - self.eps_i(1),
            self.phi_i(2) - self.eps_i(2),
        )
    }

    pub fn eps_weight(&self) -> WeightVec {
        WeightVec::new(self.eps_i(0), self.eps_i(1), self.eps_i(2))
    }

    pub fn phi_weight(&self) -> WeightVec {
        WeightVec::new(self.phi_i(0), self.phi_i(1), self.phi_i(2))
    }

    pub fn is_minimal_shape(&self) -> bool {
        let [t1, t2, t3, tb3, tb2, tb1] = self.t;
        t1 == tb1 && t2 == t3 && t3 == tb3 && tb3 == tb2 && t1 >= 0 && t2 >= 0
    }

    pub fn to_json(&self) -> serde_json::Value {
        let ctx = match self.ctx {
            Context::Limit => serde_json::json!("limit"),
            Context::Level(l) => serde_json::json!({ "level": l }),
        };
        serde_json::json!({ "t": self.t, "context": ctx })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, String> {
        let t: [i64; 6] = serde_json::from_value(v["t"].clone()).map_err(|e| e.to_string())?;
        let ctx = match &v["context"] {
            serde_json::Value::String(s) if s == "limit" => Context::Limit,
            c => Context::Level(c["level"].as_i64().ok_or("bad context")?),
        };
        BElt::new(t, ctx).map_err(|e| e.to_string())
    }
}

fn third(t: i64) -> String {
    if t % 3 == 0 {
        (t / 3).to_string()
    } else {
        format!("{t}/3")
    }
}

impl fmt::Display for BElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.t.iter().map(|&t| third(t)).collect();
        write!(f, "b=({})", parts.join(","))
    }
}

impl Serialize for BElt {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl CrystalElt for BElt {
    fn f(&self, i: usize) -> Option<Self> {
        self.try_f(i).unwrap_or_else(|e| panic!("internal error in f~_{i}: {e}"))
    }
    fn e(&self, i: usize) -> Option<Self> {
        self.try_e(i).unwrap_or_else(|e| panic!("internal error in e~_{i}: {e}"))
    }
    fn eps(&self, i: usize) -> ExtInt {
        ExtInt::Fin(self.eps_i(i))
    }
    fn phi(&self, i: usize) -> ExtInt {
        ExtInt::Fin(self.phi_i(i))
    }
    fn wt(&self) -> WeightVec {
        self.weight()
    }
}

/// Conditions (F1)..(F6); with `e_side`, every `>` becomes `≥` and every `≤` becomes `<`.
fn conditions(z: &ZVector, e_side: bool) -> Vec<usize> {
    let ZVector { z1, z2, z3, three_z4: w } = *z;
    let le = |v: i64| if e_side { v < 0 } else { v <= 0 };
    let gt = |v: i64| if e_side { v >= 0 } else { v > 0 };
    let table = [
        le(z1 + z2 + z3 + w) && le(z1 + z2 + w) && le(z1 + z2) && le(z1),
        le(z1 + z2 + z3 + w) && le(z2 + w) && le(z2) && gt(z1),
        le(z1 + z3 + w) && le(z3 + w) && le(w) && gt(z2) && gt(z1 + z2),
        gt(z1 + z2 + w) && gt(z2 + w) && gt(w) && le(z3) && le(z1 + z3),
        gt(z1 + z2 + z3 + w) && gt(z3 + w) && gt(z3) && le(z1),
        gt(z1 + z2 + z3 + w) && gt(z1 + z3 + w) && gt(z1 + z3) && gt(z1),
    ];
    (1..=6).filter(|&k| table[k - 1]).collect()
}

fn unique(matched: Vec<usize>, t: [i64; 6]) -> Result<usize, PerfectError> {
    if matched.len() == 1 {
        Ok(matched[0])
    } else {
        Err(PerfectError::CaseDispatch { t, matched })
    }
}

/// Row of the i = 1 tables, with `p = 3(b̄2 − b̄3)`, `q = 3(b2 − b3)`.
fn f1_case(p: i64, q: i64, e_side: bool) -> Result<usize, Vec<usize>> {
    let hits: Vec<usize> = if !e_side {
        [p.max(0) <= q, p <= 0 && 0 < -q, p > q.max(0)]
    } else {
        [p >= q.max(0), p < 0 && 0 <= -q, p.max(0) < q]
    }
    .iter()
    .enumerate()
    .filter_map(|(k, &h)| h.then_some(k))
    .collect();
    if hits.len() == 1 {
        Ok(hits[0])
    } else {
        Err(hits)
    }
}

/// All of `B_l`, lexicographic in `t`.
pub fn enumerate(l: i64) -> Result<Vec<BElt>, PerfectError> {
    if l < 1 {
        return Err(PerfectError::BadLevel(l));
    }
    let ctx = Context::Level(l);
    let hi = 3 * l;
    let mut out = Vec::new();
    // b3, b̄3 enter s with weight 1/2, so they range up to 2l
    for t1 in (0..=hi).step_by(3) {
        for t2 in 0..=hi {
            for t3 in 0..=2 * hi {
                for tb3 in 0..=2 * hi {
                    for tb2 in 0..=hi {
                        for tb1 in (0..=hi).step_by(3) {
                            let t = [t1, t2, t3, tb3, tb2, tb1];
                            if check_congruences(&t) && six_s(&t) <= 6 * l {
                                out.push(BElt { t, ctx });
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `{(α,β,β,β,β,α) : 2α + 3β ≤ l}` with α ∈ ℤ≥0, β ∈ ℤ≥0/3, in `t` order.
pub fn minimal_elements(l: i64) -> Result<Vec<BElt>, PerfectError> {
    if l < 1 {
        return Err(PerfectError::BadLevel(l));
    }
    let mut out = Vec::new();
    for a in 0..=l / 2 {
        for k in 0..=(l - 2 * a) {
            out.push(BElt::new([3 * a, k, k, k, k, 3 * a], Context::Level(l))?);
        }
    }
    out.sort();
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct PerfectReport {
    pub level: i64,
    pub size: usize,
    pub tensor_square_connected: bool,
    pub lambda0: Option<WeightVec>,
    pub lambda0_unique_element: bool,
    pub weight_cone_ok: bool,
    pub minimal_count: usize,
    pub minimal_matches_definition: bool,
    pub dominant_count: usize,
    pub eps_bijective: bool,
    pub phi_bijective: bool,
    pub condition_iii: &'static str,
    pub pass: bool,
}

/// `w ∈ λ0 − ℤ≥0 α1 − ℤ≥0 α2`. The Λ0 and Λ1 coordinates determine the
/// multiplicities; the Λ2 coordinate must then agree.
fn in_cone(lambda0: &WeightVec, w: &WeightVec) -> bool {
    let d = *lambda0 - *w;
    let m1 = -d.lambda[0];
    // Λ1: 2 m1 − m2 = d1 ; Λ2: −3 m1 + 2 m2 = d2
    let m2 = 2 * m1 - d.lambda[1];
    m1 >= 0 && m2 >= 0 && -3 * m1 + 2 * m2 == d.lambda[2]
}

pub fn perfect_check(l: i64) -> Result<PerfectReport, PerfectError> {
    let all = enumerate(l)?;
    let mut seeds = Vec::with_capacity(all.len() * all.len());
    for a in &all {
        for b in &all {
            seeds.push(Tensor::new(*a, *b));
        }
    }
    let g = bfs_graph(&seeds[..1], &[0, 1, 2], seeds.len() + 1);
    let connected = g.nodes.len() == seeds.len() && is_connected(&g).unwrap_or(false);

    // λ0: the weight with a unique element whose cone contains every weight.
    let mut lambda0 = None;
    let mut unique_ok = false;
    let mut cone_ok = false;
    for cand in &all {
        let w = cand.weight();
        if all.iter().all(|b| in_cone(&w, &b.weight())) {
            lambda0 = Some(w);
            unique_ok = all.iter().filter(|b| b.weight() == w).count() == 1;
            cone_ok = true;
            break;
        }
    }

    let mins = minimal_elements(l)?;
    let mut by_def: Vec<BElt> = all
        .iter()
        .copied()
        .filter(|b| level(AlgebraId::G2_1, &b.eps_weight()) == Ok(l))
        .collect();
    by_def.sort();
    let dom = dominant_of_level(l);
    let bij = |f: &dyn Fn(&BElt) -> WeightVec| {
        let mut img: Vec<WeightVec> = mins.iter().map(f).collect();
        img.sort();
        img.dedup();
        img.len() == mins.len() && img == dom
    };
    let eps_bij = bij(&|b: &BElt| b.eps_weight());
    let phi_bij = bij(&|b: &BElt| b.phi_weight());
    let pass = connected && unique_ok && cone_ok && by_def == mins && eps_bij && phi_bij;
    Ok(PerfectReport {
        level: l,
        size: all.len(),
        tensor_square_connected: connected,
        lambda0,
        lambda0_unique_element: unique_ok,
        weight_cone_ok: cone_ok,
        minimal_count: mins.len(),
        minimal_matches_definition: by_def == mins,
        dominant_count: dom.len(),
        eps_bijective: eps_bij,
        phi_bijective: phi_bij,
        condition_iii: "out of scope",
        pass,
    })
}

/// Element of `T_{ε(b0)} ⊗ B_l ⊗ T_{−φ(b0)}`.
pub type Framed = Tensor<Tensor<TLambda, BElt>, TLambda>;

pub fn framed(b0: &BElt, b: BElt) -> Framed {
    Tensor::new(
        Tensor::new(TLambda::new(b0.eps_weight()), b),
        TLambda::new(-b0.phi_weight()),
    )
}

/// `f_{(l,b0)}`: subtract the minimal element coordinatewise into `B_∞`.
pub fn coherent_embed(l: i64, b0: &BElt, elt: &Framed) -> Result<BElt, PerfectError> {
    if b0.ctx != Context::Level(l) || !b0.is_minimal_shape() || b0.s() > l {
        return Err(PerfectError::NotMinimal(b0.t));
    }
    let b = &elt.left.right;
    let mut t = b.t;
    for k in 0..6 {
        t[k] -= b0.t[k];
    }
    BElt::limit(t)
}
