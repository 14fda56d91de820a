//! The bijection `Ω : ℤ⁶ → B_∞` and an exhaustive check that it is a crystal
//! isomorphism on a cube.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::perfect::{BElt, PerfectError};
use crate::ud::{self, combos, XPoint};

/// `Ω(x)` in scaled coordinates `t = 3b`.
pub fn omega_t(p: &XPoint) -> [i64; 6] {
    let [x0, x1, x2, x3, x4, x5] = p.x;
    [3 * x5, x4 - 3 * x5, 3 * x3 - 2 * x4, 2 * x2 - 3 * x3, 3 * x1 - x2, 3 * x0 - 3 * x1]
}

pub fn omega(p: &XPoint) -> BElt {
    BElt::limit(omega_t(p)).expect("image of Ω lies in B_∞")
}

pub fn omega_inv(b: &BElt) -> XPoint {
    let [t1, t2, t3, tb3, tb2, tb1] = b.t();
    let exact = |n: i64, d: i64| {
        assert_eq!(n % d, 0, "Ω⁻¹ is integral on B_∞");
        n / d
    };
    // sixths where the half-sum (b3 + b̄3)/2 enters
    XPoint::new([
        exact(2 * (t1 + t2 + tb2 + tb1) + t3 + tb3, 6),
        exact(2 * (t1 + t2 + tb2) + t3 + tb3, 6),
        exact(2 * (t1 + t2) + t3 + tb3, 2),
        exact(2 * t1 + 2 * t2 + t3, 3),
        t1 + t2,
        exact(t1, 3),
    ])
}

/// Cases of the `f̃_0` analysis on `ℤ⁶`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FCase {
    #[serde(rename = "f1")]
    F1,
    #[serde(rename = "f2")]
    F2,
    #[serde(rename = "f3")]
    F3,
    #[serde(rename = "f4")]
    F4,
    #[serde(rename = "f4'")]
    F4Prime,
    #[serde(rename = "f4''")]
    F4Second,
    #[serde(rename = "f5")]
    F5,
    #[serde(rename = "f6")]
    F6,
}

impl FCase {
    pub const ALL: [FCase; 8] =
        [FCase::F1, FCase::F2, FCase::F3, FCase::F4, FCase::F4Prime, FCase::F4Second, FCase::F5, FCase::F6];

    /// The matching (F) condition on `B_∞`.
    pub fn b_side(&self) -> usize {
        match self {
            FCase::F1 => 1,
            FCase::F2 => 2,
            FCase::F3 => 3,
            FCase::F4 | FCase::F4Prime | FCase::F4Second => 4,
            FCase::F5 => 5,
            FCase::F6 => 6,
        }
    }

    /// Increment of `x` under `f̃_0` in this case.
    pub fn increments(&self) -> [i64; 6] {
        match self {
            FCase::F1 => [1, 1, 3, 2, 3, 1],
            FCase::F2 => [0, 1, 3, 1, 0, 0],
            FCase::F3 => [0, 0, 3, 2, 0, 0],
            FCase::F4 => [0, 0, 2, 2, 1, 0],
            FCase::F4Prime => [0, 0, 1, 2, 2, 0],
            FCase::F4Second => [0, 0, 0, 2, 3, 0],
            FCase::F5 => [0, 0, 0, 1, 3, 1],
            FCase::F6 => [-1, 0, 0, 0, 0, 0],
        }
    }
}

impl fmt::Display for FCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FCase::F1 => "f1",
            FCase::F2 => "f2",
            FCase::F3 => "f3",
            FCase::F4 => "f4",
            FCase::F4Prime => "f4'",
            FCase::F4Second => "f4''",
            FCase::F5 => "f5",
            FCase::F6 => "f6",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{point}: matched {matched:?}, expected exactly one case")]
pub struct ClassifyError {
    pub point: XPoint,
    pub matched: Vec<FCase>,
}

pub fn classify_f(p: &XPoint) -> Result<FCase, ClassifyError> {
    let g = combos(p);
    let (al, be, ga, de, ep, ph) = (g.alpha, g.beta, g.gamma, g.delta, g.epsilon, g.phi);
    let four = be < ep && de < ep && ep >= al && ep >= ph;
    let table = [
        (FCase::F1, be >= ga && be >= de && be >= ep && be >= ph && ph >= al && de >= al),
        (FCase::F2, be < de && de >= al && de >= ga && de >= ep && al > ph && be >= ph),
        (FCase::F3, be < ga && de < ga && ga >= al && ga >= ep && ga >= ph),
        (FCase::F4, four && ep == ga + 1),
        (FCase::F4Prime, four && ep == ga + 2),
        (FCase::F4Second, four && ep > ga + 2),
        (FCase::F5, be < ph && ga < ph && ep < ph && ph >= al && al > de && be >= de),
        (FCase::F6, al > ga && al > de && al > ep && al > ph && de > be && ph > be),
    ];
    let matched: Vec<FCase> = table.iter().filter(|(_, ok)| *ok).map(|(c, _)| *c).collect();
    match matched.as_slice() {
        [one] => Ok(*one),
        _ => Err(ClassifyError { point: *p, matched }),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IsoKind {
    FCommute,
    ECommute,
    Eps,
    Wt,
    Membership,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsoViolation {
    pub x: [i64; 6],
    pub kind: IsoKind,
    pub i: Option<usize>,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct IsoReport {
    pub radius: i64,
    pub points_checked: usize,
    pub violations: Vec<IsoViolation>,
    pub pass: bool,
}

pub type OmegaMap = fn(&XPoint) -> Result<BElt, PerfectError>;

fn omega_checked(p: &XPoint) -> Result<BElt, PerfectError> {
    BElt::limit(omega_t(p))
}

/// Ω with the `b2` and `b3` slots exchanged, for negative controls.
pub fn omega_swapped(p: &XPoint) -> Result<BElt, PerfectError> {
    let mut t = omega_t(p);
    t.swap(1, 2);
    BElt::limit(t)
}

pub(crate) fn cube(radius: i64) -> impl ParallelIterator<Item = XPoint> {
    let side = 2 * radius + 1;
    (0..side.pow(6)).into_par_iter().map(move |mut k| {
        let mut x = [0; 6];
        for v in x.iter_mut() {
            *v = k % side - radius;
            k /= side;
        }
        XPoint::new(x)
    })
}

fn check_point(map: OmegaMap, p: &XPoint) -> Vec<IsoViolation> {
    let mut out = Vec::new();
    let mut push = |kind, i, detail: String| out.push(IsoViolation { x: p.x, kind, i, detail });
    let b = match map(p) {
        Ok(b) => b,
        Err(e) => {
            push(IsoKind::Membership, None, e.to_string());
            return out;
        }
    };
    for i in 0..3 {
        for (kind, n) in [(IsoKind::FCommute, -1), (IsoKind::ECommute, 1)] {
            let lhs = map(&ud::act(i, n, p));
            let rhs = if n < 0 { b.try_f(i) } else { b.try_e(i) };
            match (lhs, rhs) {
                (Ok(l), Ok(Some(r))) if l == r => {}
                (l, r) => push(kind, Some(i), format!("{l:?} vs {r:?}")),
            }
        }
        if b.eps_i(i) != ud::eps(i, p) {
            push(IsoKind::Eps, Some(i), format!("{} vs {}", b.eps_i(i), ud::eps(i, p)));
        }
        if b.weight().pair(i) != ud::wt(i, p) {
            push(IsoKind::Wt, Some(i), format!("{} vs {}", b.weight().pair(i), ud::wt(i, p)));
        }
    }
    out
}

pub fn verify_iso_with(radius: i64, map: OmegaMap) -> IsoReport {
    let mut violations: Vec<IsoViolation> = cube(radius).flat_map_iter(|p| check_point(map, &p)).collect();
    violations.sort_by(|a, b| (a.x, a.kind, a.i).cmp(&(b.x, b.kind, b.i)));
    IsoReport { radius, points_checked: (2 * radius as usize + 1).pow(6), pass: violations.is_empty(), violations }
}

pub fn verify_iso(radius: i64) -> IsoReport {
    verify_iso_with(radius, omega_checked)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::CrystalElt;

    fn third(t: [i64; 6]) -> BElt {
        BElt::limit(t).unwrap()
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega(&XPoint::ZERO), BElt::limit([0; 6]).unwrap());
        // b = (1, -2/3, 1/3, -1/3, 2/3, 0)
        let b = omega(&XPoint::new([1; 6]));
        assert_eq!(b.t(), [3, -2, 1, -1, 2, 0]);
        assert_eq!(b.s(), 1);
        assert_eq!(omega(&XPoint::new([6, 5, 9, 4, 3, 1])).s(), 6);
        assert_eq!(omega_inv(&third([0; 6])), XPoint::ZERO);
    }

    #[test]
    fn round_trips_and_s_identity() {
        let pts: Vec<XPoint> = cube(4).collect();
        for p in &pts {
            let b = omega(p);
            assert_eq!(omega_inv(&b), *p);
            assert_eq!(b.s(), p.x[0]);
        }
        let side = 13i64;
        for mut k in 0..side.pow(6) {
            let mut t = [0; 6];
            for v in t.iter_mut() {
                *v = k % side - 6;
                k /= side;
            }
            if let Ok(b) = BElt::limit(t) {
                assert_eq!(omega(&omega_inv(&b)), b);
            }
        }
    }

    #[test]
    fn single_steps_from_zero() {
        let z = XPoint::ZERO;
        let b0 = BElt::limit([0; 6]).unwrap();
        assert_eq!(omega(&ud::act(1, -1, &z)), b0.f(1).unwrap());
        assert_eq!(omega(&ud::act(1, -1, &z)).t(), [-3, 3, 0, 0, 0, 0]);
        assert_eq!(omega(&ud::act(0, -1, &z)).t(), [3, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn classifier_matches_b_side_and_increments() {
        let pts: Vec<XPoint> = cube(3).collect();
        for p in &pts {
            let c = classify_f(p).unwrap();
            let b = omega(p);
            assert_eq!(b.case_f().unwrap(), c.b_side(), "{p}");
            let tz = b.z().three_z4;
            match c {
                FCase::F4 => assert_eq!(tz, 1),
                FCase::F4Prime => assert_eq!(tz, 2),
                FCase::F4Second => assert!(tz != 1 && tz != 2),
                _ => {}
            }
            let q = ud::act(0, -1, p);
            let d: Vec<i64> = (0..6).map(|k| q.x[k] - p.x[k]).collect();
            assert_eq!(d, c.increments(), "{p} {c}");
        }
        assert_eq!(classify_f(&XPoint::ZERO).unwrap(), FCase::F1);
        // ε − γ = x2 − 3x3 + x4 = 1 inside the fourth case
        let p = pts.iter().find(|p| classify_f(p) == Ok(FCase::F4)).unwrap();
        let g = combos(p);
        assert_eq!(g.epsilon - g.gamma, 1);
        assert_eq!(p.x[2] - 3 * p.x[3] + p.x[4], 1);
        assert_eq!(omega(p).z().three_z4, 1);
    }

    #[test]
    fn eps0_identity() {
        for p in cube(2).collect::<Vec<_>>() {
            let b = omega(&p);
            let z = b.z();
            let lhs = -b.s() + b.a_vector().into_iter().max().unwrap() - (2 * z.z1 + z.z2 + z.z3 + z.three_z4);
            assert_eq!(lhs, ud::eps(0, &p));
            assert_eq!(2 * z.z1 + z.z2 + z.z3 + z.three_z4, ud::wt(0, &p));
        }
    }

    #[test]
    fn iso_radius_one_and_corrupt_map() {
        let rep = verify_iso(1);
        assert!(rep.pass, "{:?}", rep.violations.first());
        assert_eq!(rep.points_checked, 729);
        let bad = verify_iso_with(1, omega_swapped);
        assert!(!bad.pass);
    }
}
