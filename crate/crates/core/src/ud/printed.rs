//! Hand transcriptions of the published increment formulas, kept as an
//! independent cross-check of the generated tables.
//!
//! The displays are at `c = -1`, where a constant `k` is the value of `-k·c`.
//! Evaluating that product at `c = n` extends each display to every `n`.

use super::{combos, XPoint};

/// `max_k (v_k - k_k·n)` for printed terms `k_k + v_k`.
fn mx(n: i64, terms: &[(i64, i64)]) -> i64 {
    terms.iter().map(|(k, v)| v - k * n).max().expect("nonempty")
}

fn konst(n: i64, k: i64) -> i64 {
    -k * n
}

/// Increment of coordinate `coord` under `e_1^n` or `e_2^n`.
pub fn e12_increment(coord: usize, n: i64, p: &XPoint) -> i64 {
    let [x0, x1, x2, x3, x4, x5] = p.x;
    let a = x0 - x1;
    let b = x0 + x2 - 2 * x1 - x3;
    let c = x0 + x2 + x4 - 2 * x1 - 2 * x3 - x5;
    let l = 3 * x1 - x2;
    let m = 3 * x1 + 3 * x3 - 2 * x2 - x4;
    match coord {
        1 => mx(n, &[(-1, a), (0, b), (0, c)]) - mx(n, &[(0, a), (0, b), (0, c)]),
        3 => mx(n, &[(-1, a), (-1, b), (0, c)]) - mx(n, &[(-1, a), (0, b), (0, c)]),
        5 => mx(n, &[(-1, a), (-1, b), (-1, c)]) - mx(n, &[(-1, a), (-1, b), (0, c)]),
        2 => mx(n, &[(-1, l), (0, m)]) - mx(n, &[(0, l), (0, m)]),
        4 => mx(n, &[(-1, l), (-1, m)]) - mx(n, &[(-1, l), (0, m)]),
        _ => panic!("no increment for coordinate {coord}"),
    }
}

/// Which reading of the last `e_0` increment to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LastRow {
    /// `max(1+α, β, γ, δ, ε, -1+φ)` in the second maximum, as displayed.
    AsPrinted,
    /// `-1+α` there, which is what tropicalizing `D/(cH)` gives.
    Corrected,
}

/// Increment of coordinate `coord` under `e_0^n`.
pub fn e0_increment(coord: usize, n: i64, p: &XPoint, last: LastRow) -> i64 {
    let g = combos(p);
    let (al, be, ga, de, ep, ph) = (g.alpha, g.beta, g.gamma, g.delta, g.epsilon, g.phi);
    let d = mx(n, &[(-2, al), (0, be), (-1, ga), (-1, de), (-1, ep), (-1, ph)]);
    let e = mx(n, &[(0, al), (0, be), (0, ga), (0, de), (0, ep), (0, ph)]);
    let f = mx(n, &[(-1, al), (0, be), (-1, ga), (0, de), (-1, ep), (-1, ph)]);
    let h = mx(n, &[(-1, al), (0, be), (0, ga), (0, de), (0, ep), (-1, ph)]);
    let big = mx(
        n,
        &[
            (-3, 3 * al),
            (0, 3 * be),
            (0, 3 * ga),
            (0, 3 * de),
            (-3, 3 * ep),
            (-3, 3 * ph),
            (-1, al + ga + ep),
            (0, ga + de + ep),
            (0, ga + 2 * ep),
            (0, 2 * ga + ep),
            (-1, ga + ep + ph),
            (0, be + ga + ep),
        ],
    );
    match coord {
        0 => d - e + konst(n, 1),
        1 => f - e + konst(n, 1),
        2 => big - 3 * e + konst(n, 3),
        3 => d + h - e - f + konst(n, 2),
        4 => 3 * d - big + konst(n, 3),
        5 => {
            let h5 = match last {
                LastRow::AsPrinted => mx(n, &[(1, al), (0, be), (0, ga), (0, de), (0, ep), (-1, ph)]),
                LastRow::Corrected => h,
            };
            d - h5 + konst(n, 1)
        }
        _ => panic!("no increment for coordinate {coord}"),
    }
}

/// The displayed `f̃_0`, `f̃_1`, `f̃_2` (and `ẽ_i` at `n = 1`).
pub fn act_printed(i: usize, n: i64, p: &XPoint, last: LastRow) -> XPoint {
    let mut out = *p;
    match i {
        0 => {
            for k in 0..6 {
                out.x[k] += e0_increment(k, n, p, last);
            }
        }
        1 => {
            for k in [1, 3, 5] {
                out.x[k] += e12_increment(k, n, p);
            }
        }
        2 => {
            for k in [2, 4] {
                out.x[k] += e12_increment(k, n, p);
            }
        }
        _ => panic!("index {i} out of range"),
    }
    out
}

/// First point of `[-r, r]^6` where the transcription and the generated
/// table disagree for `ẽ_i^n`, scanning in parallel.
pub fn first_disagreement(i: usize, n: i64, r: i64, last: LastRow) -> Option<XPoint> {
    use rayon::prelude::*;
    let side = 2 * r + 1;
    let total = side.pow(6);
    let point = |mut k: i64| {
        let mut x = [0; 6];
        for v in x.iter_mut() {
            *v = k % side - r;
            k /= side;
        }
        XPoint::new(x)
    };
    (0..total)
        .into_par_iter()
        .map(point)
        .find_first(|p| act_printed(i, n, p, last) != super::act(i, n, p))
}
