//! Redundant-term removal for max-plus polynomials.
//!
//! A term `m` may be dropped from `max(m_1, …, m_k, m)` when some convex
//! combination `Σ λ_i m_i` has the same exponents and a constant at least as
//! large, since then `m ≤ Σ λ_i m_i ≤ max m_i` pointwise. Feasibility of the
//! λ's is decided exactly by a phase-one simplex over the rationals.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::tropical::{TropPoly, TropRat, TropTerm};

type Q = BigRational;

fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Is `{x ≥ 0 : A x = b}` nonempty? Bland's rule keeps the pivoting finite.
pub fn feasible(a: &[Vec<Q>], b: &[Q]) -> bool {
    let m = a.len();
    if m == 0 {
        return true;
    }
    let n = a[0].len();
    // tableau columns: n originals, m artificials, rhs
    let width = n + m + 1;
    let mut t: Vec<Vec<Q>> = Vec::with_capacity(m);
    for r in 0..m {
        let flip = b[r].is_negative();
        let mut row = vec![Q::zero(); width];
        for c in 0..n {
            row[c] = if flip { -a[r][c].clone() } else { a[r][c].clone() };
        }
        row[n + r] = q(1);
        row[width - 1] = if flip { -b[r].clone() } else { b[r].clone() };
        t.push(row);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();
    // reduced costs of `min Σ artificials`
    let mut z = vec![Q::zero(); width];
    for row in &t {
        for c in 0..n {
            z[c] -= &row[c];
        }
        z[width - 1] -= &row[width - 1];
    }
    loop {
        let Some(enter) = (0..n + m).find(|&c| z[c].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, Q)> = None;
        for r in 0..m {
            if t[r][enter].is_positive() {
                let ratio = &t[r][width - 1] / &t[r][enter];
                let better = match &leave {
                    None => true,
                    Some((lr, best)) => ratio < *best || (ratio == *best && basis[r] < basis[*lr]),
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
        }
        let Some((r, _)) = leave else {
            // unbounded direction cannot occur for a bounded-below phase one
            break;
        };
        let piv = t[r][enter].clone();
        for c in 0..width {
            t[r][c] = &t[r][c] / &piv;
        }
        let prow = t[r].clone();
        for (k, row) in t.iter_mut().enumerate() {
            if k != r && !row[enter].is_zero() {
                let f = row[enter].clone();
                for c in 0..width {
                    row[c] -= &f * &prow[c];
                }
            }
        }
        if !z[enter].is_zero() {
            let f = z[enter].clone();
            for c in 0..width {
                z[c] -= &f * &prow[c];
            }
        }
        basis[r] = enter;
    }
    z[width - 1].is_zero()
}

/// Whether `target` is bounded above by a convex combination of `others`
/// with identical exponents.
pub fn dominated_by_hull(target: &TropTerm, others: &[&TropTerm]) -> bool {
    if others.is_empty() {
        return false;
    }
    let vars: Vec<String> = others
        .iter()
        .flat_map(|t| t.exps.keys().cloned())
        .chain(target.exps.keys().cloned())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let n = others.len();
    // columns: λ_1..λ_n, slack s;  rows: exponents, Σλ = 1, Σλc − s = c
    let mut a = Vec::new();
    let mut b = Vec::new();
    for v in &vars {
        let mut row: Vec<Q> = others.iter().map(|t| q(t.exp(v))).collect();
        row.push(Q::zero());
        a.push(row);
        b.push(q(target.exp(v)));
    }
    let mut ones = vec![q(1); n];
    ones.push(Q::zero());
    a.push(ones);
    b.push(q(1));
    let mut consts: Vec<Q> = others.iter().map(|t| q(t.konst)).collect();
    consts.push(q(-1));
    a.push(consts);
    b.push(q(target.konst));
    feasible(&a, &b)
}

/// Removes terms dominated by the hull of the remaining ones, until none is.
/// The result is the set of upper-hull vertices, independent of term order.
pub fn simplify_poly(p: &TropPoly) -> TropPoly {
    let mut keep: Vec<TropTerm> = p.terms().to_vec();
    loop {
        let mut removed = false;
        let mut k = 0;
        while k < keep.len() {
            let others: Vec<&TropTerm> = keep.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, t)| t).collect();
            if dominated_by_hull(&keep[k], &others) {
                keep.remove(k);
                removed = true;
            } else {
                k += 1;
            }
        }
        if !removed {
            break;
        }
    }
    TropPoly::from_terms(keep)
}

pub fn simplify(t: &TropRat) -> TropRat {
    TropRat { num: simplify_poly(&t.num), den: simplify_poly(&t.den) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trop::expr::parse;
    use crate::trop::tropical::{equal_on_grid, ud};
    use std::collections::BTreeMap;

    fn term(k: i64, e: &[(&str, i64)]) -> TropTerm {
        TropTerm::new(k, e.iter().map(|(v, x)| (v.to_string(), *x)))
    }

    #[test]
    fn lp_basics() {
        // x1 + x2 = 1, x ≥ 0
        assert!(feasible(&[vec![q(1), q(1)]], &[q(1)]));
        // x1 + x2 = -1
        assert!(!feasible(&[vec![q(1), q(1)]], &[q(-1)]));
        // x1 - x2 = 3, x1 + x2 = 1 → x2 = -1
        assert!(!feasible(&[vec![q(1), q(-1)], vec![q(1), q(1)]], &[q(3), q(1)]));
    }

    #[test]
    fn worked_redundancy_is_removed() {
        // −2+2α+δ = (2(−3+3α) + 3δ)/3, with α, δ as free coordinates
        let p = TropPoly::from_terms([term(-3, &[("a", 3)]), term(0, &[("d", 3)]), term(-2, &[("a", 2), ("d", 1)])]);
        let s = simplify_poly(&p);
        assert_eq!(s.len(), 2);
        assert!(!s.terms().contains(&term(-2, &[("a", 2), ("d", 1)])));
    }

    #[test]
    fn nothing_to_remove() {
        let p = TropPoly::from_terms([term(0, &[("x", 1)]), term(0, &[("y", 1)])]);
        assert_eq!(simplify_poly(&p), p);
    }

    #[test]
    fn dominated_constant_and_interior() {
        // max(x, -x, -1) : the constant lies under the midpoint of the other two
        let p = TropPoly::from_terms([term(0, &[("x", 1)]), term(0, &[("x", -1)]), term(-1, &[])]);
        assert_eq!(simplify_poly(&p).len(), 2);
        // but max(x, -x, 1) keeps it
        let p = TropPoly::from_terms([term(0, &[("x", 1)]), term(0, &[("x", -1)]), term(1, &[])]);
        assert_eq!(simplify_poly(&p).len(), 3);
    }

    #[test]
    fn value_preserved_and_idempotent() {
        let e = parse("(a + b)^3*(a*b + c + 1)/(a + c^2)").unwrap();
        let t = ud(&e);
        let s = simplify(&t);
        assert!(s.num.len() <= t.num.len());
        assert_eq!(simplify(&s), s);
        assert_eq!(equal_on_grid(&t, &s, 4, &BTreeMap::new()), None);
    }
}
