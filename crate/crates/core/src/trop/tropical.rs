//! Max-plus normal forms and the ultra-discretization functor.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::expr::{ExprError, PosExpr};

/// Affine form `const + Σ exp[v]·v`; zero exponents are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TropTerm {
    #[serde(rename = "const")]
    pub konst: i64,
    #[serde(rename = "exp")]
    pub exps: BTreeMap<String, i64>,
}

impl Ord for TropTerm {
    fn cmp(&self, o: &Self) -> std::cmp::Ordering {
        (&self.exps, self.konst).cmp(&(&o.exps, o.konst))
    }
}

impl PartialOrd for TropTerm {
    fn partial_cmp(&self, o: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(o))
    }
}

impl TropTerm {
    pub fn constant(k: i64) -> Self {
        TropTerm { exps: BTreeMap::new(), konst: k }
    }

    pub fn new(konst: i64, exps: impl IntoIterator<Item = (String, i64)>) -> Self {
        let mut t = TropTerm { exps: BTreeMap::new(), konst };
        for (v, e) in exps {
            *t.exps.entry(v).or_insert(0) += e;
        }
        t.exps.retain(|_, e| *e != 0);
        t
    }

    pub fn var(name: &str) -> Self {
        TropTerm::new(0, [(name.to_string(), 1)])
    }

    pub fn exp(&self, v: &str) -> i64 {
        self.exps.get(v).copied().unwrap_or(0)
    }

    pub fn plus(&self, o: &TropTerm) -> TropTerm {
        let mut t = self.clone();
        t.konst += o.konst;
        for (v, e) in &o.exps {
            *t.exps.entry(v.clone()).or_insert(0) += e;
        }
        t.exps.retain(|_, e| *e != 0);
        t
    }

    pub fn scale(&self, k: i64) -> TropTerm {
        TropTerm::new(self.konst * k, self.exps.iter().map(|(v, e)| (v.clone(), e * k)))
    }

    pub fn eval(&self, point: &BTreeMap<String, i64>) -> Result<i64, ExprError> {
        let mut acc = self.konst;
        for (v, e) in &self.exps {
            acc += e * point.get(v).ok_or_else(|| ExprError::Unassigned(v.clone()))?;
        }
        Ok(acc)
    }

    /// Folds `var` into the constant at the given value.
    pub fn specialize(&self, var: &str, value: i64) -> TropTerm {
        let mut t = self.clone();
        if let Some(e) = t.exps.remove(var) {
            t.konst += e * value;
        }
        t
    }
}

impl fmt::Display for TropTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        if self.konst != 0 || self.exps.is_empty() {
            s.push_str(&self.konst.to_string());
        }
        for (v, &e) in &self.exps {
            let sign = if e < 0 { "-" } else if s.is_empty() { "" } else { "+" };
            s.push_str(sign);
            if e.abs() != 1 {
                s.push_str(&format!("{}*", e.abs()));
            }
            s.push_str(v);
        }
        write!(f, "{s}")
    }
}

/// `max` of a finite nonempty set of terms; canonical: sorted by exponents,
/// one term per exponent vector (the largest constant wins).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TropPoly(Vec<TropTerm>);

impl TropPoly {
    pub fn from_terms(terms: impl IntoIterator<Item = TropTerm>) -> Self {
        let mut best: BTreeMap<BTreeMap<String, i64>, i64> = BTreeMap::new();
        for t in terms {
            let e = best.entry(t.exps).or_insert(t.konst);
            *e = (*e).max(t.konst);
        }
        assert!(!best.is_empty(), "empty max");
        TropPoly(best.into_iter().map(|(exps, konst)| TropTerm { exps, konst }).collect())
    }

    pub fn terms(&self) -> &[TropTerm] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn zero() -> Self {
        TropPoly(vec![TropTerm::constant(0)])
    }

    /// Tropical product (Minkowski sum).
    pub fn times(&self, o: &TropPoly) -> TropPoly {
        TropPoly::from_terms(self.0.iter().flat_map(|a| o.0.iter().map(move |b| a.plus(b))))
    }

    /// Tropical sum (union).
    pub fn max_with(&self, o: &TropPoly) -> TropPoly {
        TropPoly::from_terms(self.0.iter().chain(o.0.iter()).cloned())
    }

    pub fn eval(&self, point: &BTreeMap<String, i64>) -> Result<i64, ExprError> {
        let mut best = i64::MIN;
        for t in &self.0 {
            best = best.max(t.eval(point)?);
        }
        Ok(best)
    }

    pub fn specialize(&self, var: &str, value: i64) -> TropPoly {
        TropPoly::from_terms(self.0.iter().map(|t| t.specialize(var, value)))
    }

    pub fn variables(&self) -> BTreeSet<String> {
        self.0.iter().flat_map(|t| t.exps.keys().cloned()).collect()
    }
}

impl fmt::Display for TropPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() == 1 {
            return write!(f, "{}", self.0[0]);
        }
        let parts: Vec<String> = self.0.iter().map(|t| t.to_string()).collect();
        write!(f, "max({})", parts.join(", "))
    }
}

/// `max(num) − max(den)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TropRat {
    pub num: TropPoly,
    pub den: TropPoly,
}

impl TropRat {
    pub fn poly(p: TropPoly) -> Self {
        TropRat { num: p, den: TropPoly::zero() }
    }

    /// Absorbs a single-term denominator into the numerator.
    pub fn normalized(self) -> TropRat {
        if self.den.len() == 1 && self.den != TropPoly::zero() {
            let neg = self.den.terms()[0].scale(-1);
            let num = TropPoly::from_terms(self.num.terms().iter().map(|t| t.plus(&neg)));
            return TropRat { num, den: TropPoly::zero() };
        }
        self
    }

    pub fn times(&self, o: &TropRat) -> TropRat {
        TropRat { num: self.num.times(&o.num), den: self.den.times(&o.den) }.normalized()
    }

    pub fn over(&self, o: &TropRat) -> TropRat {
        TropRat { num: self.num.times(&o.den), den: self.den.times(&o.num) }.normalized()
    }

    pub fn max_with(&self, o: &TropRat) -> TropRat {
        TropRat {
            num: self.num.times(&o.den).max_with(&o.num.times(&self.den)),
            den: self.den.times(&o.den),
        }
    }

    pub fn eval(&self, point: &BTreeMap<String, i64>) -> Result<i64, ExprError> {
        Ok(self.num.eval(point)? - self.den.eval(point)?)
    }

    pub fn specialize(&self, var: &str, value: i64) -> TropRat {
        TropRat { num: self.num.specialize(var, value), den: self.den.specialize(var, value) }
    }

    pub fn variables(&self) -> BTreeSet<String> {
        let mut v = self.num.variables();
        v.extend(self.den.variables());
        v
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

impl fmt::Display for TropRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == TropPoly::zero() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{} - {}", self.num, self.den)
        }
    }
}

/// The ultra-discretization functor: `×, /, + ↦ +, −, max`; constants ↦ 0.
pub fn ud(e: &PosExpr) -> TropRat {
    match e {
        PosExpr::Const(_) => TropRat::poly(TropPoly::zero()),
        PosExpr::Var(v) => TropRat::poly(TropPoly::from_terms([TropTerm::var(v)])),
        PosExpr::Mul(a, b) => ud(a).times(&ud(b)),
        PosExpr::Div(a, b) => ud(a).over(&ud(b)),
        PosExpr::Add(..) => {
            let parts: Vec<TropRat> = e.summands().into_iter().map(ud).collect();
            // Common denominator once, rather than pairwise.
            let den = parts.iter().skip(1).fold(parts[0].den.clone(), |acc, p| acc.times(&p.den));
            let mut num_terms = Vec::new();
            for (k, p) in parts.iter().enumerate() {
                let mut others = p.num.clone();
                for (j, q) in parts.iter().enumerate() {
                    if j != k {
                        others = others.times(&q.den);
                    }
                }
                num_terms.extend(others.terms().iter().cloned());
            }
            TropRat { num: TropPoly::from_terms(num_terms), den }.normalized()
        }
        PosExpr::Pow(a, k) => {
            let base = ud(a);
            let mut acc = TropRat::poly(TropPoly::zero());
            for _ in 0..*k {
                acc = acc.times(&base);
            }
            acc
        }
    }
}

/// Integer cube `[-radius, radius]^vars`, excluding any variable in `fixed`
/// (which keeps its given value).
pub(crate) fn grid_points(vars: &[String], radius: i64, fixed: &BTreeMap<String, i64>) -> Vec<BTreeMap<String, i64>> {
    let free: Vec<&String> = vars.iter().filter(|v| !fixed.contains_key(*v)).collect();
    let side = (2 * radius + 1) as usize;
    let total = side.pow(free.len() as u32);
    (0..total)
        .map(|mut k| {
            let mut p = fixed.clone();
            for v in &free {
                p.insert((*v).clone(), (k % side) as i64 - radius);
                k /= side;
            }
            p
        })
        .collect()
}

/// Exhaustive comparison on the cube; returns the first counterexample in
/// enumeration order, if any.
pub fn equal_on_grid(
    a: &TropRat,
    b: &TropRat,
    radius: i64,
    fixed: &BTreeMap<String, i64>,
) -> Option<BTreeMap<String, i64>> {
    let mut vars: BTreeSet<String> = a.variables();
    vars.extend(b.variables());
    let vars: Vec<String> = vars.into_iter().collect();
    let pts = grid_points(&vars, radius, fixed);
    // every variable is bound on the grid, so evaluation cannot fail
    pts.par_iter()
        .position_first(|p| a.eval(p).unwrap() != b.eval(p).unwrap())
        .map(|k| pts[k].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trop::expr::parse;

    fn pt(vals: &[(&str, i64)]) -> BTreeMap<String, i64> {
        vals.iter().map(|(k, v)| (k.to_string(), *v)).collect()
    }

    #[test]
    fn ud_monomial_ratio() {
        let t = ud(&parse("c*x0/x1").unwrap()).specialize("c", -1);
        assert_eq!(t.to_string(), "-1+x0-x1");
        assert_eq!(ud(&parse("3*x1^3/x2").unwrap()).to_string(), "3*x1-x2");
        assert_eq!(ud(&parse("c").unwrap()).eval(&pt(&[("c", 5)])).unwrap(), 5);
    }

    #[test]
    fn ud_eps1_matches_hand_form() {
        let t = ud(&parse("x0/x1 + x0*x2/(x1^2*x3) + x0*x2*x4/(x1^2*x3^2*x5)").unwrap());
        let by_hand = |p: &BTreeMap<String, i64>| {
            let x = |k: usize| p[&format!("x{k}")];
            (x(0) - x(1))
                .max(x(0) + x(2) - 2 * x(1) - x(3))
                .max(x(0) + x(2) + x(4) - 2 * x(1) - 2 * x(3) - x(5))
        };
        let vars: Vec<String> = (0..6).map(|k| format!("x{k}")).collect();
        for p in grid_points(&vars, 2, &BTreeMap::new()) {
            assert_eq!(t.eval(&p).unwrap(), by_hand(&p));
        }
        assert_eq!(t.eval(&pt(&[("x0", 0), ("x1", 0), ("x2", 0), ("x3", 0), ("x4", 0), ("x5", 0)])).unwrap(), 0);
    }

    #[test]
    fn unassigned() {
        let t = ud(&parse("x + y").unwrap());
        assert_eq!(t.eval(&pt(&[("x", 1)])), Err(ExprError::Unassigned("y".into())));
    }

    #[test]
    fn json_shape() {
        let t = ud(&parse("c*x0/(x1 + x2)").unwrap());
        assert_eq!(
            t.to_json(),
            r#"{"num":[{"const":0,"exp":{"c":1,"x0":1}}],"den":[{"const":0,"exp":{"x1":1}},{"const":0,"exp":{"x2":1}}]}"#
        );
        let back: TropRat = serde_json::from_str(&t.to_json()).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn grid_detects_difference() {
        let a = ud(&parse("x + y").unwrap());
        let b = ud(&parse("x*y + x").unwrap());
        let ce = equal_on_grid(&a, &b, 2, &BTreeMap::new());
        assert!(ce.is_some());
        assert_eq!(equal_on_grid(&a, &a, 3, &BTreeMap::new()), None);
    }
}
