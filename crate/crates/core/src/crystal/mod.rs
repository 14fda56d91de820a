//! Abstract crystals: the operator/statistic contract, tensor products,
//! the one-element crystals `T_λ`, axiom checking and crystal graphs.

mod graph;

pub use graph::{bfs_graph, is_connected, CrystalGraph, GraphError};

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Sub};

use serde::{Serialize, Serializer};

use crate::cartan::{simple_root, AlgebraId, WeightVec};

/// `ℤ ⊔ {−∞}`. `NegInf` sorts below every integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtInt {
    NegInf,
    Fin(i64),
}

impl ExtInt {
    pub fn fin(self) -> Option<i64> {
        match self {
            ExtInt::Fin(n) => Some(n),
            ExtInt::NegInf => None,
        }
    }

    pub fn is_neg_inf(self) -> bool {
        self == ExtInt::NegInf
    }
}

impl From<i64> for ExtInt {
    fn from(n: i64) -> Self {
        ExtInt::Fin(n)
    }
}

impl Add<i64> for ExtInt {
    type Output = ExtInt;
    fn add(self, n: i64) -> ExtInt {
        match self {
            ExtInt::Fin(m) => ExtInt::Fin(m + n),
            ExtInt::NegInf => ExtInt::NegInf,
        }
    }
}

impl Sub<i64> for ExtInt {
    type Output = ExtInt;
    fn sub(self, n: i64) -> ExtInt {
        self + (-n)
    }
}

impl fmt::Display for ExtInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtInt::Fin(n) => write!(f, "{n}"),
            ExtInt::NegInf => write!(f, "-inf"),
        }
    }
}

impl Serialize for ExtInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ExtInt::Fin(n) => s.serialize_i64(*n),
            ExtInt::NegInf => s.serialize_str("-inf"),
        }
    }
}

/// Kashiwara crystal element. `None` from `f`/`e` is the absorbing 0.
pub trait CrystalElt: Clone + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync {
    fn f(&self, i: usize) -> Option<Self>;
    fn e(&self, i: usize) -> Option<Self>;
    fn eps(&self, i: usize) -> ExtInt;
    fn phi(&self, i: usize) -> ExtInt;
    fn wt(&self) -> WeightVec;
}

/// The single element `t_λ` of `T_λ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TLambda {
    pub lambda: WeightVec,
}

impl TLambda {
    pub fn new(lambda: WeightVec) -> Self {
        TLambda { lambda }
    }
}

impl fmt::Display for TLambda {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t[{}]", self.lambda)
    }
}

impl CrystalElt for TLambda {
    fn f(&self, _: usize) -> Option<Self> {
        None
    }
    fn e(&self, _: usize) -> Option<Self> {
        None
    }
    fn eps(&self, _: usize) -> ExtInt {
        ExtInt::NegInf
    }
    fn phi(&self, _: usize) -> ExtInt {
        ExtInt::NegInf
    }
    fn wt(&self) -> WeightVec {
        self.lambda
    }
}

/// `b1 ⊗ b2` with the tensor rule: f̃ acts on the left factor iff
/// φ(b1) > ε(b2), ẽ acts on the right factor iff φ(b1) < ε(b2).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tensor<A, B> {
    pub left: A,
    pub right: B,
}

impl<A, B> Tensor<A, B> {
    pub fn new(left: A, right: B) -> Self {
        Tensor { left, right }
    }
}

impl<A: fmt::Display, B: fmt::Display> fmt::Display for Tensor<A, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ⊗ {}", self.left, self.right)
    }
}

impl<A: CrystalElt, B: CrystalElt> CrystalElt for Tensor<A, B> {
    fn f(&self, i: usize) -> Option<Self> {
        if self.left.phi(i) > self.right.eps(i) {
            self.left.f(i).map(|l| Tensor::new(l, self.right.clone()))
        } else {
            self.right.f(i).map(|r| Tensor::new(self.left.clone(), r))
        }
    }

    fn e(&self, i: usize) -> Option<Self> {
        if self.left.phi(i) < self.right.eps(i) {
            self.right.e(i).map(|r| Tensor::new(self.left.clone(), r))
        } else {
            self.left.e(i).map(|l| Tensor::new(l, self.right.clone()))
        }
    }

    fn eps(&self, i: usize) -> ExtInt {
        let (e1, e2) = (self.left.eps(i), self.right.eps(i));
        e1.max(e2 - self.left.wt().pair(i))
    }

    fn phi(&self, i: usize) -> ExtInt {
        let (p1, p2) = (self.left.phi(i), self.right.phi(i));
        p2.max(p1 + self.right.wt().pair(i))
    }

    fn wt(&self) -> WeightVec {
        self.left.wt() + self.right.wt()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AxiomKind {
    PhiEpsWt,
    FThenE,
    EThenF,
    WtShift,
    EpsShift,
    PhiShift,
    NegInfActs,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomViolation {
    pub element: String,
    pub i: usize,
    pub kind: AxiomKind,
    pub detail: String,
}

/// Checks, for each element and each `i` in `indices`:
/// φ = ε + ⟨α_i^∨, wt⟩; ẽ f̃ b = b, f̃ ẽ b = b; wt shifts by ∓α_i;
/// ε, φ shift by ±1; `ε = −∞` forces both operators to vanish.
pub fn check_axioms<E: CrystalElt>(
    alg: AlgebraId,
    elements: &[E],
    indices: &[usize],
) -> Vec<AxiomViolation> {
    let roots: Vec<WeightVec> = (0..3).map(|i| simple_root(alg, i).unwrap().classical()).collect();
    let mut out = Vec::new();
    for b in elements {
        let w = b.wt().classical();
        for &i in indices {
            let mut bad = |kind, detail: String| {
                out.push(AxiomViolation { element: b.to_string(), i, kind, detail });
            };
            let (eps, phi) = (b.eps(i), b.phi(i));
            if phi != eps + w.pair(i) {
                bad(AxiomKind::PhiEpsWt, format!("phi={phi} eps={eps} wt={w}"));
            }
            if eps.is_neg_inf() && (b.f(i).is_some() || b.e(i).is_some()) {
                bad(AxiomKind::NegInfActs, "eps=-inf but an operator is defined".into());
            }
            if let Some(fb) = b.f(i) {
                if fb.e(i).as_ref() != Some(b) {
                    bad(AxiomKind::FThenE, format!("f={fb}"));
                }
                if fb.wt().classical() != w - roots[i] {
                    bad(AxiomKind::WtShift, format!("wt(f b)={}", fb.wt()));
                }
                if fb.eps(i) != eps + 1 {
                    bad(AxiomKind::EpsShift, format!("eps(f b)={}", fb.eps(i)));
                }
                if fb.phi(i) != phi - 1 {
                    bad(AxiomKind::PhiShift, format!("phi(f b)={}", fb.phi(i)));
                }
            }
            if let Some(eb) = b.e(i) {
                if eb.f(i).as_ref() != Some(b) {
                    bad(AxiomKind::EThenF, format!("e={eb}"));
                }
                if eb.wt().classical() != w + roots[i] {
                    bad(AxiomKind::WtShift, format!("wt(e b)={}", eb.wt()));
                }
                if eb.eps(i) != eps - 1 {
                    bad(AxiomKind::EpsShift, format!("eps(e b)={}", eb.eps(i)));
                }
                if eb.phi(i) != phi + 1 {
                    bad(AxiomKind::PhiShift, format!("phi(e b)={}", eb.phi(i)));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Two-element string `A --2--> B`.
    #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
    pub(crate) enum Pair {
        A,
        B,
        /// broken weight
        Bad,
    }

    impl fmt::Display for Pair {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write!(f, "{self:?}")
        }
    }

    impl CrystalElt for Pair {
        fn f(&self, i: usize) -> Option<Self> {
            (i == 2 && *self == Pair::A).then_some(Pair::B)
        }
        fn e(&self, i: usize) -> Option<Self> {
            (i == 2 && *self == Pair::B).then_some(Pair::A)
        }
        fn eps(&self, i: usize) -> ExtInt {
            ExtInt::Fin(i64::from(i == 2 && *self == Pair::B))
        }
        fn phi(&self, i: usize) -> ExtInt {
            ExtInt::Fin(i64::from(i == 2 && *self == Pair::A))
        }
        fn wt(&self) -> WeightVec {
            // wt(A) - wt(B) = α_2
            match self {
                Pair::A => WeightVec::new(0, 0, 1),
                Pair::B => WeightVec::new(0, 1, -1),
                Pair::Bad => WeightVec::new(0, 0, 5),
            }
        }
    }

    #[test]
    fn ext_int_order() {
        assert!(ExtInt::NegInf < ExtInt::Fin(i64::MIN));
        assert_eq!(ExtInt::NegInf + 5, ExtInt::NegInf);
        assert_eq!(ExtInt::Fin(2) - 5, ExtInt::Fin(-3));
    }

    #[test]
    fn pair_crystal_is_valid_and_bad_is_caught() {
        assert!(check_axioms(AlgebraId::G2_1, &[Pair::A, Pair::B], &[2]).is_empty());
        assert!(!check_axioms(AlgebraId::G2_1, &[Pair::Bad], &[2]).is_empty());
    }

    #[test]
    fn t_lambda_tensor() {
        let t = TLambda::new(WeightVec::new(2, -1, 3));
        let x = Tensor::new(t, Pair::A);
        // f̃ always lands on the right factor
        assert_eq!(x.f(2), Some(Tensor::new(t, Pair::B)));
        assert_eq!(x.eps(2), Pair::A.eps(2) - 3);
        assert_eq!(x.phi(2), Pair::A.phi(2));
        let y = Tensor::new(Pair::A, t);
        assert_eq!(y.phi(2), Pair::A.phi(2) + 3);
        assert_eq!(y.eps(2), Pair::A.eps(2));
        assert!(check_axioms(AlgebraId::G2_1, &[x, Tensor::new(t, Pair::B)], &[2]).is_empty());
    }

    #[test]
    fn tensor_of_pairs_is_a_crystal() {
        let els: Vec<_> = [Pair::A, Pair::B]
            .iter()
            .flat_map(|&a| [Pair::A, Pair::B].map(move |b| Tensor::new(a, b)))
            .collect();
        assert!(check_axioms(AlgebraId::G2_1, &els, &[2]).is_empty());
        // A⊗A: φ(A)=1 > ε(A)=0, f̃ acts on the left
        assert_eq!(Tensor::new(Pair::A, Pair::A).f(2), Some(Tensor::new(Pair::B, Pair::A)));
        assert_eq!(Tensor::new(Pair::B, Pair::A).f(2), Some(Tensor::new(Pair::B, Pair::B)));
    }
}
