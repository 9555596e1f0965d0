//! Sparse polynomial and tensor arithmetic over the field with two elements.
//!
//! A polynomial is a finite *set* of monomials with implicit coefficient 1:
//! adding a term twice removes it, squaring is the Frobenius, and there are
//! no signs anywhere. Generators carry their own grading data and a total
//! order which fixes canonical printing for the whole crate.

mod graded;
mod tensor;

pub use graded::{series_quotient, GradedAlgebraSpec};
pub use tensor::{Tensor2, Tensor3};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::{Error, Result};

/// Identifier of a polynomial generator.
///
/// The derived order (variant first, then fields lexicographically) is the
/// canonical order used everywhere. Inside [`GeneratorId::QGen`] the word is
/// stored before the cell index, so `Q[4](x[3])` precedes `Q[5](x[2])`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum GeneratorId {
    /// Milnor generator `z<i>` of the dual Steenrod algebra, degree `2^i - 1`.
    Zeta(u32),
    /// A cell `x[n]` of degree `n`.
    Cell { n: u32 },
    /// An iterated operation `Q[i1,...,ik](x[n])` of degree `n + i1 + ... + ik`.
    QGen { seq: Vec<u32>, n: u32 },
    /// Generator `a[k,s]` of the homology of `BO` (`k` odd), degree `2^s k`.
    Bo { k: u32, s: u32 },
    /// The regular-sequence generator `z[s]`, degree `2^(s+1) - 2`.
    ZGen { s: u32 },
}

impl GeneratorId {
    pub fn zeta(i: u32) -> Self {
        assert!(i >= 1, "zeta index must be at least 1");
        GeneratorId::Zeta(i)
    }

    pub fn cell(n: u32) -> Self {
        GeneratorId::Cell { n }
    }

    /// Builds a Q-word generator; an empty word collapses to the bare cell.
    pub fn qgen(seq: Vec<u32>, n: u32) -> Self {
        if seq.is_empty() {
            GeneratorId::Cell { n }
        } else {
            GeneratorId::QGen { seq, n }
        }
    }

    pub fn bo(k: u32, s: u32) -> Self {
        assert!(k % 2 == 1, "BO generator index must be odd");
        GeneratorId::Bo { k, s }
    }

    pub fn zgen(s: u32) -> Self {
        assert!(s >= 1);
        GeneratorId::ZGen { s }
    }

    /// The degree is deterministic from the identifier.
    pub fn degree(&self) -> u32 {
        match self {
            GeneratorId::Zeta(i) => (1u32 << i) - 1,
            GeneratorId::Cell { n } => *n,
            GeneratorId::QGen { seq, n } => n + seq.iter().sum::<u32>(),
            GeneratorId::Bo { k, s } => k << s,
            GeneratorId::ZGen { s } => (1u32 << (s + 1)) - 2,
        }
    }
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorId::Zeta(i) => write!(f, "z{i}"),
            GeneratorId::Cell { n } => write!(f, "x[{n}]"),
            GeneratorId::QGen { seq, n } => {
                write!(f, "Q[")?;
                for (j, i) in seq.iter().enumerate() {
                    if j > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{i}")?;
                }
                write!(f, "](x[{n}])")
            }
            GeneratorId::Bo { k, s } => write!(f, "a[{k},{s}]"),
            GeneratorId::ZGen { s } => write!(f, "z[{s}]"),
        }
    }
}

/// A commutative monomial: a finite map from generators to positive exponents.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Monomial {
    exps: BTreeMap<GeneratorId, u32>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn generator(g: GeneratorId) -> Self {
        Monomial::from_pairs([(g, 1)])
    }

    pub fn from_pairs<I: IntoIterator<Item = (GeneratorId, u32)>>(pairs: I) -> Self {
        let mut exps = BTreeMap::new();
        for (g, e) in pairs {
            if e > 0 {
                *exps.entry(g).or_insert(0) += e;
            }
        }
        Monomial { exps }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|(g, e)| g.degree() * e).sum()
    }

    pub fn exponent(&self, g: &GeneratorId) -> u32 {
        self.exps.get(g).copied().unwrap_or(0)
    }

    pub fn factors(&self) -> impl Iterator<Item = (&GeneratorId, u32)> {
        self.exps.iter().map(|(g, e)| (g, *e))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps.clone();
        for (g, e) in &other.exps {
            *exps.entry(g.clone()).or_insert(0) += e;
        }
        Monomial { exps }
    }

    pub fn pow(&self, e: u32) -> Monomial {
        if e == 0 {
            return Monomial::one();
        }
        Monomial {
            exps: self.exps.iter().map(|(g, k)| (g.clone(), k * e)).collect(),
        }
    }

    pub fn is_square(&self) -> bool {
        self.exps.values().all(|e| e % 2 == 0)
    }

    pub fn sqrt(&self) -> Option<Monomial> {
        if !self.is_square() {
            return None;
        }
        Some(Monomial {
            exps: self.exps.iter().map(|(g, e)| (g.clone(), e / 2)).collect(),
        })
    }

    /// Removes one factor, returning `(exponent, remainder)`.
    pub fn split_off(&self, g: &GeneratorId) -> (u32, Monomial) {
        let mut exps = self.exps.clone();
        let e = exps.remove(g).unwrap_or(0);
        (e, Monomial { exps })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        for (j, (g, e)) in self.exps.iter().enumerate() {
            if j > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A polynomial over F2: a finite set of monomials, each with coefficient 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Poly {
    terms: BTreeSet<Monomial>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::from(Monomial::one())
    }

    pub fn generator(g: GeneratorId) -> Self {
        Poly::from(Monomial::generator(g))
    }

    pub fn from_terms<I: IntoIterator<Item = Monomial>>(terms: I) -> Self {
        let mut p = Poly::zero();
        for m in terms {
            p.toggle(m);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.contains(&Monomial::one())
    }

    pub fn terms(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds a single monomial in characteristic 2.
    pub fn toggle(&mut self, m: Monomial) {
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for m in &other.terms {
            out.toggle(m.clone());
        }
        out
    }

    pub fn add_assign(&mut self, other: &Poly) {
        for m in &other.terms {
            self.toggle(m.clone());
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for a in &self.terms {
            for b in &other.terms {
                out.toggle(a.mul(b));
            }
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly {
            terms: self.terms.iter().map(|a| a.mul(m)).collect(),
        }
    }

    /// The Frobenius: squaring is termwise in characteristic 2.
    pub fn square(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|m| m.pow(2)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut result = Poly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.square();
            }
        }
        result
    }

    /// Applies an algebra map determined by its values on generators.
    ///
    /// Fails with [`Error::MissingAssignment`] when a generator occurring in
    /// `self` has no assigned image.
    pub fn substitute<F>(&self, sigma: F) -> Result<Poly>
    where
        F: Fn(&GeneratorId) -> Option<Poly>,
    {
        let mut out = Poly::zero();
        for m in &self.terms {
            let mut image = Poly::one();
            for (g, e) in m.factors() {
                let v = sigma(g).ok_or_else(|| Error::MissingAssignment(g.to_string()))?;
                image = image.mul(&v.pow(e));
            }
            out.add_assign(&image);
        }
        Ok(out)
    }

    pub fn degree_part(&self, d: u32) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|m| m.degree() == d)
                .cloned()
                .collect(),
        }
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.iter().map(|m| m.degree()).max()
    }

    /// `Some(d)` when nonzero and concentrated in a single degree.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.iter().map(|m| m.degree());
        let d = it.next()?;
        if it.all(|e| e == d) {
            Some(d)
        } else {
            None
        }
    }

    pub fn is_square(&self) -> bool {
        self.terms.iter().all(|m| m.is_square())
    }

    /// Square root of a polynomial of squares; sums of squares are squares.
    pub fn sqrt(&self) -> Option<Poly> {
        let mut out = Poly::zero();
        for m in &self.terms {
            out.toggle(m.sqrt()?);
        }
        Some(out)
    }
}

impl From<Monomial> for Poly {
    fn from(m: Monomial) -> Self {
        let mut terms = BTreeSet::new();
        terms.insert(m);
        Poly { terms }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (j, m) in self.terms.iter().enumerate() {
            if j > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl std::ops::Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        Poly::add(self, rhs)
    }
}

impl std::ops::Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        Poly::mul(self, rhs)
    }
}

/// Convenience: the polynomial `z<i>`.
pub fn zeta(i: u32) -> Poly {
    Poly::generator(GeneratorId::zeta(i))
}

/// Convenience: the polynomial `x[n]`.
pub fn cell(n: u32) -> Poly {
    Poly::generator(GeneratorId::cell(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(i: u32) -> Poly {
        zeta(i)
    }

    #[test]
    fn addition_is_characteristic_two() {
        assert!(z(1).add(&z(1)).is_zero());
        let p = z(2).add(&z(1).pow(3));
        assert_eq!(p.add(&z(1).pow(3)), z(2));
        let q = cell(2).add(&cell(3));
        assert_eq!(q.len(), 2);
        let degs: Vec<u32> = q.terms().map(|m| m.degree()).collect();
        assert_eq!(degs, vec![2, 3]);
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(z(1).mul(&z(1)), z(1).pow(2));
        let one_plus = Poly::one().add(&z(1));
        assert_eq!(one_plus.mul(&one_plus), Poly::one().add(&z(1).pow(2)));
        let m = cell(2).mul(&cell(3));
        assert_eq!(m.homogeneous_degree(), Some(5));
    }

    #[test]
    fn substitute_orientation_example() {
        // x[2]*x[3] with x[2] -> z1^2, x[3] -> z2 gives z1^2*z2.
        let p = cell(2).mul(&cell(3));
        let sigma = |g: &GeneratorId| match g {
            GeneratorId::Cell { n: 2 } => Some(z(1).pow(2)),
            GeneratorId::Cell { n: 3 } => Some(z(2)),
            _ => None,
        };
        assert_eq!(p.substitute(sigma).unwrap(), z(1).pow(2).mul(&z(2)));
        // identity substitution
        let q = z(1).add(&z(2).mul(&z(1)));
        assert_eq!(
            q.substitute(|g| Some(Poly::generator(g.clone()))).unwrap(),
            q
        );
        // missing assignment
        let err = p.substitute(|_| None).unwrap_err();
        assert!(matches!(err, Error::MissingAssignment(_)));
    }

    #[test]
    fn qgen_word_orders_before_cell_index() {
        let a = GeneratorId::qgen(vec![4], 3);
        let b = GeneratorId::qgen(vec![5], 2);
        assert!(a < b);
        assert_eq!(a.to_string(), "Q[4](x[3])");
        assert_eq!(GeneratorId::qgen(vec![], 2), GeneratorId::cell(2));
    }

    #[test]
    fn display_is_canonical() {
        let m = Monomial::from_pairs([(GeneratorId::zeta(2), 1), (GeneratorId::zeta(1), 2)]);
        assert_eq!(m.to_string(), "z1^2*z2");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(Poly::one().to_string(), "1");
    }

    #[test]
    fn degrees() {
        assert_eq!(GeneratorId::zeta(3).degree(), 7);
        assert_eq!(GeneratorId::qgen(vec![8, 4], 3).degree(), 15);
        assert_eq!(GeneratorId::bo(3, 2).degree(), 12);
        assert_eq!(GeneratorId::zgen(2).degree(), 6);
    }

    proptest::proptest! {
        #[test]
        fn add_laws(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
            proptest::prop_assert!(p.add(&p).is_zero());
            proptest::prop_assert_eq!(p.add(&q), q.add(&p));
            proptest::prop_assert_eq!(p.add(&q).add(&r), p.add(&q.add(&r)));
        }

        #[test]
        fn mul_laws(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
            proptest::prop_assert_eq!(p.mul(&q), q.mul(&p));
            proptest::prop_assert_eq!(p.mul(&q).mul(&r), p.mul(&q.mul(&r)));
            proptest::prop_assert_eq!(p.mul(&q.add(&r)), p.mul(&q).add(&p.mul(&r)));
        }

        #[test]
        fn frobenius(p in arb_poly(), q in arb_poly()) {
            proptest::prop_assert_eq!(p.add(&q).square(), p.square().add(&q.square()));
            proptest::prop_assert_eq!(p.square(), p.mul(&p));
        }

        #[test]
        fn graded_parts_multiply(p in arb_poly(), q in arb_poly()) {
            let pq = p.mul(&q);
            let dmax = pq.max_degree().unwrap_or(0);
            for d in 0..=dmax {
                let mut sum = Poly::zero();
                for a in 0..=d {
                    sum.add_assign(&p.degree_part(a).mul(&q.degree_part(d - a)));
                }
                proptest::prop_assert_eq!(pq.degree_part(d), sum);
            }
        }
    }

    fn arb_generator() -> impl proptest::strategy::Strategy<Value = GeneratorId> {
        use proptest::prelude::*;
        prop_oneof![
            (1u32..5).prop_map(GeneratorId::zeta),
            (2u32..4).prop_map(GeneratorId::cell),
            Just(GeneratorId::qgen(vec![3], 2)),
            Just(GeneratorId::qgen(vec![4], 3)),
        ]
    }

    fn arb_poly() -> impl proptest::strategy::Strategy<Value = Poly> {
        use proptest::prelude::*;
        let monomial = proptest::collection::vec((arb_generator(), 1u32..4), 0..4)
            .prop_map(Monomial::from_pairs);
        proptest::collection::vec(monomial, 0..6).prop_map(Poly::from_terms)
    }
}
