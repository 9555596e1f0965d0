//! Tensors over F2: finite sets of monomial pairs and triples.
//!
//! Bilinearity over F2 means a tensor is just a set of pure tensors of
//! monomials; `(a+a')⊗m = a⊗m + a'⊗m` holds as sets. Which slot carries the
//! coalgebra is fixed by the caller; the text form of a pure tensor is
//! `left | right`.

use std::collections::BTreeSet;
use std::fmt;

use super::{Monomial, Poly};

/// An element of a two-fold tensor product over F2.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Tensor2 {
    terms: BTreeSet<(Monomial, Monomial)>,
}

impl Tensor2 {
    pub fn zero() -> Self {
        Tensor2::default()
    }

    /// The unit `1 | 1`.
    pub fn unit() -> Self {
        Tensor2::pure(Monomial::one(), Monomial::one())
    }

    pub fn pure(l: Monomial, r: Monomial) -> Self {
        let mut t = Tensor2::zero();
        t.toggle(l, r);
        t
    }

    /// The full tensor of two polynomials.
    pub fn of(l: &Poly, r: &Poly) -> Self {
        let mut t = Tensor2::zero();
        for a in l.terms() {
            for b in r.terms() {
                t.toggle(a.clone(), b.clone());
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = &(Monomial, Monomial)> {
        self.terms.iter()
    }

    pub fn toggle(&mut self, l: Monomial, r: Monomial) {
        let key = (l, r);
        if !self.terms.remove(&key) {
            self.terms.insert(key);
        }
    }

    pub fn add(&self, other: &Tensor2) -> Tensor2 {
        let mut out = self.clone();
        for (l, r) in &other.terms {
            out.toggle(l.clone(), r.clone());
        }
        out
    }

    pub fn add_assign(&mut self, other: &Tensor2) {
        for (l, r) in &other.terms {
            self.toggle(l.clone(), r.clone());
        }
    }

    /// Componentwise product of tensors.
    pub fn mul(&self, other: &Tensor2) -> Tensor2 {
        let mut out = Tensor2::zero();
        for (a, m) in &self.terms {
            for (b, n) in &other.terms {
                out.toggle(a.mul(b), m.mul(n));
            }
        }
        out
    }

    /// Frobenius: only the diagonal terms survive squaring.
    pub fn square(&self) -> Tensor2 {
        Tensor2 {
            terms: self
                .terms
                .iter()
                .map(|(l, r)| (l.pow(2), r.pow(2)))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Tensor2 {
        let mut result = Tensor2::unit();
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

    pub fn swap(&self) -> Tensor2 {
        Tensor2 {
            terms: self
                .terms
                .iter()
                .map(|(l, r)| (r.clone(), l.clone()))
                .collect(),
        }
    }

    /// Replaces each left slot by a polynomial image, expanding linearly.
    pub fn map_left<F: FnMut(&Monomial) -> Poly>(&self, mut f: F) -> Tensor2 {
        let mut out = Tensor2::zero();
        for (l, r) in &self.terms {
            for m in f(l).terms() {
                out.toggle(m.clone(), r.clone());
            }
        }
        out
    }

    /// Replaces each right slot by a polynomial image, expanding linearly.
    pub fn map_right<F: FnMut(&Monomial) -> Poly>(&self, mut f: F) -> Tensor2 {
        let mut out = Tensor2::zero();
        for (l, r) in &self.terms {
            for m in f(r).terms() {
                out.toggle(l.clone(), m.clone());
            }
        }
        out
    }

    /// Multiplies every right slot by a polynomial.
    pub fn mul_right(&self, c: &Poly) -> Tensor2 {
        self.map_right(|r| c.mul_monomial(r))
    }

    /// The polynomial paired with an exact left slot.
    pub fn coefficient_of_left(&self, l: &Monomial) -> Poly {
        Poly::from_terms(
            self.terms
                .iter()
                .filter(|(a, _)| a == l)
                .map(|(_, r)| r.clone()),
        )
    }

    /// Total degree check: every term has the same `deg(l) + deg(r)`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.iter().map(|(l, r)| l.degree() + r.degree());
        let d = it.next()?;
        if it.all(|e| e == d) {
            Some(d)
        } else {
            None
        }
    }
}

impl fmt::Display for Tensor2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (j, (l, r)) in self.terms.iter().enumerate() {
            if j > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{l} | {r}")?;
        }
        Ok(())
    }
}

/// An element of a three-fold tensor product over F2.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Tensor3 {
    terms: BTreeSet<(Monomial, Monomial, Monomial)>,
}

impl Tensor3 {
    pub fn zero() -> Self {
        Tensor3::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn toggle(&mut self, a: Monomial, b: Monomial, c: Monomial) {
        let key = (a, b, c);
        if !self.terms.remove(&key) {
            self.terms.insert(key);
        }
    }

    pub fn add(&self, other: &Tensor3) -> Tensor3 {
        let mut out = self.clone();
        for (a, b, c) in &other.terms {
            out.toggle(a.clone(), b.clone(), c.clone());
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = &(Monomial, Monomial, Monomial)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Expands the left slot of a 2-tensor through a coproduct-like map.
    pub fn from_left_expansion<F: FnMut(&Monomial) -> Tensor2>(t: &Tensor2, mut f: F) -> Tensor3 {
        let mut out = Tensor3::zero();
        for (l, r) in t.terms() {
            for (a, b) in f(l).terms() {
                out.toggle(a.clone(), b.clone(), r.clone());
            }
        }
        out
    }

    /// Expands the right slot of a 2-tensor through a coaction-like map.
    pub fn from_right_expansion<F: FnMut(&Monomial) -> Tensor2>(t: &Tensor2, mut f: F) -> Tensor3 {
        let mut out = Tensor3::zero();
        for (l, r) in t.terms() {
            for (a, b) in f(r).terms() {
                out.toggle(l.clone(), a.clone(), b.clone());
            }
        }
        out
    }

    /// Applies a polynomial map to the middle slot, expanding linearly.
    pub fn map_middle<F: FnMut(&Monomial) -> Poly>(&self, mut f: F) -> Tensor3 {
        let mut out = Tensor3::zero();
        for (a, b, c) in &self.terms {
            for m in f(b).terms() {
                out.toggle(a.clone(), m.clone(), c.clone());
            }
        }
        out
    }
}

impl fmt::Display for Tensor3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (j, (a, b, c)) in self.terms.iter().enumerate() {
            if j > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{a} | {b} | {c}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::f2poly::zeta;

    #[test]
    fn bilinearity_as_sets() {
        let a = zeta(1);
        let a2 = zeta(2);
        let m = Poly::one();
        let lhs = Tensor2::of(&a.add(&a2), &m);
        let rhs = Tensor2::of(&a, &m).add(&Tensor2::of(&a2, &m));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn square_keeps_diagonal_only() {
        let t = Tensor2::of(&zeta(1), &Poly::one()).add(&Tensor2::of(&Poly::one(), &zeta(1)));
        let sq = t.mul(&t);
        assert_eq!(sq, t.square());
        assert_eq!(sq.len(), 2);
    }
}
