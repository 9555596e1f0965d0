//! Graded free-commutative algebras: basis enumeration and Poincare series.

use super::Monomial;
use crate::{Error, Result};

/// A free commutative algebra presented by a finite list of monomial
/// generators with their degrees. Degree-capped computations always receive
/// the cap explicitly; the generator list is expected to be complete up to
/// whatever degree the caller works in.
#[derive(Clone, Debug)]
pub struct GradedAlgebraSpec {
    generators: Vec<(Monomial, u32)>,
}

impl GradedAlgebraSpec {
    /// Builds a spec, rejecting degree-0 generators (the degree-0 part must
    /// be spanned by the unit alone).
    pub fn new<I: IntoIterator<Item = Monomial>>(gens: I) -> Result<Self> {
        let mut generators = Vec::new();
        for g in gens {
            let d = g.degree();
            if d == 0 {
                return Err(Error::NotLocallyFinite(format!(
                    "generator {g} has degree 0"
                )));
            }
            generators.push((g, d));
        }
        generators.sort();
        generators.dedup();
        Ok(GradedAlgebraSpec { generators })
    }

    pub fn generators(&self) -> impl Iterator<Item = &(Monomial, u32)> {
        self.generators.iter()
    }

    pub fn generator_degrees(&self) -> Vec<u32> {
        self.generators.iter().map(|(_, d)| *d).collect()
    }

    /// All monomials of total degree `d`, in canonical order.
    pub fn graded_basis(&self, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut acc = Monomial::one();
        self.enumerate(0, d, &mut acc, &mut out);
        out.sort();
        out.dedup();
        out
    }

    fn enumerate(&self, i: usize, remaining: u32, acc: &mut Monomial, out: &mut Vec<Monomial>) {
        if remaining == 0 {
            out.push(acc.clone());
            return;
        }
        if i >= self.generators.len() {
            return;
        }
        let (g, dg) = &self.generators[i];
        // exponent 0 first, then as many copies as fit
        self.enumerate(i + 1, remaining, acc, out);
        let mut e = 1;
        while e * dg <= remaining {
            let powered = acc.mul(&g.pow(e));
            let mut acc2 = powered;
            self.enumerate(i + 1, remaining - e * dg, &mut acc2, out);
            e += 1;
        }
    }

    /// Dimensions of the graded pieces in degrees `0..=dmax`, that is, the
    /// truncated expansion of the product of `1/(1 - t^|g|)`.
    pub fn poincare(&self, dmax: u32) -> Vec<i64> {
        let n = dmax as usize + 1;
        let mut series = vec![0i64; n];
        series[0] = 1;
        for (_, dg) in &self.generators {
            let dg = *dg as usize;
            if dg == 0 || dg > dmax as usize {
                continue;
            }
            for d in dg..n {
                series[d] += series[d - dg];
            }
        }
        series
    }
}

/// Multiplies a truncated Poincare series by `(1 - t^d)` for each degree in
/// `quotient_degrees`; this is the series of a quotient by a regular
/// sequence in those degrees.
pub fn series_quotient(series: &[i64], quotient_degrees: &[u32]) -> Vec<i64> {
    let mut out = series.to_vec();
    for &d in quotient_degrees {
        let d = d as usize;
        if d == 0 || d >= out.len() {
            continue;
        }
        for i in (d..out.len()).rev() {
            out[i] -= out[i - d];
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::f2poly::GeneratorId;

    fn gens(ids: Vec<GeneratorId>) -> GradedAlgebraSpec {
        GradedAlgebraSpec::new(ids.into_iter().map(Monomial::generator)).unwrap()
    }

    #[test]
    fn basis_of_free_algebra_on_two_cells() {
        let spec = gens(vec![GeneratorId::cell(2), GeneratorId::cell(3)]);
        assert_eq!(spec.graded_basis(0), vec![Monomial::one()]);
        assert_eq!(spec.graded_basis(1), Vec::<Monomial>::new());
        let b5 = spec.graded_basis(5);
        assert_eq!(b5.len(), 1);
        assert_eq!(b5[0].to_string(), "x[2]*x[3]");
        // F2[x2, x3] dimensions to degree 6
        assert_eq!(spec.poincare(6), vec![1, 0, 1, 1, 1, 1, 2]);
    }

    #[test]
    fn poincare_matches_basis_lengths() {
        let spec = gens(vec![
            GeneratorId::cell(2),
            GeneratorId::cell(3),
            GeneratorId::qgen(vec![3], 2),
        ]);
        let series = spec.poincare(12);
        for d in 0..=12u32 {
            assert_eq!(series[d as usize], spec.graded_basis(d).len() as i64);
        }
    }

    #[test]
    fn series_quotient_by_regular_degrees() {
        // F2[a2, b3] / (a2) has the series of F2[b3]
        let spec = gens(vec![GeneratorId::cell(2), GeneratorId::cell(3)]);
        let q = series_quotient(&spec.poincare(9), &[2]);
        let just_b = gens(vec![GeneratorId::cell(3)]).poincare(9);
        assert_eq!(q, just_b);
    }

    #[test]
    fn degree_zero_generator_rejected() {
        let err = GradedAlgebraSpec::new(vec![Monomial::one()]).unwrap_err();
        assert!(matches!(err, Error::NotLocallyFinite(_)));
    }
}
