//! Comodule algebras over the dual Steenrod algebra and its quotients.
//!
//! A comodule algebra is presented either by a finite basis with a stored
//! left coaction per element, or as a polynomial algebra whose generators
//! are iterated operations on finitely many cells, each cell carrying its
//! right twisted coaction. Coactions of operation generators are produced by
//! the coaction formula
//!
//! ```text
//! psi~ Q^r z = sum_{m <= k <= r} Q^k(psi~ z) [ (zeta(t)/t)^k ]_{t^(r-k)}
//! ```
//!
//! where `zeta(t) = sum_i z_i t^(2^i)` with `z_0 = 1`, `Q^k` acts diagonally
//! on the tensor, and the series coefficient multiplies into the right slot.
//! Right coactions are computed first and cached; left values are derived by
//! twisting with the antipode.

mod verify;

pub use verify::{
    comodule_hom_space, counit_map, dashed_iso_check, ideal_invariant, quotient_comodule,
    splitting_alg_iso, splitting_check, steenrod_spec, tilde_lift, ComodMap, DashedIso, HomSpace,
    TildeLift,
};

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::f2poly::{GeneratorId, GradedAlgebraSpec, Monomial, Poly, Tensor2, Tensor3};
use crate::steenrod::{antipode, coproduct, QuotientHopf};
use crate::{cache, dyerlashof, Error, Result};

/// The coalgebra a comodule is defined over.
#[derive(Clone, Debug)]
pub enum Over {
    /// The full dual Steenrod algebra.
    FullA,
    /// A quotient Hopf algebra presented by a profile.
    Quotient(QuotientHopf),
}

impl Over {
    pub fn name(&self) -> String {
        match self {
            Over::FullA => "A".to_string(),
            Over::Quotient(q) => q.name.clone(),
        }
    }

    /// The antipode, which descends to every quotient by a Hopf ideal.
    fn antipode(&self, p: &Poly) -> Poly {
        match self {
            Over::FullA => antipode(p),
            Over::Quotient(q) => q.reduce(&antipode(p)),
        }
    }
}

/// Converts a left coaction value to the right twisted one: swap the slots
/// and apply the antipode to the coalgebra slot.
pub fn twist_left_to_right(t: &Tensor2, over: &Over) -> Tensor2 {
    t.swap()
        .map_right(|m| over.antipode(&Poly::from(m.clone())))
}

/// Converts a right twisted coaction value back to the left one.
pub fn twist_right_to_left(t: &Tensor2, over: &Over) -> Tensor2 {
    t.swap().map_left(|m| over.antipode(&Poly::from(m.clone())))
}

/// Presentation data of a comodule algebra.
#[derive(Clone, Debug)]
pub enum Kind {
    /// A finite comodule: basis elements with stored left coactions. The
    /// unit is implicit.
    FiniteBasis { elems: Vec<(Monomial, Tensor2)> },
    /// The free commutative algebra on operations applied to cells; each
    /// cell `x[n]` stores its right twisted coaction.
    FreeCells { cells: Vec<(u32, Tensor2)> },
    /// A polynomial algebra on an explicit generator list with stored right
    /// twisted coactions (no operations are applied to these generators).
    PolynomialGens { gens: Vec<(GeneratorId, Tensor2)> },
}

/// A comodule algebra with cached generator coactions.
#[derive(Debug)]
pub struct ComoduleAlgebra {
    pub name: String,
    pub variant: Option<String>,
    pub over: Over,
    pub kind: Kind,
    rcache: Mutex<HashMap<GeneratorId, Tensor2>>,
}

impl ComoduleAlgebra {
    pub fn new(name: impl Into<String>, over: Over, kind: Kind) -> Self {
        ComoduleAlgebra {
            name: name.into(),
            variant: None,
            over,
            kind,
            rcache: Mutex::new(HashMap::new()),
        }
    }

    pub fn with_variant(mut self, variant: impl Into<String>) -> Self {
        self.variant = Some(variant.into());
        self
    }

    /// The trivial comodule `F2`.
    pub fn trivial(over: Over) -> Self {
        ComoduleAlgebra::new("F2", over, Kind::FiniteBasis { elems: Vec::new() })
    }

    pub fn full_name(&self) -> String {
        match &self.variant {
            None => self.name.clone(),
            Some(v) => format!("{}:{v}", self.name),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.kind, Kind::FiniteBasis { .. })
    }

    /// Basis elements of a finite comodule (excluding the unit).
    pub fn finite_elems(&self) -> &[(Monomial, Tensor2)] {
        match &self.kind {
            Kind::FiniteBasis { elems } => elems,
            _ => panic!("{} is not a finite comodule", self.name),
        }
    }

    /// The generators of the underlying algebra up to `dmax`. For a finite
    /// comodule these are its basis elements.
    pub fn generators_to(&self, dmax: u32) -> Vec<Monomial> {
        match &self.kind {
            Kind::FiniteBasis { elems } => elems
                .iter()
                .map(|(m, _)| m.clone())
                .filter(|m| m.degree() <= dmax)
                .collect(),
            Kind::FreeCells { cells } => {
                let ns: Vec<u32> = cells.iter().map(|(n, _)| *n).collect();
                dyerlashof::enumerate_qgens(&ns, dmax)
                    .into_iter()
                    .map(Monomial::generator)
                    .collect()
            }
            Kind::PolynomialGens { gens } => gens
                .iter()
                .map(|(g, _)| Monomial::generator(g.clone()))
                .filter(|m| m.degree() <= dmax)
                .collect(),
        }
    }

    /// The graded algebra spec on the generators up to `dmax`; panics for
    /// finite comodules, which are not presented as free algebras.
    pub fn algebra_spec(&self, dmax: u32) -> GradedAlgebraSpec {
        assert!(
            !self.is_finite(),
            "{} is a finite comodule, not a free algebra",
            self.name
        );
        GradedAlgebraSpec::new(self.generators_to(dmax)).expect("generators are positively graded")
    }

    /// The monomial basis of the algebra in one degree.
    pub fn basis_of_degree(&self, d: u32) -> Vec<Monomial> {
        match &self.kind {
            Kind::FiniteBasis { elems } => {
                let mut out = Vec::new();
                if d == 0 {
                    out.push(Monomial::one());
                }
                out.extend(
                    elems
                        .iter()
                        .map(|(m, _)| m.clone())
                        .filter(|m| m.degree() == d),
                );
                out.sort();
                out
            }
            _ => self.algebra_spec(d).graded_basis(d),
        }
    }

    /// The right twisted coaction of a single generator, computed through
    /// the coaction formula for operation words and cached.
    pub fn rcoact_generator(&self, g: &GeneratorId) -> Result<Tensor2> {
        if let Some(t) = self.rcache.lock().unwrap().get(g) {
            return Ok(t.clone());
        }
        let cache_key = format!("{}|{}", self.full_name(), g);
        if let Some(text) = cache::load(&cache_key) {
            if let Ok(t) = crate::expr::parse_tensor2(&text) {
                self.rcache.lock().unwrap().insert(g.clone(), t.clone());
                return Ok(t);
            }
        }
        let result = match (&self.kind, g) {
            (Kind::FreeCells { cells }, GeneratorId::Cell { n }) => cells
                .iter()
                .find(|(m, _)| m == n)
                .map(|(_, t)| t.clone())
                .ok_or_else(|| Error::UnknownGenerator(g.to_string()))?,
            (Kind::FreeCells { .. }, GeneratorId::QGen { seq, n }) => {
                let tail = GeneratorId::qgen(seq[1..].to_vec(), *n);
                let psi_tail = self.rcoact_generator(&tail)?;
                nishida_from(seq[0] as i64, &psi_tail, tail.degree())?
            }
            (Kind::PolynomialGens { gens }, g) => gens
                .iter()
                .find(|(h, _)| h == g)
                .map(|(_, t)| t.clone())
                .ok_or_else(|| Error::UnknownGenerator(g.to_string()))?,
            (Kind::FiniteBasis { elems }, g) => {
                let m = Monomial::generator(g.clone());
                elems
                    .iter()
                    .find(|(e, _)| *e == m)
                    .map(|(_, t)| twist_left_to_right(t, &self.over))
                    .ok_or_else(|| Error::UnknownGenerator(g.to_string()))?
            }
            _ => return Err(Error::UnknownGenerator(g.to_string())),
        };
        cache::store(&cache_key, &result.to_string());
        self.rcache
            .lock()
            .unwrap()
            .insert(g.clone(), result.clone());
        Ok(result)
    }

    /// The right twisted coaction, extended multiplicatively.
    pub fn rcoact(&self, p: &Poly) -> Result<Tensor2> {
        match &self.kind {
            Kind::FiniteBasis { .. } => Ok(twist_left_to_right(&self.coact(p)?, &self.over)),
            _ => {
                let mut out = Tensor2::zero();
                for m in p.terms() {
                    let mut t = Tensor2::unit();
                    for (g, e) in m.factors() {
                        t = t.mul(&self.rcoact_generator(g)?.pow(e));
                    }
                    out.add_assign(&t);
                }
                Ok(out)
            }
        }
    }

    /// The left coaction.
    pub fn coact(&self, p: &Poly) -> Result<Tensor2> {
        match &self.kind {
            Kind::FiniteBasis { elems } => {
                let mut out = Tensor2::zero();
                for m in p.terms() {
                    if m.is_one() {
                        out.add_assign(&Tensor2::unit());
                        continue;
                    }
                    let stored = elems
                        .iter()
                        .find(|(e, _)| e == m)
                        .map(|(_, t)| t.clone())
                        .ok_or_else(|| Error::UnknownGenerator(m.to_string()))?;
                    out.add_assign(&stored);
                }
                Ok(out)
            }
            _ => Ok(twist_right_to_left(&self.rcoact(p)?, &self.over)),
        }
    }

    /// The induced coaction over a quotient of the full dual Steenrod
    /// algebra: reduce the coalgebra slot of the left coaction.
    pub fn induced_coact(&self, p: &Poly, q: &QuotientHopf) -> Result<Tensor2> {
        debug_assert!(matches!(self.over, Over::FullA));
        Ok(self.coact(p)?.map_left(|m| q.reduce_monomial(m)))
    }

    /// The coproduct of the comodule's own coalgebra, applied to a
    /// coalgebra-slot monomial; reduced when working over a quotient.
    pub fn coalgebra_coproduct(&self, m: &Monomial) -> Tensor2 {
        let t = coproduct(&Poly::from(m.clone()));
        match &self.over {
            Over::FullA => t,
            Over::Quotient(q) => t
                .map_left(|a| q.reduce_monomial(a))
                .map_right(|a| q.reduce_monomial(a)),
        }
    }
}

/// `[ (zeta(t)/t)^k ]_{t^d}` as a polynomial in the `z_i`.
pub fn zeta_series_coeff(k: u32, d: u32) -> Poly {
    // zeta(t)/t has coefficient z_i in degree 2^i - 1, with z_0 = 1.
    let n = d as usize + 1;
    let mut base = vec![Poly::zero(); n];
    base[0] = Poly::one();
    for i in 1.. {
        let deg = (1u64 << i) - 1;
        if deg >= n as u64 {
            break;
        }
        base[deg as usize] = Poly::generator(GeneratorId::zeta(i));
    }
    let mut result = vec![Poly::zero(); n];
    result[0] = Poly::one();
    let mut sq = base;
    let mut k = k;
    while k > 0 {
        if k & 1 == 1 {
            result = series_mul(&result, &sq, n);
        }
        k >>= 1;
        if k > 0 {
            sq = series_mul(&sq, &sq, n);
        }
    }
    result.swap_remove(d as usize)
}

fn series_mul(a: &[Poly], b: &[Poly], n: usize) -> Vec<Poly> {
    let mut out = vec![Poly::zero(); n];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if i + j >= n {
                break;
            }
            if bj.is_zero() {
                continue;
            }
            out[i + j].add_assign(&ai.mul(bj));
        }
    }
    out
}

/// The right twisted coaction of `Q^r z` from the one of `z`: diagonal
/// operations on the stored tensor times series coefficients, multiplied
/// into the coalgebra slot.
pub fn nishida_from(r: i64, psi_z: &Tensor2, z_degree: u32) -> Result<Tensor2> {
    if r < z_degree as i64 {
        return Err(Error::DegreeError { r, deg: z_degree });
    }
    let mut out = Tensor2::zero();
    for k in (z_degree as i64)..=r {
        let coeff = zeta_series_coeff(k as u32, (r - k) as u32);
        if coeff.is_zero() {
            continue;
        }
        let t = dyerlashof::q_apply_tensor(k, psi_z)?;
        if t.is_zero() {
            continue;
        }
        out.add_assign(&t.mul_right(&coeff));
    }
    Ok(out)
}

/// Operation-level form: the right twisted coaction of `Q^r z` for a
/// homogeneous element `z` of `M` with `deg z <= r`.
pub fn nishida_right_coact(r: i64, z: &Poly, m: &ComoduleAlgebra) -> Result<Tensor2> {
    let deg = z
        .homogeneous_degree()
        .ok_or_else(|| Error::UnknownGenerator(format!("{z} is not homogeneous")))?;
    nishida_from(r, &m.rcoact(z)?, deg)
}

/// Recognises leading generators and returns the rest of their relations.
pub type LeadingClassifier = Arc<dyn Fn(&GeneratorId) -> Option<Poly> + Send + Sync>;

/// An ideal presented triangularly: each generator is a distinguished
/// polynomial generator (its *leading* generator) plus a polynomial in
/// non-leading generators. Reduction substitutes every leading generator by
/// the rest of its relation, which is a normal form in one pass.
#[derive(Clone)]
pub struct IdealPresentation {
    gens: Vec<(Poly, GeneratorId)>,
    classify: LeadingClassifier,
}

impl std::fmt::Debug for IdealPresentation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IdealPresentation")
            .field("gens", &self.gens)
            .finish_non_exhaustive()
    }
}

impl IdealPresentation {
    /// Builds the presentation from a finite generator list. The classifier
    /// recognises exactly the listed leading generators.
    pub fn from_list(gens: Vec<(Poly, GeneratorId)>) -> Result<Self> {
        let table: HashMap<GeneratorId, Poly> = gens
            .iter()
            .map(|(p, lead)| {
                let mut rest = p.clone();
                rest.toggle(Monomial::generator(lead.clone()));
                (lead.clone(), rest)
            })
            .collect();
        let classify = Arc::new(move |g: &GeneratorId| table.get(g).cloned());
        Self::with_classifier(gens, classify)
    }

    /// Builds the presentation from generators plus a classifier that may
    /// recognise leading generators beyond the materialised list (infinite
    /// families). The classifier returns the rest of the relation.
    pub fn with_classifier(
        gens: Vec<(Poly, GeneratorId)>,
        classify: LeadingClassifier,
    ) -> Result<Self> {
        let ideal = IdealPresentation { gens, classify };
        ideal.validate()?;
        Ok(ideal)
    }

    fn validate(&self) -> Result<()> {
        for (p, lead) in &self.gens {
            let lead_monomial = Monomial::generator(lead.clone());
            if !p.terms().any(|m| *m == lead_monomial) {
                return Err(Error::NotTriangular(format!(
                    "{lead} does not occur linearly in {p}"
                )));
            }
            let mut rest = p.clone();
            rest.toggle(lead_monomial);
            let expected = (self.classify)(lead).ok_or_else(|| {
                Error::NotTriangular(format!("{lead} is not classified as leading"))
            })?;
            if expected != rest {
                return Err(Error::NotTriangular(format!(
                    "classifier disagrees with the relation for {lead}"
                )));
            }
            for m in rest.terms() {
                for (g, _) in m.factors() {
                    if (self.classify)(g).is_some() {
                        return Err(Error::NotTriangular(format!(
                            "the rest of the relation for {lead} contains the leading generator {g}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn generators(&self) -> &[(Poly, GeneratorId)] {
        &self.gens
    }

    pub fn is_leading(&self, g: &GeneratorId) -> bool {
        (self.classify)(g).is_some()
    }

    /// The normal form of `p` modulo the ideal: substitutes each leading
    /// generator by the rest of its relation.
    pub fn reduce(&self, p: &Poly) -> Poly {
        p.substitute(|g| {
            Some(match (self.classify)(g) {
                Some(rest) => rest,
                None => Poly::generator(g.clone()),
            })
        })
        .expect("total substitution")
    }

    pub fn contains(&self, p: &Poly) -> bool {
        self.reduce(p).is_zero()
    }
}

/// Per-element counit and coassociativity checks.
///
/// Coassociativity compares expanding the coalgebra slot with the coproduct
/// against expanding the module slot with the coaction; failures report the
/// discrepancy tensor as the witness.
pub fn check_comodule_axioms(m: &ComoduleAlgebra, dmax: u32) -> Result<crate::VerificationReport> {
    let mut report = crate::VerificationReport::new(format!("comodule-axioms[{}]", m.full_name()));
    report.cap("max-degree", dmax as i64);
    for gen in m.generators_to(dmax) {
        let p = Poly::from(gen.clone());
        let psi = m.coact(&p)?;
        let hom = psi.homogeneous_degree() == Some(gen.degree()) || psi.is_zero();
        report.check(
            format!("coaction of {gen} is degree-homogeneous"),
            hom,
            psi.to_string(),
        );
        let eps = Poly::from_terms(
            psi.terms()
                .filter(|(l, _)| l.is_one())
                .map(|(_, r)| r.clone()),
        );
        report.check(
            format!("counit law on {gen}"),
            eps == p,
            format!("(eps|id) psi {gen} = {eps}"),
        );
        let left = Tensor3::from_left_expansion(&psi, |a| m.coalgebra_coproduct(a));
        let mut failure: Option<Error> = None;
        let right =
            Tensor3::from_right_expansion(&psi, |x| match m.coact(&Poly::from(x.clone())) {
                Ok(t) => t,
                Err(e) => {
                    failure = Some(e);
                    Tensor2::zero()
                }
            });
        if let Some(e) = failure {
            return Err(e);
        }
        let diff = left.add(&right);
        report.check(
            format!("coassociativity on {gen}"),
            diff.is_zero(),
            format!("discrepancy {diff}"),
        );
    }
    Ok(report)
}
