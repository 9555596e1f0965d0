//! Exact symbolic computation over the field with two elements for the
//! mod-2 dual Steenrod algebra, its quotient Hopf algebras, Dyer-Lashof
//! operations, comodule algebras and Bockstein pages.
//!
//! The crate is organised around a handful of layers:
//!
//! * [`f2poly`] — sparse polynomials and tensors over F2 with graded-basis
//!   enumeration and Poincare series;
//! * [`steenrod`] — the dual Steenrod algebra `A = F2[z1, z2, ...]` as a
//!   Hopf algebra, together with quotients by exponent profiles;
//! * [`dyerlashof`] — admissible words, Adem rewriting and the action of the
//!   operations `Q^k` on free algebras and on `A` itself;
//! * [`comodule`] — comodule algebras, the Nishida coaction formula, and the
//!   verification engines for invariant ideals, extended-comodule
//!   isomorphisms, splittings and hom spaces;
//! * [`presets`] — the named objects of the subject area as data: skeletal
//!   comodules, the free Thom-spectrum homology algebras `Mj1`, `Mj2`, `Mj3`,
//!   `Mjc`, their `X`-families and ideals, and generator bookkeeping for
//!   connective covers of `BO`;
//! * [`bockstein`] — the first Bockstein `beta_1`, its homology, higher
//!   Bocksteins on squares and Bockstein pages for `H(Mj1)`;
//! * [`expr`] — the text grammar used by the CLI and the JSON forms;
//! * [`targets`] — named verification targets, each producing a
//!   [`VerificationReport`].
//!
//! All values are immutable and every operation is a pure function of its
//! inputs; internal memo tables are fill-once and idempotent.

pub mod bockstein;
mod cache;
pub mod comodule;
pub mod dyerlashof;
pub mod expr;
pub mod f2poly;
mod linalg;
pub mod presets;
pub mod report;
pub mod steenrod;
pub mod targets;

pub use report::VerificationReport;

/// Errors shared across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("missing assignment for generator {0}")]
    MissingAssignment(String),
    #[error("no base action is defined for generator {0}")]
    UnknownBaseAction(String),
    #[error("Q^{r} is not defined on an element of degree {deg} here")]
    DegreeError { r: i64, deg: u32 },
    #[error("the exponent-splitting isomorphism is not asserted for profile {0}")]
    UnsupportedProfile(String),
    #[error("unknown preset {0}")]
    UnknownPreset(String),
    #[error("unknown generator {0} in this algebra")]
    UnknownGenerator(String),
    #[error("syntax error at offset {offset}: {msg}")]
    Syntax { offset: usize, msg: String },
    #[error("value does not lie in the cotensor product; witness {0}")]
    NotInCotensor(String),
    #[error("higher Bockstein is not defined on the odd-degree element {0}")]
    OddDegree(String),
    #[error("graded algebra is not locally finite: {0}")]
    NotLocallyFinite(String),
    #[error("profile does not present a Hopf ideal: {0}")]
    NotHopfIdeal(String),
    #[error("ideal presentation is not triangular: {0}")]
    NotTriangular(String),
    #[error("cap out of supported range: {0}")]
    UnsupportedCap(String),
    #[error("unknown verification target {0}")]
    UnknownTarget(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
