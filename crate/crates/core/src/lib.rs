//! Exact arithmetic for numerical semigroups and the determinantal
//! structure of their toric ideals.
//!
//! The crate computes Apéry sets, pseudo-Frobenius numbers and related
//! invariants, decides stretchedness of the Artinian quotient by the
//! multiplicity, computes minimal binomial generators of the defining
//! ideal with a Nakayama-style dimension certificate, constructs and
//! certifies 2×n determinantal presentations, and decides whether the
//! tangent cone is Cohen-Macaulay by closed-form criteria cross-checked
//! against factorization orders.

pub mod binomial;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod groebner;
pub mod report;
pub mod semigroup;
pub mod stretched;
pub mod structure;
pub mod tangent;
pub mod toric;

pub use binomial::{Binomial, Monomial, MonomialMatrix, WeightedRing};
pub use error::{Error, Result};
pub use families::FamilyParams;
pub use groebner::{Caps, GroebnerBasis, NakCertificate, TermOrder};
pub use report::RunRecord;
pub use semigroup::{AperySet, Factorization, Int, NumericalSemigroup, PfSet};
pub use stretched::{ArithmeticPfProfile, StretchedProfile, StretchedShape};
pub use structure::{Branch, DeterminantalCertificate, MainTheoremReport};
pub use tangent::TangentConeReport;
pub use toric::ToricGenerators;
