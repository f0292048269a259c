//! Finite commutative rings, their ideals, monoid algebras `R[S]`, and
//! bounded exhaustive checks of content-ideal identities.

pub mod cache;
pub mod check;
pub mod contentlab;
pub mod elemset;
pub mod error;
pub mod expr;
pub mod finring;
pub mod ideals;
pub mod kernel;
pub mod lab;
pub mod localize;
pub mod monoidring;
pub mod modlab;
pub mod monoids;
mod snf;
pub mod spectra;
pub mod suite;
pub mod universe;

pub use elemset::ElemSet;
pub use error::{Error, Law, Result};
pub use finring::{Elem, FiniteRing, Quotient, RingDescriptor, DEFAULT_ORDER_CAP};
pub use ideals::{Ideal, IdealOp, DEFAULT_GEN_CAP};
pub use monoids::{Monoid, MonoidDescriptor, MonoidElem, MonoidKind};
pub use monoidring::{MonoidRing, MrElem};
pub use check::{CheckResult, Verdict, WitnessEntry};
pub use lab::Lab;
pub use universe::{Bounds, CoeffMode, Universe};
pub use suite::{CheckInfo, Instance, CHECKS};
