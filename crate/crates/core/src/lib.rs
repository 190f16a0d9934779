#![allow(clippy::needless_range_loop)]

pub mod affine_weyl;
pub mod error;
pub mod hecke;
pub mod json;
pub mod laurent;
pub mod qanalogue;
pub mod lattice;
pub mod oracle;
pub mod report;
pub mod root_datum;
pub mod scalar;
pub mod spherical;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
pub use root_datum::RootDatum;
pub use weyl::WeylElt;

pub type Integer = num_bigint::BigInt;
pub type LaurentPoly = laurent::Laurent<Integer>;
pub type HeckeElt = hecke::Hecke<Integer>;
pub type SphElt = spherical::Sph<Integer>;
pub type Rational = num_rational::BigRational;
pub type GradedCModule = oracle::GradedModule<Rational>;
pub type ModuleOracle = oracle::Oracle<Rational>;
