//! Finite permutation groups and the conjugacy-class statistics that bound
//! the Frattini length of Sylow subgroups and the π-length of `G/Z(G)`.
//!
//! Groups are stored with every element enumerated and sorted, so every
//! subgroup computation is a scan or a closure over explicit elements.
//! Products compose left to right: `a.compose(&b)` applies `a` first.

pub mod error;
pub mod group;
pub mod harness;
pub mod indices;
pub mod perm;
pub mod pi_series;
pub mod primes;
pub mod quotient;
pub mod structure;
pub mod sylow;

pub use error::{GroupError, Result};
pub use group::{Group, Subgroup, DEFAULT_ORDER_CAP};
pub use indices::IndexProfile;
pub use perm::Permutation;
pub use pi_series::UpperPiSeries;
pub use primes::PrimeSet;
pub use quotient::QuotientMap;
pub use structure::ConjugacyClass;
pub use sylow::FrattiniSeries;
