//! Finite quasigroups and biquasigroups.
//!
//! Cayley tables on `0..n`, two-operation identities, structural property
//! reports, linear constructions over small groups, and exhaustive censuses
//! that compare identities with their parametric characterizations.

pub mod census;
pub mod cli;
pub mod constructors;
pub mod error;
pub mod group;
pub mod identity;
pub mod linear;
pub mod properties;
pub mod table;

pub use error::{Error, Result};
pub use group::{FiniteGroup, Permutation};
pub use identity::{builtin, check, parse_identity, Builtin, Equation};
pub use linear::{Biquasigroup, Kind, LinearSpec};
pub use table::{CayleyTable, Element};
