//! Exhaustive searches: linear specs over small groups, and all quasigroup
//! pairs of small order.

mod space;
mod structural;
mod theorem;

pub use space::{enumerate_linear_specs, Scope, SpecDigest, SpecSpace, MAX_CENSUS_ORDER, MAX_SPECS};
pub use structural::{
    enumerate_quasigroups, verify_structural, StructuralClaim, StructuralReport, StructuralViolation,
    MAX_QUASIGROUP_ORDER,
};
pub use theorem::{
    census_on, predicate, run_census, scope_for, t29lin_neutral, verify_theorem, verify_theorem_on, CensusOptions,
    CensusReport, NeutralCheck, TheoremCheck, TheoremDigest, TheoremId,
};
